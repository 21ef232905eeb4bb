import json

import pytest

from src.cli import main


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_hecke_verify_manin(data_dir, capsys):
    assert main(["hecke", "verify", str(data_dir / "rmatrices" / "manin_q3.json"), "--json"]) == 0
    out = _json(capsys)
    assert out["ybe"] and out["hecke"] and out["closed"]
    assert out["qrank"] == "0/1"


def test_hecke_verify_flip(data_dir, capsys):
    assert main(["hecke", "verify", str(data_dir / "rmatrices" / "flip2.json"), "--json"]) == 0
    assert _json(capsys)["qrank"] == "2/1"


def test_hecke_verify_identity_fails(data_dir, capsys):
    assert main(["hecke", "verify", str(data_dir / "rmatrices" / "identity_q3.json"), "--json"]) == 1
    assert _json(capsys)["hecke"] is False


def test_hecke_verify_text(data_dir, capsys):
    main(["hecke", "verify", str(data_dir / "rmatrices" / "manin_q3.json")])
    out = capsys.readouterr().out
    assert "Yang-Baxter equation   pass" in out
    assert "q-rank                 0/1" in out


def test_hecke_poincare_flip(data_dir, capsys):
    assert main(["hecke", "poincare", str(data_dir / "rmatrices" / "flip2.json"), "--max-degree", "4", "--json"]) == 0
    out = _json(capsys)
    assert out["ext"] == [1, 2, 1, 0, 0]
    assert out["is_birank11"] is False


def test_hecke_poincare_superflip(data_dir, capsys):
    path = str(data_dir / "rmatrices" / "superflip11.json")
    assert main(["hecke", "poincare", path, "--max-degree", "4", "--json"]) == 0
    assert _json(capsys)["is_birank11"] is True


@pytest.mark.slow
def test_hecke_poincare_manin(data_dir, capsys):
    path = str(data_dir / "rmatrices" / "manin_q3.json")
    assert main(["hecke", "poincare", path, "--max-degree", "6", "--json"]) == 0
    out = _json(capsys)
    assert out["sym"] == out["ext"] == [1, 2, 2, 2, 2, 2, 2]
    assert (out["a"], out["b"]) == ("1/1", "1/1")
    assert out["is_birank11"] is True


def test_hecke_poincare_rejects_non_hecke(data_dir, capsys):
    assert main(["hecke", "poincare", str(data_dir / "rmatrices" / "identity_q3.json")]) == 2


def test_hecke_commutant(data_dir, capsys):
    path = str(data_dir / "rmatrices" / "manin_q3.json")
    assert main(["hecke", "commutant", path, "--degree", "3", "--json"]) == 0
    out = _json(capsys)
    assert out["commutant_dim"] == out["predicted"] == 6
    assert out["centralizer_dim"] == 12


def test_hecke_commutant_cap(data_dir):
    path = str(data_dir / "rmatrices" / "manin_q3.json")
    assert main(["hecke", "commutant", path, "--degree", "9"]) == 2


def test_hecke_poincare_cap(data_dir):
    path = str(data_dir / "rmatrices" / "manin_q3.json")
    assert main(["hecke", "poincare", path, "--max-degree", "9"]) == 2


def test_hecke_export(tmp_path, capsys):
    out = tmp_path / "m.json"
    assert main(["hecke", "export", "manin_standard", str(out), "--q", "5"]) == 0
    assert main(["hecke", "verify", str(out), "--json"]) == 0
    assert _json(capsys)["qrank"] == "0/1"


@pytest.mark.parametrize(
    "args,expected",
    [
        (["1", "0", "1", "0"], "(2,0) + (1,1)"),
        (["1", "0", "-1", "0"], "INDEC-INJ socle (0,0); factors 2·(0,0)+(1,-1)+(-1,1)"),
        (["0", "0", "5", "-3"], "(5,-3)"),
    ],
)
def test_fusion_mul(capsys, args, expected):
    assert main(["fusion", "mul", *args]) == 0
    assert capsys.readouterr().out.strip() == expected


def test_fusion_mul_json(capsys):
    main(["fusion", "mul", "1", "0", "-1", "0", "--json"])
    out = _json(capsys)
    assert out["kind"] == "indecomposable_injective"
    assert out["socle"] == [0, 0]


def test_fusion_table(capsys):
    assert main(["fusion", "table", "--range", "2", "--json"]) == 0
    out = _json(capsys)
    assert len(out["rows"]) == 5 ** 4
    assert out["dimension_failures"] == 0


def test_fusion_power(capsys):
    assert main(["fusion", "power", "3", "--json"]) == 0
    assert _json(capsys)["factors"] == [[3, 0, 1], [2, 1, 2], [1, 2, 1]]


def test_hopf_analyze_sweedler(data_dir, capsys):
    args = [
        "hopf", "analyze", str(data_dir / "hopf" / "sweedler4.json"),
        "--comodule", str(data_dir / "comodules" / "sweedler_trivial.json"),
        "--comodule", str(data_dir / "comodules" / "sweedler_g.json"),
        "--json",
    ]
    assert main(args) == 0
    out = _json(capsys)
    assert out["left_integral"] == ["0/1", "0/1", "0/1", "1/1"]
    assert out["right_integral"] == ["0/1", "0/1", "1/1", "0/1"]
    assert out["b_rank"] == 4
    assert out["convolution_associative"] is True
    assert [c["splitting"] for c in out["comodules"]] == [False, False]
    assert [c["oracle"] for c in out["comodules"]] == [False, False]
    assert out["agree"] is True


def test_hopf_analyze_text(data_dir, capsys):
    args = ["hopf", "analyze", str(data_dir / "hopf" / "kc2.json"), "--comodule", str(data_dir / "comodules" / "kc2_g.json")]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert "splitting=True oracle=True AGREE" in out


def test_hopf_analyze_regular_comodule(data_dir, capsys):
    args = [
        "hopf", "analyze", str(data_dir / "hopf" / "sweedler4.json"),
        "--comodule", str(data_dir / "comodules" / "sweedler_regular.json"), "--json",
    ]
    assert main(args) == 0
    assert _json(capsys)["comodules"][0]["simple"] is False


def test_hopf_analyze_bad_antipode(data_dir, capsys):
    assert main(["hopf", "analyze", str(data_dir / "hopf" / "sweedler4_bad_antipode.json")]) == 2
    assert "antipode" in capsys.readouterr().err


def test_comodule_for_wrong_algebra(data_dir):
    # indices 2 and 3 do not exist in kC2
    args = ["hopf", "analyze", str(data_dir / "hopf" / "kc2.json"),
            "--comodule", str(data_dir / "comodules" / "sweedler_regular.json")]
    assert main(args) == 2


def test_missing_file():
    assert main(["hecke", "verify", "does/not/exist.json"]) == 2


def test_usage_error():
    assert main(["fusion", "mul", "1"]) == 2
