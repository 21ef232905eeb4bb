import json
from fractions import Fraction

import pytest

from src.hecke.symmetry import flip, manin_standard, scaled, super_flip
from src.hopf.algebra import group_algebra, sweedler
from src.hopf.comodule import regular_comodule
from src.io.formats import (
    ComoduleFile,
    HopfFile,
    RMatrixFile,
    dump,
    load_comodule,
    load_hopf,
    load_rmatrix,
)
from src.utils.exceptions import InputFormatError


def test_bundled_rmatrices_match_builtins(data_dir):
    manin = load_rmatrix(data_dir / "rmatrices" / "manin_q3.json")
    assert manin == manin_standard(3)
    # the builtin family comes back with its respecialization
    assert manin.respecialize is not None
    assert load_rmatrix(data_dir / "rmatrices" / "flip2.json") == flip(2)
    assert load_rmatrix(data_dir / "rmatrices" / "superflip11.json") == super_flip()


def test_bundled_hopf_files_match_builtins(data_dir):
    assert load_hopf(data_dir / "hopf" / "kc2.json") == group_algebra(2)
    assert load_hopf(data_dir / "hopf" / "kc3.json") == group_algebra(3)
    assert load_hopf(data_dir / "hopf" / "kc4.json") == group_algebra(4)
    assert load_hopf(data_dir / "hopf" / "sweedler4.json") == sweedler()
    assert load_hopf(data_dir / "hopf" / "sweedler4_bad_antipode.json") == sweedler(antipode_sign=1)


def test_bundled_comodule_file(data_dir):
    assert load_comodule(data_dir / "comodules" / "sweedler_regular.json") == regular_comodule(sweedler())


@pytest.mark.parametrize("name", ["manin_q3", "flip2", "superflip11", "identity_q3"])
def test_rmatrix_round_trip(data_dir, name):
    h = load_rmatrix(data_dir / "rmatrices" / f"{name}.json")
    again = RMatrixFile.model_validate(RMatrixFile.from_symmetry(h).model_dump()).to_symmetry()
    assert again == h


@pytest.mark.parametrize("name", ["kc2", "kc3", "kc4", "sweedler4", "o_s3"])
def test_hopf_round_trip(data_dir, name):
    h = load_hopf(data_dir / "hopf" / f"{name}.json")
    assert HopfFile.model_validate(HopfFile.from_algebra(h).model_dump()).to_algebra() == h


def test_comodule_round_trip(data_dir):
    for path in sorted((data_dir / "comodules").glob("*.json")):
        m = load_comodule(path)
        assert ComoduleFile.model_validate(ComoduleFile.from_comodule(m).model_dump()).to_comodule() == m


def test_canonical_scalars():
    f = RMatrixFile(dim=1, q="6/4", entries=[(0, 0, "2")])
    assert f.q == "3/2"
    assert f.entries == [(0, 0, "2/1")]


def test_dump_then_load(tmp_path):
    path = tmp_path / "out" / "m.json"
    dump(RMatrixFile.from_symmetry(manin_standard("7/2")), path)
    assert json.loads(path.read_text())["q"] == "7/2"
    assert load_rmatrix(path) == manin_standard("7/2")


def test_input_errors(tmp_path):
    with pytest.raises(InputFormatError):
        load_rmatrix(tmp_path / "missing.json")
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    with pytest.raises(InputFormatError):
        load_hopf(bad_json)
    out_of_range = tmp_path / "r.json"
    out_of_range.write_text(json.dumps({"dim": 2, "q": "3", "entries": [[4, 0, "1"]]}))
    with pytest.raises(InputFormatError):
        load_rmatrix(out_of_range)
    not_rational = tmp_path / "c.json"
    not_rational.write_text(json.dumps({"dim": 1, "coaction": [[[0, 0, "one"]]]}))
    with pytest.raises(InputFormatError):
        load_comodule(not_rational)
    zero_lower = tmp_path / "z.json"
    zero_lower.write_text(json.dumps({"dim": 1, "q": "2", "lower": "0", "entries": [[0, 0, "2"]]}))
    with pytest.raises(InputFormatError):
        load_rmatrix(zero_lower)


def test_rescaled_symmetry_keeps_its_eigenvalues(tmp_path):
    h, _ = scaled(manin_standard(3), "-2/3")
    path = tmp_path / "scaled.json"
    dump(RMatrixFile.from_symmetry(h), path)
    assert json.loads(path.read_text())["lower"] == "2/3"
    again = load_rmatrix(path)
    assert again == h
    assert (again.q, again.lower) == (Fraction(-2), Fraction(2, 3))
