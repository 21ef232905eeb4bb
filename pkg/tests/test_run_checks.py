import pytest
from loguru import logger

from scripts.run_checks import PROJECT_ROOT, check_hopf, resolve_data_dir


def test_relative_data_dir_ignores_the_working_directory(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    data_dir = resolve_data_dir("data")
    assert data_dir == PROJECT_ROOT / "data"
    assert (data_dir / "hopf" / "o_s3.json").is_file()


def test_absolute_data_dir_is_kept(tmp_path):
    assert resolve_data_dir(str(tmp_path)) == tmp_path


@pytest.mark.slow
def test_hopf_checks_from_another_directory(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    assert check_hopf(logger, resolve_data_dir("data"))
