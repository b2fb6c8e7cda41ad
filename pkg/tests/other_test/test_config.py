import pytest

from grasscluster.config import DATA_DIR_ENV, DEFAULT_DATA_DIR, THREADS_ENV, Settings
from grasscluster.element.plane_partition import PlanePartition
from grasscluster.errors import ParameterError
from path import DATA_DIR


def test_defaults():
    settings = Settings.from_env({})
    assert settings.threads >= 1
    assert settings.data_dir == DEFAULT_DATA_DIR


def test_empty_thread_count_falls_back_to_default():
    assert Settings.from_env({THREADS_ENV: ""}).threads >= 1


def test_thread_count():
    assert Settings.from_env({THREADS_ENV: "3"}).threads == 3


@pytest.mark.parametrize("raw", ["0", "-2", "many", "1.5"])
def test_bad_thread_count(raw):
    with pytest.raises(ParameterError):
        Settings.from_env({THREADS_ENV: raw})


def test_data_dir_override(tmp_path):
    assert Settings.from_env({DATA_DIR_ENV: str(tmp_path)}).data_dir == str(tmp_path)


def test_parse_reads_from_overridden_data_dir(tmp_path, monkeypatch):
    (tmp_path / "tiny.json").write_text('{"entries": [[2, 1], [1, 0]]}')
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    assert PlanePartition.parse("tiny.json").tolist() == [[2, 1], [1, 0]]


def test_parse_missing_file(tmp_path, monkeypatch):
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    with pytest.raises(FileNotFoundError):
        PlanePartition.parse("samplePartition.json")


def test_default_data_dir_matches_repository_layout():
    assert DEFAULT_DATA_DIR == DATA_DIR
