import pytest

from cat_grape.experiment import atomic_write_text


def test_creates_parent_directories(tmp_path) -> None:
    path = atomic_write_text(tmp_path / "nested" / "report.txt", "fidelity: 1\n")

    assert path.read_text(encoding="utf-8") == "fidelity: 1\n"


def test_replaces_existing_content_without_leftovers(tmp_path) -> None:
    target = tmp_path / "rb.txt"
    target.write_text("old", encoding="utf-8")

    atomic_write_text(target, "new")

    assert target.read_text(encoding="utf-8") == "new"
    assert [path.name for path in tmp_path.iterdir()] == ["rb.txt"]


def test_failed_write_keeps_the_previous_file(tmp_path, monkeypatch) -> None:
    target = tmp_path / "ptm.txt"
    target.write_text("previous", encoding="utf-8")

    def fail(*_args) -> None:
        raise OSError("disk full")

    monkeypatch.setattr("cat_grape.experiment.atomic_write.os.replace", fail)

    with pytest.raises(OSError, match="disk full"):
        atomic_write_text(target, "partial")

    assert target.read_text(encoding="utf-8") == "previous"
    assert [path.name for path in tmp_path.iterdir()] == ["ptm.txt"]
