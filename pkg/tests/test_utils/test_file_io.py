from __future__ import annotations
from pathlib import Path
import pytest

if __name__ == "__main__":
    pytest.main([__file__])

from stressshield.exceptions import ex as mEx
from stressshield.utils.file_io import FileIO


def test_get_absolute_path(tmp_path_fn) -> None:
    assert FileIO.get_absolute_path(tmp_path_fn) == tmp_path_fn
    assert FileIO.get_absolute_path("data.csv").is_absolute()


def test_write_csv(tmp_path_fn) -> None:
    fnm = tmp_path_fn / "out.csv"
    pth = FileIO.write_csv(fnm, ("a", "b", "sigma_rel", "feasible"), [(0.5, -1.0, None, False), (1, 2, 0.25, True)])
    assert pth == fnm
    with open(pth, "rb") as file:
        data = file.read()
    assert data == b"a,b,sigma_rel,feasible\n0.5,-1,,0\n1,2,0.25,1\n"


def test_write_csv_unwritable(tmp_path_fn) -> None:
    fnm = Path(tmp_path_fn, "missing", "out.csv")
    with pytest.raises(mEx.UnWritableError) as exc:
        FileIO.write_csv(fnm, ("a",), [])
    assert "missing" in str(exc.value)
