# coding: utf-8
from __future__ import annotations
import csv
from pathlib import Path
from typing import Iterable, Sequence

from ..exceptions import ex as mEx
from .type_var import PathOrStr
from .out import Out


class FileIO:
    @staticmethod
    def get_absolute_path(fnm: PathOrStr) -> Path:
        """
        Gets Absolute path

        Args:
            fnm (PathOrStr): path as string

        Returns:
            Path: absolute path
        """
        p = Path(fnm)
        if p.is_absolute():
            return p
        return p.absolute().resolve()

    @classmethod
    def write_csv(cls, fnm: PathOrStr, header: Sequence[str], rows: Iterable[Sequence[object]]) -> Path:
        """
        Writes a UTF-8 CSV file with ``\\n`` line endings.

        Cells are formatted with :py:meth:`~.out.Out.fmt`, so floats keep 17 significant digits
        and ``None`` becomes an empty cell.

        Args:
            fnm (PathOrStr): output file
            header (Sequence[str]): column names
            rows (Iterable[Sequence[object]]): data rows

        Raises:
            UnWritableError: If the file or its folder can not be written.

        Returns:
            Path: absolute path of written file
        """
        pth = cls.get_absolute_path(fnm)
        try:
            with open(pth, "w", encoding="utf-8", newline="") as file:
                writer = csv.writer(file, lineterminator="\n")
                writer.writerow(header)
                for row in rows:
                    writer.writerow([Out.fmt(v) for v in row])
        except OSError as e:
            raise mEx.UnWritableError(pth) from e
        return pth
