# coding: utf-8
"""
``map`` sub-command: CSV datasets of ``sigma_rel`` over eigenvalue space.
"""
from __future__ import annotations
import argparse
from typing import Iterator, Optional, Tuple

from ...cfg.config import Config
from ...reduction.constrained import KktRule
from ...reduction.plane_stress import PlaneStress
from ...reduction.reduction_mode import ReductionMode
from ...sampling.montecarlo import AngularMapRow, MonteCarlo
from ...utils.file_io import FileIO
from ...utils.out import Out
from ..exit_code import ExitCode

HEADER = ("a", "b", "sigma_rel", "feasible")


def sentinel(mode: ReductionMode) -> Optional[float]:
    """Gets the ``sigma_rel`` cell written for infeasible points"""
    return 1.0 if mode == ReductionMode.UNCONSTRAINED else None


def angular_rows(mode: ReductionMode, rows: Iterator[AngularMapRow]) -> Iterator[Tuple[object, ...]]:
    fill = sentinel(mode)
    for row in rows:
        val = row.sigma_rel if row.feasible else fill
        yield (row.theta, row.phi, val, row.feasible)


def run(args: argparse.Namespace) -> int:
    """
    Writes a map dataset.

    Plane maps are ``(λ1, λ2)`` grids over ``--range`` with ``λ1`` varying fastest.
    3-D maps are ``(θ, φ)`` grids with ``θ`` the outer loop.

    Raises:
        UnWritableError: If ``--out`` can not be written.

    Returns:
        int: ``ExitCode.SUCCESS``
    """
    mode = ReductionMode(args.mode)
    grid = Config().map_grid if args.grid is None else args.grid
    if grid < 2:
        raise ValueError(f"--grid must be at least 2, got {grid}")
    if mode == ReductionMode.PLANE:
        rows = PlaneStress.plane_map(grid, args.range)
        data = [tuple(r) for r in rows]
        for key, val in PlaneStress.quadrant_means(rows).items():
            Out.print(f"quadrant {key}: mean sigma_rel {val:.6f}")
    else:
        data = list(angular_rows(mode, iter(MonteCarlo.angular_map(mode, grid, grid, KktRule(args.rule)))))
    pth = FileIO.write_csv(args.out, HEADER, data)
    Out.print(f"Wrote {len(data)} rows to {pth}")
    return ExitCode.SUCCESS
