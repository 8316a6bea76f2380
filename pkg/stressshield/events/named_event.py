# coding: utf-8
"""
Named events raised by solvers, samplers and console output.
"""
from __future__ import annotations
from typing import NamedTuple


class GblNamedEvent(NamedTuple):
    """
    Global Named Events
    """

    PRINTING = "global_printing"
    """Console printing. Cancel to silence output."""


class SolveNamedEvent(NamedTuple):
    """Reduction solver events"""

    UNCONSTRAINED_SOLVING = "unconstrained_solving"
    """Before unconstrained solve, :py:class:`~.solve_args.SolveCancelArgs`"""
    UNCONSTRAINED_SOLVED = "unconstrained_solved"
    """After unconstrained solve, :py:class:`~.solve_args.SolveArgs`"""
    TENSILE_SOLVING = "tensile_solving"
    """Before tensile solve, :py:class:`~.solve_args.SolveCancelArgs`"""
    TENSILE_SOLVED = "tensile_solved"
    """After tensile solve, :py:class:`~.solve_args.SolveArgs`"""
    COMPRESSIVE_SOLVING = "compressive_solving"
    """Before compressive solve, :py:class:`~.solve_args.SolveCancelArgs`"""
    COMPRESSIVE_SOLVED = "compressive_solved"
    """After compressive solve, :py:class:`~.solve_args.SolveArgs`"""
    PLANE_SOLVING = "plane_solving"
    """Before plane stress solve, :py:class:`~.solve_args.SolveCancelArgs`"""
    PLANE_SOLVED = "plane_solved"
    """After plane stress solve, :py:class:`~.solve_args.SolveArgs`"""
    INFEASIBLE = "reduction_infeasible"
    """A solver returned no real or no admissible field, :py:class:`~.solve_args.SolveArgs`"""


class McNamedEvent(NamedTuple):
    """Sampling events"""

    MC_STARTING = "mc_starting"
    """Before sampling, :py:class:`~.mc_args.McCancelArgs`"""
    MC_SHARD_DONE = "mc_shard_done"
    """A shard was evaluated, :py:class:`~.mc_args.McArgs`"""
    MC_DONE = "mc_done"
    """Sampling finished, :py:class:`~.mc_args.McArgs`"""
    MAP_DONE = "map_done"
    """An angular or plane map was generated, :py:class:`~.mc_args.McArgs`"""
