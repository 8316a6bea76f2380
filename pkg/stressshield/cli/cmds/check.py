# coding: utf-8
"""
``check`` sub-command: closed forms against the brute force oracle.
"""
from __future__ import annotations
import argparse
import json
import sys

from ...cfg.config import Config
from ...exceptions import ex as mEx
from ...oracle.oracle import Oracle
from ...reduction.constrained import KktRule
from ...reduction.reduction_mode import ReductionMode
from ...utils.out import Out
from .. import arg_types
from ..exit_code import ExitCode


def run(args: argparse.Namespace) -> int:
    """
    Runs random tensors through solver and oracle and writes the worst case.

    Raises:
        CheckFailedError: If any trial exceeds ``--tol``. The report is written first.

    Returns:
        int: ``ExitCode.SUCCESS``
    """
    mode = ReductionMode(args.mode)
    tol = Config().check_tol if args.tol is None else args.tol
    seed = arg_types.resolve_seed(args)
    Out.print(f"Checking {args.trials} {mode} tensors, seed {seed}", file=sys.stderr)
    rpt = Oracle.check(mode, args.trials, seed, tol=tol, rule=KktRule(args.rule))
    fields = {
        "mode": str(rpt.mode),
        "trials": rpt.trials,
        "tol": rpt.tol,
        "violations": rpt.violations,
        "worst_gap": rpt.worst_gap,
        "worst_sigma": None if rpt.worst_sigma is None else list(rpt.worst_sigma),
        "n_infeasible": rpt.n_infeasible,
        "passed": rpt.passed,
    }
    if args.json:
        Out.emit(json.dumps(fields))
    else:
        Out.emit_kv(fields)
    if not rpt.passed:
        raise mEx.CheckFailedError(rpt)
    return ExitCode.SUCCESS
