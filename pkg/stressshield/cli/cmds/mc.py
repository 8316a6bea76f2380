# coding: utf-8
"""
``mc`` sub-command: Monte Carlo mean of ``sigma_rel``.
"""
from __future__ import annotations
import argparse
import json

from ...reduction.constrained import KktRule
from ...reduction.plane_stress import PlaneStress
from ...reduction.reduction_mode import ReductionMode
from ...sampling.montecarlo import InfeasiblePolicy, MonteCarlo
from ...utils.out import Out
from .. import arg_types
from ..exit_code import ExitCode


def run(args: argparse.Namespace) -> int:
    """
    Estimates the mean reduction and writes ``key=value`` lines or one JSON object.

    ``--mode plane`` evaluates the angular plane mean by quadrature with ``--samples`` points
    and reports it next to the analytic value.

    Returns:
        int: ``ExitCode.SUCCESS``
    """
    mode = ReductionMode(args.mode)
    if mode == ReductionMode.PLANE:
        pm = PlaneStress.mean_plane_reduction(args.samples)
        rpt = {"mode": str(mode), "mean": pm.numeric, "analytic": pm.analytic, "n": pm.points}
    else:
        seed = arg_types.resolve_seed(args)
        policy = None if args.policy is None else InfeasiblePolicy(args.policy)
        est = MonteCarlo.mc_mean(
            mode,
            n=args.samples,
            seed=seed,
            policy=policy,
            rule=KktRule(args.rule),
            workers=args.workers,
        )
        rpt = {
            "mode": str(mode),
            "mean": est.mean,
            "n": est.n,
            "n_infeasible": est.n_infeasible,
            "seed": est.seed,
            "policy": str(est.infeasible_policy),
            "std_error": est.std_error,
            "rule": str(est.rule),
            "generator": est.generator,
            "n_shards": est.n_shards,
        }
    if args.json:
        Out.emit(json.dumps(rpt))
    else:
        Out.emit_kv(rpt)
    return ExitCode.SUCCESS
