# coding: utf-8
"""
``solve`` sub-command: optimal field of a single stress tensor.
"""
from __future__ import annotations
import argparse
import json
import sys
from typing import Any, Dict, List, Tuple

from ...reduction.constrained import Constrained, Infeasible, KktRule
from ...reduction.plane_stress import PlaneSolution, PlaneStress, SymStress2
from ...reduction.reduction_mode import ReductionMode
from ...reduction.unconstrained import NoRealSolution, ReductionSolution, Unconstrained
from ...utils.out import Out
from ...utils.tensor_core import SymStress3
from .. import arg_types
from ..exit_code import ExitCode


def _plane_total(t: SymStress2) -> Tuple[float, ...]:
    return (t.xx, t.yy, 0.0, t.xy, 0.0, 0.0)


def report(mode: ReductionMode, sigma: Any, result: Any) -> Dict[str, Any]:
    """
    Gets the report fields of a solver result.

    ``total`` is ``xx, yy, zz, xy, xz, yz``. Without a real field the unconstrained report keeps
    the field off, so ``total`` is ``sigma``. Sign constrained infeasible reports carry ``None``.

    Args:
        mode (ReductionMode): solved problem
        sigma (SymStress3 | SymStress2): input
        result (Any): solver result

    Returns:
        Dict[str, Any]: fields in output order
    """
    rpt: Dict[str, Any] = {"mode": str(mode)}
    if isinstance(result, PlaneSolution):
        rpt.update(
            lambda_m=result.lambda_m,
            alpha=result.alpha,
            direction=list(result.direction),
            total=list(_plane_total(result.total)),
            sigma_rel=result.sigma_rel,
            case=result.case_label,
            feasible=True,
        )
        return rpt
    if isinstance(result, ReductionSolution):
        rpt.update(
            lambda_m=result.lambda_m,
            alpha=result.alpha,
            direction=list(result.direction),
            total=list(result.total.components()),
            sigma_rel=result.sigma_rel,
            case=result.case_label,
            feasible=True,
        )
        return rpt
    if isinstance(result, NoRealSolution):
        rpt.update(
            lambda_m=None,
            alpha=None,
            direction=None,
            total=list(sigma.components()),
            sigma_rel=result.sigma_rel,
            case=result.case_label,
            feasible=False,
        )
        return rpt
    rpt.update(
        lambda_m=None,
        alpha=None,
        direction=None,
        total=None,
        sigma_rel=result.sigma_rel,
        case=result.case_label,
        feasible=False,
    )
    return rpt


def _details(result: Any) -> List[Tuple[str, Any]]:
    if isinstance(result, PlaneSolution):
        return [("tau_sign", result.tau_sign), ("e_axis", str(result.e_axis)), ("lambdas", list(result.lambdas))]
    if isinstance(result, ReductionSolution):
        pairs: List[Tuple[str, Any]] = [("eigen_choice", result.eigen_choice), ("lambdas", list(result.lambdas))]
        diag = result.diagnostics
        if diag is not None:
            pairs += [
                ("rule", str(diag.rule)),
                ("case_id", diag.case_id),
                ("active", ";".join(diag.active_constraints)),
                ("multiplier", diag.multiplier),
                ("exact", diag.exact),
            ]
        return pairs
    if isinstance(result, NoRealSolution):
        return [
            ("lambdas", list(result.lambdas)),
            ("discriminant", result.report.discriminant),
            ("lambda_m_candidate", result.lambda_m_candidate),
        ]
    if isinstance(result, Infeasible):
        return [("lambdas", list(result.lambdas)), ("rule", str(result.rule)), ("reason", result.reason)]
    return []


def _read_sigma(mode: ReductionMode, args: argparse.Namespace) -> Any:
    values = args.sigma
    if mode == ReductionMode.PLANE:
        if len(values) == 3:
            return SymStress2.from_components(values)
        if len(values) == 6 and values[2] == 0.0 and values[4] == 0.0 and values[5] == 0.0:
            return SymStress2(xx=values[0], yy=values[1], xy=values[3])
        raise ValueError("plane stress takes xx,yy,xy or six components with zero out of plane values")
    if args.plane:
        raise ValueError(f"--plane can not be combined with --mode {mode}")
    return SymStress3.from_components(values)


def run(args: argparse.Namespace) -> int:
    """
    Solves one tensor and writes the report.

    Args:
        args (argparse.Namespace): parsed flags

    Raises:
        ValueError: If the components do not fit the mode.
        MaterialParamsError: If ``--eps0`` or ``--epsr`` is out of range.
        UnsupportedPermittivityError: If ``--epsr`` is not ``1``.

    Returns:
        int: ``ExitCode.SUCCESS`` or ``ExitCode.INFEASIBLE``
    """
    mode = ReductionMode(args.mode or (ReductionMode.PLANE if args.plane else ReductionMode.UNCONSTRAINED))
    sigma = _read_sigma(mode, args)
    p = arg_types.material(args)
    rule = KktRule(args.rule)

    if mode == ReductionMode.PLANE:
        result = PlaneStress.solve_plane(sigma, p)
    elif mode == ReductionMode.UNCONSTRAINED:
        result = Unconstrained.solve_unconstrained(sigma, p)
    elif mode == ReductionMode.TENSILE:
        result = Constrained.solve_tensile(sigma, p, rule=rule)
    else:
        result = Constrained.solve_compressive(sigma, p, rule=rule)

    rpt = report(mode, sigma, result)
    choices: List[Tuple[float, bool]] = []
    if args.all_choices and mode == ReductionMode.UNCONSTRAINED and any(result.lambdas):
        choices = list(Unconstrained.sigma_rel_all(result.lambdas))
    if args.json:
        if choices:
            rpt["all_choices"] = [{"sigma_rel": val, "feasible": ok} for val, ok in choices]
        Out.emit(json.dumps(rpt))
    else:
        Out.emit_kv(rpt)
        Out.emit_kv(_details(result))
        for i, (val, ok) in enumerate(choices, start=1):
            Out.emit_kv([(f"sigma_rel_{i}", val), (f"feasible_{i}", ok)])

    if not result.feasible:
        Out.print(f"No admissible field: {result.case_label}", file=sys.stderr)
        return ExitCode.INFEASIBLE
    return ExitCode.SUCCESS
