# coding: utf-8
"""
Sign constrained reduction.

Minimizes ``‖σ + τ‖²`` over ``λm >= 0`` while every total stress eigenvalue keeps one sign:
``>= 0`` for tensile, ``<= 0`` for compressive. The field axis receives ``+λm`` and the other
two principal axes receive ``-λm``.

Two rules are available:

- :py:attr:`KktRule.LITERAL` evaluates the closed form case analysis literally: the interior
  candidate if its validity inequalities hold, otherwise the boundary fallback.
- :py:attr:`KktRule.EXACT` returns the constrained global minimizer over all three field axes.
"""
# region Imports
from __future__ import annotations
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from ..cfg.config import Config
from ..events.args.solve_args import SolveArgs, SolveCancelArgs
from ..events.event_singleton import _Events
from ..events.named_event import SolveNamedEvent
from ..exceptions import ex as mEx
from ..utils.tensor_core import EField, MaterialParams, SymStress3, Tensor
from ..utils.type_var import Triple
from .reduction_mode import ReductionMode
from .unconstrained import ReductionSolution, Unconstrained

# endregion Imports


class KktRule(str, Enum):
    """Case selection rule of the constrained solvers"""

    LITERAL = "literal"
    """Literal closed form cases with boundary fallback. May return ``sigma_rel > 1``."""
    EXACT = "exact"
    """Constrained global minimizer."""

    def __str__(self) -> str:
        return self.value


class KktCase(int, Enum):
    """Which inequalities are tight"""

    INTERIOR = 1
    UPPER_BOUND = 2
    LOWER_BOUND = 3
    DEGENERATE = 4
    """Both bounds coincide."""


@dataclass(frozen=True)
class SignPattern:
    """Eigenvalue sign counts under a tolerance"""

    n_pos: int
    n_zero: int
    n_neg: int

    def __post_init__(self) -> None:
        if self.n_pos + self.n_zero + self.n_neg != 3:
            raise ValueError(f"Sign counts must add to 3, got {self}")


@dataclass(frozen=True)
class Classification:
    """
    Sign pattern with the relabeling used by the closed form cases.

    ``order[k]`` is the ascending index of the eigenvalue labeled ``λ(k+1)`` by the case formulas.
    The case formulas work on magnitudes; ``labeled`` holds them.
    """

    pattern: SignPattern
    lambdas: Triple
    """Ascending eigenvalues"""
    constraint: ReductionMode
    case: str
    """``mixed``, ``all-positive``, ``two-positive``, ``one-positive``, ``all-negative`` or ``infeasible``"""
    order: Tuple[int, int, int]
    field_axis: int
    """Ascending index receiving ``+λm``, ``-1`` when infeasible"""
    labeled: Triple

    @property
    def feasible(self) -> bool:
        return self.case != "infeasible"


@dataclass(frozen=True)
class Candidate:
    """A closed form ``λm`` value that was evaluated"""

    label: str
    lambda_m: float
    lagrangian: float
    accepted: bool
    failed: Tuple[str, ...] = ()
    """Validity inequalities that did not hold"""


@dataclass(frozen=True)
class KktDiagnostics:
    """Branch taken by a constrained solver"""

    case_id: int
    active_constraints: Tuple[str, ...]
    lagrangian_value: float
    """Objective at the solution, stress²"""
    rule: KktRule
    field_axis: int
    """Ascending index of the axis receiving ``+λm``"""
    multiplier: float
    """Multiplier of the active bound, ``0`` for interior solutions"""
    candidates: Tuple[Candidate, ...] = ()
    exact: bool = True
    """False when the rule result is not the constrained global minimizer"""

    @property
    def gap(self) -> Optional[float]:
        """Gets interior minus fallback Lagrangian when both were evaluated"""
        by_label = {c.label: c for c in self.candidates}
        if "interior" in by_label and "fallback" in by_label:
            return by_label["interior"].lagrangian - by_label["fallback"].lagrangian
        return None


@dataclass(frozen=True)
class Infeasible:
    """No field keeps the total stress sign"""

    sigma: SymStress3
    lambdas: Triple
    pattern: SignPattern
    constraint: ReductionMode
    rule: KktRule
    reason: str
    sigma_rel: Optional[float] = None
    case_label: str = "infeasible"

    @property
    def feasible(self) -> bool:
        return False


ConstrainedResult = Union[ReductionSolution, Infeasible]


class _Plan(NamedTuple):
    lambda_m: float
    axis: int
    totals: Triple
    case_id: int
    label: str
    candidates: Tuple[Candidate, ...]


def _totals(mu: Sequence[float], axis: int, lm: float) -> Triple:
    return tuple(mu[i] + lm if i == axis else mu[i] - lm for i in range(3))  # type: ignore[return-value]


def _sq(t: Sequence[float]) -> float:
    return t[0] * t[0] + t[1] * t[1] + t[2] * t[2]


class Constrained:
    """Closed form tensile and compressive reduction"""

    # region classify
    @staticmethod
    def sign_pattern(lambdas: Sequence[float], tol: float) -> SignPattern:
        """
        Gets sign counts. ``|λ| <= tol`` counts as zero.

        Args:
            lambdas (Sequence[float]): eigenvalues
            tol (float): zero tolerance, ``>= 0``

        Returns:
            SignPattern: counts
        """
        n_pos = sum(1 for v in lambdas if v > tol)
        n_neg = sum(1 for v in lambdas if v < -tol)
        return SignPattern(n_pos=n_pos, n_zero=3 - n_pos - n_neg, n_neg=n_neg)

    @classmethod
    def classify_lambdas(cls, lambdas: Sequence[float], tol: float, constraint: ReductionMode) -> Classification:
        """
        Gets sign pattern and case relabeling of ascending eigenvalues.

        Zeros join the adjacent case with a weak inequality: nonnegative for tensile,
        nonpositive for compressive.

        Args:
            lambdas (Sequence[float]): ascending eigenvalues
            tol (float): zero tolerance
            constraint (ReductionMode): ``TENSILE`` or ``COMPRESSIVE``

        Raises:
            ValueError: If ``tol`` is negative or ``constraint`` is not a sign constraint.

        Returns:
            Classification: classification
        """
        if tol < 0.0:
            raise ValueError(f"tol must not be negative, got {tol}")
        mu = (float(lambdas[0]), float(lambdas[1]), float(lambdas[2]))
        pattern = cls.sign_pattern(mu, tol)
        if constraint == ReductionMode.TENSILE:
            order = (2, 1, 0)
            field_axis = 0
            if pattern.n_neg >= 2:
                case, field_axis = "infeasible", -1
                labeled = (mu[2], mu[1], mu[0])
            elif pattern.n_neg == 1:
                case = "mixed"
                labeled = (mu[2], mu[1], -mu[0])
            else:
                case = "all-positive"
                labeled = (mu[2], mu[1], mu[0])
        elif constraint == ReductionMode.COMPRESSIVE:
            if pattern.n_pos == 3:
                case, order, field_axis = "infeasible", (2, 1, 0), -1
                labeled = (mu[2], mu[1], mu[0])
            elif pattern.n_pos == 2:
                case, order, field_axis = "two-positive", (2, 1, 0), 0
                labeled = (mu[2], mu[1], -mu[0])
            elif pattern.n_pos == 1:
                # stable by magnitude, so a tie puts the later axis on the field
                neg = sorted((0, 1), key=lambda i: -mu[i])
                case, order, field_axis = "one-positive", (2, neg[0], neg[1]), neg[1]
                labeled = (mu[2], -mu[neg[0]], -mu[neg[1]])
            else:
                case, order, field_axis = "all-negative", (2, 1, 0), 2
                labeled = (-mu[2], -mu[1], -mu[0])
        else:
            raise ValueError(f"Not a sign constraint: {constraint}")
        return Classification(
            pattern=pattern,
            lambdas=mu,
            constraint=constraint,
            case=case,
            order=order,
            field_axis=field_axis,
            labeled=labeled,  # type: ignore[arg-type]
        )

    @classmethod
    def classify(
        cls, sigma: SymStress3, tol: float | None = None, constraint: ReductionMode = ReductionMode.TENSILE
    ) -> Classification:
        """
        Gets sign pattern and case relabeling of a stress tensor.

        Args:
            sigma (SymStress3): mechanical stress
            tol (float, optional): zero tolerance. Defaults to ``eig_tol * max(1, ‖σ‖)``.
            constraint (ReductionMode, optional): Defaults to ``TENSILE``.

        Returns:
            Classification: classification

        .. collapse:: Example

            .. code-block:: python

                cl = Constrained.classify(SymStress3.diag(4.0, 2.0, -1.0))
                assert (cl.pattern.n_pos, cl.pattern.n_neg) == (2, 1)
        """
        if tol is None:
            tol = cls.default_tol(sigma)
        es = Tensor.eigen_decompose(sigma)
        return cls.classify_lambdas(es.lambdas, tol, constraint)

    @staticmethod
    def default_tol(sigma: SymStress3) -> float:
        """Gets ``eig_tol * max(1, ‖σ‖)``"""
        return Config().eig_tol * max(1.0, Tensor.frobenius_norm(sigma))

    # endregion classify

    # region intervals
    @staticmethod
    def admissible_interval(lambdas: Sequence[float], axis: int, constraint: ReductionMode) -> Tuple[float, float]:
        """
        Gets ``[lo, hi]`` of ``λm`` that keeps every total sign when ``axis`` holds the field.

        The interval is empty when ``lo > hi``.

        Args:
            lambdas (Sequence[float]): eigenvalues
            axis (int): zero based axis receiving ``+λm``
            constraint (ReductionMode): ``TENSILE`` or ``COMPRESSIVE``

        Returns:
            Tuple[float, float]: bounds
        """
        i, j = [n for n in range(3) if n != axis]
        if constraint == ReductionMode.TENSILE:
            return max(0.0, -lambdas[axis]), min(lambdas[i], lambdas[j])
        return max(0.0, lambdas[i], lambdas[j]), -lambdas[axis]

    @staticmethod
    def _case_id(cand: float, lo: float, hi: float, tol: float) -> int:
        if lo - tol <= cand <= hi + tol:
            return KktCase.INTERIOR.value
        if hi - lo <= tol:
            return KktCase.DEGENERATE.value
        if cand > hi:
            return KktCase.UPPER_BOUND.value
        return KktCase.LOWER_BOUND.value

    # endregion intervals

    # region rules
    @classmethod
    def _literal_plan(cls, cl: Classification, tol: float, with_candidates: bool) -> Optional[_Plan]:
        if not cl.feasible:
            return None
        mu = cl.lambdas
        a, b, c = cl.labeled
        axis = cl.field_axis
        if cl.constraint == ReductionMode.TENSILE:
            if cl.case == "mixed":
                cand = (a + b + c) / 3.0
                checks = (("2λ2 - λ1 - λ3 >= 0", 2.0 * b - a - c), ("λ1 + λ2 - 2λ3 >= 0", a + b - 2.0 * c))
            else:
                cand = (a + b - c) / 3.0
                checks = (("2λ2 - λ1 + λ3 >= 0", 2.0 * b - a + c),)
            fallback, fallback_id = b, KktCase.UPPER_BOUND.value
        else:
            if cl.case == "two-positive":
                cand = (a + b + c) / 3.0
                checks = (("λ2 + λ3 - 2λ1 >= 0", b + c - 2.0 * a), ("2λ3 - λ1 - λ2 >= 0", 2.0 * c - a - b))
                fallback, fallback_id = a, KktCase.LOWER_BOUND.value
            elif cl.case == "one-positive":
                cand = (a - b + c) / 3.0
                checks = (("λ3 - λ2 - 2λ1 >= 0", c - b - 2.0 * a), ("2λ3 + λ2 - λ1 >= 0", 2.0 * c + b - a))
                fallback, fallback_id = a, KktCase.LOWER_BOUND.value
            else:
                cand = (a - b - c) / 3.0
                checks = (("λm >= 0", cand), ("λ1 - λm >= 0", a - cand))
                fallback, fallback_id = a, KktCase.UPPER_BOUND.value

        failed = tuple(name for name, value in checks if value < -tol)
        accepted = not failed
        lm = cand if accepted else fallback
        lm = max(lm, 0.0)
        totals = _totals(mu, axis, lm)
        if accepted:
            case_id = KktCase.INTERIOR.value
        else:
            lo, hi = cls.admissible_interval(mu, axis, cl.constraint)
            case_id = KktCase.DEGENERATE.value if abs(hi - lo) <= tol else fallback_id
        candidates: Tuple[Candidate, ...] = ()
        if with_candidates:
            cand_totals = _totals(mu, axis, cand)
            fb_totals = _totals(mu, axis, fallback)
            candidates = (
                Candidate("interior", cand, _sq(cand_totals), accepted, failed),
                Candidate("fallback", fallback, _sq(fb_totals), not accepted),
            )
        return _Plan(lm, axis, totals, case_id, "interior" if accepted else "fallback", candidates)

    @classmethod
    def _exact_plan(
        cls, mu: Sequence[float], constraint: ReductionMode, tol: float, prefer_axis: int, with_candidates: bool
    ) -> Optional[_Plan]:
        options: List[Tuple[float, int, int, float, Triple]] = []
        candidates: List[Candidate] = []
        for axis in range(3):
            lo, hi = cls.admissible_interval(mu, axis, constraint)
            i, j = [n for n in range(3) if n != axis]
            cand = (mu[i] + mu[j] - mu[axis]) / 3.0
            if lo > hi + tol:
                if with_candidates:
                    candidates.append(Candidate(f"axis-{axis + 1}", cand, _sq(_totals(mu, axis, cand)), False, ("empty interval",)))
                continue
            lm = lo if lo > hi else min(max(cand, lo), hi)
            totals = _totals(mu, axis, lm)
            options.append((_sq(totals), cls._case_id(cand, lo, hi, tol), axis, lm, totals))
            if with_candidates:
                candidates.append(Candidate(f"axis-{axis + 1}", lm, _sq(totals), False))
        if not options:
            return None
        best = min(o[0] for o in options)
        scale = max(1.0, _sq(mu))
        tied = [o for o in options if o[0] <= best + 1e-14 * scale]
        f, case_id, axis, lm, totals = min(tied, key=lambda o: (o[1], o[2] != prefer_axis, o[2]))
        if with_candidates:
            candidates = [
                Candidate(c.label, c.lambda_m, c.lagrangian, c.label == f"axis-{axis + 1}", c.failed) for c in candidates
            ]
        return _Plan(lm, axis, totals, case_id, f"axis-{axis + 1}", tuple(candidates))

    @classmethod
    def _plan(
        cls, cl: Classification, rule: KktRule, tol: float, with_candidates: bool = False
    ) -> Optional[_Plan]:
        if rule == KktRule.LITERAL:
            return cls._literal_plan(cl, tol, with_candidates)
        prefer = cl.field_axis if cl.field_axis >= 0 else 0
        return cls._exact_plan(cl.lambdas, cl.constraint, tol, prefer, with_candidates)

    @staticmethod
    def _satisfies(totals: Sequence[float], constraint: ReductionMode, tol: float) -> bool:
        if constraint == ReductionMode.TENSILE:
            return min(totals) >= -tol
        return max(totals) <= tol

    # endregion rules

    # region kernels
    @classmethod
    def principal_sigma_rel(
        cls, lambdas: Sequence[float], constraint: ReductionMode, rule: KktRule = KktRule.LITERAL
    ) -> Optional[float]:
        """
        Gets relative reduction for an unsorted principal triple.

        Args:
            lambdas (Sequence[float]): eigenvalues in any order
            constraint (ReductionMode): ``TENSILE`` or ``COMPRESSIVE``
            rule (KktRule, optional): Defaults to ``KktRule.LITERAL``.

        Returns:
            float | None: ``sigma_rel`` or ``None`` when infeasible. ``0`` for a zero triple.
        """
        mu = sorted(lambdas)
        sq = _sq(mu)
        if sq == 0.0:
            return 0.0
        tol = Config().eig_tol * max(1.0, math.sqrt(sq))
        cl = cls.classify_lambdas(mu, tol, constraint)
        plan = cls._plan(cl, rule, tol)
        if plan is None:
            return None
        return math.sqrt(_sq(plan.totals) / sq)

    @staticmethod
    def mixed_tensile_gap(labeled: Sequence[float]) -> float:
        """
        Gets interior minus fallback objective of the mixed sign tensile case.

        ``-(λ1 - 2λ2 + λ3)² / 3`` with ``λ3`` the magnitude of the negative eigenvalue.
        Never positive, so a valid interior candidate is never worse than ``λm = λ2``.

        Args:
            labeled (Sequence[float]): ``(λ1, λ2, λ3)`` as labeled by the case

        Returns:
            float: gap
        """
        a, b, c = labeled
        return -((a - 2.0 * b + c) ** 2) / 3.0

    # endregion kernels

    # region solve
    @classmethod
    def solve_tensile(
        cls,
        sigma: SymStress3,
        p: MaterialParams | None = None,
        rule: KktRule = KktRule.EXACT,
        raise_err: bool = False,
        tol: float | None = None,
    ) -> ConstrainedResult:
        """
        Gets the field minimizing ``‖σ + τ‖²`` with all total eigenvalues ``>= 0``.

        Args:
            sigma (SymStress3): mechanical stress
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.
            rule (KktRule, optional): Defaults to ``KktRule.EXACT``.
            raise_err (bool, optional): Raise instead of returning ``Infeasible``. Defaults to ``False``.
            tol (float, optional): sign tolerance. Defaults to ``eig_tol * max(1, ‖σ‖)``.

        Raises:
            UnsupportedPermittivityError: If ``epsr != 1``.
            InfeasibleError: If ``raise_err`` and no admissible field exists.
            CancelEventError: If ``TENSILE_SOLVING`` is canceled.

        Returns:
            ReductionSolution | Infeasible: result

        .. collapse:: Example

            .. code-block:: python

                sol = Constrained.solve_tensile(SymStress3.diag(4.0, 2.0, -1.0))
                assert sol.lambda_m == 2.0
        """
        return cls._solve(sigma, p, ReductionMode.TENSILE, rule, raise_err, tol)

    @classmethod
    def solve_compressive(
        cls,
        sigma: SymStress3,
        p: MaterialParams | None = None,
        rule: KktRule = KktRule.EXACT,
        raise_err: bool = False,
        tol: float | None = None,
    ) -> ConstrainedResult:
        """
        Gets the field minimizing ``‖σ + τ‖²`` with all total eigenvalues ``<= 0``.

        Args:
            sigma (SymStress3): mechanical stress
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.
            rule (KktRule, optional): Defaults to ``KktRule.EXACT``.
            raise_err (bool, optional): Raise instead of returning ``Infeasible``. Defaults to ``False``.
            tol (float, optional): sign tolerance. Defaults to ``eig_tol * max(1, ‖σ‖)``.

        Raises:
            UnsupportedPermittivityError: If ``epsr != 1``.
            InfeasibleError: If ``raise_err`` and no admissible field exists.
            CancelEventError: If ``COMPRESSIVE_SOLVING`` is canceled.

        Returns:
            ReductionSolution | Infeasible: result

        Note:
            Under ``KktRule.LITERAL`` an all negative tensor keeps the field on the least negative
            axis with ``λm = |λ|`` of that axis, which can raise ``sigma_rel`` above ``1``.
        """
        return cls._solve(sigma, p, ReductionMode.COMPRESSIVE, rule, raise_err, tol)

    @classmethod
    def _solve(
        cls,
        sigma: SymStress3,
        p: MaterialParams | None,
        constraint: ReductionMode,
        rule: KktRule,
        raise_err: bool,
        tol: float | None,
    ) -> ConstrainedResult:
        if p is None:
            p = MaterialParams()
        name = f"solve_{constraint.value}"
        if not p.is_vacuum:
            raise mEx.UnsupportedPermittivityError(p.epsr, name)
        rule = KktRule(rule)
        if constraint == ReductionMode.TENSILE:
            solving, solved = SolveNamedEvent.TENSILE_SOLVING, SolveNamedEvent.TENSILE_SOLVED
        else:
            solving, solved = SolveNamedEvent.COMPRESSIVE_SOLVING, SolveNamedEvent.COMPRESSIVE_SOLVED
        source = f"{cls.__qualname__}.{name}"
        cargs = SolveCancelArgs(source, mode=constraint.value, sigma=sigma)
        _Events().trigger(solving, cargs)
        if cargs.cancel:
            raise mEx.CancelEventError(cargs)

        result = cls._compute(sigma, p, constraint, rule, tol)

        eargs = SolveArgs(source, mode=constraint.value, sigma=sigma, result=result)
        if not result.feasible:
            _Events().trigger(SolveNamedEvent.INFEASIBLE, eargs)
            if raise_err:
                raise mEx.InfeasibleError(result)
        else:
            _Events().trigger(solved, eargs)
        return result

    @classmethod
    def _compute(
        cls, sigma: SymStress3, p: MaterialParams, constraint: ReductionMode, rule: KktRule, tol: float | None
    ) -> ConstrainedResult:
        norm = Tensor.frobenius_norm(sigma)
        if tol is None:
            tol = Config().eig_tol * max(1.0, norm)
        if norm == 0.0:
            sol = Unconstrained.zero_solution(f"{constraint.value}/zero-stress")
            diag = KktDiagnostics(
                case_id=KktCase.INTERIOR.value,
                active_constraints=("lambda_m=0",),
                lagrangian_value=0.0,
                rule=rule,
                field_axis=0,
                multiplier=0.0,
            )
            return replace(sol, diagnostics=diag)

        es = Tensor.eigen_decompose(sigma)
        cl = cls.classify_lambdas(es.lambdas, tol, constraint)
        plan = cls._plan(cl, rule, tol, with_candidates=True)
        if plan is None:
            if rule == KktRule.LITERAL:
                reason = f"sign pattern {cl.pattern.n_pos}+/{cl.pattern.n_zero}0/{cl.pattern.n_neg}-"
            else:
                reason = "no field axis has an admissible lambda_m"
            return Infeasible(
                sigma=sigma, lambdas=es.lambdas, pattern=cl.pattern, constraint=constraint, rule=rule, reason=reason
            )

        mu = es.lambdas
        if rule == KktRule.LITERAL:
            ref = cls._exact_plan(mu, constraint, tol, plan.axis, False)
            scale = max(1.0, _sq(mu))
            exact = (
                ref is not None
                and cls._satisfies(plan.totals, constraint, tol)
                and _sq(plan.totals) <= _sq(ref.totals) + 1e-12 * scale
            )
        else:
            exact = True

        i, j = [n for n in range(3) if n != plan.axis]
        unclamped = (mu[i] + mu[j] - mu[plan.axis]) / 3.0
        multiplier = 0.0 if plan.case_id == KktCase.INTERIOR.value else abs(6.0 * (plan.lambda_m - unclamped))
        active = tuple(f"total[{k + 1}]=0" for k in range(3) if abs(plan.totals[k]) <= tol)
        if plan.lambda_m <= tol:
            active = active + ("lambda_m=0",)
        diag = KktDiagnostics(
            case_id=plan.case_id,
            active_constraints=active,
            lagrangian_value=_sq(plan.totals),
            rule=rule,
            field_axis=plan.axis,
            multiplier=multiplier,
            candidates=plan.candidates,
            exact=exact,
        )

        direction = es.vector(plan.axis)
        alpha = Tensor.alpha_from_lambda_m(plan.lambda_m, p)
        total = Tensor.total_stress(sigma, EField.from_direction(direction, alpha), p)
        return ReductionSolution(
            lambda_m=plan.lambda_m,
            direction=direction,
            alpha=alpha,
            eigen_choice=plan.axis + 1,
            total=total,
            sigma_rel=Tensor.frobenius_norm(total) / norm,
            case_label=f"{constraint.value}-{cl.case}/{plan.label}",
            lambdas=es.lambdas,
            diagnostics=diag,
        )

    # endregion solve
