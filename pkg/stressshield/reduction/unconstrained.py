# coding: utf-8
"""
Unconstrained reduction: the field that minimizes ``‖σ + τ(E)‖²`` over all ``E``.
"""
# region Imports
from __future__ import annotations
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union, TYPE_CHECKING

import numpy as np

from ..events.args.solve_args import SolveArgs, SolveCancelArgs
from ..events.event_singleton import _Events
from ..events.named_event import SolveNamedEvent
from ..exceptions import ex as mEx
from ..utils.tensor_core import EField, MaterialParams, SymStress3, Tensor
from ..utils.type_var import Triple, Vec3

if TYPE_CHECKING:
    from .constrained import KktDiagnostics

# endregion Imports


@dataclass(frozen=True)
class FeasibilityReport:
    """Sign of the field magnitude radicand ``tr σ - 2 epsr λi``"""

    feasible: bool
    discriminant: float


@dataclass(frozen=True)
class ReductionSolution:
    """
    Optimal field and resulting total stress.

    ``eigen_choice`` is one based and refers to the ascending eigenvalue order.
    """

    lambda_m: float
    """Maxwell eigenvalue magnitude ``eps0 α² / 2``"""
    direction: Vec3
    """Unit field direction"""
    alpha: float
    """Field magnitude"""
    eigen_choice: int
    total: SymStress3
    sigma_rel: float
    """``‖total‖ / ‖σ‖``, ``0`` for a zero input"""
    case_label: str
    lambdas: Triple = (0.0, 0.0, 0.0)
    """Input eigenvalues, ascending"""
    diagnostics: Optional["KktDiagnostics"] = None
    """Attached by constrained solvers"""

    @property
    def feasible(self) -> bool:
        return True

    @property
    def field(self) -> EField:
        """Gets the optimal field ``α N``"""
        return EField.from_direction(self.direction, self.alpha)


@dataclass(frozen=True)
class NoRealSolution:
    """
    Unconstrained optimum with imaginary field magnitude.

    ``E = 0`` is then the global minimum; ``sigma_rel`` holds the reporting convention ``1``.
    """

    sigma: SymStress3
    lambdas: Triple
    report: FeasibilityReport
    lambda_m_candidate: float
    sigma_rel: float = 1.0
    case_label: str = "no-real-solution"

    @property
    def feasible(self) -> bool:
        return False


UnconstrainedResult = Union[ReductionSolution, NoRealSolution]


class Unconstrained:
    """Closed form unconstrained reduction"""

    @staticmethod
    def objective(sigma: SymStress3, e: EField, p: MaterialParams | None = None) -> float:
        """
        Gets ``‖σ + τ(E)‖²``.

        Args:
            sigma (SymStress3): mechanical stress
            e (EField): field
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            float: squared Frobenius norm of total stress
        """
        return Tensor.frobenius_norm(Tensor.total_stress(sigma, e, p)) ** 2

    @staticmethod
    def stationarity_residual(sigma: SymStress3, e: EField, p: MaterialParams | None = None) -> np.ndarray:
        """
        Gets ``eps0 |E|² E (2 epsr² - 2 epsr + 3/2) + 2 epsr σ·E - (tr σ) E``.

        The residual vanishes exactly at critical points of ``‖σ + τ(E)‖²``.

        Args:
            sigma (SymStress3): mechanical stress
            e (EField): field
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            np.ndarray: 3-vector
        """
        if p is None:
            p = MaterialParams()
        v = e.to_array()
        a2 = float(v @ v)
        coef = 2.0 * p.epsr * p.epsr - 2.0 * p.epsr + 1.5
        return p.eps0 * a2 * coef * v + 2.0 * p.epsr * (sigma.to_array() @ v) - sigma.trace * v

    @staticmethod
    def alpha_from_eigenvalue(
        sigma: SymStress3, lambda_i: float, p: MaterialParams | None = None
    ) -> Tuple[FeasibilityReport, Optional[float]]:
        """
        Gets the field magnitude paired with eigenvalue ``lambda_i``.

        ``α = sqrt((tr σ - 2 epsr λi) / (2 eps0 (epsr² - epsr + 3/4)))``. A zero radicand is
        feasible with ``α = 0``.

        Args:
            sigma (SymStress3): mechanical stress
            lambda_i (float): eigenvalue of ``sigma``
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            Tuple[FeasibilityReport, float | None]: report and ``α``; ``α`` is ``None`` when infeasible.
        """
        if p is None:
            p = MaterialParams()
        disc = sigma.trace - 2.0 * p.epsr * lambda_i
        if disc < 0.0:
            return FeasibilityReport(feasible=False, discriminant=disc), None
        alpha = math.sqrt(disc / (2.0 * p.eps0 * p.quartic_coefficient))
        return FeasibilityReport(feasible=True, discriminant=disc), alpha

    @staticmethod
    def maxwell_eigen_magnitudes(lambdas: Sequence[float]) -> Triple:
        """
        Gets ``λm,i`` for each choice of eigenvalue.

        ``((-λ1+λ2+λ3)/3, (λ1-λ2+λ3)/3, (λ1+λ2-λ3)/3)``; a negative entry is an infeasible choice.

        Args:
            lambdas (Sequence[float]): ascending eigenvalues

        Returns:
            Triple: magnitudes
        """
        l1, l2, l3 = lambdas
        return ((-l1 + l2 + l3) / 3.0, (l1 - l2 + l3) / 3.0, (l1 + l2 - l3) / 3.0)

    @staticmethod
    def sigma_rel_for_choice(lambdas: Sequence[float], choice: int) -> float:
        """
        Gets the closed form relative reduction of eigenvalue choice ``choice``.

        ``sqrt(2/3 (1 + (λiλj + λiλk - λjλk) / Σλ²))``

        Args:
            lambdas (Sequence[float]): ascending eigenvalues
            choice (int): one based index of the eigenvalue receiving the field

        Raises:
            DegenerateStressError: If all eigenvalues are zero.
            ValueError: If ``choice`` is not ``1``, ``2`` or ``3``.

        Returns:
            float: value in ``[0, sqrt(4/3)]``
        """
        if choice not in (1, 2, 3):
            raise ValueError(f"choice must be 1, 2 or 3, got {choice}")
        sq = sum(v * v for v in lambdas)
        if sq == 0.0:
            raise mEx.DegenerateStressError("sigma_rel is undefined for all zero eigenvalues")
        i = choice - 1
        j, k = [n for n in range(3) if n != i]
        li, lj, lk = lambdas[i], lambdas[j], lambdas[k]
        inner = 1.0 + (li * lj + li * lk - lj * lk) / sq
        return math.sqrt(max(0.0, 2.0 / 3.0 * inner))

    @classmethod
    def sigma_rel_all(cls, lambdas: Sequence[float]) -> Tuple[Tuple[float, bool], ...]:
        """
        Gets ``(sigma_rel, feasible)`` for all three choices.

        Args:
            lambdas (Sequence[float]): ascending eigenvalues

        Returns:
            Tuple[Tuple[float, bool], ...]: one pair per choice
        """
        mags = cls.maxwell_eigen_magnitudes(lambdas)
        return tuple((cls.sigma_rel_for_choice(lambdas, c), mags[c - 1] >= 0.0) for c in (1, 2, 3))

    @staticmethod
    def principal_totals(lambdas: Sequence[float]) -> Optional[Tuple[float, Triple]]:
        """
        Gets ``(λm, totals)`` in the principal frame, or ``None`` when no real field exists.

        Args:
            lambdas (Sequence[float]): ascending eigenvalues

        Returns:
            Tuple[float, Triple] | None: magnitude and per axis total stress.
        """
        l1, l2, l3 = lambdas
        lm = (-l1 + l2 + l3) / 3.0
        if lm < 0.0:
            return None
        return lm, (l1 + lm, l2 - lm, l3 - lm)

    @classmethod
    def principal_sigma_rel(cls, lambdas: Sequence[float]) -> Optional[float]:
        """
        Gets relative reduction for an unsorted eigenvalue triple.

        Args:
            lambdas (Sequence[float]): eigenvalues in any order

        Returns:
            float | None: ``sigma_rel`` or ``None`` when no real field exists. ``0`` for a zero triple.
        """
        srt = sorted(lambdas)
        sq = srt[0] * srt[0] + srt[1] * srt[1] + srt[2] * srt[2]
        if sq == 0.0:
            return 0.0
        plan = cls.principal_totals(srt)
        if plan is None:
            return None
        t = plan[1]
        return math.sqrt((t[0] * t[0] + t[1] * t[1] + t[2] * t[2]) / sq)

    @staticmethod
    def _check_permittivity(p: MaterialParams, solver: str) -> None:
        if not p.is_vacuum:
            raise mEx.UnsupportedPermittivityError(p.epsr, solver)

    @staticmethod
    def zero_solution(case_label: str = "zero-stress") -> ReductionSolution:
        """Gets the trivial solution ``E = 0`` for a zero tensor"""
        return ReductionSolution(
            lambda_m=0.0,
            direction=(1.0, 0.0, 0.0),
            alpha=0.0,
            eigen_choice=1,
            total=SymStress3.zero(),
            sigma_rel=0.0,
            case_label=case_label,
        )

    @classmethod
    def solve_unconstrained(
        cls, sigma: SymStress3, p: MaterialParams | None = None, raise_err: bool = False
    ) -> UnconstrainedResult:
        """
        Gets the field minimizing ``‖σ + τ(E)‖²``.

        The smallest eigenvalue ``λ1`` receives the field, ``λm = (-λ1+λ2+λ3)/3`` and the field
        points along the eigenvector of ``λ1``.

        Args:
            sigma (SymStress3): mechanical stress
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.
            raise_err (bool, optional): Raise instead of returning ``NoRealSolution``. Defaults to ``False``.

        Raises:
            UnsupportedPermittivityError: If ``epsr != 1``.
            NoRealSolutionError: If ``raise_err`` and the field magnitude is imaginary.
            CancelEventError: If ``UNCONSTRAINED_SOLVING`` is canceled.

        Returns:
            ReductionSolution | NoRealSolution: result

        Note:
            Event args ``SolveCancelArgs`` are raised on ``SolveNamedEvent.UNCONSTRAINED_SOLVING``
            and ``SolveArgs`` on ``SolveNamedEvent.UNCONSTRAINED_SOLVED``. A result without a real
            field raises ``SolveNamedEvent.INFEASIBLE`` instead of ``UNCONSTRAINED_SOLVED``.
        """
        if p is None:
            p = MaterialParams()
        cls._check_permittivity(p, "solve_unconstrained")
        cargs = SolveCancelArgs(cls.solve_unconstrained.__qualname__, mode="unconstrained", sigma=sigma)
        _Events().trigger(SolveNamedEvent.UNCONSTRAINED_SOLVING, cargs)
        if cargs.cancel:
            raise mEx.CancelEventError(cargs)

        result = cls._solve(sigma, p)

        eargs = SolveArgs(cls.solve_unconstrained.__qualname__, mode="unconstrained", sigma=sigma, result=result)
        if not result.feasible:
            _Events().trigger(SolveNamedEvent.INFEASIBLE, eargs)
            if raise_err:
                raise mEx.NoRealSolutionError(result)
        else:
            _Events().trigger(SolveNamedEvent.UNCONSTRAINED_SOLVED, eargs)
        return result

    @classmethod
    def _solve(cls, sigma: SymStress3, p: MaterialParams) -> UnconstrainedResult:
        norm = Tensor.frobenius_norm(sigma)
        if norm == 0.0:
            return cls.zero_solution()
        es = Tensor.eigen_decompose(sigma)
        l1, l2, l3 = es.lambdas
        # tr σ - 2 λ1 taken from the eigenvalues so the sign agrees with λm,1
        disc = -l1 + l2 + l3
        report = FeasibilityReport(feasible=disc >= 0.0, discriminant=disc)
        lm = disc / 3.0
        if not report.feasible:
            return NoRealSolution(sigma=sigma, lambdas=es.lambdas, report=report, lambda_m_candidate=lm)
        alpha = Tensor.alpha_from_lambda_m(lm, p)
        direction = es.vector(0)
        e = EField.from_direction(direction, alpha)
        total = Tensor.total_stress(sigma, e, p)
        return ReductionSolution(
            lambda_m=lm,
            direction=direction,
            alpha=alpha,
            eigen_choice=1,
            total=total,
            sigma_rel=Tensor.frobenius_norm(total) / norm,
            case_label="eigen-1",
            lambdas=es.lambdas,
        )
