# coding: utf-8
"""
Plane stress reduction.

The out of plane elastic stress absorbs the out of plane Maxwell component, so the first in-plane
Maxwell eigenvalue may take either sign: ``τ = diag(tau_sign·λm, -λm)`` in the principal frame.
"""
# region Imports
from __future__ import annotations
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from ..events.args.mc_args import McArgs
from ..events.args.solve_args import SolveArgs, SolveCancelArgs
from ..events.event_singleton import _Events
from ..events.named_event import McNamedEvent, SolveNamedEvent
from ..exceptions import ex as mEx
from ..utils.tensor_core import MaterialParams, SymStress3, Tensor, _check_finite
from ..utils.type_var import Vec3

# endregion Imports

_SQRT_HALF = math.sqrt(0.5)
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SymStress2:
    """Symmetric in-plane stress"""

    xx: float = 0.0
    yy: float = 0.0
    xy: float = 0.0

    def __post_init__(self) -> None:
        _check_finite(xx=self.xx, yy=self.yy, xy=self.xy)

    @classmethod
    def diag(cls, a: float, b: float) -> SymStress2:
        return cls(xx=float(a), yy=float(b))

    @classmethod
    def from_components(cls, values: Sequence[float]) -> SymStress2:
        """
        Gets tensor from ``xx, yy, xy``.

        Raises:
            ValueError: If ``values`` does not contain three values.
        """
        if len(values) != 3:
            raise ValueError(f"Expected 3 components, got {len(values)}")
        return cls(*(float(v) for v in values))

    def components(self) -> Tuple[float, float, float]:
        return (self.xx, self.yy, self.xy)

    def to_array(self) -> np.ndarray:
        return np.array([[self.xx, self.xy], [self.xy, self.yy]], dtype=float)

    def to_3d(self) -> SymStress3:
        """Gets the tensor embedded with zero out of plane components"""
        return SymStress3(xx=self.xx, yy=self.yy, xy=self.xy)

    @property
    def norm(self) -> float:
        """Gets Frobenius norm, ``xy`` counted twice"""
        return math.sqrt(self.xx * self.xx + self.yy * self.yy + 2.0 * self.xy * self.xy)


class PlaneAxis(str, Enum):
    """Axis carrying the field"""

    IN_PLANE = "in-plane"
    """Along principal axis 1."""
    OUT_OF_PLANE = "out-of-plane"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PlaneSolution:
    """Plane stress optimum"""

    lambda_m: float
    tau_sign: int
    """Sign of the first in-plane Maxwell eigenvalue"""
    e_axis: PlaneAxis
    total: SymStress2
    sigma_rel: float
    case_id: int
    """``1`` both ``<= 0``, ``2`` mixed, ``3`` both ``> 0``"""
    lambdas: Tuple[float, float] = (0.0, 0.0)
    """Principal values, ascending"""
    direction: Vec3 = (1.0, 0.0, 0.0)
    """Unit field direction"""
    alpha: float = 0.0

    @property
    def feasible(self) -> bool:
        return True

    @property
    def case_label(self) -> str:
        return f"plane-{self.case_id}"


class PlaneMean(NamedTuple):
    numeric: float
    analytic: float
    points: int


class PlaneMapRow(NamedTuple):
    a: float
    """``λ1`` grid value"""
    b: float
    """``λ2`` grid value"""
    sigma_rel: float
    feasible: bool


class PlaneStress:
    """Plane stress solver and angular reduction."""

    ANALYTIC_MEAN = (6.0 - 2.0 * math.sqrt(2.0)) / _TWO_PI
    """Mean of ``sigma_rel(φ)`` over a full turn."""

    @staticmethod
    def principal(sigma: SymStress2) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """
        Gets ascending principal values and the unit vector of the smaller one.

        Roots are taken about the mean so equal diagonals do not cancel.

        Args:
            sigma (SymStress2): stress

        Returns:
            Tuple[Tuple[float, float], Tuple[float, float]]: ``(λ1, λ2)`` and axis of ``λ1``
        """
        mean = 0.5 * (sigma.xx + sigma.yy)
        half = 0.5 * (sigma.xx - sigma.yy)
        radius = math.hypot(half, sigma.xy)
        # major axis at ½ atan2(2 xy, xx - yy); the minor axis is perpendicular
        theta = 0.5 * math.atan2(sigma.xy, half)
        v = Tensor.orient((-math.sin(theta), math.cos(theta), 0.0))
        return (mean - radius, mean + radius), (v[0], v[1])

    @staticmethod
    def principal_plan(l1: float, l2: float) -> Tuple[int, float, int, Tuple[float, float]]:
        """
        Gets ``(case_id, λm, tau_sign, totals)`` for ascending principal values.

        Args:
            l1 (float): smaller principal value
            l2 (float): larger principal value

        Returns:
            Tuple[int, float, int, Tuple[float, float]]: plan
        """
        if l1 <= 0.0:
            case_id = 1 if l2 <= 0.0 else 2
            lm = 0.5 * (l2 - l1)
            t = 0.5 * (l1 + l2)
            return case_id, lm, 1, (t, t)
        lm = 0.5 * (l1 + l2)
        d = 0.5 * (l1 - l2)
        return 3, lm, -1, (d, -d)

    @classmethod
    def solve_plane(cls, sigma: SymStress2, p: MaterialParams | None = None) -> PlaneSolution:
        """
        Gets the optimal plane stress field.

        - ``λ1 <= 0``: ``λm = (λ2 - λ1)/2``, ``tau_sign = +1``, field in-plane along axis 1,
          total ``((λ1+λ2)/2, (λ1+λ2)/2)``.
        - ``0 < λ1``: ``λm = (λ1 + λ2)/2``, ``tau_sign = -1``, field out of plane,
          total ``((λ1-λ2)/2, (λ2-λ1)/2)``.

        Args:
            sigma (SymStress2): in-plane stress
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Raises:
            UnsupportedPermittivityError: If ``epsr != 1``.
            CancelEventError: If ``PLANE_SOLVING`` is canceled.

        Returns:
            PlaneSolution: solution. A zero tensor gives ``λm = 0`` and ``sigma_rel = 0``.
        """
        if p is None:
            p = MaterialParams()
        if not p.is_vacuum:
            raise mEx.UnsupportedPermittivityError(p.epsr, "solve_plane")
        cargs = SolveCancelArgs(cls.solve_plane.__qualname__, mode="plane", sigma=sigma)
        _Events().trigger(SolveNamedEvent.PLANE_SOLVING, cargs)
        if cargs.cancel:
            raise mEx.CancelEventError(cargs)

        result = cls._solve(sigma, p)

        _Events().trigger(
            SolveNamedEvent.PLANE_SOLVED,
            SolveArgs(cls.solve_plane.__qualname__, mode="plane", sigma=sigma, result=result),
        )
        return result

    @classmethod
    def _solve(cls, sigma: SymStress2, p: MaterialParams) -> PlaneSolution:
        norm = sigma.norm
        if norm == 0.0:
            return PlaneSolution(
                lambda_m=0.0,
                tau_sign=1,
                e_axis=PlaneAxis.IN_PLANE,
                total=SymStress2(),
                sigma_rel=0.0,
                case_id=2,
            )
        (l1, l2), v1 = cls.principal(sigma)
        case_id, lm, tau_sign, (t1, t2) = cls.principal_plan(l1, l2)
        if tau_sign > 0:
            # isotropic total, frame independent
            total = SymStress2(xx=t1, yy=t1, xy=0.0)
            axis = PlaneAxis.IN_PLANE
            direction = (v1[0], v1[1], 0.0)
        else:
            # Σ t_i v_i v_iᵀ with v2 ⟂ v1
            c, s = v1
            total = SymStress2(
                xx=t1 * c * c + t2 * s * s,
                yy=t1 * s * s + t2 * c * c,
                xy=(t1 - t2) * c * s,
            )
            axis = PlaneAxis.OUT_OF_PLANE
            direction = (0.0, 0.0, 1.0)
        return PlaneSolution(
            lambda_m=lm,
            tau_sign=tau_sign,
            e_axis=axis,
            total=total,
            sigma_rel=total.norm / norm,
            case_id=case_id,
            lambdas=(l1, l2),
            direction=direction,
            alpha=Tensor.alpha_from_lambda_m(lm, p),
        )

    @staticmethod
    def sigma_rel_phi(phi: float) -> float:
        """
        Gets relative reduction of principal values ``(cos φ, sin φ)``.

        ``√2/2 · sqrt(1 - sin 2φ)`` on ``[0, π/2]`` and ``√2/2 · |sin φ + cos φ|`` elsewhere.
        ``phi`` is taken modulo ``2π``.

        Args:
            phi (float): polar angle in radians

        Returns:
            float: relative reduction
        """
        phi = math.fmod(phi, _TWO_PI)
        if phi < 0.0:
            phi += _TWO_PI
        if phi <= 0.5 * math.pi:
            return _SQRT_HALF * math.sqrt(max(0.0, 1.0 - math.sin(2.0 * phi)))
        return _SQRT_HALF * abs(math.sin(phi) + math.cos(phi))

    @staticmethod
    def sigma_rel_phi_array(phi: np.ndarray) -> np.ndarray:
        """Vectorized :py:meth:`sigma_rel_phi`"""
        ph = np.mod(np.asarray(phi, dtype=float), _TWO_PI)
        first = _SQRT_HALF * np.sqrt(np.maximum(0.0, 1.0 - np.sin(2.0 * ph)))
        rest = _SQRT_HALF * np.abs(np.sin(ph) + np.cos(ph))
        return np.where(ph <= 0.5 * math.pi, first, rest)

    @classmethod
    def mean_plane_reduction(cls, quadrature_points: int) -> PlaneMean:
        """
        Gets mean of ``sigma_rel(φ)`` over a full turn.

        The numeric value averages ``quadrature_points`` equally spaced angles of the periodic
        interval, which is the composite trapezoid rule.

        Args:
            quadrature_points (int): number of angles, ``>= 2``

        Raises:
            ValueError: If ``quadrature_points < 2``.

        Returns:
            PlaneMean: numeric and analytic ``(6 - 2√2) / (2π)``
        """
        if quadrature_points < 2:
            raise ValueError(f"quadrature_points must be at least 2, got {quadrature_points}")
        phi = np.arange(quadrature_points, dtype=float) * (_TWO_PI / quadrature_points)
        numeric = float(np.mean(cls.sigma_rel_phi_array(phi)))
        return PlaneMean(numeric=numeric, analytic=cls.ANALYTIC_MEAN, points=quadrature_points)

    @classmethod
    def principal_sigma_rel(cls, l1: float, l2: float) -> float:
        """
        Gets relative reduction of a diagonal plane tensor in any order.

        Returns:
            float: ``sigma_rel``, ``0`` at the origin
        """
        lo, hi = (l1, l2) if l1 <= l2 else (l2, l1)
        sq = lo * lo + hi * hi
        if sq == 0.0:
            return 0.0
        _, _, _, (t1, t2) = cls.principal_plan(lo, hi)
        return math.sqrt((t1 * t1 + t2 * t2) / sq)

    @classmethod
    def plane_map(cls, grid: int, range: Tuple[float, float] = (-1.0, 1.0)) -> List[PlaneMapRow]:
        """
        Gets ``sigma_rel`` on a regular ``(λ1, λ2)`` grid.

        Rows are row major with ``λ1`` fastest; both axes include their end points.

        Args:
            grid (int): points per axis, ``>= 2``
            range (Tuple[float, float], optional): ``(lo, hi)`` bounds. Defaults to ``(-1, 1)``.

        Raises:
            ValueError: If ``grid < 2`` or ``lo >= hi``.

        Returns:
            List[PlaneMapRow]: ``grid²`` rows
        """
        if grid < 2:
            raise ValueError(f"grid must be at least 2, got {grid}")
        lo, hi = float(range[0]), float(range[1])
        if not lo < hi:
            raise ValueError(f"range must satisfy lo < hi, got {range}")
        values = np.linspace(lo, hi, grid)
        rows = [
            PlaneMapRow(float(a), float(b), cls.principal_sigma_rel(float(a), float(b)), True)
            for b in values
            for a in values
        ]
        margs = McArgs(cls.plane_map.__qualname__, mode="plane", n=len(rows), seed=0)
        margs.event_data = rows
        _Events().trigger(McNamedEvent.MAP_DONE, margs)
        return rows

    @staticmethod
    def quadrant_means(rows: Sequence[PlaneMapRow]) -> Dict[str, float]:
        """
        Gets mean ``sigma_rel`` per open quadrant of a plane map.

        Args:
            rows (Sequence[PlaneMapRow]): map rows

        Returns:
            Dict[str, float]: keys ``++``, ``-+``, ``--``, ``+-`` as signs of ``(λ1, λ2)``
        """
        acc: Dict[str, List[float]] = {"++": [], "-+": [], "--": [], "+-": []}
        for row in rows:
            if row.a == 0.0 or row.b == 0.0:
                continue
            key = ("+" if row.a > 0 else "-") + ("+" if row.b > 0 else "-")
            acc[key].append(row.sigma_rel)
        return {k: (float(np.mean(v)) if v else math.nan) for k, v in acc.items()}
