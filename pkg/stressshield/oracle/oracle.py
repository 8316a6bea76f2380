# coding: utf-8
"""
Brute force minimizers used to verify the closed form solvers.

The oracle shares no code path with the closed forms: eigenvalues come from ``numpy.linalg``,
admissible intervals are derived from the sign constraints of each term and minima are found
by dense scans.
"""
# region Imports
from __future__ import annotations
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..cfg.config import Config
from ..reduction.constrained import Constrained, KktRule
from ..reduction.plane_stress import PlaneStress, SymStress2
from ..reduction.reduction_mode import ReductionMode
from ..reduction.unconstrained import Unconstrained
from ..utils.tensor_core import EField, MaterialParams, SymStress3, Tensor

# endregion Imports


@dataclass(frozen=True)
class LambdaTerms:
    """
    Objective ``Σ (bases[i] + signs[i]·λ)²`` of a one dimensional ``λm`` problem.
    """

    bases: Tuple[float, ...]
    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != len(self.signs):
            raise ValueError("bases and signs must have the same length")

    @classmethod
    def for_axis(cls, lambdas: Sequence[float], axis: int) -> LambdaTerms:
        """
        Gets terms of a 3-D problem with the field along principal ``axis``.

        Args:
            lambdas (Sequence[float]): principal values
            axis (int): zero based axis receiving ``+λ``

        Returns:
            LambdaTerms: terms
        """
        return cls(tuple(float(v) for v in lambdas), tuple(1 if i == axis else -1 for i in range(len(lambdas))))

    @classmethod
    def plane(cls, lambdas: Sequence[float], tau_sign: int) -> LambdaTerms:
        """
        Gets plane stress terms ``(λ1 + tau_sign·λ)² + (λ2 - λ)²``.

        Args:
            lambdas (Sequence[float]): ascending principal values
            tau_sign (int): ``+1`` or ``-1``

        Returns:
            LambdaTerms: terms
        """
        return cls((float(lambdas[0]), float(lambdas[1])), (int(tau_sign), -1))

    def value(self, lam: np.ndarray | float) -> np.ndarray | float:
        """Gets objective at ``lam``"""
        lam = np.asarray(lam, dtype=float)
        total = np.zeros_like(lam)
        for b, s in zip(self.bases, self.signs):
            total = total + (b + s * lam) ** 2
        return total if total.ndim else float(total)


class ScanResult(NamedTuple):
    lambda_m: float
    objective: float


class GridResult(NamedTuple):
    e_best: EField
    objective: float
    levels: Tuple[float, ...]
    """Best objective after the coarse scan and after each refinement level."""


class CheckReport(NamedTuple):
    mode: ReductionMode
    trials: int
    tol: float
    violations: int
    worst_gap: float
    """Largest ``closed - oracle`` objective, stress²"""
    worst_sigma: Optional[Tuple[float, ...]]
    n_infeasible: int
    """Trials both sides reported infeasible"""

    @property
    def passed(self) -> bool:
        return self.violations == 0


class Oracle:
    """Independent brute force minimizers"""

    # region field grid
    @staticmethod
    def fibonacci_directions(n: int) -> np.ndarray:
        """
        Gets ``n`` unit vectors on the Fibonacci sphere lattice.

        Args:
            n (int): number of directions

        Returns:
            np.ndarray: shape ``(n, 3)``
        """
        k = np.arange(n, dtype=float) + 0.5
        z = 1.0 - 2.0 * k / n
        r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
        golden = math.pi * (3.0 - math.sqrt(5.0))
        phi = golden * k
        return np.column_stack((r * np.cos(phi), r * np.sin(phi), z))

    @staticmethod
    def field_objective(sigma: SymStress3, dirs: np.ndarray, mags: np.ndarray, p: MaterialParams) -> np.ndarray:
        """
        Gets ``‖σ + τ(a n)‖²`` for every direction and magnitude.

        Uses ``‖σ‖² + 2 eps0 a² (epsr nᵀσn - ½ tr σ) + eps0² a⁴ (epsr² - epsr + 3/4)``.

        Args:
            sigma (SymStress3): mechanical stress
            dirs (np.ndarray): unit directions, shape ``(n, 3)``
            mags (np.ndarray): magnitudes, shape ``(m,)``
            p (MaterialParams): material

        Returns:
            np.ndarray: shape ``(n, m)``
        """
        s = sigma.to_array()
        quad = np.einsum("ij,jk,ik->i", dirs, s, dirs)
        a2 = np.asarray(mags, dtype=float) ** 2
        lin = 2.0 * p.eps0 * np.outer(p.epsr * quad - 0.5 * sigma.trace, a2)
        return float(np.sum(s * s)) + lin + (p.eps0**2) * p.quartic_coefficient * (a2 * a2)[None, :]

    @staticmethod
    def default_mag_max(sigma: SymStress3, p: MaterialParams) -> float:
        """Gets a magnitude bound that contains the optimum, ``1`` for a zero tensor"""
        norm = Tensor.frobenius_norm(sigma)
        if norm == 0.0:
            return 1.0
        return 1.5 * math.sqrt((math.sqrt(3.0) + 2.0 * p.epsr) * norm / (2.0 * p.eps0 * p.quartic_coefficient))

    @staticmethod
    def _tangent_basis(n: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
        u = np.cross(n, helper)
        u /= np.linalg.norm(u)
        return u, np.cross(n, u)

    @classmethod
    def grid_min_unconstrained(
        cls,
        sigma: SymStress3,
        p: MaterialParams | None = None,
        dir_steps: int | None = None,
        mag_steps: int | None = None,
        mag_max: float | None = None,
        refine_levels: int | None = None,
    ) -> GridResult:
        """
        Gets the best field on a direction by magnitude grid.

        A Fibonacci lattice of directions times a uniform magnitude grid ``[0, mag_max]`` is
        scanned, then refined on a 9 x 9 tangent angle by 9 magnitude grid around the best cell,
        shrinking by 4 per level. A level result is kept only when it is not worse.

        Args:
            sigma (SymStress3): mechanical stress
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.
            dir_steps (int, optional): directions. Defaults to ``Config().oracle_dir_steps``.
            mag_steps (int, optional): magnitudes. Defaults to ``Config().oracle_mag_steps``.
            mag_max (float, optional): largest magnitude. Defaults to :py:meth:`default_mag_max`.
            refine_levels (int, optional): Defaults to ``Config().oracle_refine_levels``.

        Raises:
            ValueError: If a step count is below ``8`` or ``mag_max <= 0``.

        Returns:
            GridResult: best field and objective
        """
        cfg = Config()
        if p is None:
            p = MaterialParams()
        dir_steps = cfg.oracle_dir_steps if dir_steps is None else dir_steps
        mag_steps = cfg.oracle_mag_steps if mag_steps is None else mag_steps
        refine_levels = cfg.oracle_refine_levels if refine_levels is None else refine_levels
        if mag_max is None:
            mag_max = cls.default_mag_max(sigma, p)
        if dir_steps < 8 or mag_steps < 8:
            raise ValueError(f"steps must be at least 8, got {dir_steps}, {mag_steps}")
        if not mag_max > 0.0:
            raise ValueError(f"mag_max must be positive, got {mag_max}")

        dirs = cls.fibonacci_directions(dir_steps)
        mags = np.linspace(0.0, mag_max, mag_steps)
        obj = cls.field_objective(sigma, dirs, mags, p)
        i, j = np.unravel_index(int(np.argmin(obj)), obj.shape)
        best_n = dirs[i]
        best_a = float(mags[j])
        best = float(obj[i, j])
        levels: List[float] = [best]

        width = 2.0 * math.sqrt(4.0 * math.pi / dir_steps)
        height = 2.0 * mag_max / (mag_steps - 1)
        offsets = np.linspace(-1.0, 1.0, 9)
        for _ in range(refine_levels):
            u, v = cls._tangent_basis(best_n)
            s, t = np.meshgrid(np.tan(width * offsets), np.tan(width * offsets), indexing="ij")
            cand = best_n[None, :] + s.reshape(-1, 1) * u[None, :] + t.reshape(-1, 1) * v[None, :]
            cand /= np.linalg.norm(cand, axis=1)[:, None]
            cmags = np.maximum(0.0, best_a + height * offsets)
            cobj = cls.field_objective(sigma, cand, cmags, p)
            ci, cj = np.unravel_index(int(np.argmin(cobj)), cobj.shape)
            if float(cobj[ci, cj]) <= best:
                best = float(cobj[ci, cj])
                best_n = cand[ci]
                best_a = float(cmags[cj])
            levels.append(best)
            width /= 4.0
            height /= 4.0

        e_best = EField.from_direction(best_n, best_a)
        return GridResult(e_best=e_best, objective=best, levels=tuple(levels))

    # endregion field grid

    # region lambda scan
    @staticmethod
    def admissible_interval(terms: LambdaTerms, constraint: ReductionMode | None) -> Optional[Tuple[float, float]]:
        """
        Gets ``λ >= 0`` values keeping every term's sign.

        Args:
            terms (LambdaTerms): terms
            constraint (ReductionMode | None): ``TENSILE`` keeps terms ``>= 0``, ``COMPRESSIVE`` keeps
                them ``<= 0``; ``None`` leaves ``λ`` bounded by ``2 max|b|`` only.

        Returns:
            Tuple[float, float] | None: ``(lo, hi)`` or ``None`` when empty
        """
        scale = max((abs(b) for b in terms.bases), default=0.0)
        lo, hi = 0.0, 2.0 * scale
        if constraint is None:
            return lo, max(hi, 1.0)
        for b, s in zip(terms.bases, terms.signs):
            # b + s λ >= 0 (tensile) or <= 0 (compressive)
            bound = -b / s
            lower = (s > 0) == (constraint == ReductionMode.TENSILE)
            if lower:
                lo = max(lo, bound)
            else:
                hi = min(hi, bound)
        if lo > hi + 1e-12 * max(1.0, scale):
            return None
        return lo, max(lo, hi)

    @staticmethod
    def scan_min_lambda(
        terms: LambdaTerms, interval: Tuple[float, float], steps: int | None = None
    ) -> ScanResult:
        """
        Gets the best ``λ`` on a dense grid with one refinement pass.

        Args:
            terms (LambdaTerms): objective terms
            interval (Tuple[float, float]): ``(lo, hi)``
            steps (int, optional): grid steps. Defaults to ``Config().oracle_scan_steps``.

        Raises:
            ValueError: If ``steps < 100`` or ``lo > hi``.

        Returns:
            ScanResult: best ``λ`` and objective
        """
        steps = Config().oracle_scan_steps if steps is None else steps
        lo, hi = float(interval[0]), float(interval[1])
        if steps < 100:
            raise ValueError(f"steps must be at least 100, got {steps}")
        if lo > hi:
            raise ValueError(f"invalid interval ({lo}, {hi})")
        grid = np.linspace(lo, hi, steps + 1)
        vals = terms.value(grid)
        k = int(np.argmin(vals))
        h = (hi - lo) / steps
        fine = np.linspace(max(lo, grid[k] - h), min(hi, grid[k] + h), steps + 1)
        fvals = terms.value(fine)
        m = int(np.argmin(fvals))
        if float(fvals[m]) <= float(vals[k]):
            return ScanResult(float(fine[m]), float(fvals[m]))
        return ScanResult(float(grid[k]), float(vals[k]))

    @classmethod
    def min_constrained(
        cls, lambdas: Sequence[float], constraint: ReductionMode, steps: int | None = None
    ) -> Optional[Tuple[int, ScanResult]]:
        """
        Gets the best field axis and ``λ`` of a sign constrained problem.

        Args:
            lambdas (Sequence[float]): principal values
            constraint (ReductionMode): ``TENSILE`` or ``COMPRESSIVE``
            steps (int, optional): scan steps

        Returns:
            Tuple[int, ScanResult] | None: axis and scan, ``None`` when no axis is admissible
        """
        best: Optional[Tuple[int, ScanResult]] = None
        for axis in range(len(lambdas)):
            terms = LambdaTerms.for_axis(lambdas, axis)
            interval = cls.admissible_interval(terms, constraint)
            if interval is None:
                continue
            res = cls.scan_min_lambda(terms, interval, steps)
            if best is None or res.objective < best[1].objective:
                best = (axis, res)
        return best

    @classmethod
    def min_plane(cls, lambdas: Sequence[float], steps: int | None = None) -> Tuple[int, ScanResult]:
        """
        Gets the best ``tau_sign`` and ``λ`` of a plane problem.

        Args:
            lambdas (Sequence[float]): ascending principal values
            steps (int, optional): scan steps

        Returns:
            Tuple[int, ScanResult]: sign and scan
        """
        results = []
        for sign in (1, -1):
            terms = LambdaTerms.plane(lambdas, sign)
            interval = cls.admissible_interval(terms, None)
            results.append((sign, cls.scan_min_lambda(terms, interval, steps)))
        return min(results, key=lambda r: r[1].objective)

    # endregion lambda scan

    # region check
    @classmethod
    def check(
        cls,
        mode: ReductionMode,
        trials: int,
        seed: int,
        tol: float | None = None,
        rule: KktRule = KktRule.EXACT,
    ) -> CheckReport:
        """
        Runs random tensors through the closed form solver and the oracle.

        A trial violates when ``closed - oracle > tol · max(1, ‖σ‖²)``, or when exactly one side
        reports infeasibility.

        Args:
            mode (ReductionMode): problem
            trials (int): number of random tensors, ``>= 1``
            seed (int): random seed
            tol (float, optional): Defaults to ``Config().check_tol``.
            rule (KktRule, optional): constrained rule. Defaults to ``KktRule.EXACT``.

        Raises:
            ValueError: If ``trials < 1``.

        Returns:
            CheckReport: report
        """
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}")
        tol = Config().check_tol if tol is None else tol
        mode = ReductionMode(mode)
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
        violations = 0
        n_infeasible = 0
        worst_gap = -math.inf
        worst_sigma: Optional[Tuple[float, ...]] = None
        for _ in range(trials):
            comps = rng.standard_normal(3 if mode == ReductionMode.PLANE else 6)
            gap, both_infeasible = cls._trial(mode, comps, rule)
            if both_infeasible:
                n_infeasible += 1
                continue
            n_diag = 2 if mode == ReductionMode.PLANE else 3
            scale = max(1.0, float(np.sum(comps[:n_diag] ** 2) + 2.0 * np.sum(comps[n_diag:] ** 2)))
            if gap > worst_gap:
                worst_gap = gap
                worst_sigma = tuple(float(c) for c in comps)
            if gap > tol * scale:
                violations += 1
        return CheckReport(
            mode=mode,
            trials=trials,
            tol=tol,
            violations=violations,
            worst_gap=worst_gap if worst_sigma is not None else 0.0,
            worst_sigma=worst_sigma,
            n_infeasible=n_infeasible,
        )

    @classmethod
    def _trial(cls, mode: ReductionMode, comps: np.ndarray, rule: KktRule) -> Tuple[float, bool]:
        if mode == ReductionMode.PLANE:
            s2 = SymStress2.from_components(comps)
            sol = PlaneStress.solve_plane(s2)
            lambdas = np.linalg.eigvalsh(s2.to_array())
            _, res = cls.min_plane(lambdas)
            closed = sol.total.norm**2
            return closed - res.objective, False

        sigma = SymStress3.from_components(comps)
        if mode == ReductionMode.UNCONSTRAINED:
            sol = Unconstrained.solve_unconstrained(sigma)
            closed = Tensor.frobenius_norm(sol.total) ** 2 if sol.feasible else Tensor.frobenius_norm(sigma) ** 2
            grid = cls.grid_min_unconstrained(sigma)
            return closed - grid.objective, False

        if mode == ReductionMode.TENSILE:
            sol = Constrained.solve_tensile(sigma, rule=rule)
        else:
            sol = Constrained.solve_compressive(sigma, rule=rule)
        lambdas = np.linalg.eigvalsh(sigma.to_array())
        found = cls.min_constrained(lambdas, mode)
        if found is None:
            return (0.0, True) if not sol.feasible else (math.inf, False)
        if not sol.feasible:
            return math.inf, False
        return Tensor.frobenius_norm(sol.total) ** 2 - found[1].objective, False

    # endregion check
