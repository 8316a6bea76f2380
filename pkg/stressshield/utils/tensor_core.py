# coding: utf-8
"""
Symmetric tensor algebra: field and stress value types, Maxwell and total stress,
Frobenius norm and a cyclic Jacobi eigensolver for 3x3 symmetric tensors.
"""
# region Imports
from __future__ import annotations
import math
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from ..cfg.config import Config
from ..exceptions import ex as mEx
from .type_var import Six, Triple, Vec3

# endregion Imports

EPS0_SI = 8.854e-12
"""Vacuum permittivity in SI units (F/m)."""


def _check_finite(**values: float) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise mEx.NonFiniteError(name, value)


@dataclass(frozen=True)
class MaterialParams:
    """
    Permittivities of the cell material.

    Defaults are nondimensional, ``eps0 = 1`` and ``epsr = 1``.
    """

    eps0: float = 1.0
    """Vacuum permittivity, ``> 0``"""
    epsr: float = 1.0
    """Relative permittivity, ``>= 1``"""

    def __post_init__(self) -> None:
        if not math.isfinite(self.eps0) or self.eps0 <= 0.0:
            raise mEx.MaterialParamsError("eps0", self.eps0)
        if not math.isfinite(self.epsr) or self.epsr < 1.0:
            raise mEx.MaterialParamsError("epsr", self.epsr)

    @classmethod
    def physical(cls, epsr: float = 1.0) -> MaterialParams:
        """
        Gets parameters in SI units.

        Args:
            epsr (float, optional): Relative permittivity. Defaults to ``1.0``.

        Returns:
            MaterialParams: params with ``eps0 = 8.854e-12``
        """
        return cls(eps0=EPS0_SI, epsr=epsr)

    @property
    def is_vacuum(self) -> bool:
        """Gets if ``epsr`` is exactly ``1``"""
        return self.epsr == 1.0

    @property
    def quartic_coefficient(self) -> float:
        """Gets ``epsr² - epsr + 3/4``, the coefficient of ``eps0² |E|⁴`` in ``‖τ‖²``"""
        return self.epsr * self.epsr - self.epsr + 0.75


@dataclass(frozen=True)
class SymStress3:
    """
    Symmetric 3x3 stress tensor.

    Off diagonal components are stored once; :py:meth:`to_array` expands them symmetrically.
    """

    xx: float = 0.0
    yy: float = 0.0
    zz: float = 0.0
    xy: float = 0.0
    xz: float = 0.0
    yz: float = 0.0

    def __post_init__(self) -> None:
        _check_finite(xx=self.xx, yy=self.yy, zz=self.zz, xy=self.xy, xz=self.xz, yz=self.yz)

    @classmethod
    def diag(cls, a: float, b: float, c: float) -> SymStress3:
        """Gets a diagonal tensor"""
        return cls(xx=float(a), yy=float(b), zz=float(c))

    @classmethod
    def zero(cls) -> SymStress3:
        """Gets the zero tensor"""
        return cls()

    @classmethod
    def from_components(cls, values: Sequence[float]) -> SymStress3:
        """
        Gets tensor from six components.

        Args:
            values (Sequence[float]): ``xx, yy, zz, xy, xz, yz``

        Raises:
            ValueError: If ``values`` does not contain six values.

        Returns:
            SymStress3: tensor
        """
        if len(values) != 6:
            raise ValueError(f"Expected 6 components, got {len(values)}")
        return cls(*(float(v) for v in values))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> SymStress3:
        """
        Gets tensor from a 3x3 array. The symmetric part is taken.

        Args:
            arr (np.ndarray): 3x3 array

        Returns:
            SymStress3: tensor
        """
        a = np.asarray(arr, dtype=float)
        if a.shape != (3, 3):
            raise ValueError(f"Expected shape (3, 3), got {a.shape}")
        s = 0.5 * (a + a.T)
        return cls(
            xx=float(s[0, 0]),
            yy=float(s[1, 1]),
            zz=float(s[2, 2]),
            xy=float(s[0, 1]),
            xz=float(s[0, 2]),
            yz=float(s[1, 2]),
        )

    def to_array(self) -> np.ndarray:
        """Gets the full symmetric 3x3 array"""
        return np.array(
            [
                [self.xx, self.xy, self.xz],
                [self.xy, self.yy, self.yz],
                [self.xz, self.yz, self.zz],
            ],
            dtype=float,
        )

    def components(self) -> Six:
        """Gets ``(xx, yy, zz, xy, xz, yz)``"""
        return (self.xx, self.yy, self.zz, self.xy, self.xz, self.yz)

    @property
    def trace(self) -> float:
        """Gets ``xx + yy + zz``"""
        return self.xx + self.yy + self.zz

    def __add__(self, other: SymStress3) -> SymStress3:
        if not isinstance(other, SymStress3):
            return NotImplemented
        return SymStress3(*(a + b for a, b in zip(self.components(), other.components())))

    def scaled(self, c: float) -> SymStress3:
        """Gets ``c * self``"""
        return SymStress3(*(c * v for v in self.components()))


@dataclass(frozen=True)
class EField:
    """Electric field vector"""

    ex: float = 0.0
    ey: float = 0.0
    ez: float = 0.0

    def __post_init__(self) -> None:
        _check_finite(ex=self.ex, ey=self.ey, ez=self.ez)

    @classmethod
    def from_direction(cls, direction: Sequence[float], alpha: float) -> EField:
        """
        Gets field of magnitude ``alpha`` along ``direction``.

        Args:
            direction (Sequence[float]): unit vector
            alpha (float): field magnitude

        Returns:
            EField: field
        """
        return cls(*(alpha * float(d) for d in direction))

    @property
    def alpha(self) -> float:
        """Gets field magnitude ``|E|``"""
        return math.sqrt(self.ex * self.ex + self.ey * self.ey + self.ez * self.ez)

    def to_array(self) -> np.ndarray:
        return np.array([self.ex, self.ey, self.ez], dtype=float)

    def components(self) -> Vec3:
        return (self.ex, self.ey, self.ez)


@dataclass(frozen=True)
class EigenSystem3:
    """
    Eigenvalues in ascending order with paired unit eigenvectors.

    Column ``i`` of :py:attr:`vectors` belongs to ``lambdas[i]``.
    """

    lambdas: Triple
    vectors: np.ndarray = field(compare=False, repr=False)

    def vector(self, index: int) -> Vec3:
        """
        Gets eigenvector.

        Args:
            index (int): zero based ascending index

        Returns:
            Vec3: unit eigenvector
        """
        v = self.vectors[:, index]
        return (float(v[0]), float(v[1]), float(v[2]))

    def compose(self, values: Sequence[float]) -> SymStress3:
        """
        Gets ``Σ values[i] N_i⊗N_i``.

        Args:
            values (Sequence[float]): principal values paired with the eigenvectors.

        Returns:
            SymStress3: tensor
        """
        n = self.vectors
        return SymStress3.from_array(n @ np.diag(np.asarray(values, dtype=float)) @ n.T)

    def reconstruct(self) -> SymStress3:
        """Gets ``Σ λ_i N_i⊗N_i``"""
        return self.compose(self.lambdas)


class Tensor:
    """Tensor operations. All methods are pure."""

    @staticmethod
    def maxwell_stress(e: EField, p: MaterialParams | None = None) -> SymStress3:
        """
        Gets Maxwell stress ``eps0 (epsr E⊗E - ½|E|² I)``.

        Args:
            e (EField): electric field
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            SymStress3: Maxwell stress
        """
        if p is None:
            p = MaterialParams()
        x, y, z = e.components()
        half = 0.5 * (x * x + y * y + z * z)
        k = p.eps0
        r = p.epsr
        return SymStress3(
            xx=k * (r * x * x - half),
            yy=k * (r * y * y - half),
            zz=k * (r * z * z - half),
            xy=k * r * x * y,
            xz=k * r * x * z,
            yz=k * r * y * z,
        )

    @classmethod
    def total_stress(cls, sigma: SymStress3, e: EField, p: MaterialParams | None = None) -> SymStress3:
        """
        Gets total stress ``σ + τ``.

        Args:
            sigma (SymStress3): mechanical stress
            e (EField): electric field
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            SymStress3: total stress
        """
        return sigma + cls.maxwell_stress(e, p)

    @staticmethod
    def frobenius_norm(t: SymStress3) -> float:
        """
        Gets Frobenius norm. Off diagonal components count twice.

        Args:
            t (SymStress3): tensor

        Returns:
            float: norm
        """
        xx, yy, zz, xy, xz, yz = t.components()
        return math.sqrt(xx * xx + yy * yy + zz * zz + 2.0 * (xy * xy + xz * xz + yz * yz))

    @staticmethod
    def double_contraction(a: SymStress3, b: SymStress3) -> float:
        """Gets ``tr(a·b)``"""
        a0 = a.components()
        b0 = b.components()
        return sum(a0[i] * b0[i] for i in range(3)) + 2.0 * sum(a0[i] * b0[i] for i in range(3, 6))

    @staticmethod
    def maxwell_eigenvalues(e: EField, p: MaterialParams | None = None) -> Triple:
        """
        Gets the eigenvalues of the Maxwell stress in ascending order.

        For ``epsr = 1`` they are ``(-λm, -λm, +λm)`` with ``λm = eps0 |E|² / 2``.

        Args:
            e (EField): electric field
            p (MaterialParams, optional): material. Defaults to ``MaterialParams()``.

        Returns:
            Triple: eigenvalues
        """
        if p is None:
            p = MaterialParams()
        a2 = e.alpha**2
        lo = -0.5 * p.eps0 * a2
        hi = p.eps0 * (p.epsr - 0.5) * a2
        return (lo, lo, hi)

    @staticmethod
    def lambda_m_from_alpha(alpha: float, p: MaterialParams | None = None) -> float:
        """Gets ``λm = eps0 α² / 2``"""
        eps0 = 1.0 if p is None else p.eps0
        return 0.5 * eps0 * alpha * alpha

    @staticmethod
    def alpha_from_lambda_m(lambda_m: float, p: MaterialParams | None = None) -> float:
        """
        Gets ``α = sqrt(2 λm / eps0)``.

        Raises:
            ValueError: If ``lambda_m`` is negative.
        """
        if lambda_m < 0.0:
            raise ValueError(f"lambda_m must not be negative, got {lambda_m}")
        eps0 = 1.0 if p is None else p.eps0
        return math.sqrt(2.0 * lambda_m / eps0)

    @staticmethod
    def rotate(sigma: SymStress3, r: np.ndarray) -> SymStress3:
        """
        Gets ``R σ Rᵀ``.

        Args:
            sigma (SymStress3): tensor
            r (np.ndarray): 3x3 rotation

        Returns:
            SymStress3: rotated tensor
        """
        rot = np.asarray(r, dtype=float)
        return SymStress3.from_array(rot @ sigma.to_array() @ rot.T)

    @staticmethod
    def orient(v: Sequence[float], tol: float = 1e-12) -> Vec3:
        """
        Gets ``v`` or ``-v`` so that the first component with ``|c| > tol`` is positive.

        Args:
            v (Sequence[float]): vector
            tol (float, optional): zero tolerance. Defaults to ``1e-12``.

        Returns:
            Vec3: oriented vector
        """
        for c in v:
            if abs(c) > tol:
                if c < 0.0:
                    return tuple(-float(x) for x in v)  # type: ignore[return-value]
                break
        return tuple(float(x) for x in v)  # type: ignore[return-value]

    # region eigen
    @staticmethod
    def _jacobi(a: np.ndarray, tol: float, max_sweeps: int) -> Tuple[np.ndarray, np.ndarray]:
        a = a.copy()
        v = np.eye(3)
        scale = float(np.linalg.norm(a))
        if scale == 0.0:
            return np.zeros(3), v
        off = 0.0
        for _ in range(max_sweeps):
            off = math.sqrt(2.0 * (a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2))
            if off <= tol * scale:
                return np.diag(a).copy(), v
            for p, q in ((0, 1), (0, 2), (1, 2)):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                j = np.eye(3)
                j[p, p] = c
                j[q, q] = c
                j[p, q] = s
                j[q, p] = -s
                a = j.T @ a @ j
                a[p, q] = 0.0
                a[q, p] = 0.0
                v = v @ j
        off = math.sqrt(2.0 * (a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2))
        if off <= tol * scale:
            return np.diag(a).copy(), v
        raise mEx.EigenConvergenceError(max_sweeps, off)

    @staticmethod
    def _orthonormal_cluster(vectors: np.ndarray) -> np.ndarray:
        # Gram-Schmidt of the coordinate axes projected onto the cluster span
        proj = vectors @ vectors.T
        basis = []
        for axis in range(3):
            w = proj[:, axis].copy()
            for b in basis:
                w -= (b @ w) * b
            nrm = float(np.linalg.norm(w))
            if nrm > 1e-8:
                basis.append(w / nrm)
            if len(basis) == vectors.shape[1]:
                break
        return np.column_stack(basis)

    @classmethod
    def eigen_decompose(cls, sigma: SymStress3) -> EigenSystem3:
        """
        Gets eigenvalues and eigenvectors of a symmetric tensor.

        Eigenvalues are sorted ascending. Eigenvectors of repeated eigenvalues are rebuilt
        from the coordinate axes in ``x, y, z`` order, and every eigenvector is oriented so
        its first nonzero component is positive. Output is deterministic.

        Args:
            sigma (SymStress3): tensor

        Raises:
            EigenConvergenceError: If the sweep limit is reached.

        Returns:
            EigenSystem3: eigen system

        .. collapse:: Example

            .. code-block:: python

                es = Tensor.eigen_decompose(SymStress3.diag(3.0, -1.0, 2.0))
                assert es.lambdas == (-1.0, 2.0, 3.0)
        """
        cfg = Config()
        a = sigma.to_array()
        w, v = cls._jacobi(a, cfg.jacobi_tol, cfg.jacobi_max_sweeps)
        order = np.argsort(w, kind="stable")
        w = w[order]
        v = v[:, order]

        scale = max(1.0, float(np.linalg.norm(a)))
        gap = cfg.eig_tol * scale
        start = 0
        while start < 3:
            stop = start + 1
            while stop < 3 and w[stop] - w[stop - 1] <= gap:
                stop += 1
            if stop - start > 1:
                v[:, start:stop] = cls._orthonormal_cluster(v[:, start:stop])
            start = stop

        cols = [cls.orient(v[:, i]) for i in range(3)]
        vectors = np.column_stack([np.asarray(c) for c in cols])
        lambdas = (float(w[0]), float(w[1]), float(w[2]))
        return EigenSystem3(lambdas=lambdas, vectors=vectors)

    # endregion eigen
