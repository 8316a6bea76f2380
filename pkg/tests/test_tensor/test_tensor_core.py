from __future__ import annotations
import math
import pytest

if __name__ == "__main__":
    pytest.main([__file__])

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import floats, lists

from stressshield.exceptions import ex as mEx
from stressshield.utils.tensor_core import EField, MaterialParams, SymStress3, Tensor

finite = floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


def test_material_defaults() -> None:
    p = MaterialParams()
    assert p.eps0 == 1.0
    assert p.epsr == 1.0
    assert p.is_vacuum
    assert p.quartic_coefficient == pytest.approx(0.75)


@pytest.mark.parametrize("eps0,epsr", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.5), (math.nan, 1.0), (1.0, math.inf)])
def test_material_invalid(eps0: float, epsr: float) -> None:
    with pytest.raises(mEx.MaterialParamsError):
        MaterialParams(eps0=eps0, epsr=epsr)


def test_material_physical() -> None:
    p = MaterialParams.physical(epsr=2.0)
    assert p.eps0 == pytest.approx(8.854e-12)
    assert not p.is_vacuum


def test_non_finite_component() -> None:
    with pytest.raises(mEx.NonFiniteError):
        SymStress3(xx=math.nan)
    with pytest.raises(mEx.NonFiniteError):
        EField(ez=math.inf)


def test_from_components_length() -> None:
    with pytest.raises(ValueError):
        SymStress3.from_components([1.0, 2.0, 3.0])


def test_from_array_symmetrizes() -> None:
    s = SymStress3.from_array(np.array([[1.0, 2.0, 0.0], [4.0, 5.0, 0.0], [0.0, 0.0, 6.0]]))
    assert s.xy == 3.0
    assert s.components() == (1.0, 5.0, 6.0, 3.0, 0.0, 0.0)


def test_maxwell_stress_z_field() -> None:
    tau = Tensor.maxwell_stress(EField(0.0, 0.0, 2.0))
    assert tau.components() == (-2.0, -2.0, 2.0, 0.0, 0.0, 0.0)


def test_maxwell_stress_zero_field() -> None:
    assert Tensor.maxwell_stress(EField()) == SymStress3.zero()


def test_maxwell_stress_tilted() -> None:
    tau = Tensor.maxwell_stress(EField(1.0, 1.0, 0.0))
    assert tau.components() == (0.0, 0.0, -1.0, 1.0, 0.0, 0.0)


@given(lists(finite, min_size=3, max_size=3))
@settings(max_examples=50)
def test_maxwell_eigenvalues(vals) -> None:
    e = EField(*vals)
    lm = Tensor.lambda_m_from_alpha(e.alpha)
    ev = np.linalg.eigvalsh(Tensor.maxwell_stress(e).to_array())
    scale = max(1.0, lm)
    assert ev[0] == pytest.approx(-lm, abs=1e-12 * scale)
    assert ev[1] == pytest.approx(-lm, abs=1e-12 * scale)
    assert ev[2] == pytest.approx(lm, abs=1e-12 * scale)
    assert Tensor.maxwell_eigenvalues(e) == pytest.approx((-lm, -lm, lm), abs=1e-12 * scale)


def test_maxwell_eigenvalues_permittivity() -> None:
    p = MaterialParams(eps0=2.0, epsr=3.0)
    e = EField(0.0, 1.0, 0.0)
    ev = np.linalg.eigvalsh(Tensor.maxwell_stress(e, p).to_array())
    assert tuple(ev) == pytest.approx(Tensor.maxwell_eigenvalues(e, p))
    assert Tensor.maxwell_eigenvalues(e, p) == pytest.approx((-1.0, -1.0, 5.0))


def test_lambda_m_alpha_conversion() -> None:
    p = MaterialParams(eps0=4.0)
    assert Tensor.lambda_m_from_alpha(3.0, p) == pytest.approx(18.0)
    assert Tensor.alpha_from_lambda_m(18.0, p) == pytest.approx(3.0)
    with pytest.raises(ValueError):
        Tensor.alpha_from_lambda_m(-1.0)


def test_total_stress() -> None:
    sigma = SymStress3.diag(-1.0, 1.0, 1.0)
    total = Tensor.total_stress(sigma, EField(math.sqrt(2.0), 0.0, 0.0))
    assert total.components() == pytest.approx((0.0, 0.0, 0.0, 0.0, 0.0, 0.0), abs=1e-15)


def test_frobenius_norm() -> None:
    assert Tensor.frobenius_norm(SymStress3(xx=1.0, yy=2.0, zz=2.0)) == 3.0
    s = SymStress3(xy=1.0)
    assert Tensor.frobenius_norm(s) == pytest.approx(math.sqrt(2.0))
    assert Tensor.frobenius_norm(s) == pytest.approx(float(np.linalg.norm(s.to_array())))


def test_double_contraction(random_sym) -> None:
    a = random_sym()
    b = random_sym()
    assert Tensor.double_contraction(a, b) == pytest.approx(float(np.sum(a.to_array() * b.to_array())))
    assert Tensor.double_contraction(a, a) == pytest.approx(Tensor.frobenius_norm(a) ** 2)


def test_eigen_decompose_diag() -> None:
    es = Tensor.eigen_decompose(SymStress3.diag(3.0, -1.0, 2.0))
    assert es.lambdas == (-1.0, 2.0, 3.0)
    assert es.vector(0) == (0.0, 1.0, 0.0)
    assert es.vector(1) == (0.0, 0.0, 1.0)
    assert es.vector(2) == (1.0, 0.0, 0.0)


def test_eigen_decompose_zero() -> None:
    es = Tensor.eigen_decompose(SymStress3.zero())
    assert es.lambdas == (0.0, 0.0, 0.0)
    assert np.allclose(es.vectors, np.eye(3))


def test_eigen_decompose_repeated_is_deterministic() -> None:
    sigma = SymStress3.diag(0.5, -2.0, -2.0)
    es1 = Tensor.eigen_decompose(sigma)
    es2 = Tensor.eigen_decompose(sigma)
    assert es1.lambdas == (-2.0, -2.0, 0.5)
    assert np.array_equal(es1.vectors, es2.vectors)
    assert es1.vector(0) == (0.0, 1.0, 0.0)
    assert es1.vector(1) == (0.0, 0.0, 1.0)


def test_eigen_decompose_random(random_sym) -> None:
    for _ in range(50):
        sigma = random_sym()
        es = Tensor.eigen_decompose(sigma)
        ref = np.linalg.eigvalsh(sigma.to_array())
        assert es.lambdas == pytest.approx(tuple(ref), abs=1e-12)
        assert es.lambdas[0] <= es.lambdas[1] <= es.lambdas[2]
        n = es.vectors
        assert np.allclose(n.T @ n, np.eye(3), atol=1e-12)
        rec = es.reconstruct().to_array()
        assert np.allclose(rec, sigma.to_array(), atol=1e-12)
        for i in range(3):
            v = np.asarray(es.vector(i))
            first = v[np.abs(v) > 1e-12][0]
            assert first > 0.0


def test_rotation_invariance(random_sym, random_rotation) -> None:
    for _ in range(20):
        sigma = random_sym()
        r = random_rotation()
        rotated = Tensor.rotate(sigma, r)
        a = Tensor.eigen_decompose(sigma).lambdas
        b = Tensor.eigen_decompose(rotated).lambdas
        assert a == pytest.approx(b, abs=1e-12)
        assert Tensor.frobenius_norm(rotated) == pytest.approx(Tensor.frobenius_norm(sigma))


def test_eigen_convergence_error() -> None:
    sigma = SymStress3(xx=1.0, yy=2.0, zz=3.0, xy=0.5, xz=0.25, yz=0.125)
    with pytest.raises(mEx.EigenConvergenceError):
        Tensor._jacobi(sigma.to_array(), 0.0, 0)


def test_orient() -> None:
    assert Tensor.orient((0.0, -1.0, 0.5)) == (0.0, 1.0, -0.5)
    assert Tensor.orient((1e-15, 2.0, 0.0)) == (1e-15, 2.0, 0.0)
