from __future__ import annotations
import math
import pytest

if __name__ == "__main__":
    pytest.main([__file__])

import numpy as np

from stressshield.exceptions import ex as mEx
from stressshield.reduction.constrained import Constrained, Infeasible, KktCase, KktRule, SignPattern
from stressshield.reduction.reduction_mode import ReductionMode
from stressshield.reduction.unconstrained import ReductionSolution
from stressshield.utils.tensor_core import MaterialParams, SymStress3, Tensor

TENSILE = ReductionMode.TENSILE
COMPRESSIVE = ReductionMode.COMPRESSIVE


def _principal_totals(sol: ReductionSolution):
    return tuple(np.linalg.eigvalsh(sol.total.to_array()))


# region classify
def test_sign_pattern() -> None:
    assert Constrained.sign_pattern((-1.0, 0.0, 2.0), 1e-12) == SignPattern(1, 1, 1)
    assert Constrained.sign_pattern((1e-14, 1.0, 2.0), 1e-12) == SignPattern(2, 1, 0)
    with pytest.raises(ValueError):
        SignPattern(1, 1, 2)


def test_classify() -> None:
    cl = Constrained.classify(SymStress3.diag(4.0, 2.0, -1.0))
    assert (cl.pattern.n_pos, cl.pattern.n_neg) == (2, 1)
    assert cl.case == "mixed"
    assert cl.labeled == (4.0, 2.0, 1.0)
    assert cl.feasible

    cl = Constrained.classify(SymStress3.diag(1.0, 1.0, 1.0), constraint=COMPRESSIVE)
    assert cl.case == "infeasible"
    assert not cl.feasible


def test_classify_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        Constrained.classify_lambdas((1.0, 2.0, 3.0), -1.0, TENSILE)
    with pytest.raises(ValueError):
        Constrained.classify_lambdas((1.0, 2.0, 3.0), 0.0, ReductionMode.PLANE)


def test_classify_zero_joins_tensile_case() -> None:
    cl = Constrained.classify_lambdas((-1.0, 0.0, 2.0), 1e-12, TENSILE)
    assert cl.case == "mixed"


# endregion classify


# region tensile
def test_tensile_upper_bound() -> None:
    sol = Constrained.solve_tensile(SymStress3.diag(4.0, 2.0, -1.0))
    assert sol.lambda_m == pytest.approx(2.0, abs=1e-12)
    assert sol.total.components() == pytest.approx((2.0, 0.0, 1.0, 0.0, 0.0, 0.0), abs=1e-12)
    assert sol.direction == (0.0, 0.0, 1.0)
    assert sol.diagnostics.case_id == KktCase.UPPER_BOUND
    assert "total[2]=0" in sol.diagnostics.active_constraints
    assert sol.diagnostics.multiplier > 0.0
    assert sol.sigma_rel == pytest.approx(math.sqrt(5.0 / 21.0), abs=1e-12)


def test_tensile_upper_bound_literal_rule() -> None:
    sol = Constrained.solve_tensile(SymStress3.diag(4.0, 2.0, -1.0), rule=KktRule.LITERAL)
    assert sol.lambda_m == pytest.approx(2.0, abs=1e-12)
    assert sol.total.components() == pytest.approx((2.0, 0.0, 1.0, 0.0, 0.0, 0.0), abs=1e-12)
    assert sol.diagnostics.exact
    assert sol.diagnostics.case_id == KktCase.UPPER_BOUND
    failed = [c for c in sol.diagnostics.candidates if c.label == "interior"][0].failed
    assert failed == ("2λ2 - λ1 - λ3 >= 0",)


@pytest.mark.parametrize("rule", [KktRule.EXACT, KktRule.LITERAL])
def test_tensile_interior_on_boundary(rule: KktRule) -> None:
    sol = Constrained.solve_tensile(SymStress3.diag(3.0, 2.0, -1.0), rule=rule)
    assert sol.lambda_m == pytest.approx(2.0, abs=1e-12)
    assert sol.total.components() == pytest.approx((1.0, 0.0, 1.0, 0.0, 0.0, 0.0), abs=1e-12)
    assert sol.diagnostics.case_id == KktCase.INTERIOR


@pytest.mark.parametrize("rule", [KktRule.EXACT, KktRule.LITERAL])
def test_tensile_interior(rule: KktRule) -> None:
    sol = Constrained.solve_tensile(SymStress3.diag(3.0, 2.0, -0.5), rule=rule)
    assert sol.lambda_m == pytest.approx(11.0 / 6.0, abs=1e-12)
    assert sol.diagnostics.case_id == KktCase.INTERIOR
    assert sol.diagnostics.lagrangian_value == pytest.approx(19.0 / 6.0, abs=1e-12)
    assert min(_principal_totals(sol)) >= -1e-12


def test_mixed_tensile_gap() -> None:
    # interior 19/6 against fallback λm = λ2 giving 13/4
    assert Constrained.mixed_tensile_gap((3.0, 2.0, 0.5)) == pytest.approx(-1.0 / 12.0, abs=1e-15)
    sol = Constrained.solve_tensile(SymStress3.diag(3.0, 2.0, -0.5), rule=KktRule.LITERAL)
    assert sol.diagnostics.gap == pytest.approx(-1.0 / 12.0, abs=1e-12)


def test_mixed_tensile_gap_never_positive(rng) -> None:
    for _ in range(200):
        assert Constrained.mixed_tensile_gap(tuple(rng.standard_normal(3))) <= 0.0


@pytest.mark.parametrize("rule", [KktRule.EXACT, KktRule.LITERAL])
def test_tensile_all_positive(rule: KktRule) -> None:
    sol = Constrained.solve_tensile(SymStress3.diag(1.0, 2.0, 3.0), rule=rule)
    assert sol.feasible
    assert sol.lambda_m == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert sol.direction == (1.0, 0.0, 0.0)
    assert sol.sigma_rel == pytest.approx(math.sqrt(13.0 / 21.0), abs=1e-12)


@pytest.mark.parametrize(
    "sigma",
    [SymStress3.diag(-1.0, -1.0, 1.0), SymStress3.diag(-1.0, -2.0, -3.0), SymStress3.diag(-2.0, -0.5, 4.0)],
)
def test_tensile_infeasible(sigma: SymStress3) -> None:
    for rule in KktRule:
        res = Constrained.solve_tensile(sigma, rule=rule)
        assert isinstance(res, Infeasible)
        assert not res.feasible
        assert res.sigma_rel is None
    with pytest.raises(mEx.InfeasibleError) as exc:
        Constrained.solve_tensile(sigma, raise_err=True)
    assert exc.value.result.constraint == TENSILE


# endregion tensile


# region compressive
@pytest.mark.parametrize("rule", [KktRule.EXACT, KktRule.LITERAL])
def test_compressive_interior(rule: KktRule) -> None:
    sol = Constrained.solve_compressive(SymStress3.diag(1.0 / 3.0, -2.0, -3.0), rule=rule)
    assert sol.lambda_m == pytest.approx(4.0 / 9.0, abs=1e-12)
    assert sol.direction == (0.0, 0.0, 1.0)
    assert sol.diagnostics.case_id == KktCase.INTERIOR
    assert max(_principal_totals(sol)) <= 1e-12


@pytest.mark.parametrize("rule", [KktRule.EXACT, KktRule.LITERAL])
def test_compressive_tie_goes_to_later_axis(rule: KktRule) -> None:
    sol = Constrained.solve_compressive(SymStress3.diag(0.5, -2.0, -2.0), rule=rule)
    assert sol.lambda_m == pytest.approx(0.5, abs=1e-12)
    assert sol.direction == (0.0, 0.0, 1.0)
    assert sol.total.components() == pytest.approx((0.0, -2.5, -1.5, 0.0, 0.0, 0.0), abs=1e-12)
    assert sol.diagnostics.case_id == KktCase.LOWER_BOUND


def test_compressive_all_negative_exact() -> None:
    sol = Constrained.solve_compressive(SymStress3.diag(-1.0, -2.0, -3.0))
    assert sol.lambda_m == pytest.approx(0.0, abs=1e-12)
    assert sol.sigma_rel == pytest.approx(1.0, abs=1e-12)
    assert sol.diagnostics.case_id == KktCase.INTERIOR
    assert sol.diagnostics.exact


def test_compressive_all_negative_literal() -> None:
    sol = Constrained.solve_compressive(SymStress3.diag(-1.0, -2.0, -3.0), rule=KktRule.LITERAL)
    assert sol.lambda_m == pytest.approx(1.0, abs=1e-12)
    assert sol.direction == (1.0, 0.0, 0.0)
    assert sol.total.components() == pytest.approx((0.0, -3.0, -4.0, 0.0, 0.0, 0.0), abs=1e-12)
    assert sol.sigma_rel == pytest.approx(5.0 / math.sqrt(14.0), abs=1e-12)
    assert sol.sigma_rel > 1.0
    assert not sol.diagnostics.exact


def test_compressive_infeasible() -> None:
    for rule in KktRule:
        res = Constrained.solve_compressive(SymStress3.diag(1.0, 1.0, 1.0), rule=rule)
        assert isinstance(res, Infeasible)
        assert res.constraint == COMPRESSIVE
        assert res.rule == rule


# endregion compressive


def test_zero_tensor() -> None:
    for solve in (Constrained.solve_tensile, Constrained.solve_compressive):
        sol = solve(SymStress3.zero())
        assert sol.feasible
        assert sol.lambda_m == 0.0
        assert sol.sigma_rel == 0.0
        assert sol.diagnostics.active_constraints == ("lambda_m=0",)


def test_rejects_permittivity() -> None:
    with pytest.raises(mEx.UnsupportedPermittivityError):
        Constrained.solve_tensile(SymStress3.diag(1.0, 2.0, 3.0), MaterialParams(epsr=3.0))


def test_admissible_interval() -> None:
    assert Constrained.admissible_interval((-0.5, 2.0, 3.0), 0, TENSILE) == (0.5, 2.0)
    assert Constrained.admissible_interval((-3.0, -2.0, 1.0 / 3.0), 0, COMPRESSIVE) == (1.0 / 3.0, 3.0)


def test_principal_sigma_rel_kernel() -> None:
    assert Constrained.principal_sigma_rel((0.0, 0.0, 0.0), TENSILE) == 0.0
    assert Constrained.principal_sigma_rel((1.0, 1.0, 1.0), COMPRESSIVE) is None
    assert Constrained.principal_sigma_rel((-1.0, -1.0, 1.0), TENSILE) is None
    val = Constrained.principal_sigma_rel((-0.5, 3.0, 2.0), TENSILE)
    assert val == pytest.approx(math.sqrt((19.0 / 6.0) / 13.25), abs=1e-12)


def _check_exact_rule_invariants(random_sym, constraint: ReductionMode, count: int) -> None:
    solve = Constrained.solve_tensile if constraint == TENSILE else Constrained.solve_compressive
    for _ in range(count):
        sigma = random_sym()
        sol = solve(sigma)
        if not sol.feasible:
            continue
        tol = 1e-10 * max(1.0, Tensor.frobenius_norm(sigma))
        totals = _principal_totals(sol)
        if constraint == TENSILE:
            assert min(totals) >= -tol
        else:
            assert max(totals) <= tol
        assert sol.lambda_m >= -1e-15
        assert sol.diagnostics.exact
        assert sol.diagnostics.lagrangian_value == pytest.approx(Tensor.frobenius_norm(sol.total) ** 2, abs=1e-9)


@pytest.mark.parametrize("constraint", [TENSILE, COMPRESSIVE])
def test_exact_rule_invariants(random_sym, constraint: ReductionMode) -> None:
    _check_exact_rule_invariants(random_sym, constraint, 300)


@pytest.mark.slow
@pytest.mark.parametrize("constraint", [TENSILE, COMPRESSIVE])
def test_exact_rule_invariants_many(random_sym, constraint: ReductionMode) -> None:
    _check_exact_rule_invariants(random_sym, constraint, 10000)


@pytest.mark.parametrize("c", [1e-3, 1.0, 1e3])
@pytest.mark.parametrize("constraint", [TENSILE, COMPRESSIVE])
def test_scale_equivariance(random_sym, constraint: ReductionMode, c: float) -> None:
    solve = Constrained.solve_tensile if constraint == TENSILE else Constrained.solve_compressive
    for _ in range(30):
        sigma = random_sym()
        a = solve(sigma)
        b = solve(sigma.scaled(c))
        assert a.feasible == b.feasible
        if a.feasible:
            assert b.lambda_m == pytest.approx(c * a.lambda_m, rel=1e-9, abs=1e-12 * c)
            assert b.sigma_rel == pytest.approx(a.sigma_rel, abs=1e-9)


@pytest.mark.parametrize("constraint", [TENSILE, COMPRESSIVE])
def test_rotation_equivariance(random_sym, random_rotation, constraint: ReductionMode) -> None:
    solve = Constrained.solve_tensile if constraint == TENSILE else Constrained.solve_compressive
    for _ in range(30):
        sigma = random_sym()
        r = random_rotation()
        a = solve(sigma)
        b = solve(Tensor.rotate(sigma, r))
        assert a.feasible == b.feasible
        if a.feasible:
            assert b.lambda_m == pytest.approx(a.lambda_m, abs=1e-9)
            assert b.sigma_rel == pytest.approx(a.sigma_rel, abs=1e-9)


def test_exact_never_worse_than_literal(random_sym) -> None:
    for _ in range(300):
        sigma = random_sym()
        for solve, constraint in ((Constrained.solve_tensile, TENSILE), (Constrained.solve_compressive, COMPRESSIVE)):
            exact = solve(sigma)
            literal = solve(sigma, rule=KktRule.LITERAL)
            if not (exact.feasible and literal.feasible):
                continue
            if Constrained._satisfies(_principal_totals(literal), constraint, 1e-9):
                assert exact.diagnostics.lagrangian_value <= literal.diagnostics.lagrangian_value + 1e-9
