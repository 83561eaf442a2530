import numpy as np
import pytest

from levymult.euclid import ImaginaryPowerProfile
from levymult.groups import GroupLevyMeasure, dual_enumerate, su2_exp, su2_irrep, torus_irrep
from levymult.levy import BernsteinSpec, bernstein_eval
from levymult.symbols import (
    central_alpha,
    central_multiplier,
    generator_matrix,
    laplace_type_symbol,
    riesz2_symbol_group,
    subordination_symbol,
    symbol_table,
)


def test_riesz2_identity_coefficients():
    for pi in (su2_irrep(0.5), su2_irrep(1.5), torus_irrep("t2", (2, -1))):
        out = riesz2_symbol_group(np.eye(len(pi.generators)), pi)
        assert np.max(np.abs(out - np.eye(pi.dim))) < 1e-10


def test_riesz2_t2_scalar():
    pi = torus_irrep("t2", (2, 1))
    out = riesz2_symbol_group(np.diag([1.0, -1.0]), pi)
    assert out[0, 0] == pytest.approx((4.0 - 1.0) / 5.0)


def test_riesz2_su2_rank_one_coefficient():
    # C = e1 e1^T on the fundamental: -(1/kappa)((i/2)s1)^2 = (1/3) I
    c = np.zeros((3, 3))
    c[0, 0] = 1.0
    out = riesz2_symbol_group(c, su2_irrep(0.5))
    assert np.max(np.abs(out - np.eye(2) / 3.0)) < 1e-14


def test_riesz2_trivial_rejected():
    with pytest.raises(ValueError, match="constants"):
        riesz2_symbol_group(np.eye(1), torus_irrep("t1", 0))


def test_laplace_constant_profile():
    pi = su2_irrep(1.0)
    out = laplace_type_symbol(np.eye(3), pi)
    assert np.max(np.abs(out - np.eye(3))) < 1e-12


@pytest.mark.parametrize("kappa,gamma", [(1.0, 0.5), (4.0, 0.5), (4.0, 1.0), (9.0, 1.0)])
def test_laplace_imaginary_power(kappa, gamma):
    k = int(round(np.sqrt(kappa)))
    out = laplace_type_symbol(ImaginaryPowerProfile(gamma), torus_irrep("t1", k))
    assert out[0, 0] == pytest.approx(np.exp(-1j * gamma * np.log(kappa)), abs=1e-6)


def test_laplace_kappa_one_is_one():
    out = laplace_type_symbol(ImaginaryPowerProfile(0.8), torus_irrep("t1", 1))
    assert out[0, 0] == pytest.approx(1.0, abs=1e-10)


def test_subordination_t1_closed_form():
    theta0 = 1.3
    nu = GroupLevyMeasure("t1", ((np.array([theta0]), 1.0),))
    h = BernsteinSpec(c=1.0)
    for k in (1, 2, 3):
        out = subordination_symbol(1.0, h, nu, torus_irrep("t1", k))
        assert out[0, 0] == pytest.approx((1.0 - np.cos(k * theta0)) / k**2, abs=1e-13)


def test_subordination_zero_psi():
    nu = GroupLevyMeasure("t1", ((np.array([0.5]), 2.0),))
    out = subordination_symbol(0.0, BernsteinSpec(c=1.0), nu, torus_irrep("t1", 2))
    assert np.max(np.abs(out)) == 0.0


def test_subordination_su2_direct_assembly():
    from levymult.groups import irrep_evaluate

    tau = su2_exp([0.4, -0.7, 0.9])
    nu = GroupLevyMeasure("su2", ((tau, 1.3),))
    h = BernsteinSpec(c=0.0, atoms=((1.0, 1.0),))  # h(u) = 1 - e^{-u}
    pi = su2_irrep(0.5)
    out = subordination_symbol(np.array([0.8]), h, nu, pi)
    rep = irrep_evaluate(pi, tau)
    manual = 1.3 * 0.8 * (2 * np.eye(2) - rep - rep.conj().T)
    manual /= 2.0 * (1.0 - np.exp(-0.75))
    assert np.max(np.abs(out - manual)) < 1e-12


def test_central_alpha_examples():
    pi = su2_irrep(0.5)
    empty = GroupLevyMeasure("su2")
    assert central_alpha(2.0, empty, pi) == pytest.approx(-2.0 * 0.75)
    tau = su2_exp([0.0, 0.0, np.pi])
    nu = GroupLevyMeasure("su2", ((tau, 1.0),))
    # normalised character of diag(i, -i) vanishes
    assert central_alpha(0.0, nu, pi) == pytest.approx(-1.0, abs=1e-14)
    assert central_alpha(0.0, nu, pi).real <= 1e-12


def test_central_alpha_nonpositive_real_part():
    rng = np.random.default_rng(2)
    for _ in range(20):
        tau = su2_exp(rng.standard_normal(3))
        nu = GroupLevyMeasure("su2", ((tau, float(rng.uniform(0.1, 2.0))),))
        for j in (0.5, 1.0, 1.5):
            assert central_alpha(float(rng.uniform(0, 1)), nu, su2_irrep(j)).real <= 1e-12


def test_central_multiplier_riesz_specialisation():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((3, 3))
    pi = su2_irrep(1.0)
    out = central_multiplier(a, None, 1.0, GroupLevyMeasure("su2"), pi)
    assert np.max(np.abs(out - riesz2_symbol_group(a, pi))) < 1e-12


def test_central_multiplier_subordination_specialisation():
    tau = su2_exp([0.6, 0.3, 1.1])
    nu = GroupLevyMeasure("su2", ((tau, 0.9),))
    h = BernsteinSpec(c=0.1, atoms=((0.8, 2.0),))
    psi = np.array([0.7])
    for j in (0.5, 1.0):
        pi = su2_irrep(j)
        via_central = central_multiplier(
            None, psi, 0.0, nu, pi, alpha=-float(bernstein_eval(h, pi.casimir))
        )
        direct = subordination_symbol(psi, h, nu, pi)
        assert np.max(np.abs(via_central - direct)) < 1e-10


def test_central_multiplier_zero_pair():
    nu = GroupLevyMeasure("t1", ((np.array([1.0]), 1.0),))
    out = central_multiplier(None, 0.0, 0.5, nu, torus_irrep("t1", 2))
    assert np.max(np.abs(out)) == 0.0


def test_central_multiplier_requires_decay():
    with pytest.raises(ValueError, match="alpha"):
        central_multiplier(np.eye(1), None, 0.0, GroupLevyMeasure("t1"), torus_irrep("t1", 1))


def test_generator_matrix_matches_alpha_for_central_data():
    nu = GroupLevyMeasure("su2", ((-np.eye(2), 0.7),))
    for j in (0.5, 1.0):
        pi = su2_irrep(j)
        lmat = generator_matrix(0.4, nu, pi)
        alpha = central_alpha(0.4, nu, pi)
        assert np.max(np.abs(lmat - alpha * np.eye(pi.dim))) < 1e-12


def test_symbol_table_trivial_policy():
    dual = dual_enumerate("t1", 2)
    table = symbol_table(dual, lambda pi: riesz2_symbol_group(np.eye(1), pi), trivial=0.0)
    assert table[0][0, 0] == 0.0
    assert table[2][0, 0] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        symbol_table(dual, lambda pi: riesz2_symbol_group(np.eye(1), pi))
