import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlattice.hypergeo import (
    big_phi, c_nu_k, kappa_nu, lambda_nu, lambda_over_qnumber, rho, rho_k, rho_ratio, sigma, tau,
)
from qlattice.lattice import delta_xk, q_number, x


def test_sigma_plus_tau(dual_hahn):
    eq = dual_hahn.eq
    for s in (0.3, 1.7, 4.2):
        dxh = x(eq.lat, s + 0.5) - x(eq.lat, s - 0.5)
        assert big_phi(eq, s) == pytest.approx(sigma(eq, s) + tau(eq, s) * dxh, rel=1e-12)


def test_lambda_relation(dual_hahn, q_racah):
    for fam in (dual_hahn, q_racah):
        for n in range(6):
            assert lambda_nu(fam.eq, n) == pytest.approx(-q_number(fam.lat, n) * kappa_nu(fam.eq, n), abs=1e-12)
            assert lambda_over_qnumber(fam.eq, n) == -kappa_nu(fam.eq, n)


def test_eigenvalue_matches_family(dual_hahn):
    # dual Hahn: lambda_n = n
    for n in range(6):
        assert dual_hahn.lambda_n(n) == pytest.approx(n)


@given(st.integers(0, 8))
def test_pearson(j):
    from qlattice.families import make_dual_hahn

    eq = make_dual_hahn(0.3, 10.3, 0.2).eq
    s = 0.3 + j
    assert rho(eq, s + 1, 0.3) / rho(eq, s, 0.3) == pytest.approx(rho_ratio(eq, s), rel=1e-12)


def test_rho_anchor_and_rho_k(dual_hahn):
    eq = dual_hahn.eq
    assert rho(eq, 2.3, 2.3) == 1
    assert rho_k(eq, 2, 1.3, 0.3) == pytest.approx(rho(eq, 3.3, 0.3) * sigma(eq, 2.3) * sigma(eq, 3.3))
    assert c_nu_k(eq, 2, 0, 5) == 5
    with pytest.raises(ValueError):
        rho(eq, 1.5, 0.3)
