import pytest

from qlattice.errors import PoleOnGrid
from qlattice.phi import PhiSpec, boundary_check, nabla_phi_residual, phi, y_nu, y_nu_k, y_nu_nested


@pytest.mark.parametrize("nu,mu", [(1, 0), (2, 1), (3, 0), (4, 3)])
def test_nabla_phi(dual_hahn, nu, mu):
    a, b = dual_hahn.grid
    spec = PhiSpec(dual_hahn.eq, nu, mu, a, b)
    for z in (0.37, 2.23, 5.11):
        assert nabla_phi_residual(spec, z) < 1e-9


def test_nabla_phi_q(q_racah):
    spec = PhiSpec(q_racah.eq, 3, 1, *q_racah.grid)
    assert nabla_phi_residual(spec, 1.61) < 1e-9


def test_difference_derivative_two_ways(dual_hahn):
    a, b = dual_hahn.grid
    for nu in (2, 3):
        spec = PhiSpec(dual_hahn.eq, nu, nu, a, b)
        for k in (1, 2):
            s = 1.61
            lit = y_nu_nested(spec, k, s, z_anchor=s)
            closed = y_nu_k(spec, k, s, z_anchor=s)
            assert lit == pytest.approx(closed, rel=1e-9)


def test_pole_on_grid(dual_hahn):
    spec = PhiSpec(dual_hahn.eq, 2, 1, *dual_hahn.grid)
    with pytest.raises(PoleOnGrid):
        phi(spec, 3.3)


def test_mu_must_give_integer_order(dual_hahn):
    with pytest.raises(ValueError):
        PhiSpec(dual_hahn.eq, 2, 0.5, *dual_hahn.grid)


def test_boundary_terms_vanish_at_lower_end(dual_hahn):
    spec = PhiSpec(dual_hahn.eq, 2, 2, *dual_hahn.grid)
    vals = boundary_check(spec, 2, 2, 2, 1.61, 3)
    assert all(abs(va) < 1e-12 for _, va, _ in vals)


def test_y_nu_needs_anchor_offgrid(dual_hahn):
    spec = PhiSpec(dual_hahn.eq, 2, 2, *dual_hahn.grid)
    with pytest.raises(ValueError):
        y_nu(spec, 1.61)
    assert y_nu(spec, 1.61, z_anchor=1.61) == phi(spec, 1.61)
