import pytest

from qlattice import relations

S = (1.61, 3.37, 5.83)


@pytest.mark.parametrize("key", sorted(relations.SPECIALIZATIONS))
@pytest.mark.parametrize("n", [2, 3, 4])
def test_specializations(dual_hahn, key, n):
    for s in S:
        assert relations.derivative_relation_residual(dual_hahn.eq, relations.SPECIALIZATIONS[key](n), s, dual_hahn.grid) < 1e-8


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nabla_ladder(dual_hahn, n):
    for s in S:
        assert relations.nabla_ladder_residual(dual_hahn.eq, n, s, dual_hahn.grid) < 1e-8
        assert relations.nabla_ladder_residual(dual_hahn.eq, n, s, dual_hahn.grid, via_delta=True) < 1e-8


def test_q_racah_ladders(q_racah):
    for key in ("TTRR", "DELTA+1", "DELTA-1"):
        assert relations.derivative_relation_residual(q_racah.eq, relations.SPECIALIZATIONS[key](3), 2.37, q_racah.grid) < 1e-8
    assert relations.nabla_ladder_residual(q_racah.eq, 3, 2.37, q_racah.grid) < 1e-8


def test_longer_delta_ladder(dual_hahn):
    assert relations.derivative_relation_residual(dual_hahn.eq, relations.delta_ladder(2, 2), 1.61, dual_hahn.grid) < 1e-8


def test_normalization_constants(dual_hahn):
    c = {1: 2.0, 2: -0.5, 3: 3.0, 4: 1.5}.get
    nk = relations.SPECIALIZATIONS["DELTA+1"](2)
    assert relations.derivative_relation_residual(dual_hahn.eq, nk, 1.61, dual_hahn.grid, c_nu=c) < 1e-8
    assert relations.nabla_ladder_residual(dual_hahn.eq, 3, 1.61, dual_hahn.grid, c_nu=c) < 1e-8


def test_b2_is_one(dual_hahn):
    assert relations.nabla_ladder_coeffs(dual_hahn.eq, 2, 1.61)[1] == 1
