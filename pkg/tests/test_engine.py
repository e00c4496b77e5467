from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlattice.catalog import CATALOG
from qlattice.engine import (
    RelationTriple, build_pi, build_rhs, fit_common_scalar, matching_system, pi_value, relation_residual,
    solve_relation,
)
from qlattice.errors import CaseNotApplicable
from qlattice.families import make_dual_hahn


@pytest.mark.parametrize("entry", sorted(CATALOG))
def test_catalog_triples_hold_on_q_racah(q_racah, entry):
    triple = RelationTriple(CATALOG[entry].pairs(3), q_racah.eq, bounds=q_racah.grid)
    rel = solve_relation(triple, 1.61)
    assert rel.kernel_dim == 1
    assert max(abs(a) for a in rel.A) == pytest.approx(1)
    assert rel.residual < 1e-9


def test_constant_certificate(q_racah):
    for entry in ("Ex3.1", "Ex3.2"):
        rel = solve_relation(RelationTriple(CATALOG[entry].pairs(2), q_racah.eq), 2.23)
        assert rel.q_support == (0, 0)


def test_pi_matches_certificate_pointwise(dual_hahn):
    triple = RelationTriple(CATALOG["Ex3.3"].pairs(2), dual_hahn.eq)
    z = 1.61
    rel = solve_relation(triple, z)
    d = rel.q_support[1]
    rhs = build_rhs(triple, z, d)
    for s in (0.2, 1.7, 3.9):
        want = sum(c * rhs.parts[("Q", e)].eval(s, dual_hahn.lat) for e, c in rel.Q.coeffs.items())
        assert pi_value(triple, z, rel.A, s) == pytest.approx(want, rel=1e-9, abs=1e-9)


def test_inadmissible_triple(dual_hahn):
    with pytest.raises(CaseNotApplicable):
        RelationTriple(((3, 3), (3, 2), (4, 3)), dual_hahn.eq)


def test_rational_backend_is_exact():
    fam = make_dual_hahn(Fraction(3, 10), Fraction(103, 10), Fraction(1, 5))
    triple = RelationTriple(CATALOG["Ex3.1"].pairs(2), fam.eq, bounds=fam.grid)
    z = Fraction(1, 3)
    rel = solve_relation(triple, z)
    assert all(isinstance(a, Fraction) for a in rel.A)
    assert rel.residual == 0
    fl = solve_relation(RelationTriple(triple.pairs, make_dual_hahn(0.3, 10.3, 0.2).eq), 1 / 3)
    assert fit_common_scalar([float(a) for a in rel.A], fl.A)[1] < 1e-10


@settings(max_examples=15, deadline=None)
@given(st.floats(0.05, 5.5).filter(lambda z: abs(z - round(z) - 0.3) > 0.05 and abs(z - round(z) + 0.7) > 0.05))
def test_random_points_dual_hahn(z):
    fam = make_dual_hahn(0.3, 10.3, 0.2)
    triple = RelationTriple(CATALOG["Ex3.6"].pairs(2), fam.eq, bounds=fam.grid)
    assert solve_relation(triple, z).residual < 1e-9


def test_fit_common_scalar():
    c, dev = fit_common_scalar([2, 4, -6], [1, 2, -3])
    assert c == pytest.approx(2) and dev < 1e-15
    assert fit_common_scalar([1, 0, 0], [0, 1, 0])[1] == pytest.approx(1)


def test_matching_system_shape(q_racah):
    triple = RelationTriple(CATALOG["Ex3.1"].pairs(2), q_racah.eq)
    system = matching_system(triple, 0.37, 0)
    assert len(system.unknowns) == 4
    assert len(system.matrix) == len(system.exponents)
