from hypothesis import given
from hypothesis import strategies as st

from qlattice.lattice import Lattice
from qlattice.laurent import LaurentPoly, LinearLaurent, lp_match, poly_from_lattice

QLAT = Lattice.q_quadratic(0.6, 1.2, 0.3, 0.55)
SLAT = Lattice.quadratic(1, 0.5, -1)
polys = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=5).map(LaurentPoly)
pts = st.floats(-2, 2)


@given(polys, polys, pts)
def test_product_evaluates_pointwise(a, b, s):
    for lat in (QLAT, SLAT):
        if not lat.is_q and any(e < 0 for e in {**a.coeffs, **b.coeffs}):
            continue
        lhs = (a * b).eval(s, lat)
        assert abs(lhs - a.eval(s, lat) * b.eval(s, lat)) <= 1e-9 * max(1, abs(lhs))


@given(polys, pts, st.integers(-3, 3))
def test_shift(a, s, t):
    for lat in (QLAT, SLAT):
        if not lat.is_q and any(e < 0 for e in a.coeffs):
            continue
        v = a.shift(t, lat).eval(s, lat)
        assert abs(v - a.eval(s + t, lat)) <= 1e-9 * max(1, abs(v))


def test_zero_coefficients_dropped():
    p = LaurentPoly({1: 2, -1: 0})
    assert p.support() == (1, 1)
    assert (p - p).is_zero()


def test_lattice_polynomial_matches_x():
    for lat in (QLAT, SLAT):
        p = poly_from_lattice(lat, 2)
        assert abs(p.eval(0.7, lat) - (lat.c1 * lat.qpow(1.7) + lat.c2 * lat.qpow(-1.7) + lat.c3 if lat.is_q
                                         else lat.c1 * 1.7**2 + lat.c2 * 1.7 + lat.c3)) < 1e-12


def test_match_system_rows():
    lhs = LinearLaurent.unknown("a", LaurentPoly({0: 1, 1: 2}))
    rhs = LinearLaurent.constant(LaurentPoly({0: 3, 1: 6}))
    system = lp_match(lhs, rhs, ["a"])
    assert system.exponents == [0, 1]
    assert system.matrix == [[1], [2]] and system.rhs == [3, 6]
