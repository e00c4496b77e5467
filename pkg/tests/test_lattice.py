from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlattice.errors import BadParameters
from qlattice.lattice import (
    Lattice, delta_xk, nabla_xk, q_number, structural_constants, verify_lattice_properties, x, x_k,
)

coef = st.floats(-3, 3, allow_nan=False).filter(lambda v: abs(v) > 0.05)
qs = st.one_of(st.floats(0.2, 0.95), st.floats(1.05, 3.0))


@given(coef, coef, st.floats(-2, 2), st.integers(-6, 6), st.floats(-3, 3))
def test_quadratic_identities(c1, c2, c3, k, s):
    r1, r2 = verify_lattice_properties(Lattice.quadratic(c1, c2, c3), k, s)
    assert r1 < 1e-12 and r2 < 1e-12


@given(coef, coef, st.floats(-2, 2), qs, st.integers(-6, 6), st.floats(-3, 3))
def test_q_identities(c1, c2, c3, q, k, s):
    r1, r2 = verify_lattice_properties(Lattice.q_quadratic(c1, c2, c3, q), k, s)
    assert r1 < 1e-11 and r2 < 1e-11


@given(st.fractions(-5, 5), st.fractions(-5, 5), st.integers(-6, 6), st.integers(-8, 8))
def test_exact_identities(c2, c3, k, s4):
    s = Fraction(s4, 4)
    for lat in (Lattice.quadratic(Fraction(3, 2), c2, c3), Lattice.q_quadratic_exact(2, c2 or 1, c3, Fraction(3, 5))):
        assert verify_lattice_properties(lat, k, s) == (0, 0)


def test_quadratic_beta_is_not_zero():
    lat = Lattice.quadratic(2, 1, 0)
    assert structural_constants(lat, 3) == (1, Fraction(9, 2), 3)


@given(qs, st.integers(-8, 8))
def test_q_number_symmetry(q, k):
    assert q_number(q, k) == pytest.approx(q_number(1 / q, k), rel=1e-12, abs=1e-12)
    assert q_number(q, -k) == pytest.approx(-q_number(q, k), rel=1e-12, abs=1e-12)


def test_q_number_limit():
    for k in range(-5, 6):
        assert abs(q_number(1 + 1e-9, k) - k) < 1e-6
    assert q_number(None, 4) == 4


def test_shifted_lattices_and_differences():
    lat = Lattice.quadratic(1, 1, 0)
    assert x_k(lat, 2, 3) == x(lat, 4)
    assert delta_xk(lat, 0, 2) == nabla_xk(lat, 0, 3)


def test_bad_lattice():
    with pytest.raises((BadParameters, ValueError)):
        Lattice.q_quadratic(1, 1, 0, 1.0)
