import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlattice import families
from qlattice.errors import BadParameters


@pytest.mark.parametrize("n", range(6))
def test_ttrr_vs_series(dual_hahn, q_racah, racah, n):
    for fam in (dual_hahn, q_racah, racah):
        for s in fam.grid_points:
            o = fam.oracle(n, s)
            assert abs(families.eval_ttrr(fam, n, s) - o) <= 1e-8 * max(abs(o), 1)


def test_p0_is_one(dual_hahn):
    assert all(families.eval_ttrr(dual_hahn, 0, s) == 1 for s in dual_hahn.grid_points)


def test_orthogonality(dual_hahn, q_racah):
    for fam in (dual_hahn, q_racah):
        G = families.orthogonality_matrix(fam, 5)
        # the q-Racah weight is not positive for these parameters, hence abs
        for m in range(6):
            assert G[m][m] != 0
            for n in range(m):
                assert abs(G[m][n]) < 1e-8 * math.sqrt(abs(G[m][m] * G[n][n]))


@pytest.mark.parametrize("n", range(1, 6))
def test_equation_and_ttrr_residuals(dual_hahn, q_racah, racah, n):
    for fam in (dual_hahn, q_racah, racah):
        for s in fam.interior:
            assert families.equation_residual(fam, n, s) < 1e-8
            assert families.ttrr_residual(fam, n, s) < 1e-8


@pytest.mark.parametrize("which", [1, 2])
def test_differentiation_formulas(dual_hahn, q_racah, racah, which):
    for fam in (dual_hahn, q_racah, racah):
        for n in range(5):
            for s in fam.interior:
                assert families.diff_formula_residual(fam, which, n, s) < 1e-8


@pytest.mark.parametrize("which", [1, 2])
def test_generic_difference_recurrences(dual_hahn, q_racah, which):
    for fam in (dual_hahn, q_racah):
        for n in range(1, 6):
            for s in fam.interior:
                B = families.diffrec_coeffs(fam, which, n, s)
                assert families.diffrec_residual(fam, which, n, s, B) < 1e-8


def test_explicit_dual_hahn_coefficients(dual_hahn):
    for n in range(1, 6):
        for s in dual_hahn.interior:
            g1 = families.diffrec_coeffs(dual_hahn, 1, n, s)
            g2 = families.diffrec_coeffs(dual_hahn, 2, n, s)
            c1 = families.diffrec_coeffs_dual_hahn(dual_hahn, 1, n, s, "corrected")
            p2 = families.diffrec_coeffs_dual_hahn(dual_hahn, 2, n, s)
            for a, b in ((c1, g1), (p2, g2)):
                assert all(x == pytest.approx(y, rel=1e-9, abs=1e-12) for x, y in zip(a, b))


def test_printed_first_recurrence_sign(dual_hahn):
    # the printed sign of the n B1 term does not satisfy the recurrence
    worst = max(
        families.diffrec_residual(dual_hahn, 1, n, s, families.diffrec_coeffs_dual_hahn(dual_hahn, 1, n, s))
        for n in range(1, 6) for s in dual_hahn.interior
    )
    assert worst > 1e-3


@pytest.mark.parametrize("n", range(5))
def test_q_to_one_limit(n):
    racah = families.make_racah(8, 0.3, 0.5, 0.2)
    lim = families.q_racah_to_racah_limit(8, 0.3, 0.5, 0.2, 1 - 1e-5, n)
    for u, v in zip(lim, racah.ttrr(n)):
        assert abs(u - v) < 1e-3 * max(abs(v), 1)


@settings(max_examples=20, deadline=None)
@given(st.floats(-0.4, 2.0), st.integers(6, 12), st.floats(-0.9, 0.9))
def test_dual_hahn_random_parameters(a, size, cfrac):
    c = cfrac * (1 + a)
    fam = families.make_dual_hahn(a, a + size, c)
    for n in (2, 4):
        for s in fam.grid_points[::3]:
            o = fam.oracle(n, s)
            assert abs(families.eval_ttrr(fam, n, s) - o) <= 1e-7 * max(abs(o), 1)


def test_bad_parameters():
    with pytest.raises(BadParameters):
        families.make_dual_hahn(0.3, 10.5, 0.2)
    with pytest.raises(BadParameters):
        families.make_q_racah(8, 0.3, 0.5, 0.2, 1.0)
    with pytest.raises(BadParameters):
        families.make_racah(0, 0.3, 0.5, 0.2)
