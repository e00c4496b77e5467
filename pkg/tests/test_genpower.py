import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qlattice.errors import CaseNotApplicable, Nonconvergent
from qlattice.genpower import genpow, genpow_int, qpoch_inf, ratio_factors, ratio_lemma, ratio_prop
from qlattice.lattice import Lattice

QLAT = Lattice.q_quadratic(0.8, 1.1, 0.2, 0.6)
SLAT = Lattice.quadratic(1.3, 0.4, -0.2)


def _generic(s, z):
    # the closed forms have removable singularities at integer s - z
    d = s - z
    return abs(d - round(d)) > 0.05


@given(st.integers(0, 6), st.floats(0, 3), st.floats(-2, 4), st.floats(-2, 4))
def test_closed_forms_match_product(alpha, nu, s, z):
    assume(_generic(s, z) and _generic(s + z + nu, 0))
    for lat in (QLAT, SLAT):
        ref = genpow_int(lat, nu, alpha, s, z)
        val = genpow(lat, nu, alpha, s, z)
        assert abs(val - ref) <= 1e-9 * max(abs(ref), 1e-12)


def test_order_zero_is_one():
    assert genpow_int(SLAT, 1, 0, 0.3, 2.1) == 1


@given(st.integers(1, 5), st.data())
def test_ratio_identities(m, data):
    k = data.draw(st.integers(1, m))
    s, z = data.draw(st.floats(-2, 3)), data.draw(st.floats(-2, 3))
    assume(_generic(s, z) and _generic(s + z, 0.5))
    for lat in (QLAT, SLAT):
        for which in (1, 2, 3):
            # a few digits go to cancellation near x(s) = x(t) coincidences
            assert ratio_prop(lat, 2.5, m, k, s, z, which) < 1e-9


@pytest.mark.parametrize("nui,mui,case", [(3, 1, 1), (2, 1, 2), (2, 0, 3)])
def test_lemma_cases(nui, mui, case):
    nu0, mu0, s, z = 3, 2, 0.7, 1.9
    assert ratio_factors(nu0, mu0, nui, mui, z).case == case
    for lat in (QLAT, SLAT):
        direct = genpow_int(lat, nu0, mu0 + 1, s, z) / genpow_int(lat, nui, mui + 1, s, z)
        assert ratio_lemma(lat, nu0, mu0, nui, mui, s, z) == pytest.approx(direct, rel=1e-12)


def test_lemma_requires_enough_order():
    with pytest.raises(CaseNotApplicable):
        ratio_factors(3, 2, 1, 1, 0.5)


def test_qpoch_requires_q_below_one():
    with pytest.raises(Nonconvergent):
        qpoch_inf(0.5, 1.2)
    assert qpoch_inf(0, 0.5) == 1
