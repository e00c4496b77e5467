"""Generalized powers [x_nu(s) - x_nu(z)]^(alpha) and their ratio identities.

For a nonnegative integer order the power is the finite product

    [x_nu(s) - x_nu(z)]^(alpha) = prod_{j=0}^{alpha-1} (x_nu(s) - x_nu(z - j)),

which is the reference form; the Gamma-function form (quadratic lattice)
and the infinite q-product form (q-quadratic lattice) extend it to
arbitrary orders.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import CaseNotApplicable, GammaPole, Nonconvergent
from .lattice import Lattice, x_k


def genpow_int(lat: Lattice, nu, alpha: int, s, z):
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("order must be a nonnegative integer")
    xs = x_k(lat, nu, s)
    val = 1
    for j in range(int(alpha)):
        val = val * (xs - x_k(lat, nu, z - j))
    return val


def _is_nonpos_int(v, tol=1e-12) -> bool:
    v = complex(v)
    return abs(v.imag) < tol and v.real < tol and abs(v.real - round(v.real)) < tol


def _gamma(v):
    if _is_nonpos_int(v):
        raise GammaPole(f"Gamma pole at {v}")
    return special.gamma(complex(v))


def genpow_quadratic(lat: Lattice, nu, alpha, s, z):
    """c1^alpha G(s-z+alpha) G(s+z+nu+mu+1) / (G(s-z) G(s+z+nu-alpha+mu+1)), mu = c2/c1.

    The denominators use 1/Gamma, which is entire, so only numerator poles
    are errors.
    """
    if lat.is_q:
        raise ValueError("genpow_quadratic needs a quadratic lattice")
    mu = complex(lat.mu)
    a = complex(s) - complex(z)
    b = complex(s) + complex(z) + complex(nu) + mu + 1
    val = _gamma(a + alpha) * _gamma(b) * special.rgamma(a) * special.rgamma(b - alpha)
    return complex(lat.c1) ** alpha * val


def qpoch_inf(a, q, tol=1e-17, maxiter=100_000):
    """(a; q)_inf for 0 < q < 1, truncated once |a q^k| < tol."""
    if not 0 < q < 1:
        raise Nonconvergent("(a; q)_inf needs 0 < q < 1")
    val = 1 + 0j
    term = complex(a)
    for _ in range(maxiter):
        if abs(term) < tol:
            return val
        val *= 1 - term
        term *= q
    raise Nonconvergent("q-product did not reach tolerance")


def genpow_qquadratic(lat: Lattice, nu, alpha, s, z):
    """Infinite-product form on x(s) = c1 q^s + c2 q^-s + c3, 0 < q < 1.

    c1^alpha q^(alpha(s+nu/2)) (q^(z-s-alpha+1); q)_inf (eta q^(-s-z-nu); q)_inf
      / ((q^(z-s+1); q)_inf (eta q^(-s-z-nu+alpha); q)_inf),   eta = c2/c1.

    For integer alpha this telescopes to the finite product.  With q > 1
    only integer orders are accepted (finite product).
    """
    if not lat.is_q:
        raise ValueError("genpow_qquadratic needs a q-quadratic lattice")
    q = float(lat.q)
    if q > 1:
        a_int = complex(alpha)
        if abs(a_int.imag) > 0 or a_int.real < 0 or a_int.real != round(a_int.real):
            raise Nonconvergent("non-integer order on a lattice with q > 1")
        return complex(genpow_int(lat, nu, int(round(a_int.real)), s, z))
    eta = complex(lat.eta)
    s, z, nu = complex(s), complex(z), complex(nu)

    def qp(t):
        return cmath.exp(t * np.log(q))

    num = qpoch_inf(qp(z - s - alpha + 1), q) * qpoch_inf(eta * qp(-s - z - nu), q)
    den = qpoch_inf(qp(z - s + 1), q) * qpoch_inf(eta * qp(-s - z - nu + alpha), q)
    if den == 0:
        raise GammaPole("q-product denominator vanishes")
    return complex(lat.c1) ** alpha * qp(alpha * (s + nu / 2)) * num / den


def genpow(lat: Lattice, nu, alpha, s, z):
    """Closed form of the lattice kind."""
    if lat.is_q:
        return genpow_qquadratic(lat, nu, alpha, s, z)
    return genpow_quadratic(lat, nu, alpha, s, z)


# --- ratio identities -----------------------------------------------------------

def ratio_prop(lat: Lattice, nu, m: int, k: int, s, z, which: int):
    """Relative residual |lhs - rhs| / max(1, |lhs|) of a ratio identity, m >= k >= 1.

    1: [..]^(m) / [..]^(k)                         = [x_nu(s) - x_nu(z-k)]^(m-k)
    2: [x_nu(s)-x_nu(z)]^(m+1) / [x_(nu-1)(s)-x_(nu-1)(z)]^(m)   = x_(nu-m)(s+m) - x_(nu-m)(z)
    3: [x_nu(s)-x_nu(z)]^(m+1) / [x_(nu-1)(s+1)-x_(nu-1)(z)]^(m) = x_(nu-m)(s) - x_(nu-m)(z)
    """
    if which == 1:
        if not m >= k >= 1:
            raise ValueError("need m >= k >= 1")
        lhs = genpow_int(lat, nu, m, s, z) / genpow_int(lat, nu, k, s, z)
        rhs = genpow_int(lat, nu, m - k, s, z - k)
    elif which == 2:
        lhs = genpow_int(lat, nu, m + 1, s, z) / genpow_int(lat, nu - 1, m, s, z)
        rhs = x_k(lat, nu - m, s + m) - x_k(lat, nu - m, z)
    elif which == 3:
        lhs = genpow_int(lat, nu, m + 1, s, z) / genpow_int(lat, nu - 1, m, s + 1, z)
        rhs = x_k(lat, nu - m, s) - x_k(lat, nu - m, z)
    else:
        raise ValueError("which must be 1, 2 or 3")
    return abs(lhs - rhs) / max(1, abs(lhs))


@dataclass(frozen=True)
class RatioFactors:
    """The generalized-power ratio as a product of lattice differences.

    ``shifted`` lists (index m, shift t, z-argument) for factors
    x_m(s + t) - x_m(z'); ``case`` is 1, 2 or 3.
    """

    case: int
    shifted: tuple


def _integer(v, what):
    r = complex(v)
    ri = round(r.real)
    if abs(r.imag) > 1e-12 or abs(r.real - ri) > 1e-12:
        raise CaseNotApplicable(f"{what} = {v} is not an integer")
    return int(ri)


def ratio_factors(nu0, mu0, nui, mui, z) -> RatioFactors:
    """Factorisation of [x_nu0(s)-x_nu0(z)]^(mu0+1) / [x_nui(s)-x_nui(z)]^(mui+1).

    With n = mu0 - mui and nui = nu0 - n + k (0 <= k <= n):
        prod_{l<n-k} [x_(nu0-mu0)(s+mu0-l) - x_(nu0-mu0)(z)]
      * prod_{j<k}   [x_nui(s) - x_nui(z-mu0+n-1-j)].
    """
    n = _integer(mu0 - mui, "mu0 - mui")
    d = _integer(nu0 - nui, "nu0 - nui")
    if d < 0:
        raise CaseNotApplicable("nu0 must have the largest real part")
    if n < d:
        raise CaseNotApplicable("requires mu0 - mui >= nu0 - nui")
    k = n - d
    if d == 0:
        case = 1
    elif k == 0:
        case = 2
    else:
        case = 3
    factors = []
    for l in range(n - k):
        factors.append((nu0 - mu0, mu0 - l, z))
    for j in range(k):
        factors.append((nui, 0, z - mu0 + n - 1 - j))
    return RatioFactors(case, tuple(factors))


def ratio_lemma(lat: Lattice, nu0, mu0, nui, mui, s, z):
    """The generalized-power ratio evaluated through its factorisation."""
    rf = ratio_factors(nu0, mu0, nui, mui, z)
    val = 1
    for m, t, zz in rf.shifted:
        val = val * (x_k(lat, m, s + t) - x_k(lat, m, zz))
    return val
