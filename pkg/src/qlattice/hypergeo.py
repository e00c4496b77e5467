"""Hypergeometric-type difference equation on a quadratic-type lattice.

    sigma(s) D/Dx(s-1/2) [nabla y / nabla x](s) + tau(s) Delta y / Delta x(s) + lambda y = 0

with sigma(s) = sigma~(x(s)) - tau~(x(s)) Delta x(s-1/2) / 2 and
tau(s) = tau~(x(s)).  Everything the recurrence machinery needs is derived
here: Phi, tau_nu, sigma~_nu, lambda_nu, kappa_nu, and the weights
rho, rho_nu, rho_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import DegenerateInterpolation, DivisionByZero, ZeroSigma
from .lattice import Lattice, delta_xk, div, q_number, structural_constants, x, x_k
from .laurent import LaurentPoly, poly_from_lattice

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HypergeoEquation:
    """Equation data.

    ``sigma_tilde`` is (sigma~'', sigma~'(0), sigma~(0)), i.e.
    sigma~(x) = sigma~''/2 x^2 + sigma~'(0) x + sigma~(0);
    ``tau_tilde`` is (tau~', tau~(0)).
    """

    lat: Lattice
    sigma_tilde: tuple
    tau_tilde: tuple
    lam: object = 0

    def sigma_tilde_at(self, X):
        s2, s1, s0 = self.sigma_tilde
        return div(s2, 2) * X * X + s1 * X + s0

    def tau_tilde_at(self, X):
        t1, t0 = self.tau_tilde
        return t1 * X + t0


@dataclass(frozen=True)
class NuData:
    nu: object
    tau_nu_prime: object
    tau_nu_0: object
    sigma_tilde_nu: tuple
    lambda_nu: object


def _dx_half(lat, s):
    """Delta x(s - 1/2) = x(s + 1/2) - x(s - 1/2)."""
    return x(lat, s + HALF) - x(lat, s - HALF)


def sigma(eq: HypergeoEquation, s):
    X = x(eq.lat, s)
    return eq.sigma_tilde_at(X) - eq.tau_tilde_at(X) * _dx_half(eq.lat, s) / 2


def tau(eq: HypergeoEquation, s):
    return eq.tau_tilde_at(x(eq.lat, s))


def big_phi(eq: HypergeoEquation, s):
    """Phi(s) = sigma(s) + tau(s) Delta x(s - 1/2)."""
    X = x(eq.lat, s)
    return eq.sigma_tilde_at(X) + eq.tau_tilde_at(X) * _dx_half(eq.lat, s) / 2


def tau_nu(eq: HypergeoEquation, nu, s):
    den = delta_xk(eq.lat, nu - 1, s)
    if den == 0:
        raise DivisionByZero(f"Delta x_(nu-1)({s}) vanishes")
    return (big_phi(eq, s + nu) - sigma(eq, s)) / den


def big_phi_nu(eq: HypergeoEquation, nu, s):
    """Phi_nu(s) = Phi(s + nu)."""
    return big_phi(eq, s + nu)


def sigma_tilde_nu(eq: HypergeoEquation, nu, s):
    """sigma~_nu(s) = sigma(s) + tau_nu(s) Delta x_nu(s - 1/2) / 2 = (Phi_nu + sigma)/2."""
    return (big_phi(eq, s + nu) + sigma(eq, s)) / 2


# interpolation nodes, tried in order; all exact-friendly
_NODES = [(0, 1, 2), (1, 2, 3), (HALF, Fraction(3, 2), Fraction(5, 2)), (-3, 2, 5), (Fraction(1, 4), Fraction(7, 4), 4)]


def _nodes(eq, nu, count):
    for cand in _NODES:
        pts = [x_k(eq.lat, nu, s) for s in cand[:count]]
        ok = all(pts[i] != pts[j] for i in range(count) for j in range(i))
        if ok:
            try:
                for s in cand[:count]:
                    tau_nu(eq, nu, s)
            except DivisionByZero:
                continue
            return cand[:count], pts
    raise DegenerateInterpolation(f"no admissible interpolation nodes for nu={nu}")


def tau_nu_coeffs(eq: HypergeoEquation, nu):
    """(tau_nu', tau_nu(0)) with tau_nu(s) = tau_nu' x_nu(s) + tau_nu(0)."""
    (s0, s1), (x0, x1) = _nodes(eq, nu, 2)
    t0, t1 = tau_nu(eq, nu, s0), tau_nu(eq, nu, s1)
    slope = (t1 - t0) / (x1 - x0)
    return slope, t0 - slope * x0


def sigma_tilde_nu_coeffs(eq: HypergeoEquation, nu):
    """(sigma~_nu'', sigma~_nu'(0), sigma~_nu(0)) in the variable x_nu(s)."""
    nodes, (x0, x1, x2) = _nodes(eq, nu, 3)
    f0, f1, f2 = (sigma_tilde_nu(eq, nu, s) for s in nodes)
    d01 = (f1 - f0) / (x1 - x0)
    d12 = (f2 - f1) / (x2 - x1)
    c2 = (d12 - d01) / (x2 - x0)
    c1 = d01 - c2 * (x0 + x1)
    c0 = f0 - c1 * x0 - c2 * x0 * x0
    return 2 * c2, c1, c0


def nu_data(eq: HypergeoEquation, nu) -> NuData:
    tp, t0 = tau_nu_coeffs(eq, nu)
    return NuData(nu, tp, t0, sigma_tilde_nu_coeffs(eq, nu), lambda_nu(eq, nu))


def kappa_nu(eq: HypergeoEquation, nu):
    """kappa_nu = alpha_(nu-1) tau~' + gamma_(nu-1) sigma~''/2, so lambda_nu = -[nu] kappa_nu."""
    alpha, _, gamma = structural_constants(eq.lat, nu - 1)
    return alpha * eq.tau_tilde[0] + gamma * div(eq.sigma_tilde[0], 2)


def lambda_nu(eq: HypergeoEquation, nu):
    return -q_number(eq.lat, nu) * kappa_nu(eq, nu)


def lambda_over_qnumber(eq: HypergeoEquation, nu):
    """lambda_nu / [nu]_q, finite at nu = 0."""
    return -kappa_nu(eq, nu)


# --- weights ------------------------------------------------------------------

def rho_ratio(eq: HypergeoEquation, s):
    """rho(s+1)/rho(s) = Phi(s)/sigma(s+1)."""
    den = sigma(eq, s + 1)
    if den == 0:
        raise ZeroSigma(f"sigma({s + 1}) vanishes")
    return big_phi(eq, s) / den


def rho_nu_ratio(eq: HypergeoEquation, nu, s):
    den = sigma(eq, s + 1)
    if den == 0:
        raise ZeroSigma(f"sigma({s + 1}) vanishes")
    return big_phi(eq, s + nu) / den


def _steps(s, anchor) -> int:
    m = s - anchor
    mi = round(m.real) if isinstance(m, complex) else round(m)
    if abs(m - mi) > 1e-9:
        raise ValueError(f"s - anchor = {m} is not an integer")
    return int(mi)


def _pearson(eq, shift, s, anchor):
    """Solution of rho(t+1)/rho(t) = Phi(t+shift)/sigma(t+1), rho(anchor) = 1."""
    m = _steps(s, anchor)
    val = 1
    if m >= 0:
        for j in range(m):
            t = anchor + j
            den = sigma(eq, t + 1)
            if den == 0:
                raise ZeroSigma(f"sigma({t + 1}) vanishes on the Pearson path")
            val = val * big_phi(eq, t + shift) / den
    else:
        for j in range(1, -m + 1):
            t = anchor - j
            den = big_phi(eq, t + shift)
            if den == 0:
                raise ZeroSigma(f"Phi({t + shift}) vanishes on the backward Pearson path")
            val = val * sigma(eq, t + 1) / den
    return val


def rho(eq: HypergeoEquation, s, anchor=0):
    return _pearson(eq, 0, s, anchor)


def _split_nu(nu):
    re = nu.real if isinstance(nu, complex) else nu
    m = floor(re + 1e-12)
    return m, nu - m


def rho_nu(eq: HypergeoEquation, nu, s, anchor=0):
    """rho_nu(s) = rho_f(s) Phi(s+f) ... Phi(s+nu-1), f = nu - floor(Re nu).

    rho_f is anchored by rho_f(anchor) = 1 (rho_0 = rho), which keeps the
    family {rho_nu} tied together by rho_(nu+1)(s) = Phi(s+nu) rho_nu(s).
    """
    m, f = _split_nu(nu)
    val = _pearson(eq, f, s, anchor)
    if m >= 0:
        for j in range(m):
            val = val * big_phi(eq, s + f + j)
    else:
        for j in range(m, 0):
            den = big_phi(eq, s + f + j)
            if den == 0:
                raise ZeroSigma(f"Phi({s + f + j}) vanishes")
            val = val / den
    return val


def rho_k(eq: HypergeoEquation, k: int, s, anchor=0):
    """rho_k(s) = rho(s+k) sigma(s+1) ... sigma(s+k)."""
    val = rho(eq, s + k, anchor)
    for i in range(1, k + 1):
        val = val * sigma(eq, s + i)
    return val


def c_nu_k(eq: HypergeoEquation, nu, k: int, c_nu=1):
    """C_nu^(k) = kappa_nu kappa_(nu+1) ... kappa_(nu+k-1) C_nu."""
    val = c_nu
    for i in range(k):
        val = val * kappa_nu(eq, nu + i)
    return val


# --- polynomial images used by the relation engine ------------------------------

def sigma_poly(eq: HypergeoEquation) -> LaurentPoly:
    """sigma(s) as a Laurent polynomial in q^s (or a polynomial in s)."""
    X, D = _x_and_dx_half(eq)
    s2, s1, s0 = eq.sigma_tilde
    t1, t0 = eq.tau_tilde
    st = X * X * div(s2, 2) + X * s1 + s0
    tt = X * t1 + t0
    return st - tt * D * HALF


def big_phi_poly(eq: HypergeoEquation) -> LaurentPoly:
    X, D = _x_and_dx_half(eq)
    s2, s1, s0 = eq.sigma_tilde
    t1, t0 = eq.tau_tilde
    st = X * X * div(s2, 2) + X * s1 + s0
    tt = X * t1 + t0
    return st + tt * D * HALF


def _x_and_dx_half(eq):
    X = poly_from_lattice(eq.lat, 0)
    D = X.shift(HALF, eq.lat) - X.shift(-HALF, eq.lat)
    return X, D
