"""Closed-form coefficients of six three-term relations between Phi-functions.

Each entry lists its index pairs as functions of nu and returns
(A1, A2, A3) for given equation data.  Entries with a ``variant`` argument
keep the formula exactly as printed under ``"printed"`` and offer the
form implied by the defining linear system under ``"system"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import PoleOnGrid
from .hypergeo import HypergeoEquation, big_phi, sigma, sigma_tilde_nu_coeffs, tau_nu, tau_nu_coeffs
from .lattice import delta_xk, nabla_xk, structural_constants, x, x_k


def _nz(v, what):
    if v == 0:
        raise PoleOnGrid(f"{what} vanishes")
    return v


def _g(eq, k):
    return structural_constants(eq.lat, k)[2]


def _dx(eq, s):
    return delta_xk(eq.lat, 0, s)


def _nx(eq, k, s):
    return nabla_xk(eq.lat, k, s)


def ex3_1_parts(eq: HypergeoEquation, nu, z):
    """(T, U, V, X0, X1): Pi/Delta x_nu(s-1/2) = T x_nu^2 + U x_nu + V on the certificate side."""
    al, be, ga = structural_constants(eq.lat, nu)
    tp, t0 = tau_nu_coeffs(eq, nu)
    s2, s1, s0 = sigma_tilde_nu_coeffs(eq, nu)
    X = x(eq.lat, z)
    T = tp * al - ga * s2 / 2
    U = tp * be + al * t0 - ga * s1 - tp * X
    V = t0 * be - ga * s0 - t0 * X
    return T, U, V, x_k(eq.lat, nu, z - nu), x_k(eq.lat, nu, z - nu + 1)


def ex3_1(eq, nu, z, variant="printed"):
    T, U, V, X0, X1 = ex3_1_parts(eq, nu, z)
    A3 = T
    A2 = U + T * (X0 + X1)
    if variant == "printed":
        A1 = V + U * X0 - T * X0 * X0
    elif variant == "system":
        A1 = V + A2 * X0 - A3 * X0 * X1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return A1, A2, A3


def ex3_1_system(eq, nu, z):
    """The three linear equations for (A1, A2, A3) as (matrix, rhs)."""
    T, U, V, X0, X1 = ex3_1_parts(eq, nu, z)
    M = [[0, 0, 1], [0, 1, -(X0 + X1)], [1, -X0, X0 * X1]]
    return M, [T, U, V]


def ex3_2(eq, nu, z, variant="printed"):
    if variant == "points":
        return _ex3_2_points(eq, nu, z)
    if variant != "printed":
        raise ValueError(f"unknown variant {variant!r}")
    w = sigma(eq, z - nu + 1) / _nz(_nx(eq, nu + 1, z - nu + 1), "nabla x_(nu+1)(z-nu+1)")
    A1 = -w
    A2 = (tau_nu(eq, nu, z) - w) / (_nz(_g(eq, nu - 1), "gamma_(nu-1)") * _nz(_dx(eq, z), "Delta x(z)"))
    A3 = -_g(eq, nu)
    return A1, A2, A3


def _ex3_2_points(eq, nu, z):
    """Q = 1 and Pi evaluated at s = z-nu, z-nu+1, z, where terms drop out one by one.

    Pi(s) = A1 n1(s) L(s) + A2 n1(s) L(s) M(s) + A3 n2(s) Phi(s+nu)
          = Phi(s+nu) [x_1(s) - x_1(z)] - sigma(s) L(s),
    with L(s) = x_1(s+nu) - x_1(z), M(s) = x_nu(s) - x_nu(z-nu+1).
    """
    lat = eq.lat

    def L(s):
        return x_k(lat, 1, s + nu) - x_k(lat, 1, z)

    def M(s):
        return x_k(lat, nu, s) - x_k(lat, nu, z - nu + 1)

    def rhs(s):
        return big_phi(eq, s + nu) * (x_k(lat, 1, s) - x_k(lat, 1, z)) - sigma(eq, s) * L(s)

    s0, s1, s2 = z - nu, z - nu + 1, z
    A3 = rhs(s0) / _nz(_nx(eq, nu + 2, s0) * big_phi(eq, s0 + nu), "Pi coefficient at s=z-nu")
    A1 = (rhs(s1) - A3 * _nx(eq, nu + 2, s1) * big_phi(eq, s1 + nu)) / _nz(_nx(eq, nu + 1, s1) * L(s1), "Pi coefficient at s=z-nu+1")
    A2 = (rhs(s2) - A1 * _nx(eq, nu + 1, s2) * L(s2) - A3 * _nx(eq, nu + 2, s2) * big_phi(eq, s2 + nu)) / _nz(
        _nx(eq, nu + 1, s2) * L(s2) * M(s2), "Pi coefficient at s=z"
    )
    return A1, A2, A3


def ex3_3(eq, nu, z):
    n1 = _nz(_nx(eq, nu + 1, z - nu), "nabla x_(nu+1)(z-nu)")
    A1 = big_phi(eq, z) / _nz(_dx(eq, z), "Delta x(z)") * (
        -_g(eq, nu) + _g(eq, nu + 1) * _nx(eq, nu + 2, z - nu) / n1
    ) - sigma(eq, z - nu) / n1
    dxh = delta_xk(eq.lat, 0, z - _half_of(z))
    A2 = (tau_nu(eq, nu, z) - A1) / (_nz(_g(eq, nu), "gamma_nu") * _nz(dxh, "Delta x(z-1/2)"))
    A3 = -_g(eq, nu + 1)
    return A1, A2, A3


def ex3_4_cd(eq, nu, z):
    """C(z) and D(z) exactly as displayed, including the doubled factors."""
    P = lambda t: big_phi(eq, t)  # noqa: E731
    S = lambda t: sigma(eq, t)  # noqa: E731
    n = lambda k, t: _nx(eq, k, t)  # noqa: E731
    g, g1 = _g(eq, nu), _g(eq, nu + 1)
    half = _half_of(z)
    C = (
        P(z + nu) * _dx(eq, z) * n(nu, z) * n(nu, z + 2) / g1
        - S(z + 1) * n(nu, z) * n(nu, z + 1) * n(nu, z + 1)
        + g / g1 * P(z + nu) * n(nu, z) * n(nu + 1, z + 1) * n(nu, z - nu + 1)
        + S(z) * n(nu, z + 1) * n(nu, z + 1) * n(nu, z)
        - P(z + nu - 1) * n(nu, z + 1) * n(nu, z + 1) * n(nu, z - nu + 1)
    )
    D = P(z + nu) * n(nu, z) * n(nu + 1, z + 1) * n(0, z + 1) - P(z + nu - 1) * n(nu, z + 1) * n(nu, z + 1) * n(0, z + half)
    return C, D


def ex3_4(eq, nu, z):
    C, D = ex3_4_cd(eq, nu, z)
    ratio = C / _nz(D, "D(z)")
    nnu = _nz(_nx(eq, nu, z), "nabla x_nu(z)")
    A1 = -_g(eq, nu) * _nx(eq, nu, z - nu + 1)
    A2 = ratio
    A3 = (
        -sigma(eq, z)
        + big_phi(eq, z + nu - 1) * _nx(eq, nu, z - nu + 1) / nnu
        - big_phi(eq, z + nu - 1) * _nx(eq, 0, z + _half_of(z)) / nnu * ratio
    )
    return A1, A2, A3


def ex3_5(eq, nu, z):
    g, g1 = _g(eq, nu), _g(eq, nu + 1)
    nx0 = _nz(_nx(eq, 0, z), "nabla x(z)")
    nnu = _nz(_nx(eq, nu, z), "nabla x_nu(z)")
    n1 = _nz(_nx(eq, nu + 1, z - nu), "nabla x_(nu+1)(z-nu)")
    P1 = big_phi(eq, z + nu - 1)
    Pm = _nz(big_phi(eq, z - 1), "Phi(z-1)")
    dxh = delta_xk(eq.lat, 0, z - _half_of(z))
    A1 = (
        -sigma(eq, z) / nx0
        + P1 * _nx(eq, nu, z - nu) / (nnu * nx0)
        + g * P1 / nnu * _nx(eq, nu, z - nu + 1) / n1
        + P1 * sigma(eq, z - nu) * dxh / (Pm * nnu * n1)
        - g1 * P1 / nnu
    ) / _nz(g, "gamma_nu")
    A2 = g1 - g * _nx(eq, nu, z - nu + 1) / n1 - sigma(eq, z - nu) * dxh / (Pm * n1)
    A3 = -g1 * _nx(eq, nu, z - nu)
    return A1, A2, A3


def ex3_6(eq, nu, z):
    g, g1 = _g(eq, nu), _g(eq, nu + 1)
    dxh = _nz(delta_xk(eq.lat, 0, z - _half_of(z)), "Delta x(z-1/2)")
    nn = _nz(_nx(eq, nu, z - nu), "nabla x_nu(z-nu)")
    A1 = -g1
    A2 = -g * big_phi(eq, z - 1) / dxh - sigma(eq, z - nu) / nn + g1 * big_phi(eq, z - 1) * _nx(eq, nu + 1, z - nu) / (dxh * nn)
    A3 = (tau_nu(eq, nu - 1, z) - A2) / (_nz(g, "gamma_nu") * _nz(_nx(eq, 0, z), "nabla x(z)"))
    return A1, A2, A3


def _half_of(z):
    from fractions import Fraction

    return Fraction(1, 2) if isinstance(z, (int, Fraction)) else 0.5


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    pairs: Callable
    coeffs: Callable
    note: str = ""


CATALOG = {
    "Ex3.1": CatalogEntry("Ex3.1", lambda n: ((n, n), (n, n - 1), (n, n - 2)), ex3_1),
    "Ex3.2": CatalogEntry("Ex3.2", lambda n: ((n, n - 1), (n, n - 2), (n + 1, n)), ex3_2),
    "Ex3.3": CatalogEntry("Ex3.3", lambda n: ((n, n), (n, n - 1), (n + 1, n + 1)), ex3_3),
    "Ex3.4": CatalogEntry(
        "Ex3.4", lambda n: ((n, n), (n, n - 1), (n - 1, n - 1)), ex3_4, "C(z) carries repeated factors as displayed"
    ),
    "Ex3.5": CatalogEntry("Ex3.5", lambda n: ((n - 1, n - 1), (n, n), (n, n + 1)), ex3_5),
    "Ex3.6": CatalogEntry("Ex3.6", lambda n: ((n, n + 1), (n - 1, n), (n - 1, n - 1)), ex3_6),
}


def catalog_coeffs(entry_id: str, eq: HypergeoEquation, nu, z, **kw):
    return CATALOG[entry_id].coeffs(eq, nu, z, **kw)
