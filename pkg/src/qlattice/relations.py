"""Relations between solutions y_nu and their difference derivatives y_nu^(k).

A relation sum A_i Phi_{nu_i, nu_i - k_i}(s) = 0 turns into
sum B_i y_{nu_i}^(k_i)(s) = 0 with

    B_i = A_i Phi(s+k*) ... Phi(s+k_i-1) / C_{nu_i}^(k_i),   k* = min k_i.
"""

from __future__ import annotations

from typing import Callable

from .engine import RelationTriple, solve_relation
from .errors import ZeroWeight
from .hypergeo import HypergeoEquation, big_phi, c_nu_k, sigma
from .lattice import nabla_xk, q_number
from .phi import PhiSpec, y_nu, y_nu_nested


def _unit(_nu):
    return 1


def _pairs(nk):
    return tuple((nu, nu - k) for nu, k in nk)


def derivative_relation_coeffs(eq: HypergeoEquation, nk, s, A=None, c_nu: Callable = _unit):
    """B_i for the relation between y_{nu_i}^(k_i), given (nu_i, k_i) triples.

    ``A`` defaults to the engine solution of the Phi-relation at z = s.
    """
    nk = tuple(tuple(p) for p in nk)
    if A is None:
        A = solve_relation(RelationTriple(_pairs(nk), eq), s).A
    kstar = min(k for _, k in nk)
    out = []
    for a, (nu, k) in zip(A, nk):
        val = a
        for j in range(kstar, k):
            val = val * big_phi(eq, s + j)
        out.append(val / c_nu_k(eq, nu, k, c_nu(nu)))
    return tuple(out)


def _rel(terms) -> float:
    scale = max(abs(t) for t in terms)
    return float(abs(sum(terms)) / scale) if scale else 0.0


def derivative_relation_residual(eq, nk, s, bounds, B=None, anchor=None, z_anchor=None, c_nu: Callable = _unit):
    """|sum B_i y_{nu_i}^(k_i)(s)| / max |B_i y_i| with y^(k) from literal differences."""
    if B is None:
        B = derivative_relation_coeffs(eq, nk, s, c_nu=c_nu)
    a, b = bounds
    z_anchor = s if z_anchor is None else z_anchor
    terms = []
    for coef, (nu, k) in zip(B, nk):
        spec = PhiSpec(eq, nu, nu, a, b, anchor)
        terms.append(coef * y_nu_nested(spec, k, s, c_nu(nu), z_anchor))
    return _rel(terms)


# named specializations, as (nu_i, k_i) in terms of nu
SPECIALIZATIONS = {
    "TTRR": lambda n: ((n, 0), (n + 1, 0), (n - 1, 0)),
    "DELTA+1": lambda n: ((n, 0), (n, 1), (n + 1, 0)),
    "DELTA-1": lambda n: ((n, 0), (n, 1), (n - 1, 0)),
    "Ex3.1-y": lambda n: ((n, 0), (n, 1), (n, 2)),
    "Ex3.2-y": lambda n: ((n, 1), (n, 2), (n + 1, 1)),
}


def delta_ladder(n, m: int):
    return ((n, 0), (n, 1), (n + m, 0))


def nabla_ladder_coeffs(eq: HypergeoEquation, nu, s, A=None, c_nu: Callable = _unit):
    """B for B1 y_nu + B2 nabla y_nu / nabla x + B3 y_(nu-1) = 0 (B2 = 1).

    Uses nabla_z Phi_{nu,nu} = [nu+1] nabla x(z) Phi_{nu,nu+1}, the relation
    between Phi_{nu-1,nu-1}, Phi_{nu,nu}, Phi_{nu,nu+1} and
    rho(s)/rho(s-1) = Phi(s-1)/sigma(s).
    """
    if A is None:
        A = solve_relation(RelationTriple(((nu - 1, nu - 1), (nu, nu), (nu, nu + 1)), eq), s).A
    A1, A2, A3 = A
    sg = sigma(eq, s)
    if sg == 0:
        raise ZeroWeight(f"sigma({s}) = 0, rho(s-1) undefined")
    r = big_phi(eq, s - 1) / sg
    qn = q_number(eq.lat, nu + 1)
    nx = nabla_xk(eq.lat, 0, s)
    B1 = -((1 - r) / nx - qn * r * A2 / A3)
    B3 = qn * r * (A1 / A3) * c_nu(nu) / c_nu(nu - 1)
    return B1, 1, B3


def nabla_ladder_residual(eq, nu, s, bounds, B=None, anchor=None, z_anchor=None, c_nu: Callable = _unit, via_delta=False):
    """Residual with nabla y / nabla x taken literally (or as Delta y(s-1)/Delta x(s-1))."""
    if B is None:
        B = nabla_ladder_coeffs(eq, nu, s, c_nu=c_nu)
    a, b = bounds
    z_anchor = s if z_anchor is None else z_anchor
    spec = PhiSpec(eq, nu, nu, a, b, anchor)
    lower = PhiSpec(eq, nu - 1, nu - 1, a, b, anchor)
    y0 = y_nu(spec, s, c_nu(nu), z_anchor)
    if via_delta:
        dy = y_nu_nested(spec, 1, s - 1, c_nu(nu), z_anchor)
    else:
        dy = (y0 - y_nu(spec, s - 1, c_nu(nu), z_anchor)) / nabla_xk(eq.lat, 0, s)
    ym = y_nu(lower, s, c_nu(nu - 1), z_anchor)
    return _rel([B[0] * y0, B[1] * dy, B[2] * ym])
