"""The sum functions

    Phi_{nu,mu}(z) = sum_{s=a}^{b-1} rho_nu(s) nabla x_{nu+1}(s) / [x_nu(s) - x_nu(z)]^(mu+1)

and the solutions y_nu(z) = C_nu Phi_{nu,nu}(z) / rho(z) together with their
difference derivatives y_nu^(k).

Grid points are s = a, a+1, ..., b-1 (b - a a positive integer).  The weight
rho(z) outside the grid is the Pearson solution on the coset z_anchor + Z with
rho(z_anchor) = 1; any such solution gives a solution of the equation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PoleOnGrid, ZeroWeight
from .genpower import genpow_int
from .hypergeo import (
    HypergeoEquation,
    big_phi,
    c_nu_k,
    rho,
    rho_k,
    rho_nu,
    sigma,
    _split_nu,
)
from .lattice import delta_xk, nabla_xk, x, x_k


def _order(mu) -> int:
    m = complex(mu) + 1
    if abs(m.imag) > 1e-12 or abs(m.real - round(m.real)) > 1e-12 or round(m.real) < 0:
        raise ValueError(f"mu + 1 = {m} must be a nonnegative integer")
    return int(round(m.real))


@dataclass(frozen=True)
class PhiSpec:
    eq: HypergeoEquation
    nu: object
    mu: object
    a: object
    b: object
    anchor: object = None

    def __post_init__(self):
        n = self.b - self.a
        if round(n) != n or n <= 0:
            raise ValueError("b - a must be a positive integer")
        _order(self.mu)
        if self.anchor is None:
            object.__setattr__(self, "anchor", self.a)

    @property
    def grid(self) -> list:
        return [self.a + j for j in range(int(round(self.b - self.a)))]

    def with_indices(self, nu, mu) -> "PhiSpec":
        return PhiSpec(self.eq, nu, mu, self.a, self.b, self.anchor)


def grid_weights(eq: HypergeoEquation, nu, grid, anchor) -> list:
    """rho_nu on consecutive grid points, one running Pearson product."""
    m, f = _split_nu(nu)
    if not grid:
        return []
    out = []
    base = rho_nu(eq, f, grid[0], anchor)
    for i, s in enumerate(grid):
        if i:
            base = base * big_phi(eq, s - 1 + f) / sigma(eq, s)
        val = base
        if m >= 0:
            for j in range(m):
                val = val * big_phi(eq, s + f + j)
        else:
            val = rho_nu(eq, nu, s, anchor)
        out.append(val)
    return out


def phi_terms(spec: PhiSpec, z) -> list:
    lat = spec.eq.lat
    order = _order(spec.mu)
    grid = spec.grid
    weights = grid_weights(spec.eq, spec.nu, grid, spec.anchor)
    terms = []
    for s, w in zip(grid, weights):
        den = genpow_int(lat, spec.nu, order, s, z)
        if den == 0:
            if w == 0:
                terms.append(0 * den)
                continue
            raise PoleOnGrid(f"[x_nu(s) - x_nu(z)]^({order}) vanishes at s={s}, z={z}")
        terms.append(w * nabla_xk(lat, spec.nu + 1, s) / den)
    return terms


def phi(spec: PhiSpec, z):
    return sum(phi_terms(spec, z), 0)


def _rho_at(spec: PhiSpec, z, z_anchor):
    return rho(spec.eq, z, spec.anchor if z_anchor is None else z_anchor)


def y_nu(spec: PhiSpec, z, c_nu=1, z_anchor=None):
    """C_nu Phi_{nu,nu}(z) / rho(z); ``spec.mu`` is ignored."""
    r = _rho_at(spec, z, z_anchor)
    if r == 0:
        raise ZeroWeight(f"rho({z}) = 0")
    return c_nu * phi(spec.with_indices(spec.nu, spec.nu), z) / r


def y_nu_k(spec: PhiSpec, k: int, s, c_nu=1, z_anchor=None):
    """y_nu^(k)(s) = C_nu^(k) Phi_{nu,nu-k}(s) / rho_k(s)."""
    anchor = spec.anchor if z_anchor is None else z_anchor
    rk = rho_k(spec.eq, k, s, anchor)
    if rk == 0:
        raise ZeroWeight(f"rho_{k}({s}) = 0")
    ck = c_nu_k(spec.eq, spec.nu, k, c_nu)
    return ck * phi(spec.with_indices(spec.nu, spec.nu - k), s) / rk


def y_nu_nested(spec: PhiSpec, k: int, s, c_nu=1, z_anchor=None):
    """Delta^(k) y_nu(s) by literally applying Delta/Delta x_(k-1) ... Delta/Delta x_0."""
    lat = spec.eq.lat

    def rec(j, t):
        if j == 0:
            return y_nu(spec, t, c_nu, z_anchor)
        return (rec(j - 1, t + 1) - rec(j - 1, t)) / delta_xk(lat, j - 1, t)

    return rec(k, s)


def nabla_phi_residual(spec: PhiSpec, z):
    """nabla_z Phi_{nu,mu}(z) - [mu+1]_q nabla x_{nu-mu}(z) Phi_{nu,mu+1}(z), relative."""
    from .lattice import q_number

    lat = spec.eq.lat
    lhs = phi(spec, z) - phi(spec, z - 1)
    rhs = q_number(lat, spec.mu + 1) * nabla_xk(lat, spec.nu - spec.mu, z) * phi(
        spec.with_indices(spec.nu, spec.mu + 1), z
    )
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def boundary_check(spec: PhiSpec, nu_star, nu0, mu0, z, kmax: int):
    """sigma(s) rho_nu*(s) x(s)^k / [x_(nu0-1)(s) - x_(nu0-1)(z)]^(mu0) at s=a and s=b.

    Returns a list of (k, value_at_a, value_at_b) for k = 0..kmax.
    """
    eq, lat = spec.eq, spec.eq.lat
    order = _order(mu0 - 1)
    out = []
    ends = []
    for s in (spec.a, spec.b):
        den = genpow_int(lat, nu0 - 1, order, s, z)
        if den == 0:
            raise PoleOnGrid(f"boundary denominator vanishes at s={s}")
        ends.append((sigma(eq, s) * rho_nu(eq, nu_star, s, spec.anchor) / den, x(lat, s)))
    for k in range(kmax + 1):
        out.append((k, ends[0][0] * ends[0][1] ** k, ends[1][0] * ends[1][1] ** k))
    return out


def x_nu_of(spec: PhiSpec, s):
    return x_k(spec.eq.lat, spec.nu, s)
