"""Quadratic and q-quadratic lattices, difference operators and the
structural constants alpha_k, beta_k, gamma_k.

Two scalar backends share the same code path:

* float: ``q`` is a positive float, arguments may be complex and
  ``q**s`` is the principal power ``exp(s*log q)``;
* exact: every coefficient is a :class:`fractions.Fraction` and the base
  is stored through its fourth root ``r = q**(1/4)``, so that every power
  ``q**t`` with ``4t`` integral is an exact rational ``r**(4t)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import Callable

from .errors import BadParameters


class LatticeKind(enum.Enum):
    QUADRATIC = "quadratic"
    QQUADRATIC = "q-quadratic"


def _is_exact(v) -> bool:
    return isinstance(v, (int, Fraction))


def div(value, n):
    """``value / n`` that stays a Fraction for exact inputs."""
    if _is_exact(value):
        return Fraction(value) / n
    return value / n


@dataclass(frozen=True)
class Lattice:
    """x(s) = c1 s^2 + c2 s + c3  or  x(s) = c1 q^s + c2 q^-s + c3."""

    kind: LatticeKind
    c1: Number
    c2: Number
    c3: Number
    q: Number | None = None
    qroot4: Fraction | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.c1 == 0:
            raise BadParameters("c1 must be nonzero")
        for name in ("c1", "c2", "c3"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))
        if self.kind is LatticeKind.QQUADRATIC:
            if self.qroot4 is not None:
                r = Fraction(self.qroot4)
                if r <= 0 or r == 1:
                    raise BadParameters("fourth root of q must be positive and != 1")
                object.__setattr__(self, "qroot4", r)
                object.__setattr__(self, "q", r**4)
            if self.q is None:
                raise BadParameters("q-quadratic lattice needs q")
            if isinstance(self.q, complex) or self.q <= 0 or self.q == 1:
                raise BadParameters("q must be real, positive and != 1")

    # constructors -------------------------------------------------------
    @classmethod
    def quadratic(cls, c1, c2, c3) -> "Lattice":
        return cls(LatticeKind.QUADRATIC, c1, c2, c3)

    @classmethod
    def q_quadratic(cls, c1, c2, c3, q) -> "Lattice":
        return cls(LatticeKind.QQUADRATIC, c1, c2, c3, q=q)

    @classmethod
    def q_quadratic_exact(cls, c1, c2, c3, qroot4) -> "Lattice":
        """Exact-rational q-quadratic lattice with base ``q = qroot4**4``."""
        return cls(
            LatticeKind.QQUADRATIC,
            Fraction(c1),
            Fraction(c2),
            Fraction(c3),
            qroot4=Fraction(qroot4),
        )

    # derived data ----------------------------------------------------------
    @property
    def is_q(self) -> bool:
        return self.kind is LatticeKind.QQUADRATIC

    @property
    def exact(self) -> bool:
        coeffs_exact = all(_is_exact(c) for c in (self.c1, self.c2, self.c3))
        if self.is_q:
            return coeffs_exact and self.qroot4 is not None
        return coeffs_exact

    @property
    def mu(self):
        """c2 / c1 (the shift entering the Gamma form of generalized powers)."""
        if _is_exact(self.c2) and _is_exact(self.c1):
            return Fraction(self.c2) / self.c1
        return self.c2 / self.c1

    @property
    def eta(self):
        return self.mu

    def qpow(self, t):
        """q**t; exact when the lattice is exact and 4t is an integer."""
        if self.qroot4 is not None and _is_exact(t):
            e = Fraction(t) * 4
            if e.denominator == 1:
                return self.qroot4 ** int(e)
        if self.q is None:
            raise BadParameters("quadratic lattice has no base q")
        q = float(self.q) if isinstance(self.q, Fraction) else self.q
        return q ** (float(t) if isinstance(t, Fraction) else t)


# --- lattice functions ------------------------------------------------------

def x(lat: Lattice, s):
    if lat.is_q:
        return lat.c1 * lat.qpow(s) + lat.c2 * lat.qpow(-s) + lat.c3
    return lat.c1 * s * s + lat.c2 * s + lat.c3


def x_k(lat: Lattice, k, s):
    """x_k(s) = x(s + k/2)."""
    return x(lat, s + div(k, 2))


def delta(f: Callable, s):
    return f(s + 1) - f(s)


def nabla(f: Callable, s):
    return f(s) - f(s - 1)


def delta_xk(lat: Lattice, k, s):
    """Delta x_k(s) = x_k(s+1) - x_k(s)."""
    return x_k(lat, k, s + 1) - x_k(lat, k, s)


def nabla_xk(lat: Lattice, k, s):
    """nabla x_k(s) = x_k(s) - x_k(s-1)."""
    return x_k(lat, k, s) - x_k(lat, k, s - 1)


def q_number(q, k):
    """Symmetric q-number [k]_q.

    ``q`` may be a number, a :class:`Lattice` (exact powers when possible)
    or ``None``; quadratic lattices and ``None`` give the classical limit k.
    """
    if q is None or (isinstance(q, Lattice) and not q.is_q):
        return k
    if isinstance(q, Lattice):
        num = q.qpow(div(k, 2)) - q.qpow(-div(k, 2))
        den = q.qpow(Fraction(1, 2)) - q.qpow(Fraction(-1, 2))
        return num / den
    return (q ** (k / 2) - q ** (-k / 2)) / (q**0.5 - q**-0.5)


def structural_constants(lat: Lattice, k):
    """(alpha_k, beta_k, gamma_k) of the identities

    (x(s+k) + x(s))/2 = alpha_k x_k(s) + beta_k,
    x(s+k) - x(s)     = gamma_k Delta x_k(s - 1/2).

    On the quadratic lattice beta_k = c1 k^2 / 4; it does not vanish.
    """
    if not lat.is_q:
        return 1, lat.c1 * div(k * k, 4), k
    alpha = (lat.qpow(div(k, 2)) + lat.qpow(-div(k, 2))) / 2
    beta = -lat.c3 / 2 * (lat.qpow(div(k, 4)) - lat.qpow(-div(k, 4))) ** 2
    return alpha, beta, q_number(lat, k)


def _rel(lhs, rhs):
    scale = max(abs(lhs), abs(rhs), 1)
    return abs(lhs - rhs) / scale


def verify_lattice_properties(lat: Lattice, k, s):
    """Relative residuals of the two structural identities at (k, s).

    Exact zeros are returned for exact inputs.
    """
    alpha, beta, gamma = structural_constants(lat, k)
    half = Fraction(1, 2)
    r1 = _rel(div(x(lat, s + k) + x(lat, s), 2), alpha * x_k(lat, k, s) + beta)
    r2 = _rel(x(lat, s + k) - x(lat, s), gamma * delta_xk(lat, k, s - half))
    return r1, r2
