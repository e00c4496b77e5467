"""Sparse Laurent polynomials in w = q^s.

The same container doubles as an ordinary polynomial in s for the
quadratic lattice, where a shift s -> s+t is a Taylor re-expansion
instead of the diagonal rescaling w -> q^t w.

L-degree convention: a polynomial supported on exponents [-n, n] with a
nonzero extreme coefficient has L-degree 2n, so x_k(s) has L-degree two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Hashable, Iterable, Mapping

from .errors import BadParameters
from .lattice import Lattice, div


class LaurentPoly:
    """Immutable sparse map exponent -> coefficient, zeros removed."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self._c = {int(e): v for e, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._c)

    def __getitem__(self, e: int):
        return self._c.get(e, 0)

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def support(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        return min(self._c), max(self._c)

    def ldegree(self) -> int:
        sup = self.support()
        if sup is None:
            return 0
        return 2 * max(abs(sup[0]), abs(sup[1]))

    # ring operations ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out: dict[int, object] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "LaurentPoly":
        return LaurentPoly({e: v * c for e, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # substitution -----------------------------------------------------------
    def shift(self, t, lat: Lattice) -> "LaurentPoly":
        """Substitute s -> s + t."""
        if lat.is_q:
            return LaurentPoly({e: v * lat.qpow(t * e) for e, v in self._c.items()})
        out: dict[int, object] = {}
        for e, v in self._c.items():
            if e < 0:
                raise BadParameters("negative power in a polynomial in s")
            for j in range(e + 1):
                out[j] = out.get(j, 0) + v * comb(e, j) * t ** (e - j)
        return LaurentPoly(out)

    def eval(self, s, lat: Lattice):
        if lat.is_q:
            return sum((v * lat.qpow(s * e) for e, v in self._c.items()), 0)
        return sum((v * s**e for e, v in self._c.items()), 0)

    def max_abs(self):
        return max((abs(v) for v in self._c.values()), default=0)

    def __repr__(self):
        terms = " + ".join(f"({self._c[e]})w^{e}" for e in sorted(self._c))
        return f"LaurentPoly({terms or '0'})"


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_scale(a: LaurentPoly, c) -> LaurentPoly:
    return a.scale(c)


def lp_shift(a: LaurentPoly, t, lat: Lattice) -> LaurentPoly:
    return a.shift(t, lat)


def lp_eval(a: LaurentPoly, s, lat: Lattice):
    return a.eval(s, lat)


def lp_from_lattice(lat: Lattice, k) -> LaurentPoly:
    """x_k(s) as c1 q^(k/2) w + c2 q^(-k/2) / w + c3."""
    if not lat.is_q:
        raise BadParameters("x(s) on a quadratic lattice is not a Laurent polynomial in q^s")
    h = div(k, 2)
    return LaurentPoly({1: lat.c1 * lat.qpow(h), -1: lat.c2 * lat.qpow(-h), 0: lat.c3})


def poly_from_lattice(lat: Lattice, k) -> LaurentPoly:
    """x_k(s) in the natural basis of the lattice: w = q^s or s itself."""
    if lat.is_q:
        return lp_from_lattice(lat, k)
    h = div(k, 2)
    # c1 (s+h)^2 + c2 (s+h) + c3
    return LaurentPoly({2: lat.c1, 1: 2 * lat.c1 * h + lat.c2, 0: lat.c1 * h * h + lat.c2 * h + lat.c3})


class LinearLaurent:
    """sum_u u * P_u + P_const, linear in a finite set of named unknowns.

    The constant part is stored under the key ``None``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Mapping[Hashable, LaurentPoly] | None = None):
        self.parts = {k: v for k, v in (parts or {}).items() if not v.is_zero()}

    @classmethod
    def unknown(cls, name: Hashable, poly: LaurentPoly) -> "LinearLaurent":
        return cls({name: poly})

    @classmethod
    def constant(cls, poly: LaurentPoly) -> "LinearLaurent":
        return cls({None: poly})

    def __add__(self, other: "LinearLaurent") -> "LinearLaurent":
        out = dict(self.parts)
        for k, v in other.parts.items():
            out[k] = out[k] + v if k in out else v
        return LinearLaurent(out)

    def __neg__(self):
        return LinearLaurent({k: -v for k, v in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def unknowns(self) -> list:
        return [k for k in self.parts if k is not None]

    def exponents(self) -> set[int]:
        return {e for p in self.parts.values() for e in p}


@dataclass
class MatchSystem:
    """matrix @ unknown_values = rhs, one row per exponent of w."""

    matrix: list[list]
    rhs: list
    exponents: list[int]
    unknowns: list


def lp_match(
    lhs: LinearLaurent, rhs: LinearLaurent, unknowns: Iterable[Hashable] | None = None
) -> MatchSystem:
    """Equate coefficients of every power of w on both sides."""
    diff = lhs - rhs
    names = list(unknowns) if unknowns is not None else sorted(diff.unknowns(), key=repr)
    for u in set(lhs.unknowns()) | set(rhs.unknowns()):
        if u not in names:
            names.append(u)
    exps = sorted(lhs.exponents() | rhs.exponents())
    const = diff.parts.get(None, LaurentPoly())
    matrix = [[diff.parts[u][e] if u in diff.parts else 0 for u in names] for e in exps]
    vec = [-const[e] for e in exps]
    return MatchSystem(matrix, vec, exps, names)
