"""Derivation of three-term relations sum_i A_i(z) Phi_{nu_i,mu_i}(z) = 0.

For a fixed z the combination is rewritten as a sum of

    rho_nu*(s) Pi(s) / [x_nu0(s) - x_nu0(z)]^(mu0+1),

and the relation holds as soon as Pi(s) equals

    Phi(s+nu*) [x_m(s) - x_m(z)] Q(s+1) - sigma(s) [x_m(s+mu0) - x_m(z)] Q(s),   m = nu0 - mu0,

for some polynomial Q (Laurent in w = q^s, or ordinary in s on the quadratic
lattice).  Both sides are linear in the unknowns A_1, A_2, A_3 and the
coefficients of Q, so matching coefficients gives a homogeneous linear
system whose kernel is the relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CaseNotApplicable, IllConditioned, NoRelationFound
from .genpower import _integer, ratio_factors
from .hypergeo import HypergeoEquation, big_phi_poly, sigma_poly
from .lattice import _is_exact, x_k
from .laurent import LaurentPoly, LinearLaurent, lp_match, poly_from_lattice
from .linalg import nullspace_exact, nullspace_float
from .phi import PhiSpec, phi

DMAX = 8
KERNEL_RTOL = 1e-10


def _re(v):
    return complex(v).real


@dataclass(frozen=True)
class RelationTriple:
    """Three (nu, mu) pairs on a common equation.

    ``bounds`` = (a, b) are the summation limits used when the relation is
    checked against the sum functions; they do not enter the derivation.
    """

    pairs: tuple
    eq: HypergeoEquation
    bounds: tuple | None = None
    anchor: object = None

    def __post_init__(self):
        pairs = tuple(tuple(p) for p in self.pairs)
        if len(pairs) != 3 or any(len(p) != 2 for p in pairs):
            raise ValueError("a relation triple needs exactly three (nu, mu) pairs")
        object.__setattr__(self, "pairs", pairs)
        for i in range(3):
            for j in range(3):
                _integer(pairs[i][0] - pairs[j][0], "nu_i - nu_j")
                _integer(pairs[i][1] - pairs[j][1], "mu_i - mu_j")
        nu0, mu0 = self.nu0, self.mu0
        for nu, mu in pairs:
            if _integer(mu0 - mu, "mu0 - mu") < _integer(nu0 - nu, "nu0 - nu"):
                raise CaseNotApplicable(
                    f"mu0 - mu_i >= nu0 - nu_i fails for pair ({nu}, {mu})"
                )

    @property
    def nu0(self):
        return max((p[0] for p in self.pairs), key=_re)

    @property
    def nu_star(self):
        return min((p[0] for p in self.pairs), key=_re)

    @property
    def mu0(self):
        return max((p[1] for p in self.pairs), key=_re)


@dataclass
class RecurrenceRelation:
    triple: RelationTriple
    z: object
    A: tuple
    Q: LaurentPoly
    residual: float | None
    normalization: str = "max-abs-one"
    kernel_dim: int = 1
    q_support: tuple = field(default=(0, 0))


def _x_diff(lat, m, t, zz) -> LaurentPoly:
    """x_m(s + t) - x_m(zz) as a polynomial in the lattice variable."""
    return poly_from_lattice(lat, m).shift(t, lat) - x_k(lat, m, zz)


def _nabla_x_poly(lat, k) -> LaurentPoly:
    p = poly_from_lattice(lat, k)
    return p - p.shift(-1, lat)


def _pi_terms(triple: RelationTriple, z) -> list[LaurentPoly]:
    eq, lat = triple.eq, triple.eq.lat
    nu0, mu0, nus = triple.nu0, triple.mu0, triple.nu_star
    phi_p = big_phi_poly(eq)
    out = []
    for nu, mu in triple.pairs:
        term = _nabla_x_poly(lat, nu + 1)
        rf = ratio_factors(nu0, mu0, nu, mu, z)
        for m, t, zz in rf.shifted:
            term = term * _x_diff(lat, m, t, zz)
        nphi = _integer(nu - nus, "nu_i - nu*")
        for j in range(nphi):
            term = term * phi_p.shift(nus + j, lat)
        out.append(term)
    return out


def build_pi(triple: RelationTriple, z) -> LinearLaurent:
    """Pi(s) = sum_i A_i(z) * (explicit polynomial in s), linear in A_1..A_3."""
    out = LinearLaurent()
    for i, term in enumerate(_pi_terms(triple, z)):
        out = out + LinearLaurent.unknown(f"A{i + 1}", term)
    return out


def pi_value(triple: RelationTriple, z, A, s):
    """Pi(s) evaluated for given coefficients."""
    lat = triple.eq.lat
    return sum((a * t.eval(s, lat) for a, t in zip(A, _pi_terms(triple, z))), 0)


def _q_basis(lat, d) -> list[int]:
    return list(range(-d, d + 1)) if lat.is_q else list(range(d + 1))


def build_rhs(triple: RelationTriple, z, d: int) -> LinearLaurent:
    """The Q-side of the matching, with one unknown ('Q', e) per basis monomial."""
    eq, lat = triple.eq, triple.eq.lat
    m = triple.nu0 - triple.mu0
    left = big_phi_poly(eq).shift(triple.nu_star, lat) * _x_diff(lat, m, 0, z)
    right = sigma_poly(eq) * _x_diff(lat, m, triple.mu0, z)
    out = LinearLaurent()
    for e in _q_basis(lat, d):
        mono = LaurentPoly.monomial(e)
        out = out + LinearLaurent.unknown(("Q", e), left * mono.shift(1, lat) - right * mono)
    return out


def _half_degree(p: LinearLaurent, lat) -> int:
    exps = p.exponents()
    if not exps:
        return 0
    if lat.is_q:
        return max(abs(e) for e in exps)
    return max(exps)


def initial_q_degree(triple: RelationTriple, z) -> int:
    """Starting size for Q from the degree count; escalation covers any slack."""
    lat = triple.eq.lat
    n = _half_degree(build_pi(triple, z), lat)
    if lat.is_q:
        # Phi, sigma have half-degree 2 and the lattice factor adds 1
        return max(0, n - 3)
    # quadratic lattice: deg sigma <= 4, the lattice factor adds 2, top terms cancel
    return max(0, n - 5)


def _all_exact(triple, z) -> bool:
    eq = triple.eq
    vals = list(eq.sigma_tilde) + list(eq.tau_tilde) + [z]
    for nu, mu in triple.pairs:
        vals += [nu, mu]
    return eq.lat.exact and all(_is_exact(v) for v in vals)


def matching_system(triple: RelationTriple, z, d: int):
    pi = build_pi(triple, z)
    rhs = build_rhs(triple, z, d)
    names = ["A1", "A2", "A3"] + [("Q", e) for e in _q_basis(triple.eq.lat, d)]
    return lp_match(pi, rhs, names)


def _normalize(A, Qc, exact: bool):
    k = max(range(3), key=lambda i: abs(A[i]))
    scale = A[k]
    A = [a / scale for a in A]
    Qc = [c / scale for c in Qc]
    if not exact:
        A = [complex(a) for a in A]
        Qc = [complex(c) for c in Qc]
    return A, Qc


def _kernel(system, exact: bool):
    if exact:
        return nullspace_exact(system.matrix, len(system.unknowns))
    basis = nullspace_float(system.matrix, KERNEL_RTOL)
    return [basis[:, j] for j in range(basis.shape[1])]


def solve_relation(triple: RelationTriple, z, dmax: int = DMAX, exact: bool | None = None) -> RecurrenceRelation:
    """Smallest Q admitting a nontrivial relation, normalized so max |A_i| = 1."""
    if exact is None:
        exact = _all_exact(triple, z)
    lat = triple.eq.lat
    d0 = initial_q_degree(triple, z)
    for d in range(d0, max(d0, dmax) + 1):
        system = matching_system(triple, z, d)
        kernel = _kernel(system, exact)
        # keep only directions with a nonzero A-part
        useful = [v for v in kernel if max(abs(v[i]) for i in range(3)) > (0 if exact else 1e-12 * max(abs(c) for c in v))]
        if not useful:
            continue
        if len(useful) > 1:
            amat = np.array([[complex(v[i]) for i in range(3)] for v in useful])
            sv = np.linalg.svd(amat, compute_uv=False)
            if sv.size > 1 and sv[1] > KERNEL_RTOL * sv[0]:
                raise IllConditioned(f"relation space has dimension {len(useful)} at Q size {d}")
        v = useful[0]
        A, Qc = _normalize(list(v[:3]), list(v[3:]), exact)
        Q = LaurentPoly({e: c for e, c in zip(_q_basis(lat, d), Qc)})
        rel = RecurrenceRelation(triple, z, tuple(A), Q, None, kernel_dim=len(useful),
                                 q_support=(min(_q_basis(lat, d)), max(_q_basis(lat, d))))
        if triple.bounds is not None:
            rel.residual = verify_relation(rel)
        return rel
    raise NoRelationFound(f"no relation with Q size up to {dmax}")


def relation_terms(triple: RelationTriple, z, A) -> list:
    if triple.bounds is None:
        raise ValueError("summation bounds are needed to evaluate the sum functions")
    a, b = triple.bounds
    out = []
    for coef, (nu, mu) in zip(A, triple.pairs):
        spec = PhiSpec(triple.eq, nu, mu, a, b, triple.anchor)
        out.append(coef * phi(spec, z))
    return out


def relation_residual(triple: RelationTriple, z, A) -> float:
    """|sum A_i Phi_i| / max |A_i Phi_i|."""
    terms = relation_terms(triple, z, A)
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return float(abs(sum(terms)) / scale)


def verify_relation(rel: RecurrenceRelation) -> float:
    if all(a == 0 for a in rel.A):
        raise ValueError("all coefficients vanish")
    return relation_residual(rel.triple, rel.z, rel.A)


def fit_common_scalar(A, ref) -> tuple[complex, float]:
    """Least-squares c with A ~ c * ref and the relative deviation |A - c ref| / |A|."""
    a = np.array([complex(v) for v in A])
    r = np.array([complex(v) for v in ref])
    den = np.vdot(r, r)
    if den == 0:
        return 0j, float("inf")
    c = np.vdot(r, a) / den
    dev = np.linalg.norm(a - c * r) / max(np.linalg.norm(a), 1e-300)
    return complex(c), float(dev)


__all__ = [
    "RelationTriple",
    "RecurrenceRelation",
    "build_pi",
    "build_rhs",
    "pi_value",
    "matching_system",
    "solve_relation",
    "verify_relation",
    "relation_residual",
    "fit_common_scalar",
    "initial_q_degree",
]
