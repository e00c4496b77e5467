"""Dual Hahn, Racah and q-Racah polynomials as instances of the equation.

Each family carries its lattice, equation data, three-term recurrence
coefficients and an independent evaluator (terminating hypergeometric or
basic hypergeometric series) used to gate the recurrence data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from scipy import special

from .errors import BadParameters, PoleOnGrid, UndefinedCoefficient
from .hypergeo import (
    HALF,
    HypergeoEquation,
    big_phi,
    kappa_nu,
    lambda_nu,
    sigma,
    tau_nu,
    tau_nu_coeffs,
)
from .lattice import Lattice, x

# --- small series helpers ------------------------------------------------------


def poch(a, n: int):
    val = 1
    for j in range(n):
        val = val * (a + j)
    return val


def qpoch(a, q, n: int):
    """Finite q-Pochhammer (a; q)_n."""
    val = 1
    for j in range(n):
        val = val * (1 - a * q**j)
    return val


def hyp_terminating(upper, lower, n: int, arg=1):
    """Terminating pFq whose first upper parameter is -n."""
    total, term = 0, 1
    for k in range(n + 1):
        total = total + term
        num = arg
        for u in upper:
            num = num * (u + k)
        den = k + 1
        for l in lower:
            den = den * (l + k)
        if k < n:
            term = term * num / den
    return total


def qhyp_terminating(upper, lower, q, n: int, arg):
    """Terminating r phi s with r = s + 1 (balanced form, no extra factor)."""
    total, term = 0, 1
    for k in range(n + 1):
        total = total + term
        if k < n:
            num = arg
            for u in upper:
                num = num * (1 - u * q**k)
            den = 1 - q ** (k + 1)
            for l in lower:
                den = den * (1 - l * q**k)
            term = term * num / den
    return total


# --- family container ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PolynomialFamily:
    name: str
    lat: Lattice
    eq: HypergeoEquation
    params: dict
    grid: tuple
    ttrr: Callable[[int], tuple]
    oracle: Callable[[int, object], object]
    weight: Callable[[object], object] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def grid_points(self) -> list:
        a, b = self.grid
        return [a + j for j in range(int(round(b - a)))]

    @property
    def interior(self) -> list:
        return self.grid_points[1:-1]

    def lambda_n(self, n):
        return lambda_nu(self.eq, n)


def equation_from_sigma_phi(lat: Lattice, sig: Callable, phi: Callable, nodes=(0.31, 1.73, 2.29), check=(3.61, -0.77)):
    """sigma~, tau~ from closed forms of sigma(s) and Phi(s).

    tau~(x(s)) = (Phi - sigma)/Delta x(s - 1/2) must be affine and
    sigma~(x(s)) = (Phi + sigma)/2 quadratic in x(s); both are checked at
    extra points and BadParameters is raised when they are not.
    """

    def dxh(s):
        return x(lat, s + 0.5) - x(lat, s - 0.5)

    X = [x(lat, s) for s in nodes]
    T = [(phi(s) - sig(s)) / dxh(s) for s in nodes[:2]]
    S = [(phi(s) + sig(s)) / 2 for s in nodes]
    t1 = (T[1] - T[0]) / (X[1] - X[0])
    t0 = T[0] - t1 * X[0]
    d01 = (S[1] - S[0]) / (X[1] - X[0])
    d12 = (S[2] - S[1]) / (X[2] - X[1])
    c2 = (d12 - d01) / (X[2] - X[0])
    c1 = d01 - c2 * (X[0] + X[1])
    c0 = S[0] - c1 * X[0] - c2 * X[0] ** 2
    eq = HypergeoEquation(lat, (2 * c2, c1, c0), (t1, t0))
    for s in check:
        ref = max(abs(sig(s)), abs(phi(s)), 1e-300)
        err = max(abs(sigma(eq, s) - sig(s)), abs(big_phi(eq, s) - phi(s))) / ref
        if err > 1e-8:
            raise BadParameters(f"sigma/Phi are not of hypergeometric type (mismatch {err:.2e})")
    return eq


# --- dual Hahn ---------------------------------------------------------------------


def dual_hahn_equation(a, b, c) -> HypergeoEquation:
    """x(s) = s(s+1); sigma = (s-a)(s+b)(s-c), Phi = (s+a+1)(s+c+1)(b-s-1)."""
    lat = Lattice.quadratic(1, 1, 0)
    t0 = a * b - a * c - a + b * c + b - c - 1
    return HypergeoEquation(lat, (0, b - a - c - HALF * 3, a * b * c + t0 * HALF), (-1, t0), lam=0)


def make_dual_hahn(a, b, c) -> PolynomialFamily:
    n = b - a
    if not (n > 0 and abs(n - round(n)) < 1e-12):
        raise BadParameters("b - a must be a positive integer")
    if not (-0.5 < a < b) or not abs(c) < 1 + a:
        raise BadParameters("dual Hahn needs -1/2 < a < b and |c| < 1 + a")
    eq = dual_hahn_equation(a, b, c)

    def ttrr(m):
        return (
            m + 1,
            a * b - a * c + b * c + (b - a - c - 1) * (2 * m + 1) - 2 * m * m,
            (a + c + m) * (b - a - m) * (b - c - m),
        )

    def oracle(m, s):
        pre = poch(a - b + 1, m) * poch(a + c + 1, m) / math.factorial(m)
        return pre * hyp_terminating([-m, a - s, a + s + 1], [a - b + 1, a + c + 1], m)

    def weight(s):
        """rho(s) Delta x(s - 1/2) from the Gamma-function closed form."""
        g = special.gamma
        rho = g(a + s + 1) * g(c + s + 1) / (g(s - a + 1) * g(s - c + 1) * g(b - s) * g(b + s + 1))
        return rho * (2 * s + 1)

    return PolynomialFamily("dual-hahn", eq.lat, eq, {"a": a, "b": b, "c": c}, (a, b), ttrr, oracle, weight)


def dual_hahn_kappa(fam: PolynomialFamily, n, s):
    """The cubic kappa_n(s) appearing in the explicit dual Hahn coefficients."""
    a, b, c = (fam.params[k] for k in "abc")
    return (s + a + n) * (s + c + n) * (b - s - n) - (s - a) * (s + b) * (s - c) + (n - 1) * (2 * s + 1) * (2 * s + n)


# --- q-Racah and Racah ----------------------------------------------------------------


def _q_racah_parts(q, al, be, ga, de):
    def sig(s):
        return q ** (2 - 2 * s) * (1 - q**s) * (1 - de * q**s) * (be - ga * q**s) * (al - ga * de * q**s)

    def phi(s):
        return (
            q ** (-2 * s)
            * (1 - al * q ** (s + 1))
            * (1 - be * de * q ** (s + 1))
            * (1 - ga * q ** (s + 1))
            * (1 - ga * de * q ** (s + 1))
        )

    return sig, phi


def _q_racah_ttrr(q, al, be, ga, de, m):
    A = (
        (1 - al * q ** (m + 1))
        * (1 - al * be * q ** (m + 1))
        * (1 - be * de * q ** (m + 1))
        * (1 - ga * q ** (m + 1))
        / ((1 - al * be * q ** (2 * m + 1)) * (1 - al * be * q ** (2 * m + 2)))
    )
    C = (
        q
        * (1 - q**m)
        * (1 - be * q**m)
        * (ga - al * be * q**m)
        * (de - al * q**m)
        / ((1 - al * be * q ** (2 * m)) * (1 - al * be * q ** (2 * m + 1)))
    )
    return A, 1 + ga * de * q - A - C, C


def make_q_racah(N: int, beta, gamma, delta, q) -> PolynomialFamily:
    """q-Racah R_n(mu(s)) with alpha q = q^-N, on x(s) = q^-s + gamma delta q^(s+1)."""
    if int(N) != N or N < 1:
        raise BadParameters("N must be a positive integer")
    if not (q > 0 and q != 1):
        raise BadParameters("q must be positive and != 1")
    al, be, ga, de = q ** (-N - 1), beta, gamma, delta
    if ga * de == 0:
        raise BadParameters("gamma delta must be nonzero")
    lat = Lattice.q_quadratic(ga * de * q, 1, 0, q)
    sig, phi = _q_racah_parts(q, al, be, ga, de)
    eq = equation_from_sigma_phi(lat, sig, phi)

    def ttrr(m):
        return _q_racah_ttrr(q, al, be, ga, de, m)

    def oracle(m, s):
        return qhyp_terminating(
            [q**-m, al * be * q ** (m + 1), q**-s, ga * de * q ** (s + 1)],
            [al * q, be * de * q, ga * q],
            q,
            m,
            q,
        )

    def weight(s):
        s = int(round(s))
        num = qpoch(al * q, q, s) * qpoch(be * de * q, q, s) * qpoch(ga * q, q, s) * qpoch(ga * de * q, q, s)
        den = qpoch(q, q, s) * qpoch(ga * de * q / al, q, s) * qpoch(ga * q / be, q, s) * qpoch(de * q, q, s)
        return num / den * (1 - ga * de * q ** (2 * s + 1)) / ((al * be * q) ** s * (1 - ga * de * q))

    params = {"N": N, "alpha": al, "beta": be, "gamma": ga, "delta": de, "q": q}
    return PolynomialFamily("q-racah", lat, eq, params, (0, N + 1), ttrr, oracle, weight)


def make_racah(N: int, beta, gamma, delta) -> PolynomialFamily:
    """Racah R_n(lambda(s)) with alpha + 1 = -N, on x(s) = s(s + gamma + delta + 1)."""
    if int(N) != N or N < 1:
        raise BadParameters("N must be a positive integer")
    al, be, ga, de = -N - 1, beta, gamma, delta
    lat = Lattice.quadratic(1, ga + de + 1, 0)

    def sig(s):
        return s * (s - al + ga + de) * (s - be + ga) * (s + de)

    def phi(s):
        return (s + al + 1) * (s + be + de + 1) * (s + ga + 1) * (s + ga + de + 1)

    eq = equation_from_sigma_phi(lat, sig, phi)

    def ttrr(m):
        A = (m + al + 1) * (m + al + be + 1) * (m + be + de + 1) * (m + ga + 1) / (
            (2 * m + al + be + 1) * (2 * m + al + be + 2)
        )
        C = m * (m + al + be - ga) * (m + al - de) * (m + be) / ((2 * m + al + be) * (2 * m + al + be + 1))
        return A, -(A + C), C

    def oracle(m, s):
        return hyp_terminating([-m, m + al + be + 1, -s, s + ga + de + 1], [al + 1, be + de + 1, ga + 1], m)

    params = {"N": N, "alpha": al, "beta": be, "gamma": ga, "delta": de}
    return PolynomialFamily("racah", lat, eq, params, (0, N + 1), ttrr, oracle)


def q_racah_to_racah_limit(N: int, beta, gamma, delta, q, n: int):
    """q-Racah recurrence data with parameters q^beta, q^gamma, q^delta, rescaled by (ln q)^2.

    Returns (alpha~, beta~ - (1 + gamma delta q), gamma~) / (ln q)^2, which
    tend to the Racah recurrence coefficients as q -> 1.
    """
    ga, de = q**gamma, q**delta
    A, B, C = _q_racah_ttrr(q, q ** (-N - 1), q**beta, ga, de, n)
    h = math.log(q) ** 2
    shift = 1 + ga * de * q
    return A / h, (B - shift) / h, C / h


# --- evaluation ----------------------------------------------------------------------


def eval_ttrr_all(fam: PolynomialFamily, n: int, s) -> list:
    """[P_0(s), ..., P_n(s)] by forward recursion from P_0 = 1, P_-1 = 0."""
    X = x(fam.lat, s)
    vals = [1]
    prev = 0
    for m in range(n):
        al, be, ga = fam.ttrr(m)
        if al == 0:
            raise UndefinedCoefficient(f"alpha~_{m} vanishes")
        nxt = ((X - be) * vals[-1] - ga * prev) / al
        prev = vals[-1]
        vals.append(nxt)
    return vals


def eval_ttrr(fam: PolynomialFamily, n: int, s):
    return eval_ttrr_all(fam, n, s)[n]


def delta_p(fam, n, s):
    """Delta P_n(s) / Delta x(s)."""
    return (eval_ttrr(fam, n, s + 1) - eval_ttrr(fam, n, s)) / (x(fam.lat, s + 1) - x(fam.lat, s))


def nabla_p(fam, n, s):
    return (eval_ttrr(fam, n, s) - eval_ttrr(fam, n, s - 1)) / (x(fam.lat, s) - x(fam.lat, s - 1))


def orthogonality_matrix(fam: PolynomialFamily, nmax: int):
    """Gram matrix sum_s P_m P_n rho Delta x(s-1/2) over the grid."""
    if fam.weight is None:
        raise BadParameters(f"{fam.name} has no weight")
    G = [[0.0] * (nmax + 1) for _ in range(nmax + 1)]
    for s in fam.grid_points:
        w = fam.weight(s)
        P = eval_ttrr_all(fam, nmax, s)
        for i in range(nmax + 1):
            for j in range(nmax + 1):
                G[i][j] += P[i] * P[j] * w
    return G


# --- differentiation formulas ------------------------------------------------------------


def alpha_hat(fam: PolynomialFamily, n):
    """alpha^_n = alpha-bar_n = -alpha~_n lambda_2n / [2n]_q = alpha~_n kappa_2n."""
    return fam.ttrr(n)[0] * kappa_nu(fam.eq, 2 * n)


alpha_bar = alpha_hat


def beta_bar(fam: PolynomialFamily, n, s):
    """(lambda_n / [n]_q) tau_n(s) / tau_n'."""
    tp, _ = tau_nu_coeffs(fam.eq, n)
    return -kappa_nu(fam.eq, n) * tau_nu(fam.eq, n, s) / tp


def beta_hat(fam: PolynomialFamily, n, s):
    return beta_bar(fam, n, s) - fam.lambda_n(n) * (x(fam.lat, s + HALF) - x(fam.lat, s - HALF))


def _rel(terms) -> float:
    scale = max(abs(t) for t in terms)
    return float(abs(sum(terms)) / scale) if scale else 0.0


def diff_formula_residual(fam: PolynomialFamily, which: int, n: int, s) -> float:
    """which=1: sigma nabla P_n/nabla x = alpha-bar P_n+1 + beta-bar P_n;
    which=2: Phi Delta P_n/Delta x = alpha^ P_n+1 + beta^ P_n."""
    P = eval_ttrr_all(fam, n + 1, s)
    if which == 1:
        terms = [sigma(fam.eq, s) * nabla_p(fam, n, s), -alpha_bar(fam, n) * P[n + 1], -beta_bar(fam, n, s) * P[n]]
    elif which == 2:
        terms = [big_phi(fam.eq, s) * delta_p(fam, n, s), -alpha_hat(fam, n) * P[n + 1], -beta_hat(fam, n, s) * P[n]]
    else:
        raise ValueError("which must be 1 or 2")
    return _rel(terms)


# --- difference-recurrence relations ------------------------------------------------------


def _nz(v, what):
    if v == 0:
        raise PoleOnGrid(f"{what} vanishes")
    return v


def diffrec_coeffs(fam: PolynomialFamily, which: int, n: int, s):
    """Generic (B1, B2, B3) from the solved linear systems.

    which=1: B1 Delta P_(n-1)/Delta x + B2 Delta P_n/Delta x + B3 P_(n+1) = 0
    which=2: B1 P_(n-1)          + B2 Delta P_n/Delta x + B3 P_(n+1) = 0
    """
    al, be, ga = fam.ttrr(n)
    X = x(fam.lat, s)
    ph = _nz(big_phi(fam.eq, s), "Phi(s)")
    bh_n = _nz(beta_hat(fam, n, s), "beta^_n(s)")
    ah_n = alpha_hat(fam, n)
    if which == 1:
        bh_m = _nz(beta_hat(fam, n - 1, s), "beta^_(n-1)(s)")
        ah_m = alpha_hat(fam, n - 1)
        B1 = ga / bh_m
        B2 = (be - X) / bh_n - ah_m * ga / (bh_n * bh_m)
    elif which == 2:
        B1 = ga / ph
        B2 = (be - X) / bh_n
    else:
        raise ValueError("which must be 1 or 2")
    B3 = (al - ah_n * B2) / ph
    return B1, B2, B3


def diffrec_coeffs_dual_hahn(fam: PolynomialFamily, which: int, n: int, s, variant: str = "printed"):
    """Explicit dual Hahn coefficients with the cubic kappa_n(s).

    variant="printed" keeps the sign of the n B1 term in B2 of the first
    relation exactly as printed; "corrected" uses the sign that follows
    from the generic system.
    """
    if fam.name != "dual-hahn":
        raise BadParameters("explicit coefficients exist for dual Hahn only")
    a, b, c = (fam.params[k] for k in "abc")
    k_n = _nz(dual_hahn_kappa(fam, n, s), "kappa_n(s)")
    k_n1 = _nz(dual_hahn_kappa(fam, n + 1, s), "kappa_(n+1)(s)")
    phi = _nz((s + a + 1) * (s + c + 1) * (b - s - 1), "Phi(s)")
    gam = (a + c + n) * (b - a - n) * (b - c - n)
    bracket = a * b - a * c + b * c + (b - a - c - 1) * (2 * n + 1) - 2 * n * n - s * (s + 1)
    if which == 1:
        B1 = -gam * (2 * s + n) / k_n
        sign = {"printed": 1, "corrected": -1}[variant]
        B2 = -bracket / k_n1 * (2 * s + n + 1) + sign * n * B1 * (2 * s + n + 1) / k_n1
    elif which == 2:
        B1 = gam / phi
        B2 = -bracket / k_n1 * (2 * s + n + 1)
    else:
        raise ValueError("which must be 1 or 2")
    B3 = (n + 1) / phi * (1 + B2)
    return B1, B2, B3


def diffrec_residual(fam: PolynomialFamily, which: int, n: int, s, B) -> float:
    P = eval_ttrr_all(fam, n + 1, s)
    first = delta_p(fam, n - 1, s) if which == 1 else P[n - 1]
    return _rel([B[0] * first, B[1] * delta_p(fam, n, s), B[2] * P[n + 1]])


def ttrr_residual(fam: PolynomialFamily, n: int, s) -> float:
    """x P_n - alpha~ P_(n+1) - beta~ P_n - gamma~ P_(n-1) with oracle values."""
    al, be, ga = fam.ttrr(n)
    P = [fam.oracle(m, s) for m in range(max(n - 1, 0), n + 2)]
    prev = P[0] if n > 0 else 0
    cur, nxt = (P[1], P[2]) if n > 0 else (P[0], P[1])
    return _rel([x(fam.lat, s) * cur, -al * nxt, -be * cur, -ga * prev])


def equation_residual(fam: PolynomialFamily, n: int, s) -> float:
    """The difference equation applied to the oracle P_n at s, relative."""
    eq, lat = fam.eq, fam.lat

    def P(t):
        return fam.oracle(n, t)

    dxh = x(lat, s + HALF) - x(lat, s - HALF)
    fwd = (P(s + 1) - P(s)) / (x(lat, s + 1) - x(lat, s))
    bwd = (P(s) - P(s - 1)) / (x(lat, s) - x(lat, s - 1))
    t1 = sigma(eq, s) * (fwd - bwd) / dxh
    t2 = eq.tau_tilde_at(x(lat, s)) * fwd
    t3 = fam.lambda_n(n) * P(s)
    return _rel([t1, t2, t3])
