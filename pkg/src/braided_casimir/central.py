"""Braided Casimir elements, shifted determinants and characteristic polynomials."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from . import linalg
from .irreps import DominantWeight, Representation, as_weight, gl2_rep, irrep
from .noncomm import UEAMatrix, UPoly, column_det
from .pbw import UEAElement, delta1, delta2, hc_image, is_central
from .polynomial import Polynomial, WeightPolynomial, monomials_up_to

log = logging.getLogger(__name__)


class DegenerateSamplesError(ValueError):
    pass


@dataclass
class HCImagePoly:
    """u-polynomial whose coefficients are polynomials in mu_1..mu_n."""

    n: int
    coeffs: dict  # degree -> WeightPolynomial

    def __post_init__(self):
        self.coeffs = {d: WeightPolynomial.wrap(p) for d, p in self.coeffs.items() if p}

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> HCImagePoly:
        """Split a polynomial in (u, mu_1, ..., mu_n) (u first)."""
        n = p.nvars - 1
        out: dict = {}
        for mono, c in p.terms.items():
            out.setdefault(mono[0], {})[mono[1:]] = c
        return cls(n, {d: WeightPolynomial(n, t) for d, t in out.items()})

    def as_polynomial(self) -> Polynomial:
        terms = {}
        for d, p in self.coeffs.items():
            for mono, c in p.terms.items():
                terms[(d,) + mono] = c
        return Polynomial(self.n + 1, terms)

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coefficient(self, d: int) -> WeightPolynomial:
        return self.coeffs.get(d, WeightPolynomial(self.n))

    def evaluate(self, mu) -> list:
        """Coefficient list (lowest degree first) at a numeric weight."""
        return [self.coefficient(d).evaluate(mu) for d in range(self.degree() + 1)]

    def reflect(self) -> HCImagePoly:
        """p(-u)."""
        return HCImagePoly(self.n, {d: (p if d % 2 == 0 else -p) for d, p in self.coeffs.items()})

    def scale(self, c) -> HCImagePoly:
        return HCImagePoly(self.n, {d: p * c for d, p in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, HCImagePoly) and self.n == other.n and self.coeffs == other.coeffs

    def __str__(self):
        names = ["u"] + [f"mu{k + 1}" for k in range(self.n)]
        return self.as_polynomial().to_str(names)

    def to_json(self) -> dict:
        return {str(d): self.coeffs[d].to_json() for d in sorted(self.coeffs)}

    @classmethod
    def from_json(cls, n: int, data: dict) -> HCImagePoly:
        return cls(n, {int(d): WeightPolynomial.from_json(n, v) for d, v in data.items()})


@dataclass
class CentralPolynomial:
    poly: UPoly
    weight: DominantWeight
    kind: str  # "shifted_determinant" | "characteristic"
    centrality_report: dict = field(default_factory=dict)

    def all_central(self) -> bool:
        return all(self.centrality_report.values())

    def hc(self) -> HCImagePoly:
        return upoly_hc_image(self.poly)

    def to_json(self, with_hc: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "lambda": list(self.weight.components),
            "n": self.poly.n,
            "poly": self.poly.to_json(),
            "centrality_report": {str(d): v for d, v in sorted(self.centrality_report.items())},
        }
        if with_hc:
            out["hc"] = self.hc().to_json()
        return out


# ---------------------------------------------------------------------------
# braided Casimir

def braided_casimir(rep: Representation) -> UEAMatrix:
    """Entry (r, s) = sum_ij [pi(E_ji)]_{rs} E_ij."""
    n, d = rep.n, rep.dim
    rows = [[UEAElement.zero(n) for _ in range(d)] for _ in range(d)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            mat = rep.matrices[(j, i)]
            g = UEAElement.gen(n, i, j)
            for r in range(d):
                for s in range(d):
                    if mat[r][s]:
                        rows[r][s] = rows[r][s] + g.scale(mat[r][s])
    return UEAMatrix(n, rows)


def shifted_determinant(rep: Representation, workers: int = 1, check: bool = True) -> CentralPolynomial:
    """D(u) = det(Omega + u - L), L = diag(m, ..., 0); basis must be weight-descending."""
    ws = rep.basis_weights
    if ws and any(a < b for a, b in zip(ws, ws[1:])):
        raise ValueError("representation basis is not ordered by descending weight")
    A = braided_casimir(rep).with_u().minus_L()
    D = column_det(A, workers=workers)
    report = D.centrality_report() if check else {}
    return CentralPolynomial(D, rep.weight, "shifted_determinant", report)


def upoly_hc_image(p: UPoly, check: bool = False) -> HCImagePoly:
    return HCImagePoly(p.n, {d: hc_image(c, check=check) for d, c in p.coeffs.items()})


def sln_casimir_element(rep: Representation) -> UEAMatrix:
    """Omega_lambda - (d/n) Delta_1 * id."""
    n = rep.n
    shift = delta1(n).scale(Fraction(-rep.weight.d, n))
    return braided_casimir(rep).add_diagonal([shift] * rep.dim)


def sln_casimir_dual_basis(rep: Representation) -> UEAMatrix:
    """sum_{i != j} E_ij (x) pi(E_ji) + sum_i H_i (x) pi(H*_i), H*_i = E_11+..+E_ii - (i/n) sum E_kk."""
    n, d = rep.n, rep.dim
    rows = [[UEAElement.zero(n) for _ in range(d)] for _ in range(d)]

    def add(elem: UEAElement, mat):
        for r in range(d):
            for s in range(d):
                if mat[r][s]:
                    rows[r][s] = rows[r][s] + elem.scale(mat[r][s])

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                add(UEAElement.gen(n, i, j), rep.matrices[(j, i)])
    total = linalg.zeros(d, d)
    for k in range(1, n + 1):
        total = linalg.matadd(total, rep.matrices[(k, k)])
    partial = linalg.zeros(d, d)
    for i in range(1, n):
        partial = linalg.matadd(partial, rep.matrices[(i, i)])
        hstar = linalg.matadd(partial, linalg.matscale(total, Fraction(-i, n)))
        h = UEAElement.gen(n, i, i) - UEAElement.gen(n, i + 1, i + 1)
        add(h, hstar)
    return UEAMatrix(n, rows)


# ---------------------------------------------------------------------------
# numeric realizations and characteristic polynomials

def casimir_action(mu, rep_lam: Representation) -> list:
    """sum_ij pi_mu(E_ij) (x) pi_lam(E_ji) on V_mu (x) V_lam."""
    rep_mu = mu if isinstance(mu, Representation) else irrep(as_weight(mu), rep_lam.n)
    if rep_mu.n != rep_lam.n:
        raise ValueError("rank mismatch")
    n = rep_lam.n
    size = rep_mu.dim * rep_lam.dim
    out = linalg.zeros(size, size)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = linalg.matadd(out, linalg.kron(rep_mu.matrices[(i, j)], rep_lam.matrices[(j, i)]))
    return out


def minimal_poly(M) -> list:
    """Monic minimal polynomial, coefficients lowest degree first."""
    return linalg.minimal_poly(M)


def _default_rep(weight: DominantWeight) -> Representation:
    return gl2_rep(weight) if weight.n == 2 else irrep(weight)


def auto_samples(weight: DominantWeight, count: int | None = None) -> list:
    """Generic weights for interpolation.

    For gl_2 the points mu = (mu_2 + m + x, mu_2) with x, mu_2 >= 0 on a
    triangular lattice of side m+1 (unisolvent for degree m+1), plus two
    holdouts.  For n >= 3, strictly dominant weights with gaps >= max(m, 1)
    covering a simplex that is unisolvent for degree dim V_lambda.
    """
    n, m = weight.n, weight.m
    deg = _dimension(weight)
    if n == 2:
        pts = []
        for total in range(deg + 2):
            for x in range(total + 1):
                y = total - x
                pts.append((y + m + x, y))
        return pts if count is None else pts[:count]
    pts = []
    base = max(m, 1)
    span = deg + 1
    for shift in range(span):
        for extra in product(range(span), repeat=n - 1):
            if shift + sum(extra) >= span:
                continue
            mu = [0] * n
            mu[n - 1] = shift
            for k in range(n - 2, -1, -1):
                mu[k] = mu[k + 1] + base + extra[k]
            pts.append(tuple(mu))
    pts = sorted(set(pts), key=lambda p: (sum(p), p))
    return pts if count is None else pts[:count]


def _dimension(weight: DominantWeight) -> int:
    from .irreps import weyl_dimension

    return weyl_dimension(weight)


@dataclass
class CharpolyResult:
    hc: HCImagePoly
    used: list
    discarded: list


def normalized_annihilator(mu, rep_lam: Representation) -> list | None:
    """Minimal polynomial of casimir_action(mu, lam) scaled so the top coefficient is (-1)^dim,
    or None when its degree is below dim V_lam."""
    M = casimir_action(mu, rep_lam)
    mp = minimal_poly(M)
    D = rep_lam.dim
    if len(mp) - 1 != D:
        return None
    sign = -1 if D % 2 else 1
    return [c * sign for c in mp]


def charpoly_interpolate(lam, n: int | None = None, mu_samples=None, degree_bound=None) -> CharpolyResult:
    """Recover chi(P_lambda(u)) by interpolating normalized annihilators over generic mu."""
    weight = as_weight(lam, n)
    n = weight.n
    rep = _default_rep(weight)
    D = rep.dim
    if degree_bound is None:
        degree_bound = (lambda k: D - k) if n != 2 else (lambda k: weight.m + 1 - k)
    elif isinstance(degree_bound, int):
        fixed = degree_bound
        degree_bound = lambda k: fixed  # noqa: E731
    samples = list(mu_samples) if mu_samples is not None else auto_samples(weight)
    values, used, discarded = [], [], []
    for mu in samples:
        mu = tuple(mu)
        coeffs = normalized_annihilator(mu, rep)
        if coeffs is None:
            discarded.append(mu)
            log.info("discarding degenerate sample %s", mu)
            continue
        used.append(mu)
        values.append(coeffs)
    out = {}
    for k in range(D + 1):
        monos = monomials_up_to(n, max(degree_bound(k), 0))
        if len(used) < len(monos):
            raise DegenerateSamplesError(
                f"coefficient of u^{k}: {len(used)} generic samples for {len(monos)} unknowns"
            )
        rows = []
        rhs = []
        for mu, vals in zip(used, values):
            row = []
            for mono in monos:
                v = Fraction(1)
                for x, e in zip(mu, mono):
                    v *= Fraction(x) ** e
                row.append(v)
            rows.append(row)
            rhs.append(vals[k])
        try:
            sol = linalg.solve(rows, rhs)
        except linalg.SingularSystemError as exc:
            raise DegenerateSamplesError(f"coefficient of u^{k}: {exc}") from exc
        out[k] = WeightPolynomial(n, dict(zip(monos, sol)))
    return CharpolyResult(HCImagePoly(n, out), used, discarded)


def gl2_hc_formula(kind: str, lam) -> HCImagePoly:
    """Closed-form HC images for gl_2 weights.

    D: prod_k (u + (l1-k) mu1 + (l2+k) mu2 - k)
    P: prod_k (-u + (l1-k) mu1 + (l2+k) mu2 - k(m+1-k))
    """
    weight = as_weight(lam)
    if weight.n != 2:
        raise ValueError("gl2_hc_formula needs a gl_2 weight")
    l1, l2 = weight.components
    m = l1 - l2
    prod = Polynomial.constant(3, 1)
    for k in range(m + 1):
        if kind.upper() == "D":
            f = Polynomial.linear(3, [1, l1 - k, l2 + k], -k)
        elif kind.upper() == "P":
            f = Polynomial.linear(3, [-1, l1 - k, l2 + k], -k * (m + 1 - k))
        else:
            raise ValueError("kind must be 'D' or 'P'")
        prod = prod * f
    return HCImagePoly.from_polynomial(prod)


def hc_roots_gl2(kind: str, lam) -> list:
    """The linear forms in (mu1, mu2) that are the roots in u of the gl_2 formulas (D at -u)."""
    l1, l2 = as_weight(lam).components
    m = l1 - l2
    roots = []
    for k in range(m + 1):
        shift = -k if kind.upper() == "D" else -k * (m + 1 - k)
        roots.append(Polynomial.linear(2, [l1 - k, l2 + k], shift))
    return roots


def verify_annihilation(lam, mu, hc: HCImagePoly, rep_lam: Representation | None = None) -> bool:
    """sum_k chi(z_k)(mu) M^k == 0 for M = casimir_action(mu, lam)."""
    weight = as_weight(lam)
    rep = rep_lam or _default_rep(weight)
    M = casimir_action(mu, rep)
    coeffs = hc.evaluate(mu)
    return linalg.is_zero(linalg.poly_of_matrix(coeffs, M))


def on_product_hc(lam) -> Polynomial:
    """HC image of the square-root product form for gl_2.

    prod_k (u + d*D1/2 - m/2 + (m-2k)/2 * R) with R^2 = (D1-1)^2 - 4 D2,
    under D1 -> mu1+mu2 and R -> mu1 - mu2 + 1.  Variables (u, mu1, mu2).
    """
    l1, l2 = as_weight(lam).components
    m, d = l1 - l2, l1 + l2
    u = Polynomial.variable(3, 0)
    d1 = Polynomial.variable(3, 1) + Polynomial.variable(3, 2)
    R = Polynomial.variable(3, 1) - Polynomial.variable(3, 2) + 1
    out = Polynomial.constant(3, 1)
    for k in range(m + 1):
        out = out * (u + d1 * Fraction(d, 2) - Fraction(m, 2) + R * Fraction(m - 2 * k, 2))
    return out


def on_product_element(lam) -> UPoly:
    """Expand the square-root product in U(gl_2)[u].

    The product is formed in Q[u, D1, R]; odd powers of R must cancel, after
    which R^2 = (D1 - 1)^2 - 4 D2 gives an element of the center.
    """
    l1, l2 = as_weight(lam).components
    m, d = l1 - l2, l1 + l2
    u = Polynomial.variable(3, 0)
    D1 = Polynomial.variable(3, 1)
    R = Polynomial.variable(3, 2)
    prod = Polynomial.constant(3, 1)
    for k in range(m + 1):
        prod = prod * (u + D1 * Fraction(d, 2) - Fraction(m, 2) + R * Fraction(m - 2 * k, 2))
    if any(mono[2] % 2 for mono in prod.terms):
        raise AssertionError("odd powers of the square root survive")
    dl1 = delta1(2)
    r2 = (dl1 - 1) * (dl1 - 1) - delta2().scale(4)
    out: dict = {}
    for (eu, ed, er), c in prod.terms.items():
        term = (dl1 ** ed) * (r2 ** (er // 2))
        out[eu] = out[eu] + term.scale(c) if eu in out else term.scale(c)
    return UPoly(2, out)


# ---------------------------------------------------------------------------
# experimental scan over basis orders

def conjecture_scan(lam, n: int | None = None, permute: bool = False, max_dim: int = 6, workers: int = 1) -> dict:
    """Per-coefficient centrality of D_lambda in the default weight basis.

    With ``permute`` and dim <= max_dim, also scan every reordering of the
    basis (L still pairs with positions).  Experimental evidence only.
    """
    from .irreps import build_rep

    weight = as_weight(lam, n)
    rep = build_rep(weight)
    D = shifted_determinant(rep, workers=workers)
    report = {
        "experimental": True,
        "lambda": list(weight.components),
        "n": weight.n,
        "dim": rep.dim,
        "default_basis": {str(k): v for k, v in sorted(D.centrality_report.items())},
        "default_all_central": D.all_central(),
    }
    if permute and rep.dim <= max_dim:
        hits = []
        tried = 0
        omega = braided_casimir(rep)
        for perm in permutations(range(rep.dim)):
            tried += 1
            A = UEAMatrix(omega.n, [[omega.entries[perm[r]][perm[s]] for s in range(rep.dim)] for r in range(rep.dim)])
            P = column_det(A.with_u().minus_L())
            if all(is_central(c) for c in P.coeffs.values()):
                hits.append(list(perm))
        report["permutation_scan"] = {"tried": tried, "central_orders": hits}
    return report


def standard_center_gl2():
    """(Delta_1, Delta_2)."""
    return delta1(2), delta2()
