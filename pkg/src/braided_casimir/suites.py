"""Named verification suites; each returns a list of CheckResult."""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .capelli import (
    CheckResult,
    p_sum_check,
    fusion_check,
    omega_star_check,
    omega_star_vector_check,
    plethysm_check,
    qdet_ev_check,
    rtt_check,
    transpose_relation_check,
    vector_weight,
)
from .central import (
    braided_casimir,
    charpoly_interpolate,
    gl2_hc_formula,
    hc_roots_gl2,
    on_product_element,
    on_product_hc,
    shifted_determinant,
    verify_annihilation,
)
from .irreps import as_weight, build_rep, gl2_rep
from .noncomm import UPoly, sylvester_matrix, sylvester_product, tridiag_data, tridiag_det
from .pbw import UEAElement

SUITES = ("gl2", "vector", "fusion", "omega-star", "plethysm", "qdet", "rtt", "all")


def partitions(total: int, max_parts: int):
    def rec(rest, cap, parts):
        if rest == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, parts + [p])

    yield from rec(total, total, [])


def gl2_weights(max_m: int, lows=(0,)):
    return [(low + m, low) for m in range(max_m + 1) for low in lows]


# ---------------------------------------------------------------------------
# gl_2 closed forms

def gl2_determinant_check(lam, workers: int = 1) -> CheckResult:
    weight = as_weight(lam, 2)
    params = {"lambda": list(weight.components), "n": 2}
    D = shifted_determinant(gl2_rep(weight), workers=workers)
    if not D.all_central():
        bad = [k for k, v in D.centrality_report.items() if not v]
        return CheckResult("gl2-determinant", params, False, {"non_central_u_degrees": bad})
    got, want = D.hc(), gl2_hc_formula("D", weight)
    if got != want:
        return CheckResult("gl2-determinant", params, False, {"chi_D": str(got), "formula": str(want)})
    return CheckResult("gl2-determinant", params, True)


def sample_mus(weight, count: int = 5, seed: int = 0):
    """Generic dominant gl_2 weights mu (distinct integer samples)."""
    rng = random.Random(seed * 7919 + sum(weight.components))
    out = []
    while len(out) < count:
        a, b = rng.randint(-3, 6), rng.randint(-3, 6)
        mu = (max(a, b) + 1, min(a, b))
        if mu not in out:
            out.append(mu)
    return out


def gl2_charpoly_check(lam, samples: int = 5) -> CheckResult:
    weight = as_weight(lam, 2)
    params = {"lambda": list(weight.components), "n": 2}
    formula = gl2_hc_formula("P", weight)
    rep = gl2_rep(weight)
    for mu in sample_mus(weight, samples):
        if not verify_annihilation(weight, mu, formula, rep):
            return CheckResult("gl2-charpoly", params, False, {"mu": list(mu), "reason": "formula does not annihilate"})
    got = charpoly_interpolate(weight).hc
    if got != formula:
        return CheckResult("gl2-charpoly", params, False, {"interpolated": str(got), "formula": str(formula)})
    return CheckResult("gl2-charpoly", params, True)


def d_vs_p_witness(lam=(2, 0)) -> CheckResult:
    """Root multisets of chi(D(-u)) and chi(P(u)) differ exactly in the middle root."""
    weight = as_weight(lam, 2)
    params = {"lambda": list(weight.components), "n": 2}
    rd, rp = hc_roots_gl2("D", weight), hc_roots_gl2("P", weight)
    differ = [k for k, (a, b) in enumerate(zip(rd, rp)) if a != b]
    m = weight.m
    ok = differ == [m // 2] if m % 2 == 0 and m > 0 else False
    # the roots must be the true roots: chi(D(-u)) and chi(P(u)) vanish there
    D = gl2_hc_formula("D", weight).reflect()
    P = gl2_hc_formula("P", weight)
    for poly, roots in ((D, rd), (P, rp)):
        for r in roots:
            for mu in sample_mus(weight, 3, seed=1):
                u = r.evaluate(mu)
                if poly.as_polynomial().evaluate((u,) + tuple(mu)) != 0:
                    ok = False
    witness = {"D_roots": [r.to_str(["mu1", "mu2"]) for r in rd], "P_roots": [r.to_str(["mu1", "mu2"]) for r in rp]}
    return CheckResult("d-vs-p", params, ok, None if ok else witness)


def on_product_check(lam) -> CheckResult:
    weight = as_weight(lam, 2)
    params = {"lambda": list(weight.components), "n": 2}
    got = on_product_hc(weight)
    want = gl2_hc_formula("D", weight).as_polynomial()
    if got != want:
        return CheckResult("on-product", params, False, {"product": got.to_str(["u", "mu1", "mu2"]), "closed_form": want.to_str(["u", "mu1", "mu2"])})
    elem = on_product_element(weight)
    D = shifted_determinant(gl2_rep(weight), check=False).poly
    if elem != D:
        return CheckResult("on-product", params, False, {"reason": "expanded product differs from D in U(gl_2)"})
    return CheckResult("on-product", params, True)


def substitution_lemma_closed_form(lam) -> CheckResult:
    """Omega(u) - L against the commutative tridiagonal data (a', b', c')."""
    weight = as_weight(lam, 2)
    l1, l2 = weight.components
    m = weight.m
    params = {"lambda": [l1, l2], "n": 2}
    A = braided_casimir(gl2_rep(weight)).with_u().minus_L()
    a, b, c = tridiag_data(A)
    e11, e22 = UEAElement.gen(2, 1, 1), UEAElement.gen(2, 2, 2)
    h = e11 - e22
    aa = UEAElement.gen(2, 1, 2) * UEAElement.gen(2, 2, 1)
    a2 = [UPoly.linear(2, e11.scale(l1) + e22.scale(l2) - m + (h - 1).scale(k - m)) for k in range(m + 1)]
    b2 = [UPoly.const(2, aa.scale(k)) for k in range(1, m + 1)]
    c2 = [UPoly.const(2, m - k + 1) for k in range(1, m + 1)]
    if a != a2:
        return CheckResult("substitution-lemma", params, False, {"reason": "diagonal data differ"})
    for k in range(m):
        if c[k] * b[k] != c2[k] * b2[k]:
            return CheckResult("substitution-lemma", params, False, {"k": k + 1, "cb": str(c[k] * b[k]), "c'b'": str(c2[k] * b2[k])})
    D = shifted_determinant(gl2_rep(weight), check=False).poly
    ok = tridiag_det(a, b, c) == D and tridiag_det(a2, b2, c2) == D
    return CheckResult("substitution-lemma", params, ok)


def substitution_lemma_random(trials: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    for t in range(trials):
        m = rng.randint(0, 5)
        rnd = lambda: Fraction(rng.randint(-9, 9), rng.randint(1, 5))  # noqa: E731
        a = [rnd() for _ in range(m + 1)]
        b = [rnd() for _ in range(m)]
        c = [rnd() for _ in range(m)]
        b2, c2 = [], []
        for bj, cj in zip(b, c):
            f = rnd() or Fraction(1)
            if cj:
                c2.append(cj * f)
                b2.append(bj / f)
            else:
                c2.append(rnd())
                b2.append(Fraction(0) if c2[-1] else rnd())
        if tridiag_det(a, b, c) != tridiag_det(a, b2, c2):
            return CheckResult("substitution-lemma-random", {"trials": trials, "seed": seed}, False, {"trial": t})
        dense = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        for r in range(m + 1):
            k = m - r
            dense[r][r] = a[k]
            if r < m:
                dense[r][r + 1] = b[k - 1]
                dense[r + 1][r] = c[k - 1]
        if linalg.det(dense) != tridiag_det(a, b, c):
            return CheckResult("substitution-lemma-random", {"trials": trials, "seed": seed}, False, {"trial": t, "reason": "recursion"})
    return CheckResult("substitution-lemma-random", {"trials": trials, "seed": seed}, True)


def sylvester_check(max_m: int = 5, seed: int = 0, samples: int = 3) -> CheckResult:
    rng = random.Random(seed)
    for m in range(max_m + 1):
        for _ in range(samples):
            s = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
            if linalg.det(sylvester_matrix(m, s)) != sylvester_product(m, s):
                return CheckResult("sylvester", {"max_m": max_m}, False, {"m": m, "s": str(s)})
    return CheckResult("sylvester", {"max_m": max_m}, True)


# ---------------------------------------------------------------------------
# suites

def suite_gl2(workers: int = 1) -> list:
    out = [gl2_determinant_check(w, workers) for w in gl2_weights(4, (0, -1))]
    out += [gl2_charpoly_check(w) for w in gl2_weights(3)]
    out.append(d_vs_p_witness((2, 0)))
    out += [on_product_check(w) for w in gl2_weights(4)]
    out += [substitution_lemma_closed_form(w) for w in gl2_weights(3)]
    out.append(substitution_lemma_random())
    out.append(sylvester_check())
    return out


def vector_centrality_check(n: int) -> CheckResult:
    rep = gl2_rep(vector_weight(2)) if n == 2 else build_rep(vector_weight(n), n)
    D = shifted_determinant(rep)
    bad = [k for k, v in D.centrality_report.items() if not v]
    return CheckResult("vector-centrality", {"n": n}, not bad, {"non_central_u_degrees": bad} if bad else None)


def suite_vector(n: int) -> list:
    out = [vector_centrality_check(n)]
    if n in (2, 3):
        out.append(qdet_ev_check(n))
    return out


def suite_fusion(n: int) -> list:
    max_m = 4 if n == 2 else 3
    return [fusion_check(lam, n) for M in range(1, max_m + 1) for lam in partitions(M, n)]


def suite_omega_star(n: int) -> list:
    out = []
    for M in range(1, 4):
        for lam in partitions(M, n):
            out.append(omega_star_check(lam, n))
            out.append(p_sum_check(lam, n))
            out.append(omega_star_vector_check(lam, n, corrected=True))
    if n == 2:
        out += [transpose_relation_check(w) for w in gl2_weights(3, (0, -1))]
    return out


def suite_plethysm(n: int = 2) -> list:
    return [plethysm_check(lam, 2) for lam in ((1, 0), (1, 1), (2, 0))]


def suite_qdet(n: int) -> list:
    return [qdet_ev_check(n)]


def suite_rtt(n: int) -> list:
    return [rtt_check(n, kind) for kind in ("ev", "evcheck")]


def run_suite(name: str, n: int, workers: int = 1) -> list:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "all":
        out = []
        for sub in SUITES[:-1]:
            if sub == "gl2" and n != 2:
                continue
            if sub == "plethysm" and n != 2:
                continue
            out += run_suite(sub, n, workers)
        return out
    if name == "gl2":
        if n != 2:
            raise ValueError("the gl2 suite needs n = 2")
        return suite_gl2(workers)
    if name == "plethysm":
        if n != 2:
            raise ValueError("the plethysm suite needs n = 2")
        return suite_plethysm()
    if name in ("qdet", "rtt") and n not in (2, 3):
        raise ValueError(f"the {name} suite needs n in (2, 3)")
    return {
        "vector": suite_vector,
        "fusion": suite_fusion,
        "omega-star": suite_omega_star,
        "qdet": suite_qdet,
        "rtt": suite_rtt,
    }[name](n)


__all__ = [
    "SUITES",
    "d_vs_p_witness",
    "gl2_determinant_check",
    "gl2_charpoly_check",
    "gl2_weights",
    "on_product_check",
    "partitions",
    "run_suite",
    "sample_mus",
    "substitution_lemma_closed_form",
    "substitution_lemma_random",
    "sylvester_check",
    "vector_centrality_check",
]
