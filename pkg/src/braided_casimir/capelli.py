"""Capelli operators, fusion, evaluation images of the Yangian and the
identity checks relating them to braided Casimir elements.

Conventions: the U(gl_n) factor is the implicit leading leg; numeric legs
are 0-based; ``S_k = sum_ij E_ij (x) (e_ij)_k`` and
``P_k = sum_ij E_ij (x) (e_ji)_k``.  Contents follow the row-filled
tableau used by ``young_element``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import linalg
from .central import (
    braided_casimir,
    charpoly_interpolate,
    normalized_annihilator,
    shifted_determinant,
    upoly_hc_image,
)
from .irreps import (
    DEFAULT_TENSOR_BOUND,
    Representation,
    TensorBoundExceeded,
    as_weight,
    build_rep,
    contents,
    dual_star,
    find_intertwiner,
    gl2_rep,
    young_element,
    young_symmetrizer,
)
from .mixed import Compressor, MixedOperator, check_trace_work, trace_shifted_S_product
from .noncomm import UPoly
from .pbw import UEAElement, is_central
from .polynomial import Polynomial
from .tensor import GroupAlgebraElement, TensorOperator, perm_sign, transposition


@dataclass
class CheckResult:
    check: str
    params: dict
    passed: bool
    witness: dict | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "pass": self.passed, "witness": self.witness}

    def __bool__(self):
        return self.passed


def _partition(lam) -> tuple:
    lam = tuple(int(p) for p in lam if int(p) > 0)
    if not lam or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a nonempty partition")
    return lam


def _guard(n: int, legs: int, bound: int):
    if n ** legs > bound:
        raise TensorBoundExceeded(f"tensor space of dimension {n}^{legs} exceeds bound {bound}")


def _upoly_linear(n: int, shift) -> UPoly:
    return UPoly.linear(n, Fraction(shift))


# ---------------------------------------------------------------------------
# Capelli operators

def s_lambda(lam, n: int, bound: int = DEFAULT_TENSOR_BOUND) -> MixedOperator:
    """(S_1 - u - c_1) ... (S_M - u - c_M) (id (x) F_lambda)."""
    lam = _partition(lam)
    M = sum(lam)
    _guard(n, M, bound)
    c = contents(lam)
    out = MixedOperator.scalar(n, n, M, 1)
    for k in range(M):
        out = out @ (MixedOperator.S(n, M, k) - _upoly_linear(n, c[k]))
    return out @ young_symmetrizer(lam, n, bound)


def capelli_poly(lam, n: int, bound: int = DEFAULT_TENSOR_BOUND) -> UPoly:
    """tr S_lambda(u) over all tensor legs."""
    lam = _partition(lam)
    M = sum(lam)
    _guard(n, M, bound)
    check_trace_work(n, M, M)
    c = contents(lam)
    F = young_symmetrizer(lam, n, bound)
    return trace_shifted_S_product(n, M, [(k, -_upoly_linear(n, c[k])) for k in range(M)], F)


# ---------------------------------------------------------------------------
# rational functions with numeric operator values

def _poly_u(coeffs) -> Polynomial:
    return Polynomial(1, {(d,): c for d, c in enumerate(coeffs)})


class RationalOperator:
    """num(u) / den(u) with num a dict degree -> TensorOperator and den a scalar Polynomial in u."""

    def __init__(self, num: dict, den: Polynomial):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = {d: op for d, op in num.items() if op}
        self.den = den
        any_op = next(iter(num.values()))
        self.n, self.legs = any_op.n, any_op.legs

    @classmethod
    def polynomial(cls, num: dict) -> RationalOperator:
        return cls(num, Polynomial.constant(1, 1))

    def __matmul__(self, other):
        if isinstance(other, TensorOperator):
            return RationalOperator({d: op @ other for d, op in self.num.items()} or {0: TensorOperator.zero(self.n, self.legs)}, self.den)
        out: dict = {}
        for a, x in self.num.items():
            for b, y in other.num.items():
                z = x @ y
                out[a + b] = out[a + b] + z if a + b in out else z
        if not out:
            out = {0: TensorOperator.zero(self.n, self.legs)}
        return RationalOperator(out, self.den * other.den)

    def _times_scalar_poly(self, p: Polynomial) -> dict:
        out: dict = {}
        for (e,), c in p.terms.items():
            for d, op in self.num.items():
                z = op.scale(c)
                out[d + e] = out[d + e] + z if d + e in out else z
        return {d: op for d, op in out.items() if op}

    def residual(self, other) -> dict:
        """Numerator of self - other after cross-multiplication."""
        a = self._times_scalar_poly(other.den)
        b = other._times_scalar_poly(self.den)
        out = dict(a)
        for d, op in b.items():
            out[d] = out[d] - op if d in out else -op
        return {d: op for d, op in out.items() if op}

    def equals(self, other) -> bool:
        return not self.residual(other)


def _identity_coeffs(n: int, legs: int, u_coeff, const_op) -> dict:
    I = TensorOperator.identity(n, legs)
    out = {}
    if u_coeff:
        out[1] = I.scale(u_coeff)
    if const_op is not None and const_op:
        out[0] = const_op
    return out


def _residual_witness(res: dict) -> dict | None:
    if not res:
        return None
    d = min(res)
    op = res[d]
    r = min(op.rows)
    c = min(op.rows[r])
    return {"u_degree": d, "entry": [r, c], "value": str(op.rows[r][c])}


def fusion_check(lam, n: int, bound: int = DEFAULT_TENSOR_BOUND) -> CheckResult:
    """prod_k (1 - P_{0,k}/(u - c_k)) (id (x) F) = (1 - sum_k P_{0,k}/u) (id (x) F) on (C^n)^{(x)(M+1)}."""
    lam = _partition(lam)
    M = sum(lam)
    legs = M + 1
    _guard(n, legs, bound)
    c = contents(lam)
    F = TensorOperator.identity(n, 1).tensor(young_symmetrizer(lam, n, bound))
    P = [TensorOperator.permutation(n, transposition(legs, 0, k + 1)) for k in range(M)]
    lhs = RationalOperator.polynomial({0: TensorOperator.identity(n, legs)})
    for k in range(M):
        factor = RationalOperator(
            _identity_coeffs(n, legs, 1, TensorOperator.identity(n, legs).scale(-c[k]) - P[k]),
            _poly_u([-c[k], 1]),
        )
        lhs = lhs @ factor
    lhs = lhs @ F
    total = P[0]
    for p in P[1:]:
        total = total + p
    rhs = RationalOperator(_identity_coeffs(n, legs, 1, -total), _poly_u([0, 1])) @ F
    res = lhs.residual(rhs)
    return CheckResult("fusion", {"lambda": list(lam), "n": n}, not res, _residual_witness(res))


# ---------------------------------------------------------------------------
# Omega relations

def _rep_compressor(rep: Representation) -> Compressor:
    return Compressor(rep.basis_vectors, rep.n ** rep.legs)


def _matrix_witness(lhs, rhs) -> dict | None:
    for r, (ra, rb) in enumerate(zip(lhs, rhs)):
        for s, (a, b) in enumerate(zip(ra, rb)):
            if a != b:
                return {"entry": [r, s], "lhs": str(a), "rhs": str(b)}
    return None


def p_sum_check(lam, n: int, bound: int = DEFAULT_TENSOR_BOUND) -> CheckResult:
    """Omega_lambda equals sum_l P_{0,l} (id (x) F) compressed to the F-image basis."""
    lam = _partition(lam)
    params = {"lambda": list(lam), "n": n}
    rep = build_rep(lam, n, bound)
    M = rep.legs
    X = MixedOperator.P(n, M, 0)
    for l in range(1, M):
        X = X + MixedOperator.P(n, M, l)
    X = X @ young_symmetrizer(lam, n, bound)
    comp = _rep_compressor(rep).compress(X, n)
    omega = braided_casimir(rep).entries
    w = _matrix_witness(omega, comp)
    return CheckResult("p-sum", params, w is None, w)


def omega_star_check(lam, n: int, bound: int = DEFAULT_TENSOR_BOUND) -> CheckResult:
    """prod_k (u + c_k) (Omega_{lambda*} + u) = (-1)^M u S_lambda(u) on the F-image, over U(gl_n)."""
    lam = _partition(lam)
    params = {"lambda": list(lam), "n": n}
    M = sum(lam)
    c = contents(lam)
    rep = build_rep(lam, n, bound)
    omega_star = braided_casimir(dual_star(rep)).with_u()
    scal = UPoly.const(n, 1)
    for ck in c:
        scal = scal * _upoly_linear(n, ck)
    lhs = [[scal * x for x in row] for row in omega_star.entries]
    try:
        comp = _rep_compressor(rep).compress(s_lambda(lam, n, bound), n)
    except ValueError:
        return CheckResult("omega-star", params, False, {"reason": "right side does not preserve the F-image"})
    sign = -1 if M % 2 else 1
    rhs = [[UPoly.u(n) * x * sign for x in row] for row in comp]
    w = _matrix_witness(lhs, rhs)
    return CheckResult("omega-star", params, w is None, w)


def _numeric_S(n: int, legs: int, k: int) -> TensorOperator:
    """sum_ij (e_ij)_0 (e_ij)_k."""
    total = TensorOperator.zero(n, legs)
    for i in range(n):
        for j in range(n):
            e = [[Fraction(int(r == i and s == j)) for s in range(n)] for r in range(n)]
            total = total + TensorOperator.local(n, legs, {0: e, k: e})
    return total


def omega_star_vector_check(lam, n: int, corrected: bool = False, bound: int = DEFAULT_TENSOR_BOUND) -> CheckResult:
    """The Omega_{lambda*} / S_lambda relation with the U(gl_n) leg evaluated in C^n.

    Literal form: prod_k (u + c_k) (u - sum_k S_{0,k}) F = (-1)^M u prod_k (S_{0,k} - u - c_k) F.
    Corrected form: reversed factor order with contents negated,
    prod_k (u - c_k) (u - sum S) F = (-1)^M u prod_{k=M..1} (S_{0,k} - u + c_k) F.
    """
    lam = _partition(lam)
    M = sum(lam)
    legs = M + 1
    _guard(n, legs, bound)
    c = contents(lam)
    if corrected:
        c = [-x for x in c]
    F = TensorOperator.identity(n, 1).tensor(young_symmetrizer(lam, n, bound))
    I = TensorOperator.identity(n, legs)
    S = [_numeric_S(n, legs, k + 1) for k in range(M)]
    total = S[0]
    for s in S[1:]:
        total = total + s
    lhs = RationalOperator.polynomial({0: I})
    for k in range(M):
        lhs = lhs @ RationalOperator.polynomial({1: I, 0: I.scale(c[k])})
    lhs = lhs @ RationalOperator.polynomial({1: I, 0: -total}) @ F
    sign = -1 if M % 2 else 1
    rhs = RationalOperator.polynomial({1: I.scale(sign)})
    order = reversed(range(M)) if corrected else range(M)
    for k in order:
        rhs = rhs @ RationalOperator.polynomial({1: -I, 0: S[k] - I.scale(c[k])})
    rhs = rhs @ F
    res = lhs.residual(rhs)
    name = "omega-star-vector-corrected" if corrected else "omega-star-vector"
    return CheckResult(name, {"lambda": list(lam), "n": n}, not res, _residual_witness(res))


def _transposed_rep(rep: Representation) -> Representation:
    """E_ij -> pi(E_ji)^T."""
    mats = {(i, j): linalg.transpose(rep.matrices[(j, i)]) for (i, j) in rep.matrices}
    return Representation(rep.weight, rep.n, rep.dim, mats, list(rep.basis_weights))


def _shape(T) -> str:
    d = len(T)
    if all(T[r][s] == 0 for r in range(d) for s in range(d) if r != s):
        return "diagonal"
    if all(T[r][s] == 0 for r in range(d) for s in range(d) if r + s != d - 1):
        return "anti-diagonal"
    return "general"


def transpose_relation_check(lam) -> CheckResult:
    """Omega_lambda(u)^T = T^{-1} (-Omega_{lambda*}(-u)) T for an intertwiner T found by solving."""
    weight = as_weight(lam)
    params = {"lambda": list(weight.components), "n": weight.n}
    rep = gl2_rep(weight) if weight.n == 2 else build_rep(weight, reduce=True)
    T = find_intertwiner(_transposed_rep(rep), rep)
    if T is None:
        return CheckResult("transpose", params, False, {"reason": "no invertible intertwiner found"})
    Ti = linalg.inverse(T)
    n = rep.n
    lhs = braided_casimir(rep).with_u().transpose().entries
    star = braided_casimir(dual_star(rep)).entries
    d = rep.dim
    # -Omega_{lambda*}(-u) = u - Omega_{lambda*}
    neg = [[(UPoly.u(n) if r == s else UPoly(n)) - star[r][s] for s in range(d)] for r in range(d)]
    conj = [[UPoly(n) for _ in range(d)] for _ in range(d)]
    for r in range(d):
        for s in range(d):
            acc = UPoly(n)
            for a in range(d):
                if not Ti[r][a]:
                    continue
                for b in range(d):
                    if T[b][s] and neg[a][b]:
                        acc = acc + neg[a][b] * (Ti[r][a] * T[b][s])
            conj[r][s] = acc
    w = _matrix_witness(lhs, conj)
    res = CheckResult("transpose", params, w is None, w)
    res.notes["intertwiner"] = [[str(x) for x in row] for row in T]
    res.notes["intertwiner_shape"] = _shape(T)
    return res


# ---------------------------------------------------------------------------
# plethysm trace

def _block_group_algebra(lam: tuple, m: int) -> GroupAlgebraElement:
    """F^{(x)(m+1)} . Asym_{m+1} on (m+1) blocks of |lam| legs."""
    M = sum(lam)
    legs = (m + 1) * M
    F = young_element(lam)
    total = GroupAlgebraElement(legs, {tuple(range(legs)): 1})
    for s in range(m + 1):
        shifted = {}
        for p, v in F.terms.items():
            q = list(range(legs))
            for k in range(M):
                q[s * M + k] = s * M + p[k]
            shifted[tuple(q)] = v
        total = total * GroupAlgebraElement(legs, shifted)
    asym = {}
    w = Fraction(1, len(list(permutations(range(m + 1)))))
    for sigma in permutations(range(m + 1)):
        q = [0] * legs
        for s in range(m + 1):
            for k in range(M):
                q[s * M + k] = sigma[s] * M + k
        asym[tuple(q)] = w * perm_sign(sigma)
    return total * GroupAlgebraElement(legs, asym)


def plethysm_sides(lam, n: int = 2, bound: int = DEFAULT_TENSOR_BOUND):
    """(den * D_lambda(u), numerator of the trace formula), both UPolys."""
    weight = as_weight(lam, n)
    if not weight.is_partition():
        raise ValueError("plethysm formula needs a partition")
    part = weight.partition()
    m = weight.m
    D = shifted_determinant(gl2_rep(weight) if n == 2 else build_rep(weight), check=False).poly
    if not part:
        return D, UPoly.const(n, 1) * D
    M = sum(part)
    legs = (m + 1) * M
    _guard(n, legs, bound)
    check_trace_work(n, legs, legs)
    c = contents(part)
    G = _block_group_algebra(part, m).operator(n)
    factors = []
    den = UPoly.const(n, 1)
    pre = UPoly.const(n, 1)
    for s in range(m + 1):
        pre = pre * _upoly_linear(n, -s)
        for k in range(M):
            factors.append((s * M + k, _upoly_linear(n, s - m - c[k])))
            den = den * _upoly_linear(n, -s - c[k])
    tr = trace_shifted_S_product(n, legs, factors, G)
    return den * D, pre * tr


def plethysm_check(lam, n: int = 2, bound: int = DEFAULT_TENSOR_BOUND) -> CheckResult:
    weight = as_weight(lam, n)
    lhs, rhs = plethysm_sides(weight, n, bound)
    params = {"lambda": list(weight.components), "n": n}
    if lhs == rhs:
        return CheckResult("plethysm", params, True)
    diff = lhs - rhs
    d = max(diff.coeffs)
    return CheckResult("plethysm", params, False, {"u_degree": d, "residual": str(diff.coeffs[d])})


# ---------------------------------------------------------------------------
# Yangian evaluation images

class UEAMultiPoly:
    """Polynomial in commuting central variables with UEAElement coefficients."""

    __slots__ = ("n", "nvars", "terms")

    def __init__(self, n: int, nvars: int, terms=None):
        self.n = n
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, UEAElement):
                c = UEAElement.scalar(n, c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def variable(cls, n: int, nvars: int, k: int, coeff=1) -> UEAMultiPoly:
        e = [0] * nvars
        e[k] = 1
        return cls(n, nvars, {tuple(e): coeff})

    @classmethod
    def const(cls, n: int, nvars: int, c) -> UEAMultiPoly:
        return cls(n, nvars, {(0,) * nvars: c})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return UEAMultiPoly(self.n, self.nvars, out)

    def __neg__(self):
        return UEAMultiPoly(self.n, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = UEAMultiPoly(self.n, self.nvars, dict(other.terms))
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return UEAMultiPoly(self.n, self.nvars, out)

    def __eq__(self, other):
        return isinstance(other, UEAMultiPoly) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def to_upoly(self) -> UPoly:
        if self.nvars != 1:
            raise ValueError("not univariate")
        return UPoly(self.n, {e[0]: c for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        names = "uvw"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"{names[k]}^{p}" if p > 1 else names[k] for k, p in enumerate(e) if p)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


class RationalFunctionMatrix:
    """Matrix of UEAMultiPoly numerators over a common scalar Polynomial denominator."""

    def __init__(self, num, den: Polynomial):
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = [list(row) for row in num]
        if any(len(row) != len(self.num) for row in self.num):
            raise ValueError("numerator matrix must be square")
        self.den = den

    @property
    def size(self) -> int:
        return len(self.num)

    def __matmul__(self, other: RationalFunctionMatrix) -> RationalFunctionMatrix:
        d = self.size
        zero = _zero_like(self.num[0][0])
        out = [[zero for _ in range(d)] for _ in range(d)]
        for r in range(d):
            for k in range(d):
                a = self.num[r][k]
                if not a:
                    continue
                for s in range(d):
                    b = other.num[k][s]
                    if b:
                        out[r][s] = out[r][s] + a * b
        return RationalFunctionMatrix(out, self.den * other.den)

    def residual(self, other: RationalFunctionMatrix):
        """Numerator matrix of self - other after cross-multiplication."""
        if self.den == other.den:
            return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.num, other.num)]
        return [[a * other.den - b * self.den for a, b in zip(ra, rb)] for ra, rb in zip(self.num, other.num)]


def _zero_like(x: UEAMultiPoly) -> UEAMultiPoly:
    return UEAMultiPoly(x.n, x.nvars)


def evaluation_entry(n: int, kind: str, i: int, j: int, nvars: int, var: int) -> UEAMultiPoly:
    """Numerator of t_ij(x) times x, where x is variable ``var``; indices 0-based."""
    x = UEAMultiPoly.variable(n, nvars, var, 1 if i == j else 0)
    if kind == "ev":
        return x + UEAMultiPoly.const(n, nvars, UEAElement.gen(n, i + 1, j + 1))
    if kind == "evcheck":
        return x - UEAMultiPoly.const(n, nvars, UEAElement.gen(n, j + 1, i + 1))
    if kind == "unit":
        return x
    raise ValueError(f"unknown evaluation map {kind!r}")


def _rtt_factors(n: int, kind: str):
    d = n * n
    u = Polynomial.variable(2, 0)
    v = Polynomial.variable(2, 1)
    zero = UEAMultiPoly(n, 2)
    T1 = [[zero] * d for _ in range(d)]
    T2 = [[zero] * d for _ in range(d)]
    R = [[zero] * d for _ in range(d)]
    for a in range(n):
        for b in range(n):
            row = a * n + b
            for c in range(n):
                for e in range(n):
                    col = c * n + e
                    if b == e:
                        T1[row][col] = evaluation_entry(n, kind, a, c, 2, 0)
                    if a == c:
                        T2[row][col] = evaluation_entry(n, kind, b, e, 2, 1)
                    val = UEAMultiPoly(n, 2)
                    if row == col:
                        val = val + UEAMultiPoly(n, 2, dict((u - v).terms))
                    if a == e and b == c:
                        val = val - UEAMultiPoly.const(n, 2, 1)
                    R[row][col] = val
    return (
        RationalFunctionMatrix(R, u - v),
        RationalFunctionMatrix(T1, u),
        RationalFunctionMatrix(T2, v),
    )


def rtt_check(n: int, kind: str = "ev") -> CheckResult:
    """R(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u-v) for the evaluation image ``kind``."""
    R, T1, T2 = _rtt_factors(n, kind)
    lhs = R @ T1 @ T2
    rhs = T2 @ T1 @ R
    res = lhs.residual(rhs)
    params = {"n": n, "map": kind}
    for r, row in enumerate(res):
        for s, x in enumerate(row):
            if x:
                return CheckResult("rtt", params, False, {"entry": [r, s], "residual": str(x)})
    return CheckResult("rtt", params, True)


def qdet_ev(n: int):
    """ev(qdet T(u)) as (numerator UPoly, denominator Polynomial in u)."""
    terms = []
    for sigma in permutations(range(n)):
        num = UEAMultiPoly.const(n, 1, 1)
        den = Polynomial.constant(1, 1)
        for k in range(n):
            shift = k - n + 1
            entry = evaluation_entry(n, "ev", k, sigma[k], 1, 0)
            # t_ij(u + shift): substitute u -> u + shift in the numerator
            num = num * _shift_uni(entry, shift)
            den = den * Polynomial.linear(1, [1], shift)
        terms.append((perm_sign(sigma), num, den))
    num = UEAMultiPoly(n, 1)
    den = Polynomial.constant(1, 1)
    for sign, tn, td in terms:
        if td == den:
            num = num + (tn if sign > 0 else -tn)
        elif not num:
            num, den = (tn if sign > 0 else -tn), td
        else:
            num = num * td + (tn if sign > 0 else -tn) * den
            den = den * td
    return num.to_upoly(), den


def _shift_uni(p: UEAMultiPoly, a) -> UEAMultiPoly:
    out = UEAMultiPoly(p.n, 1)
    base = UEAMultiPoly(p.n, 1, {(1,): 1, (0,): Fraction(a)})
    for (e,), c in p.terms.items():
        term = UEAMultiPoly.const(p.n, 1, c)
        for _ in range(e):
            term = term * base
        out = out + term
    return out


def vector_weight(n: int) -> tuple:
    return (1,) + (0,) * (n - 1)


def small_generic_weights(n: int, max_size: int = 5, shifts=(0, 1, -2)) -> list:
    """Strictly dominant weights whose reduced size sum(mu_i - mu_n) is at most max_size."""
    out = []

    def rec(prefix, size):
        if len(prefix) == n - 1:
            mu = [0] * n
            for k in range(n - 2, -1, -1):
                mu[k] = mu[k + 1] + prefix[k]
            out.append(tuple(mu))
            return
        k = len(prefix)
        for g in range(1, max_size + 1):
            cost = g * (k + 1)
            if size + cost <= max_size:
                rec(prefix + [g], size + cost)

    rec([], 0)
    return [tuple(c + s for c in mu) for s in shifts for mu in sorted(out)]


def qdet_ev_check(n: int, hc: bool = True) -> CheckResult:
    """ev(qdet T(u)) u(u-1)...(u-n+1) = D_{lambda_0}(u), plus chi(D(-u)) = chi(P(u))."""
    lam0 = vector_weight(n)
    rep = gl2_rep(lam0) if n == 2 else build_rep(lam0, n)
    D = shifted_determinant(rep).poly
    num, den = qdet_ev(n)
    falling = Polynomial.constant(1, 1)
    for k in range(n):
        falling = falling * Polynomial.linear(1, [1], -k)
    lhs = num * UPoly(n, {e[0]: c for e, c in falling.terms.items()})
    rhs = D * UPoly(n, {e[0]: c for e, c in den.terms.items()})
    params = {"n": n}
    if lhs != rhs:
        diff = lhs - rhs
        d = max(diff.coeffs)
        return CheckResult("qdet", params, False, {"u_degree": d, "residual": str(diff.coeffs[d])})
    central = all(is_central(D.coefficient(k)) for k in range(D.degree() + 1))
    if not central:
        return CheckResult("qdet", params, False, {"reason": "D has a non-central coefficient"})
    if hc:
        chi_d = upoly_hc_image(D).reflect()
        if n == 2:
            chi_p = charpoly_interpolate(lam0).hc
            if chi_d != chi_p:
                return CheckResult("qdet", params, False, {"chi_D(-u)": str(chi_d), "chi_P(u)": str(chi_p)})
        else:
            for mu in small_generic_weights(n):
                want = normalized_annihilator(mu, rep)
                got = chi_d.evaluate(mu)
                if want is None or got != want:
                    return CheckResult("qdet", params, False, {"mu": list(mu), "chi_D(-u)": [str(x) for x in got]})
    return CheckResult("qdet", params, True)


def capelli_centrality(lam, n: int) -> dict:
    return capelli_poly(lam, n).centrality_report()


__all__ = [
    "CheckResult",
    "MixedOperator",
    "RationalFunctionMatrix",
    "RationalOperator",
    "UEAMultiPoly",
    "capelli_centrality",
    "capelli_poly",
    "p_sum_check",
    "evaluation_entry",
    "fusion_check",
    "omega_star_check",
    "omega_star_vector_check",
    "plethysm_check",
    "plethysm_sides",
    "qdet_ev",
    "qdet_ev_check",
    "rtt_check",
    "s_lambda",
    "small_generic_weights",
    "transpose_relation_check",
]
