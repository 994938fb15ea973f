"""Operators on U(gl_n)[u] (x) End((C^d)^{(x) N}).

The U(gl_n) factor is the implicit "zeroth leg"; the N numeric legs are
0-based.  Entries are sparse: row index -> {column index -> UPoly}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .linalg import inverse, rref, transpose
from .noncomm import UEAMatrix, UPoly, as_upoly
from .pbw import UEAElement
from .tensor import TensorOperator, flatten, unflatten


class MixedOperator:
    __slots__ = ("n", "d", "legs", "rows")

    def __init__(self, n: int, d: int, legs: int, rows=None):
        self.n = n
        self.d = d
        self.legs = legs
        clean = {}
        for r, row in (rows or {}).items():
            crow = {c: v for c, v in row.items() if v}
            if crow:
                clean[r] = crow
        self.rows = clean

    @property
    def dim(self) -> int:
        return self.d ** self.legs

    @classmethod
    def scalar(cls, n: int, d: int, legs: int, value) -> MixedOperator:
        value = as_upoly(n, value)
        return cls(n, d, legs, {i: {i: value} for i in range(d ** legs)} if value else {})

    @classmethod
    def from_numeric(cls, n: int, op: TensorOperator) -> MixedOperator:
        return cls(n, op.n, op.legs, {r: {c: UPoly.const(n, v) for c, v in row.items()} for r, row in op.rows.items()})

    @classmethod
    def on_leg(cls, A, leg: int, legs: int, n: int | None = None) -> MixedOperator:
        """sum_rs A[r][s] (x) (e_rs)_leg; A is a UEAMatrix or a square list of elements/UPolys."""
        if isinstance(A, UEAMatrix):
            n = A.n
            mat = A.entries
        else:
            mat = A
        d = len(mat)
        mat = [[as_upoly(n, x) for x in row] for row in mat]
        rows: dict = {}
        for col in range(d ** legs):
            x = unflatten(col, d, legs)
            s = x[leg]
            for r in range(d):
                v = mat[r][s]
                if v:
                    y = flatten(x[:leg] + (r,) + x[leg + 1:], d)
                    rows.setdefault(y, {})[col] = v
        return cls(n, d, legs, rows)

    @classmethod
    def S(cls, n: int, legs: int, leg: int) -> MixedOperator:
        """sum_ij E_ij (x) (e_ij)_leg."""
        mat = [[UEAElement.gen(n, r + 1, s + 1) for s in range(n)] for r in range(n)]
        return cls.on_leg(mat, leg, legs, n)

    @classmethod
    def P(cls, n: int, legs: int, leg: int) -> MixedOperator:
        """sum_ij E_ij (x) (e_ji)_leg."""
        mat = [[UEAElement.gen(n, s + 1, r + 1) for s in range(n)] for r in range(n)]
        return cls.on_leg(mat, leg, legs, n)

    def _check(self, other):
        if (self.n, self.d, self.legs) != (other.n, other.d, other.legs):
            raise ValueError("operators act on different spaces")

    def __add__(self, other):
        if not isinstance(other, MixedOperator):
            other = MixedOperator.scalar(self.n, self.d, self.legs, other)
        self._check(other)
        out = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            tgt = out.setdefault(r, {})
            for c, v in row.items():
                tgt[c] = tgt[c] + v if c in tgt else v
        return MixedOperator(self.n, self.d, self.legs, out)

    def __neg__(self):
        return MixedOperator(self.n, self.d, self.legs, {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()})

    def __sub__(self, other):
        if not isinstance(other, MixedOperator):
            other = MixedOperator.scalar(self.n, self.d, self.legs, other)
        return self + (-other)

    def scale(self, c) -> MixedOperator:
        return MixedOperator(self.n, self.d, self.legs, {r: {k: v * c for k, v in row.items()} for r, row in self.rows.items()})

    def __matmul__(self, other):
        if isinstance(other, TensorOperator):
            if (other.n, other.legs) != (self.d, self.legs):
                raise ValueError("operators act on different spaces")
            out = {}
            orows = other.rows
            for r, row in self.rows.items():
                acc: dict = {}
                for k, a in row.items():
                    for c, b in orows.get(k, {}).items():
                        t = a * b
                        acc[c] = acc[c] + t if c in acc else t
                out[r] = acc
            return MixedOperator(self.n, self.d, self.legs, out)
        self._check(other)
        out = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc = {}
            for k, a in row.items():
                for c, b in orows.get(k, {}).items():
                    t = a * b
                    acc[c] = acc[c] + t if c in acc else t
            out[r] = acc
        return MixedOperator(self.n, self.d, self.legs, out)

    def __rmatmul__(self, other):
        if isinstance(other, TensorOperator):
            return MixedOperator.from_numeric(self.n, other) @ self
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, MixedOperator) and (self.n, self.d, self.legs) == (other.n, other.d, other.legs) and self.rows == other.rows

    def __bool__(self):
        return bool(self.rows)

    def entry(self, r: int, c: int) -> UPoly:
        return self.rows.get(r, {}).get(c, UPoly(self.n))

    def trace(self) -> UPoly:
        total = UPoly(self.n)
        for r, row in self.rows.items():
            if r in row:
                total = total + row[r]
        return total

    def map_entries(self, fn) -> MixedOperator:
        return MixedOperator(self.n, self.d, self.legs, {r: {c: fn(v) for c, v in row.items()} for r, row in self.rows.items()})

    def __repr__(self):
        nnz = sum(len(r) for r in self.rows.values())
        return f"MixedOperator(n={self.n}, d={self.d}, legs={self.legs}, nnz={nnz})"


class Compressor:
    """Restriction of operators to the span of given basis vectors (sparse dicts)."""

    def __init__(self, basis, dim_total: int):
        self.basis = [dict(v) for v in basis]
        k = len(self.basis)
        # rows of B (dim_total x k): choose k independent ones
        bt = [[v.get(i, Fraction(0)) for i in range(dim_total)] for v in self.basis]
        _, piv = rref(bt)
        if len(piv) != k:
            raise ValueError("basis vectors are dependent")
        self.pivots = piv
        sub = transpose([[row[p] for p in piv] for row in bt])  # k x k: B[piv, :]
        self.left_inverse = inverse(sub)

    def coordinates(self, vec: dict) -> list:
        vals = [vec.get(p) for p in self.pivots]
        out = []
        for row in self.left_inverse:
            acc = None
            for coef, v in zip(row, vals):
                if coef and v is not None:
                    t = v * coef
                    acc = t if acc is None else acc + t
            out.append(acc)
        return out

    def compress(self, op, n: int | None = None, check: bool = True):
        """Matrix of op restricted to the span; raises if the span is not invariant."""
        k = len(self.basis)
        is_mixed = isinstance(op, MixedOperator)
        columns: dict = {}
        for r, row in op.rows.items():
            for c, v in row.items():
                columns.setdefault(c, {})[r] = v
        cols = []
        for b in self.basis:
            img: dict = {}
            for x, c in b.items():
                for y, v in columns.get(x, {}).items():
                    t = v * c
                    img[y] = img[y] + t if y in img else t
            img = {y: v for y, v in img.items() if v}
            coords = self.coordinates(img)
            if check:
                recon: dict = {}
                for cf, bv in zip(coords, self.basis):
                    if cf is None:
                        continue
                    for y, c in bv.items():
                        t = cf * c
                        recon[y] = recon[y] + t if y in recon else t
                recon = {y: v for y, v in recon.items() if v}
                if recon != img:
                    raise ValueError("operator does not preserve the subspace")
            cols.append(coords)
        zero = UPoly(n if n is not None else op.n) if is_mixed else Fraction(0)
        return [[(cols[s][r] if cols[s][r] is not None else zero) for s in range(k)] for r in range(k)]


DEFAULT_WORK_BOUND = 2_000_000


class WorkBoundExceeded(RuntimeError):
    pass


def check_trace_work(n: int, legs: int, factors: int, work_bound: int = DEFAULT_WORK_BOUND) -> None:
    work = (n * n + n) ** factors * n ** (legs - factors)
    if work > work_bound:
        raise WorkBoundExceeded(f"trace expansion needs about {work} contractions (bound {work_bound})")


def trace_shifted_S_product(n: int, legs: int, factors, G: TensorOperator, work_bound: int = DEFAULT_WORK_BOUND) -> UPoly:
    """tr( prod_t (S_{0, leg_t} + a_t) . G ) over all numeric legs.

    ``factors`` is a list of (leg, a_t) with pairwise distinct legs and a_t
    a central UPoly (or scalar); G a numeric operator on (C^n)^{(x) legs}.
    Expands over the subset of factors contributing S and contracts G
    directly, never forming the full mixed product.
    """
    if G.n != n or G.legs != legs:
        raise ValueError("G acts on a different space")
    used = [leg for leg, _ in factors]
    if len(set(used)) != len(used):
        raise ValueError("factor legs must be distinct")
    check_trace_work(n, legs, len(factors), work_bound)
    shifts = [as_upoly(n, a) for _, a in factors]
    total = UPoly(n)
    count = len(factors)
    gens = {(i, j): UEAElement.gen(n, i + 1, j + 1) for i in range(n) for j in range(n)}
    for mask in range(1 << count):
        chosen = [t for t in range(count) if mask >> t & 1]
        scalar = UPoly.const(n, 1)
        for t in range(count):
            if not mask >> t & 1:
                scalar = scalar * shifts[t]
        if not scalar:
            continue
        chosen_legs = [factors[t][0] for t in chosen]
        free = [l for l in range(legs) if l not in chosen_legs]
        acc = UEAElement.zero(n)
        for ij in product(range(n), repeat=2 * len(chosen)):
            ii, jj = ij[0::2], ij[1::2]
            coef = Fraction(0)
            for fx in product(range(n), repeat=len(free)):
                x = [0] * legs
                y = [0] * legs
                for l, v in zip(free, fx):
                    x[l] = y[l] = v
                for l, a, b in zip(chosen_legs, ii, jj):
                    x[l], y[l] = a, b
                g = G.rows.get(flatten(y, n))
                if g:
                    v = g.get(flatten(x, n))
                    if v:
                        coef += v
            if coef:
                word = UEAElement.one(n)
                for a, b in zip(ii, jj):
                    word = word * gens[(a, b)]
                acc = acc + word.scale(coef)
        if acc:
            total = total + scalar * acc
    return total
