"""Sparse exact operators on tensor powers of C^n and permutation actions.

Basis tensors e_{x_1} (x) ... (x) e_{x_N} are flattened with the first leg
most significant.  Legs are 0-based in code.  A permutation ``sigma`` of
the legs acts by moving the factor in slot k to slot sigma[k]; this is a
left action, so ``permutation_operator(s) @ permutation_operator(t)``
equals ``permutation_operator(compose(s, t))``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product


def compose(s: tuple, t: tuple) -> tuple:
    """(s t)(k) = s(t(k))."""
    return tuple(s[t[k]] for k in range(len(t)))


def inverse_perm(s: tuple) -> tuple:
    out = [0] * len(s)
    for k, v in enumerate(s):
        out[v] = k
    return tuple(out)


def perm_sign(s: tuple) -> int:
    sign = 1
    seen = [False] * len(s)
    for k in range(len(s)):
        if seen[k]:
            continue
        j = k
        length = 0
        while not seen[j]:
            seen[j] = True
            j = s[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def transposition(legs: int, a: int, b: int) -> tuple:
    s = list(range(legs))
    s[a], s[b] = s[b], s[a]
    return tuple(s)


def subgroup(blocks, legs: int):
    """All permutations of range(legs) preserving each block (a list of index lists)."""
    out = []
    per_block = [list(permutations(b)) for b in blocks]
    for choice in product(*per_block):
        s = list(range(legs))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                s[src] = dst
        out.append(tuple(s))
    return out


def unflatten(idx: int, n: int, legs: int) -> tuple:
    out = [0] * legs
    for k in range(legs - 1, -1, -1):
        idx, out[k] = divmod(idx, n)
    return tuple(out)


def flatten(x, n: int) -> int:
    idx = 0
    for v in x:
        idx = idx * n + v
    return idx


def act_perm_on_index(s: tuple, x: tuple) -> tuple:
    y = [0] * len(x)
    for k, v in enumerate(x):
        y[s[k]] = v
    return tuple(y)


class GroupAlgebraElement:
    """Element of Q[S_N] as {perm: Fraction}."""

    __slots__ = ("legs", "terms")

    def __init__(self, legs: int, terms=None):
        self.legs = legs
        self.terms = {p: Fraction(c) for p, c in (terms or {}).items() if c}

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            out: dict = {}
            for p, a in self.terms.items():
                for q, b in other.terms.items():
                    r = compose(p, q)
                    out[r] = out.get(r, 0) + a * b
            return GroupAlgebraElement(self.legs, out)
        c = Fraction(other)
        return GroupAlgebraElement(self.legs, {p: v * c for p, v in self.terms.items()})

    __rmul__ = __mul__

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(self.legs, out)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def apply_to_index(self, n: int, x: tuple) -> dict:
        """self . e_x as a sparse vector {flat index: coeff}."""
        out: dict = {}
        for p, c in self.terms.items():
            y = flatten(act_perm_on_index(p, x), n)
            out[y] = out.get(y, 0) + c
        return {k: v for k, v in out.items() if v}

    def operator(self, n: int) -> TensorOperator:
        rows: dict = {}
        for col in range(n ** self.legs):
            x = unflatten(col, n, self.legs)
            for p, c in self.terms.items():
                r = flatten(act_perm_on_index(p, x), n)
                row = rows.setdefault(r, {})
                row[col] = row.get(col, 0) + c
        return TensorOperator(n, self.legs, rows)


class TensorOperator:
    """Sparse exact linear operator on (C^n)^{(x) legs}.

    ``rows`` maps row index -> {column index -> nonzero Fraction}.
    """

    __slots__ = ("n", "legs", "rows")

    def __init__(self, n: int, legs: int, rows=None, _trusted=False):
        self.n = n
        self.legs = legs
        if _trusted:
            self.rows = rows
        else:
            clean = {}
            for r, row in (rows or {}).items():
                crow = {c: Fraction(v) for c, v in row.items() if v}
                if crow:
                    clean[r] = crow
            self.rows = clean

    @property
    def dim(self) -> int:
        return self.n ** self.legs

    @classmethod
    def identity(cls, n: int, legs: int) -> TensorOperator:
        return cls(n, legs, {i: {i: Fraction(1)} for i in range(n ** legs)}, _trusted=True)

    @classmethod
    def zero(cls, n: int, legs: int) -> TensorOperator:
        return cls(n, legs, {}, _trusted=True)

    @classmethod
    def permutation(cls, n: int, perm: tuple) -> TensorOperator:
        legs = len(perm)
        rows = {}
        for col in range(n ** legs):
            r = flatten(act_perm_on_index(perm, unflatten(col, n, legs)), n)
            rows[r] = {col: Fraction(1)}
        return cls(n, legs, rows, _trusted=True)

    @classmethod
    def from_dense(cls, n: int, legs: int, mat) -> TensorOperator:
        return cls(n, legs, {r: {c: v for c, v in enumerate(row) if v} for r, row in enumerate(mat)})

    @classmethod
    def local(cls, n: int, legs: int, placements) -> TensorOperator:
        """Product of single-leg matrices: placements maps leg -> n x n matrix; identity elsewhere."""
        rows: dict = {}
        for col in range(n ** legs):
            x = unflatten(col, n, legs)
            partial = [((), Fraction(1))]
            for leg in range(legs):
                mat = placements.get(leg)
                nxt = []
                for prefix, c in partial:
                    if mat is None:
                        nxt.append((prefix + (x[leg],), c))
                    else:
                        for i in range(n):
                            v = mat[i][x[leg]]
                            if v:
                                nxt.append((prefix + (i,), c * v))
                partial = nxt
            for y, c in partial:
                r = flatten(y, n)
                row = rows.setdefault(r, {})
                row[col] = row.get(col, 0) + c
        return cls(n, legs, rows)

    def to_dense(self) -> list:
        d = self.dim
        out = [[Fraction(0)] * d for _ in range(d)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def _check(self, other):
        if self.n != other.n or self.legs != other.legs:
            raise ValueError("operators act on different tensor spaces")

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        self._check(other)
        out = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc: dict = {}
            for k, a in row.items():
                orow = orows.get(k)
                if orow:
                    for c, b in orow.items():
                        acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return TensorOperator(self.n, self.legs, out, _trusted=True)

    def __add__(self, other: TensorOperator) -> TensorOperator:
        self._check(other)
        out = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            tgt = out.setdefault(r, {})
            for c, v in row.items():
                s = tgt.get(c, 0) + v
                if s:
                    tgt[c] = s
                else:
                    tgt.pop(c, None)
            if not tgt:
                del out[r]
        return TensorOperator(self.n, self.legs, out, _trusted=True)

    def scale(self, c) -> TensorOperator:
        c = Fraction(c)
        if not c:
            return TensorOperator.zero(self.n, self.legs)
        return TensorOperator(
            self.n, self.legs, {r: {k: v * c for k, v in row.items()} for r, row in self.rows.items()}, _trusted=True
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, TensorOperator)
            and self.n == other.n
            and self.legs == other.legs
            and self.rows == other.rows
        )

    def __bool__(self):
        return bool(self.rows)

    def trace(self) -> Fraction:
        return sum((row.get(r, Fraction(0)) for r, row in self.rows.items()), Fraction(0))

    def transpose(self) -> TensorOperator:
        out: dict = {}
        for r, row in self.rows.items():
            for c, v in row.items():
                out.setdefault(c, {})[r] = v
        return TensorOperator(self.n, self.legs, out, _trusted=True)

    def apply(self, vec: dict) -> dict:
        cols = self.transpose().rows
        out: dict = {}
        for c, x in vec.items():
            for r, v in cols.get(c, {}).items():
                out[r] = out.get(r, 0) + v * x
        return {k: v for k, v in out.items() if v}

    def rank(self) -> int:
        span = SparseSpan()
        for r in sorted(self.rows):
            span.add(self.rows[r])
        return len(span)

    def is_idempotent(self) -> bool:
        return self @ self == self

    def tensor(self, other: TensorOperator) -> TensorOperator:
        """self (x) other, self on the leading legs."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        d2 = other.dim
        out = {}
        for r1, row1 in self.rows.items():
            for r2, row2 in other.rows.items():
                out[r1 * d2 + r2] = {c1 * d2 + c2: a * b for c1, a in row1.items() for c2, b in row2.items()}
        return TensorOperator(self.n, self.legs + other.legs, out, _trusted=True)

    def __repr__(self):
        nnz = sum(len(r) for r in self.rows.values())
        return f"TensorOperator(n={self.n}, legs={self.legs}, nnz={nnz})"


class SparseSpan:
    """Incremental echelon basis of sparse vectors, tracking combinations.

    ``add`` returns True when the vector was independent; ``coordinates``
    expresses a vector in the span in terms of the added (independent)
    vectors, in insertion order.
    """

    def __init__(self):
        self._rows = []  # (pivot, reduced vector, combination dict)
        self._count = 0

    def __len__(self):
        return self._count

    def _reduce(self, vec: dict):
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        comb: dict = {}
        for piv, bvec, bcomb in self._rows:
            f = vec.get(piv)
            if f:
                for k, v in bvec.items():
                    s = vec.get(k, 0) - f * v
                    if s:
                        vec[k] = s
                    else:
                        vec.pop(k, None)
                for k, v in bcomb.items():
                    s = comb.get(k, 0) - f * v
                    if s:
                        comb[k] = s
                    else:
                        comb.pop(k, None)
        return vec, comb

    def add(self, vec: dict) -> bool:
        red, comb = self._reduce(vec)
        if not red:
            return False
        piv = min(red)
        inv = 1 / red[piv]
        red = {k: v * inv for k, v in red.items()}
        comb[self._count] = comb.get(self._count, 0) + 1
        comb = {k: v * inv for k, v in comb.items() if v}
        self._rows.append((piv, red, comb))
        self._count += 1
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce(vec)[0]

    def coordinates(self, vec: dict) -> list:
        red, comb = self._reduce(vec)
        if red:
            raise ValueError("vector not in span")
        # vec - sum_f ... = 0  =>  vec = -comb expressed over added vectors
        out = [Fraction(0)] * self._count
        for k, v in comb.items():
            out[k] = -v
        return out
