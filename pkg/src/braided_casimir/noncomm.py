"""Matrices over U(gl_n) and polynomials in a central variable u.

The column determinant multiplies factors left to right in column order:
det A = sum_sigma sign(sigma) A[sigma(1),1] A[sigma(2),2] ... .
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .pbw import RankMismatchError, UEAElement, element_from_json, element_to_json, is_central


class UPoly:
    """Polynomial in the central variable u with UEAElement coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for d, c in (coeffs or {}).items():
            if not isinstance(c, UEAElement):
                c = UEAElement.scalar(n, c)
            elif c.n != n:
                raise RankMismatchError("coefficient rank mismatch")
            if c:
                clean[int(d)] = c
        self.coeffs = clean

    @classmethod
    def const(cls, n: int, c) -> UPoly:
        return cls(n, {0: c})

    @classmethod
    def u(cls, n: int) -> UPoly:
        return cls(n, {1: 1})

    @classmethod
    def linear(cls, n: int, const, u_coeff=1) -> UPoly:
        """u_coeff*u + const (const may be a UEAElement)."""
        return cls(n, {0: const, 1: u_coeff})

    def _coerce(self, other) -> UPoly:
        if isinstance(other, UPoly):
            if other.n != self.n:
                raise RankMismatchError("rank mismatch")
            return other
        if isinstance(other, (UEAElement, int, Fraction)):
            return UPoly(self.n, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out[d] + c if d in out else c
        return UPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.n, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UPoly(self.n, {d: c.scale(other) for d, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                p = c1 * c2
                d = d1 + d2
                out[d] = out[d] + p if d in out else p
        return UPoly(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k: int):
        out = UPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (UEAElement, int, Fraction)):
            return self == UPoly(self.n, {0: other})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coefficient(self, d: int) -> UEAElement:
        return self.coeffs.get(d, UEAElement.zero(self.n))

    def leading(self) -> UEAElement:
        return self.coefficient(self.degree())

    def shift(self, a) -> UPoly:
        """p(u + a)."""
        a = Fraction(a)
        out = UPoly(self.n)
        base = UPoly.linear(self.n, a)
        for d, c in self.coeffs.items():
            out = out + (base ** d) * c
        return out

    def reflect(self) -> UPoly:
        """p(-u)."""
        return UPoly(self.n, {d: (c if d % 2 == 0 else -c) for d, c in self.coeffs.items()})

    def centrality_report(self) -> dict:
        return {d: is_central(self.coefficient(d)) for d in range(self.degree() + 1)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs, reverse=True):
            c = str(self.coeffs[d])
            if d == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*u" + (f"^{d}" if d > 1 else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"UPoly(n={self.n}, {self})"

    def to_json(self) -> dict:
        return {str(d): element_to_json(self.coeffs[d]) for d in sorted(self.coeffs)}

    @classmethod
    def from_json(cls, n: int, data: dict) -> UPoly:
        return cls(n, {int(d): element_from_json(c) for d, c in data.items()})


def as_upoly(n: int, x) -> UPoly:
    return x if isinstance(x, UPoly) else UPoly(n, {0: x})


class UEAMatrix:
    """Square matrix with UPoly entries."""

    def __init__(self, n: int, entries):
        self.n = n
        rows = [[as_upoly(n, x) for x in row] for row in entries]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix is not square")
        self.size = size
        self.entries = rows

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        return isinstance(other, UEAMatrix) and self.n == other.n and self.entries == other.entries

    def add_diagonal(self, diag) -> UEAMatrix:
        """self + diag(diag), entries of diag being scalars, elements or UPolys."""
        rows = [list(r) for r in self.entries]
        for k, x in enumerate(diag):
            rows[k][k] = rows[k][k] + x
        return UEAMatrix(self.n, rows)

    def with_u(self, shift=0) -> UEAMatrix:
        """self + (u + shift) * id."""
        return self.add_diagonal([UPoly.linear(self.n, Fraction(shift))] * self.size)

    def minus_L(self) -> UEAMatrix:
        """self - diag(m, m-1, ..., 0)."""
        m = self.size - 1
        return self.add_diagonal([-(m - k) for k in range(self.size)])

    def transpose(self) -> UEAMatrix:
        return UEAMatrix(self.n, [list(c) for c in zip(*self.entries)])

    def map(self, fn) -> UEAMatrix:
        return UEAMatrix(self.n, [[fn(x) for x in row] for row in self.entries])

    def __sub__(self, other: UEAMatrix) -> UEAMatrix:
        return UEAMatrix(self.n, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "size": self.size, "entries": [[x.to_json() for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> UEAMatrix:
        n = int(data["n"])
        return cls(n, [[UPoly.from_json(n, x) for x in row] for row in data["entries"]])


# ---------------------------------------------------------------------------
# determinants

def _expand(columns, n: int, col: int, used: tuple, partial: UPoly, sign: int, out: list):
    size = len(columns)
    if col == size:
        out.append(partial if sign > 0 else -partial)
        return
    column = columns[col]
    for r in range(size):
        if r in used:
            continue
        entry = column[r]
        if not entry:
            continue
        flips = sum(1 for q in used if q > r)
        _expand(columns, n, col + 1, used + (r,), partial * entry, sign * (-1) ** flips, out)


def _block(args):
    columns, n, r = args
    entry = columns[0][r]
    if not entry:
        return UPoly(n)
    out: list = []
    _expand(columns, n, 1, (r,), entry, 1, out)
    total = UPoly(n)
    for t in out:
        total = total + t
    return total


def _mixed_det(columns, n: int, workers: int = 1) -> UPoly:
    size = len(columns)
    if size == 0:
        return UPoly.const(n, 1)
    jobs = [(columns, n, r) for r in range(size)]
    if workers > 1 and size > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_block, jobs))
    else:
        blocks = [_block(j) for j in jobs]
    total = UPoly(n)
    for b in blocks:  # fixed reduction order
        total = total + b
    return total


def column_det(A: UEAMatrix, workers: int = 1) -> UPoly:
    """Column determinant; permutations are split into blocks by sigma(1)."""
    columns = [[A.entries[r][c] for r in range(A.size)] for c in range(A.size)]
    return _mixed_det(columns, A.n, workers)


def alpha(mats, workers: int = 1) -> UPoly:
    """sum_sigma sign(sigma) [A_1]_{sigma(1),1} ... [A_s]_{sigma(s),s}."""
    s = len(mats)
    if s == 0:
        raise ValueError("need at least one matrix")
    n = mats[0].n
    for A in mats:
        if A.size != s:
            raise ValueError(f"alpha needs {s} matrices of size {s}, got size {A.size}")
        if A.n != n:
            raise RankMismatchError("rank mismatch")
    columns = [[mats[c].entries[r][c] for r in range(s)] for c in range(s)]
    return _mixed_det(columns, n, workers)


def tridiag_det(a, b, c):
    """Determinant of X(a, b, c) by the three-term recursion.

    a = [a_0, ..., a_m] (a_m top-left, a_0 bottom-right), b = [b_1, ..., b_m]
    on the superdiagonal and c = [c_1, ..., c_m] on the subdiagonal, with
    b_k, c_k adjacent to a_k.  Works for any ring elements supporting
    ``*`` and ``-``.
    """
    m = len(a) - 1
    if m < 0 or len(b) != m or len(c) != m:
        raise ValueError("need len(a) = m+1 and len(b) = len(c) = m")
    prev2 = None
    prev = a[0]
    if m == 0:
        return prev
    cur = a[1] * a[0] - c[0] * b[0]
    prev2, prev = prev, cur
    for k in range(2, m + 1):
        cur = a[k] * prev - c[k - 1] * b[k - 1] * prev2
        prev2, prev = prev, cur
    return prev


def tridiag_matrix(n: int, a, b, c) -> UEAMatrix:
    """The (m+1) x (m+1) matrix X(a, b, c) with the same indexing as tridiag_det."""
    m = len(a) - 1
    size = m + 1
    rows = [[UPoly(n) for _ in range(size)] for _ in range(size)]
    for r in range(size):
        k = m - r
        rows[r][r] = as_upoly(n, a[k])
        if r + 1 < size:
            rows[r][r + 1] = as_upoly(n, b[k - 1])
            rows[r + 1][r] = as_upoly(n, c[k - 1])
    return UEAMatrix(n, rows)


def tridiag_data(A: UEAMatrix):
    """Read (a, b, c) back from a tridiagonal UEAMatrix."""
    size = A.size
    m = size - 1
    a = [A.entries[m - k][m - k] for k in range(size)]
    b = [A.entries[m - k][m - k + 1] for k in range(1, size)]
    c = [A.entries[m - k + 1][m - k] for k in range(1, size)]
    for r in range(size):
        for s in range(size):
            if abs(r - s) > 1 and A.entries[r][s]:
                raise ValueError("matrix is not tridiagonal")
    return a, b, c


def sylvester_matrix(m: int, s) -> list:
    """A'_m: diagonal -k, superdiagonal (m-k)s, subdiagonal (k+1)(s-1), k = 0..m (rows from the top)."""
    s = Fraction(s)
    size = m + 1
    out = [[Fraction(0)] * size for _ in range(size)]
    for k in range(size):
        out[k][k] = Fraction(-k)
        if k + 1 < size:
            out[k][k + 1] = (m - k) * s
            out[k + 1][k] = (k + 1) * (s - 1)
    return out


def sylvester_product(m: int, s) -> Fraction:
    s = Fraction(s)
    out = Fraction(1)
    for k in range(m + 1):
        out *= (m - 2 * k) * s - m + k
    return out
