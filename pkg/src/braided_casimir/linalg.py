"""Dense exact linear algebra over Fraction (lists of lists)."""

from __future__ import annotations

from fractions import Fraction


class SingularSystemError(ValueError):
    pass


def fmat(rows) -> list:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> list:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(k: int) -> list:
    out = zeros(k, k)
    for i in range(k):
        out[i][i] = Fraction(1)
    return out


def matmul(a, b) -> list:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def matadd(a, b) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a, c) -> list:
    return [[x * c for x in row] for row in a]


def transpose(a) -> list:
    return [list(col) for col in zip(*a)] if a else []


def is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def kron(a, b) -> list:
    ra, ca, rb, cb = len(a), len(a[0]), len(b), len(b[0])
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = a[i][j]
            if not x:
                continue
            for k in range(rb):
                for l in range(cb):
                    y = b[k][l]
                    if y:
                        out[i * rb + k][j * cb + l] = x * y
    return out


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                m[i] = [x - f * y for x, y in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a) -> list:
    """Basis (list of column vectors as lists) of {x : a x = 0}."""
    cols = len(a[0])
    m, piv = rref(a)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(piv):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def solve(a, b) -> list:
    """Exact solution x of a x = b (b a list); raises when inconsistent or underdetermined."""
    cols = len(a[0])
    aug = [list(row) + [Fraction(bv)] for row, bv in zip(a, b)]
    m, piv = rref(aug)
    if cols in piv:
        raise SingularSystemError("inconsistent system")
    if len(piv) < cols:
        raise SingularSystemError(f"underdetermined system (rank {len(piv)} < {cols})")
    x = [Fraction(0)] * cols
    for r, p in enumerate(piv):
        x[p] = m[r][cols]
    return x


def inverse(a) -> list:
    k = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(k))]
    m, piv = rref(aug)
    if piv[:k] != list(range(k)):
        raise SingularSystemError("matrix is singular")
    return [row[k:] for row in m[:k]]


def det(a) -> Fraction:
    m = [list(row) for row in a]
    k = len(m)
    out = Fraction(1)
    for c in range(k):
        p = next((i for i in range(c, k) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, k):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def minimal_poly(a) -> list:
    """Monic minimal polynomial of a square matrix.

    Returns coefficients [c_0, ..., c_{d-1}, 1] (lowest degree first).
    Powers of the matrix are flattened and tested for linear dependence
    incrementally.
    """
    k = len(a)
    if k == 0:
        return [Fraction(1)]
    powers = [identity(k)]
    # incremental echelon basis of flattened powers, tracking combinations
    basis = []  # list of (pivot index, vector, combination over powers)
    def reduce(vec, comb):
        vec = list(vec)
        comb = list(comb)
        for piv, bvec, bcomb in basis:
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, bvec)]
                comb = [x - f * y for x, y in zip(comb, bcomb)]
        return vec, comb
    for d in range(k + 1):
        if d > 0:
            powers.append(matmul(powers[-1], a))
        flat = [x for row in powers[d] for x in row]
        comb = [Fraction(0)] * (k + 1)
        comb[d] = Fraction(1)
        vec, comb = reduce(flat, comb)
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            # comb . powers == 0 and comb[d] == 1
            return comb[: d + 1]
        inv = 1 / vec[piv]
        vec = [x * inv for x in vec]
        comb = [x * inv for x in comb]
        new_basis = []
        for bpiv, bvec, bcomb in basis:
            f = bvec[piv]
            if f:
                bvec = [x - f * y for x, y in zip(bvec, vec)]
                bcomb = [x - f * y for x, y in zip(bcomb, comb)]
            new_basis.append((bpiv, bvec, bcomb))
        basis = new_basis + [(piv, vec, comb)]
    raise AssertionError("Cayley-Hamilton bound exceeded")  # pragma: no cover


def poly_of_matrix(coeffs, a) -> list:
    """sum_k coeffs[k] a^k (Horner)."""
    k = len(a)
    out = zeros(k, k)
    for c in reversed(list(coeffs)):
        out = matmul(out, a)
        if c:
            for i in range(k):
                out[i][i] += c
    return out
