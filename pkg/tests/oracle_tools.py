"""Independent reference computations used by the tests.

Nothing here imports the normal-ordering engine for products: UEA elements
are checked through a differential-operator realization (sympy) and through
matrix actions of explicit representations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy

from braided_casimir import linalg


def matrix_symbols(n: int):
    return [[sympy.Symbol(f"x{a}{b}") for b in range(1, n + 1)] for a in range(1, n + 1)]


def diff_generator(n: int, i: int, j: int, f, xs):
    """E_ij acting as sum_a x_{ia} d/dx_{ja} on functions of an n x n matrix."""
    return sympy.expand(sum(xs[i - 1][a] * sympy.diff(f, xs[j - 1][a]) for a in range(n)))


def diff_apply(x, f, xs):
    """Apply a UEA element (PBW dict form) to the polynomial f."""
    n = x.n
    total = sympy.Integer(0)
    for mono, coeff in x.terms.items():
        g = f
        # the rightmost generator acts first
        for i, j, e in reversed(x.monomial_pairs(mono)):
            for _ in range(e):
                g = diff_generator(n, i, j, g, xs)
        total += sympy.Rational(coeff.numerator, coeff.denominator) * g
    return sympy.expand(total)


def sample_polynomials(n: int, xs):
    """A few polynomials of mixed degree that separate low-degree operators."""
    flat = [v for row in xs for v in row]
    out = [sympy.Integer(1)]
    out += flat
    out += [flat[k] * flat[(3 * k + 1) % len(flat)] for k in range(len(flat))]
    out += [flat[0] ** 2 * flat[-1] + flat[1] * flat[-2] ** 2]
    if n >= 2:
        out.append(sympy.Matrix(xs).det() * flat[0])
    return out


def rep_matrix(rep, x):
    """Matrix of a UEA element in an explicit representation."""
    dim = rep.dim
    total = linalg.zeros(dim, dim)
    for mono, coeff in x.terms.items():
        mat = linalg.identity(dim)
        for i, j, e in x.monomial_pairs(mono):
            for _ in range(e):
                mat = linalg.matmul(mat, rep.matrices[(i, j)])
        total = linalg.matadd(total, linalg.matscale(mat, coeff))
    return total


def scalar_action(rep, x):
    """The scalar by which x acts, or None if it is not a multiple of identity."""
    mat = rep_matrix(rep, x)
    c = mat[0][0]
    for r in range(rep.dim):
        for s in range(rep.dim):
            if mat[r][s] != (c if r == s else 0):
                return None
    return c


def semistandard_count(lam, n: int) -> int:
    """Brute-force count of semistandard tableaux of shape lam with entries 1..n."""
    shape = [p for p in lam if p > 0]
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    count = 0
    for fill in product(range(n), repeat=len(cells)):
        t = dict(zip(cells, fill))
        ok = all(
            (c == 0 or t[(r, c - 1)] <= t[(r, c)]) and (r == 0 or t[(r - 1, c)] < t[(r, c)])
            for r, c in cells
        )
        count += ok
    return count


def standard_count(lam) -> int:
    """Brute-force count of standard Young tableaux."""
    shape = [p for p in lam if p > 0]
    size = sum(shape)

    def rec(filled):
        if sum(filled) == size:
            return 1
        total = 0
        for r in range(len(shape)):
            if filled[r] < shape[r] and (r == 0 or filled[r - 1] > filled[r]):
                nxt = list(filled)
                nxt[r] += 1
                total += rec(nxt)
        return total

    return rec([0] * len(shape))


def to_sympy_matrix(rows):
    return sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in rows])
