"""Exact arithmetic in U(gl_n) on the PBW basis.

Generators E[i,j] are totally ordered: lowering (i > j) first in
lexicographic order, then the diagonal E[i,i], then raising (i < j) in
lexicographic order.  A PBW monomial is stored as the nondecreasing tuple
of generator ordinals (with repetition), so ``E[2,1] E[1,1]^2`` for n = 2
is ``(0, 1, 1)``.

Multiplication rewrites words to normal order with the bracket
``[E_ij, E_kl] = d_jk E_il - d_li E_kj``; the rewriting of a monomial times
a single generator is memoized per rank.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .polynomial import WeightPolynomial

DEFAULT_TERM_BOUND = 2_000_000


class RankMismatchError(ValueError):
    pass


class TermBoundExceeded(RuntimeError):
    """An intermediate result grew past the configured term bound."""


class NotCentralError(ValueError):
    pass


_term_bound = DEFAULT_TERM_BOUND


def set_term_bound(bound: int) -> None:
    global _term_bound
    if bound < 1:
        raise ValueError("term bound must be positive")
    _term_bound = bound


def get_term_bound() -> int:
    return _term_bound


def _check_bound(count: int) -> None:
    if count > _term_bound:
        raise TermBoundExceeded(f"intermediate result has {count} terms (bound {_term_bound})")


# ---------------------------------------------------------------------------
# generator order

@lru_cache(maxsize=None)
def generator_order(n: int) -> tuple:
    """Tuple of (i, j) pairs (1-based) in PBW order."""
    lower = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > j]
    diag = [(i, i) for i in range(1, n + 1)]
    upper = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
    return tuple(lower + diag + upper)


@lru_cache(maxsize=None)
def _ordinal_map(n: int) -> dict:
    return {ij: k for k, ij in enumerate(generator_order(n))}


def ordinal(n: int, i: int, j: int) -> int:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"generator E[{i},{j}] out of range for gl_{n}")
    return _ordinal_map(n)[(i, j)]


@lru_cache(maxsize=None)
def _bracket_table(n: int) -> tuple:
    """table[a][b] = [E_a, E_b] as a tuple of (ordinal, int coeff)."""
    order = generator_order(n)
    omap = _ordinal_map(n)
    table = []
    for (i, j) in order:
        row = []
        for (k, l) in order:
            out: dict = {}
            if j == k:
                g = omap[(i, l)]
                out[g] = out.get(g, 0) + 1
            if l == i:
                g = omap[(k, j)]
                out[g] = out.get(g, 0) - 1
            row.append(tuple((g, c) for g, c in sorted(out.items()) if c))
        table.append(tuple(row))
    return tuple(table)


# ---------------------------------------------------------------------------
# normal ordering kernel

_memo: dict = {}
_memo_lock = threading.Lock()


def _mono_times_gen(n: int, mono: tuple, g: int) -> dict:
    """Normal-ordered expansion of mono * E_g as {mono: int}."""
    if not mono or mono[-1] <= g:
        return {mono + (g,): 1}
    cache = _memo.get(n)
    if cache is None:
        with _memo_lock:
            cache = _memo.setdefault(n, {})
    key = (mono, g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    x = mono[-1]
    rest = mono[:-1]
    out: dict = {}
    # rest * x * g = (rest * g) * x + rest * [x, g]
    for m1, c1 in _mono_times_gen(n, rest, g).items():
        for m2, c2 in _mono_times_gen(n, m1, x).items():
            out[m2] = out.get(m2, 0) + c1 * c2
    for h, cb in _bracket_table(n)[x][g]:
        for m2, c2 in _mono_times_gen(n, rest, h).items():
            out[m2] = out.get(m2, 0) + cb * c2
    out = {m: c for m, c in out.items() if c}
    cache[key] = out
    return out


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _mono_times_mono(n: int, left: tuple, right: tuple) -> dict:
    cur = {left: 1}
    for g in right:
        nxt: dict = {}
        for m, c in cur.items():
            for m2, c2 in _mono_times_gen(n, m, g).items():
                nxt[m2] = nxt.get(m2, 0) + c * c2
        cur = {m: c for m, c in nxt.items() if c}
    return cur


# ---------------------------------------------------------------------------
# elements

def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UEAElement:
    """Finite rational combination of PBW monomials in U(gl_n).

    Treat instances as immutable.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None, _trusted=False):
        self.n = n
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            if terms:
                for m, c in terms.items():
                    c = _frac(c)
                    if c:
                        clean[tuple(m)] = c
            self.terms = clean
        self._hash = None

    # constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> UEAElement:
        return cls(n, {}, _trusted=True)

    @classmethod
    def scalar(cls, n: int, c) -> UEAElement:
        c = _frac(c)
        return cls(n, {(): c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, n: int) -> UEAElement:
        return cls.scalar(n, 1)

    @classmethod
    def gen(cls, n: int, i: int, j: int) -> UEAElement:
        return cls(n, {(ordinal(n, i, j),): Fraction(1)}, _trusted=True)

    @classmethod
    def from_word(cls, n: int, word, coeff=1) -> UEAElement:
        """coeff * E[w1] E[w2] ... for a list of (i, j) pairs, in the given order."""
        out = cls.scalar(n, coeff)
        for (i, j) in word:
            out = out * cls.gen(n, i, j)
        return out

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> UEAElement:
        if isinstance(other, UEAElement):
            if other.n != self.n:
                raise RankMismatchError(f"rank mismatch: gl_{self.n} vs gl_{other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return UEAElement.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return UEAElement(self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement(self.n, {m: -c for m, c in self.terms.items()}, _trusted=True)

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

    def scale(self, c) -> UEAElement:
        c = _frac(c)
        if not c:
            return UEAElement.zero(self.n)
        return UEAElement(self.n, {m: v * c for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = UEAElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UEAElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == UEAElement.scalar(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # queries ---------------------------------------------------------------
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def is_scalar(self) -> bool:
        return all(not m for m in self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-len(t[0]), t[0]))

    def monomial_pairs(self, mono: tuple):
        """Render a monomial as [(i, j, exp), ...] in PBW order."""
        order = generator_order(self.n)
        out = []
        for g in mono:
            i, j = order[g]
            if out and out[-1][0] == i and out[-1][1] == j:
                out[-1][2] += 1
            else:
                out.append([i, j, 1])
        return out

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"UEAElement(n={self.n}, {format_element(self)!r})"


def multiply(x: UEAElement, y: UEAElement) -> UEAElement:
    """Normal-ordered product x*y in U(gl_n)."""
    if x.n != y.n:
        raise RankMismatchError(f"rank mismatch: gl_{x.n} vs gl_{y.n}")
    n = x.n
    if not x.terms or not y.terms:
        return UEAElement.zero(n)
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c = c1 * c2
            if not m2:
                out[m1] = out.get(m1, 0) + c
                continue
            if not m1 or m1[-1] <= m2[0]:
                m = m1 + m2
                out[m] = out.get(m, 0) + c
                continue
            for m, k in _mono_times_mono(n, m1, m2).items():
                out[m] = out.get(m, 0) + c * k
        _check_bound(len(out))
    return UEAElement(n, {m: c for m, c in out.items() if c}, _trusted=True)


def commutator_generators(n: int, a: tuple, b: tuple) -> UEAElement:
    """[E_ij, E_kl] = d_jk E_il - d_li E_kj for a = (i, j), b = (k, l)."""
    (i, j), (k, l) = a, b
    for idx in (i, j, k, l):
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} out of range for gl_{n}")
    out = UEAElement.zero(n)
    if j == k:
        out = out + UEAElement.gen(n, i, l)
    if l == i:
        out = out - UEAElement.gen(n, k, j)
    return out


def commutator(x: UEAElement, y: UEAElement) -> UEAElement:
    return x * y - y * x


def is_central(x: UEAElement) -> bool:
    """True iff x commutes with every generator E_ij."""
    n = x.n
    for (i, j) in generator_order(n):
        if commutator(x, UEAElement.gen(n, i, j)):
            return False
    return True


def hc_eigenvalue(x: UEAElement) -> WeightPolynomial:
    """Coefficient of the highest-weight vector in x.v as a polynomial in mu.

    With raising generators rightmost, any monomial containing an
    off-diagonal generator contributes nothing to that coefficient.
    """
    n = x.n
    order = generator_order(n)
    terms: dict = {}
    for mono, c in x.terms.items():
        exps = [0] * n
        for g in mono:
            i, j = order[g]
            if i != j:
                break
            exps[i - 1] += 1
        else:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
    return WeightPolynomial(n, terms)


def hc_image(x: UEAElement, check: bool = True) -> WeightPolynomial:
    """Harish-Chandra image (no rho-shift) of a central element."""
    if check and not is_central(x):
        raise NotCentralError("hc_image requires a central element; use hc_eigenvalue for the functional")
    return hc_eigenvalue(x)


# distinguished elements ------------------------------------------------------

def delta1(n: int) -> UEAElement:
    """E_11 + ... + E_nn."""
    out = UEAElement.zero(n)
    for i in range(1, n + 1):
        out = out + UEAElement.gen(n, i, i)
    return out


def delta2() -> UEAElement:
    """(E_11 - 1) E_22 - E_12 E_21 in U(gl_2)."""
    E = lambda i, j: UEAElement.gen(2, i, j)  # noqa: E731
    return (E(1, 1) - 1) * E(2, 2) - E(1, 2) * E(2, 1)


def casimir_t(n: int) -> UEAElement:
    """t = sum_ij E_ij E_ji."""
    out = UEAElement.zero(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out = out + UEAElement.gen(n, i, j) * UEAElement.gen(n, j, i)
    return out


# ---------------------------------------------------------------------------
# text and JSON forms

class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def format_element(x: UEAElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for mono, c in x.sorted_terms():
        gens = "".join(
            f"E[{i},{j}]" + (f"^{e}" if e > 1 else "") for i, j, e in x.monomial_pairs(mono)
        )
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not gens:
            body = str(a)
        elif a == 1:
            body = gens
        else:
            body = f"{a}*{gens}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class _Parser:
    def __init__(self, text: str, n: int):
        self.s = text
        self.i = 0
        self.n = n

    def skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            raise ParseError("expected integer", start)
        return int(self.s[start:self.i])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.i += 1
            pos = self.i
            den = self.integer()
            if den == 0:
                raise ParseError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def gen(self) -> UEAElement:
        start = self.i
        self.expect("E")
        self.expect("[")
        i = self.integer()
        self.expect(",")
        j = self.integer()
        self.expect("]")
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ParseError(f"generator E[{i},{j}] out of range for gl_{self.n}", start)
        g = UEAElement.gen(self.n, i, j)
        if self.peek() == "^":
            self.i += 1
            pos = self.i
            e = self.integer()
            if e < 1:
                raise ParseError("exponent must be positive", pos)
            g = g ** e
        return g

    def monomial(self) -> UEAElement:
        out = self.gen()
        while self.peek() == "E":
            out = out * self.gen()
        return out

    def term(self) -> UEAElement:
        ch = self.peek()
        if ch.isdigit():
            c = self.rational()
            if self.peek() == "*":
                self.i += 1
                return self.monomial().scale(c)
            return UEAElement.scalar(self.n, c)
        if ch == "E":
            return self.monomial()
        raise ParseError("expected term", self.i)

    def element(self) -> UEAElement:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        out = self.term().scale(sign)
        while True:
            ch = self.peek()
            if ch == "":
                return out
            if ch not in "+-":
                raise ParseError(f"unexpected {ch!r}", self.i)
            self.i += 1
            t = self.term()
            out = out + t if ch == "+" else out - t


def parse_element(text: str, n: int) -> UEAElement:
    """Parse the element grammar, e.g. ``"3/2*E[1,1]^2 - E[1,2]E[2,1] + 1"``."""
    if n < 1:
        raise ValueError("rank must be positive")
    return _Parser(text, n).element()


def element_to_json(x: UEAElement) -> dict:
    return {
        "n": x.n,
        "terms": [
            {"coeff": str(c), "monomial": x.monomial_pairs(m)} for m, c in x.sorted_terms()
        ],
    }


def element_from_json(data: dict) -> UEAElement:
    n = int(data["n"])
    out = UEAElement.zero(n)
    for t in data["terms"]:
        word = []
        for i, j, e in t["monomial"]:
            word.extend([(int(i), int(j))] * int(e))
        out = out + UEAElement.from_word(n, word, Fraction(t["coeff"]))
    return out
