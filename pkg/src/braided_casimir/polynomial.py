"""Sparse multivariate polynomials with exact rational coefficients.

Used for Harish-Chandra images (polynomials in mu_1..mu_n) and for
u-polynomials whose coefficients are such polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Polynomial in ``nvars`` commuting variables.

    ``terms`` maps exponent tuples to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"exponent vector {mono} has wrong length for {nvars} variables")
                c = _frac(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> Polynomial:
        """The k-th variable (0-based)."""
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, nvars: int, coeffs, const=0) -> Polynomial:
        """sum coeffs[k]*x_k + const."""
        p = cls.constant(nvars, const)
        for k, c in enumerate(coeffs):
            if c:
                p = p + cls.variable(nvars, k) * c
        return p

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable counts")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _frac(other)
            return Polynomial(self.nvars, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == Polynomial.constant(self.nvars, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def evaluate(self, point) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        pt = [_frac(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, images) -> Polynomial:
        """Replace variable k by the polynomial images[k] (all over a common ring)."""
        target = images[0].nvars
        out = Polynomial(target)
        for m, c in self.terms.items():
            v = Polynomial.constant(target, c)
            for img, e in zip(images, m):
                if e:
                    v = v * img ** e
            out = out + v
        return out

    def coefficient_in(self, k: int) -> dict:
        """Split by powers of variable k: {power: polynomial in the same nvars with x_k removed-by-zeroing}."""
        out: dict = {}
        for m, c in self.terms.items():
            e = m[k]
            rest = m[:k] + (0,) + m[k + 1:]
            out.setdefault(e, {})[rest] = c
        return {e: Polynomial(self.nvars, t) for e, t in out.items()}

    def drop_variable(self, k: int) -> Polynomial:
        """Remove variable k (which must not occur)."""
        out = {}
        for m, c in self.terms.items():
            if m[k]:
                raise ValueError(f"variable {k} occurs")
            out[m[:k] + m[k + 1:]] = c
        return Polynomial(self.nvars - 1, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def to_str(self, names=None) -> str:
        names = names or [f"x{k + 1}" for k in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.to_str()})"

    def to_json(self) -> dict:
        return {",".join(map(str, m)): str(c) for m, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, nvars: int, data: dict) -> Polynomial:
        terms = {}
        for key, val in data.items():
            mono = tuple(int(x) for x in key.split(",")) if key else ()
            terms[mono] = Fraction(val)
        return cls(nvars, terms)


def monomials_up_to(nvars: int, degree: int):
    """All exponent vectors of total degree <= degree, in graded-lex order."""
    out = []
    for d in range(degree + 1):
        for m in _cartesian(range(d + 1), repeat=nvars):
            if sum(m) == d:
                out.append(m)
    return out


class WeightPolynomial(Polynomial):
    """Polynomial in mu_1..mu_n (the codomain of the Harish-Chandra map)."""

    __slots__ = ()

    def __init__(self, nvars: int, terms=None):
        super().__init__(nvars, terms)

    @classmethod
    def wrap(cls, p: Polynomial) -> WeightPolynomial:
        return cls(p.nvars, p.terms)

    @classmethod
    def mu(cls, n: int, i: int) -> WeightPolynomial:
        """mu_i, 1-based."""
        return cls.wrap(Polynomial.variable(n, i - 1))

    def _wrap_result(self, p):
        return WeightPolynomial.wrap(p) if isinstance(p, Polynomial) else p

    def __add__(self, other):
        return self._wrap_result(super().__add__(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap_result(super().__sub__(other))

    def __rsub__(self, other):
        return self._wrap_result(super().__rsub__(other))

    def __neg__(self):
        return self._wrap_result(super().__neg__())

    def __mul__(self, other):
        return self._wrap_result(super().__mul__(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        return self._wrap_result(super().__pow__(k))

    __hash__ = Polynomial.__hash__

    def __str__(self):
        return self.to_str([f"mu{k + 1}" for k in range(self.nvars)])
