"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` is an immutable map from monomials to
:class:`fractions.Fraction` coefficients. Variables are identified by name,
so polynomials over different variable sets can be combined freely::

    >>> x, y = MultiPoly.var("x"), MultiPoly.var("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'

Text form lists variables in lexicographic order and monomials in graded
lexicographic order, highest first. JSON form is
``{"vars": [...], "terms": [{"exp": [...], "coef": "a/b"}, ...]}`` with the
terms in the same order.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
# a monomial is a sorted tuple of (variable, exponent) pairs, exponents > 0
Monomial = tuple

_ONE: Monomial = ()


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    __slots__ = ("_terms", "_vars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None,
                 variables: Iterable[str] = ()):
        clean = {}
        names = set(variables)
        for mono, coef in (terms or {}).items():
            coef = as_fraction(coef)
            if coef == 0:
                continue
            mono = tuple(sorted((v, e) for v, e in mono if e))
            if any(e < 0 for _, e in mono):
                raise ValueError("negative exponent")
            clean[mono] = clean.get(mono, 0) + coef
            if clean[mono] == 0:
                del clean[mono]
        for mono in clean:
            names.update(v for v, _ in mono)
        self._terms = clean
        self._vars = tuple(sorted(names))
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "MultiPoly":
        return cls({_ONE: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, coef: Scalar, **exps: int) -> "MultiPoly":
        return cls({tuple(sorted(exps.items())): coef})

    @classmethod
    def _coerce(cls, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return cls.const(as_fraction(other))

    # inspection ---------------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(_ONE, Fraction(0))

    def degree(self, var: str | None = None) -> int:
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def coefficient(self, **exps: int) -> Fraction:
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return self._terms.get(mono, Fraction(0))

    def coefficients(self, var: str) -> list:
        """Dense coefficient list (lowest degree first) of a univariate poly."""
        others = set(self._vars) - {var}
        if others:
            raise ValueError(f"not univariate in {var}: also has {sorted(others)}")
        out = [Fraction(0)] * (self.degree(var) + 1)
        for m, c in self._terms.items():
            out[dict(m).get(var, 0)] = c
        return out

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultiPoly(terms, self._vars + other._vars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MultiPoly(terms, self._vars + other._vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only."""
        c = as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return MultiPoly({m: v / c for m, v in self._terms.items()}, self._vars)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution and evaluation ---------------------------------------

    def substitute(self, var: str, replacement) -> "MultiPoly":
        return substitute(self, var, replacement)

    def subs(self, **values) -> "MultiPoly":
        """Substitute several variables at once (simultaneously)."""
        out = self
        # rename first so that simultaneous substitution cannot capture
        tmp = {v: f"__subs_{i}" for i, v in enumerate(values)}
        for v, t in tmp.items():
            out = out.substitute(v, MultiPoly.var(t))
        for v, t in tmp.items():
            out = out.substitute(t, values[v])
        return out

    def rename(self, old: str, new: str) -> "MultiPoly":
        return self.substitute(old, MultiPoly.var(new))

    def evaluate(self, bindings: Mapping[str, Scalar]) -> Fraction:
        return evaluate(self, bindings)

    def __call__(self, **bindings) -> Fraction:
        return evaluate(self, bindings)

    # serialisation ------------------------------------------------------

    def exponent_vector(self, mono: Monomial) -> tuple:
        d = dict(mono)
        return tuple(d.get(v, 0) for v in self._vars)

    def sorted_terms(self, ascending: bool = False) -> list:
        """Terms in graded lexicographic order (highest first by default)."""
        def key(item):
            vec = self.exponent_vector(item[0])
            return (sum(vec), vec)
        return sorted(self._terms.items(), key=key, reverse=not ascending)

    def to_text(self, ascending: bool = False) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, coef) in enumerate(self.sorted_terms(ascending)):
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            mag = abs(coef)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                parts.append(body if coef > 0 else "-" + body)
            else:
                parts.append((" + " if coef > 0 else " - ") + body)
        return "".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(self._vars),
            "terms": [
                {"exp": list(self.exponent_vector(m)), "coef": str(c)}
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        names = data["vars"]
        terms = {}
        for t in data["terms"]:
            if len(t["exp"]) != len(names):
                raise ValueError("exponent vector length does not match vars")
            mono = tuple((v, e) for v, e in zip(names, t["exp"]) if e)
            terms[mono] = terms.get(mono, 0) + Fraction(t["coef"])
        return cls(terms, names)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        return parse(text)


def substitute(a: MultiPoly, var: str, replacement) -> MultiPoly:
    """Replace every occurrence of ``var`` in ``a`` by ``replacement``."""
    replacement = MultiPoly._coerce(replacement)
    if var not in a.variables:
        return a
    powers = {0: MultiPoly.const(1)}
    result = MultiPoly()
    for mono, coef in a._terms.items():
        d = dict(mono)
        k = d.pop(var, 0)
        if k not in powers:
            powers[k] = replacement ** k
        rest = MultiPoly({tuple(sorted(d.items())): coef})
        result = result + rest * powers[k]
    keep = [v for v in a.variables if v != var]
    return MultiPoly(result._terms, keep + list(replacement.variables))


def evaluate(a: MultiPoly, bindings: Mapping[str, Scalar]) -> Fraction:
    values = {v: as_fraction(x) for v, x in bindings.items()}
    total = Fraction(0)
    for mono, coef in a._terms.items():
        term = coef
        for v, e in mono:
            if v not in values:
                raise KeyError(f"unbound variable {v!r}")
            term *= values[v] ** e
        total += term
    return total


def interpolate(points, var: str) -> MultiPoly:
    """Lagrange interpolation through ``(x, y)`` pairs, exactly.

    Returns the unique polynomial of degree below ``len(points)``.
    """
    xs = [as_fraction(x) for x, _ in points]
    ys = [as_fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae in interpolation points")
    # Newton divided differences
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    t = MultiPoly.var(var)
    result = MultiPoly.const(coef[-1]) if n else MultiPoly()
    for i in range(n - 2, -1, -1):
        result = result * (t - xs[i]) + coef[i]
    return MultiPoly(result._terms, [var])


def falling_factorial(x, k: int):
    """``x (x-1) ... (x-k+1)``; works on ints, Fractions and MultiPolys."""
    out = 1
    for i in range(k):
        out = out * (x - i)
    return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")


def parse(text: str) -> MultiPoly:
    """Parse the canonical text form (sums of ``c*x^a*y^b`` products)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        tokens.append(next((i, g) for i, g in enumerate(m.groups()) if g is not None))
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial text")
    result = MultiPoly()
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        kind, tok = tokens[i]
        if kind == 4:  # sign
            if i + 1 == len(tokens) or tokens[i + 1][0] == 4:
                raise ValueError("a sign must be followed by a term")
            sign = -1 if tok == "-" else 1
            i += 1
            continue
        if not expect_term:
            raise ValueError(f"unexpected token {tok!r}")
        coef = Fraction(sign)
        exps: dict = {}
        while True:
            kind, tok = tokens[i]
            if kind == 0:
                coef *= Fraction(tok)
                i += 1
            elif kind == 1:
                i += 1
                e = 1
                if i < len(tokens) and tokens[i][0] == 2:
                    if i + 1 >= len(tokens) or tokens[i + 1][0] != 0:
                        raise ValueError("exponent must be an integer")
                    e = int(tokens[i + 1][1])
                    i += 2
                exps[tok] = exps.get(tok, 0) + e
            else:
                raise ValueError(f"unexpected token {tok!r}")
            if i < len(tokens) and tokens[i][0] == 3:
                i += 1
                continue
            break
        result = result + MultiPoly({tuple(sorted(exps.items())): coef})
        sign = 1
        expect_term = i >= len(tokens) or tokens[i][0] == 4
    return result


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


ONE = MultiPoly.const(1)
ZERO = MultiPoly()
