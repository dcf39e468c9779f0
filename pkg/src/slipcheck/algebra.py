"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are plain tuples of non-negative exponents.  A :class:`Polynomial`
stores a mapping from monomial to a nonzero :class:`fractions.Fraction` and
carries the :class:`PolyRing` it lives in.  Values are immutable once built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


class RingMismatchError(ValueError):
    """Raised when operands live in different polynomial rings."""


class ParseError(ValueError):
    """Raised on malformed polynomial text."""


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Monomial, ...]:
    """All exponent vectors of total degree ``d``, in descending lex order."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def graded_piece_dim(ring: "PolyRing | int", d: int) -> int:
    """Dimension of the degree-``d`` piece of a standard graded polynomial ring."""
    nvars = ring if isinstance(ring, int) else ring.nvars
    if d < 0:
        return 0
    return comb(nvars - 1 + d, nvars - 1)


def _to_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@dataclass(frozen=True)
class PolyRing:
    """Standard Z-graded polynomial ring over the rationals."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def standard(cls, nvars: int, prefix: str = "a") -> "PolyRing":
        return cls(tuple(f"{prefix}{i}" for i in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"unknown variable {name!r} for ring {self.names}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or min(exps) < 0:
            raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
        return Polynomial(self, {exps: coeff})

    def gen(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        return monomials_of_degree(self.nvars, d)

    def __call__(self, text: "str | Polynomial | Scalar") -> "Polynomial":
        if isinstance(text, Polynomial):
            if text.ring != self:
                raise RingMismatchError(f"{text.ring.names} vs {self.names}")
            return text
        if isinstance(text, (int, Fraction)):
            return self.constant(text)
        return parse_polynomial(text, self)

    def __str__(self) -> str:
        return "QQ[" + ",".join(self.names) + "]"


class Polynomial:
    """Immutable sparse polynomial."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Scalar]):
        self.ring = ring
        clean = {}
        n = ring.nvars
        for m, c in terms.items():
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {ring}")
            c = _to_fraction(c)
            if c:
                clean[m] = c
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, reverse=True)

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

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

    def scale(self, c: Scalar) -> "Polynomial":
        c = _to_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: Scalar = 1) -> "Polynomial":
        c = _to_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {mono_mul(m, mono): c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / _to_fraction(c))
        return NotImplemented

    def diff(self, i: int, times: int = 1) -> "Polynomial":
        """Partial derivative with respect to variable ``i``."""
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e < times:
                continue
            f = 1
            for k in range(times):
                f *= e - k
            mm = list(m)
            mm[i] -= times
            out[tuple(mm)] = c * f
        return Polynomial._raw(self.ring, out)

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.terms == ({} if other == 0 else {(0,) * self.ring.nvars: Fraction(other)})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def apply_linear_substitution(
    f: Polynomial,
    matrix: Sequence[Sequence[Scalar]],
    target: PolyRing | None = None,
    check_invertible: bool = False,
) -> Polynomial:
    """Replace variable ``i`` of ``f`` by ``sum_j matrix[i][j] * y_j``.

    ``target`` is the ring of the ``y_j``; it defaults to ``f.ring``.
    """
    ring = target or f.ring
    n = f.ring.nvars
    if len(matrix) != n or any(len(row) != ring.nvars for row in matrix):
        raise ValueError(f"substitution must be {n}x{ring.nvars}")
    if check_invertible:
        from .linalg import rank

        if n != ring.nvars or rank([[_to_fraction(c) for c in row] for row in matrix]) != n:
            raise ValueError("substitution matrix is not invertible")
    images = [
        Polynomial(ring, {tuple(int(k == j) for k in range(ring.nvars)): c for j, c in enumerate(row)})
        for row in matrix
    ]
    result = ring.zero()
    powers: dict[tuple[int, int], Polynomial] = {}
    for m, c in f.terms.items():
        term = ring.constant(c)
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = images[i] ** e
                term = term * powers[key]
        result = result + term
    return result


# -- text format -----------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_mono(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in descending lex order of the ring's variables."""
    if not f.terms:
        return "0"
    pieces = []
    for i, m in enumerate(sorted(f.terms, reverse=True)):
        c = f.terms[m]
        mono = _format_mono(m, f.ring.names)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            pieces.append(("-" if sign == "-" else "") + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_TERM_SPLIT = re.compile(r"([+-])")
_FACTOR_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?|([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?)$")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the ``3/2*a0^2*a1 - a2^3`` grammar (``**`` is accepted for ``^``)."""
    s = text.replace("**", "^").replace(" ", "").replace("\t", "").replace("\n", "")
    if not s:
        raise ParseError("empty polynomial text")
    tokens = _TERM_SPLIT.split(s)
    terms: dict[Monomial, Fraction] = {}
    sign = 1
    expect_term = True
    for tok in tokens:
        if tok in ("+", "-"):
            if not expect_term and tok:
                sign = 1 if tok == "+" else -1
                expect_term = True
                continue
            # unary sign
            sign *= 1 if tok == "+" else -1
            continue
        if tok == "":
            continue
        if not expect_term:
            raise ParseError(f"unexpected token {tok!r} in {text!r}")
        coeff = Fraction(sign)
        exps = [0] * ring.nvars
        for factor in tok.split("*"):
            mt = _FACTOR_RE.match(factor)
            if not mt:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            num, den, var, exp = mt.groups()
            if num is not None:
                if den is not None and int(den) == 0:
                    raise ParseError(f"zero denominator in {text!r}")
                coeff *= Fraction(int(num), int(den) if den else 1)
            else:
                exps[ring.index(var)] += int(exp) if exp else 1
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError(f"dangling sign in {text!r}")
    return Polynomial(ring, terms)


def polys(ring: PolyRing, texts: Iterable[str]) -> list[Polynomial]:
    return [parse_polynomial(t, ring) for t in texts]


def iter_terms_desc(f: Polynomial) -> Iterator[tuple[Monomial, Fraction]]:
    for m in sorted(f.terms, reverse=True):
        yield m, f.terms[m]
