"""Homogeneous ideals, ideal arithmetic and Hilbert functions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence

from .algebra import (
    Monomial,
    PolyRing,
    Polynomial,
    RingMismatchError,
    graded_piece_dim,
    mono_divides,
    monomials_of_degree,
    parse_polynomial,
)
from .groebner import (
    GroebnerBasis,
    NonHomogeneousError,
    buchberger,
    exact_divide,
    groebner_terms,
    normal_form,
)
from .orders import MonomialOrder


class NotZeroDimensionalError(ValueError):
    """The quotient does not define a zero-dimensional projective scheme."""


class Ideal:
    """A homogeneous ideal given by generators, with cached Groebner bases.

    The zero ideal has no generators.  Equality is equality of ideals.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial | str] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, ring)
            if g.ring != ring:
                raise RingMismatchError(f"{g.ring} vs {ring}")
            if not g:
                continue
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {g} is not homogeneous")
            gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def parse(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [parse_polynomial(t, ring) for t in texts])

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def irrelevant(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens())

    @property
    def default_order(self) -> MonomialOrder:
        return MonomialOrder.grevlex(self.ring.nvars)

    def groebner(self, order: MonomialOrder | None = None, degree_bound: int | None = None) -> GroebnerBasis:
        """Reduced Groebner basis, cached per order.

        With ``degree_bound`` a truncated basis (valid up to that degree) may
        be returned; a cached complete or deeper basis is reused.
        """
        order = order or self.default_order
        cached = self._gb.get(order)
        if cached is not None and (cached.degree_bound is None or (degree_bound is not None and cached.degree_bound >= degree_bound)):
            return cached
        if self.is_monomial():
            gb = buchberger(self.minimal_monomial_generators(), order)
        else:
            gb = buchberger(list(self.generators), order, degree_bound=degree_bound)
        self._gb[order] = gb
        return gb

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators) or any(
            g.is_constant() for g in self.groebner()
        )

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def minimal_monomial_generators(self) -> list[Polynomial]:
        if not self.is_monomial():
            raise ValueError("ideal is not monomial")
        monos = sorted({next(iter(g.terms)) for g in self.generators}, key=lambda m: (sum(m), tuple(-e for e in m)))
        keep: list[Monomial] = []
        for m in monos:
            if not any(mono_divides(k, m) for k in keep):
                keep.append(m)
        return [self.ring.monomial(m) for m in keep]

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=-1)

    def contains(self, f: Polynomial | str) -> bool:
        from .groebner import ideal_member

        if isinstance(f, str):
            f = parse_polynomial(f, self.ring)
        if not f:
            return True
        # inhomogeneous f: test each graded piece
        for d in sorted({sum(m) for m in f.terms}):
            if not ideal_member(f.homogeneous_component(d), self):
                return False
        return True

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        order = self.default_order
        return self.groebner(order).elements == other.groebner(order).elements

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, k: int) -> "Ideal":
        return ideal_power(self, k)

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def __repr__(self) -> str:
        return f"Ideal({', '.join(map(str, self.generators))})"

    def to_json(self) -> dict:
        return {"ring": {"variables": list(self.ring.names)}, "generators": [str(g) for g in self.generators]}

    @classmethod
    def from_json(cls, doc: dict | str) -> "Ideal":
        if isinstance(doc, str):
            doc = json.loads(doc)
        ring = PolyRing(tuple(doc["ring"]["variables"]))
        return cls.parse(ring, doc["generators"])


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


# -- arithmetic ------------------------------------------------------------


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    seen = set()
    out = []
    for f in I.generators:
        for g in J.generators:
            p = f * g
            if p and p not in seen:
                seen.add(p)
                out.append(p)
    return Ideal(I.ring, out)


def ideal_power(I: Ideal, k: int) -> Ideal:
    """``I^k`` by naive generator products (monomial inputs are minimalized)."""
    if k < 1:
        raise ValueError("power must be at least 1")
    result = I
    for _ in range(k - 1):
        result = ideal_product(result, I)
        if result.is_monomial():
            result = Ideal(I.ring, result.minimal_monomial_generators())
    return result


def _block_key(inner):
    # elimination order: t-degree first, then the ring order on the rest
    return lambda m: (m[-1],) + inner(m[:-1])


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """Intersection via ``t*I + (1-t)*J`` and elimination of ``t``."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_monomial() and J.is_monomial():
        return _monomial_intersection(I, J)
    n = ring.nvars
    inner = MonomialOrder.grevlex(n).key
    key = _block_key(inner)
    raw = []
    for f in I.generators:
        raw.append({m + (1,): c for m, c in f.terms.items()})
    for g in J.generators:
        t = {m + (0,): c for m, c in g.terms.items()}
        for m, c in g.terms.items():
            t[m + (1,)] = -c
        raw.append(t)
    gb = groebner_terms(raw, key, degree_of=lambda m: sum(m[:-1]))
    gens = [Polynomial._raw(ring, {m[:-1]: c for m, c in terms.items()}) for lm, terms in gb if lm[-1] == 0]
    return Ideal(ring, gens)


def _monomial_intersection(I: Ideal, J: Ideal) -> Ideal:
    from .algebra import mono_lcm

    a = [next(iter(g.terms)) for g in I.minimal_monomial_generators()]
    b = [next(iter(g.terms)) for g in J.minimal_monomial_generators()]
    return Ideal(I.ring, Ideal(I.ring, [I.ring.monomial(mono_lcm(x, y)) for x in a for y in b]).minimal_monomial_generators())


def _colon_variable(I: Ideal, i: int, saturate: bool = False) -> Ideal:
    """``(I : a_i)`` or ``(I : a_i^inf)`` from a grevlex basis with ``a_i`` last."""
    ring = I.ring
    n = ring.nvars
    if I.is_zero():
        return Ideal(ring)
    if I.is_monomial():
        out = []
        for g in I.minimal_monomial_generators():
            m = list(next(iter(g.terms)))
            m[i] = 0 if saturate else max(m[i] - 1, 0)
            out.append(ring.monomial(m))
        return Ideal(ring, Ideal(ring, out).minimal_monomial_generators())
    perm = [j for j in range(n) if j != i] + [i]
    order = MonomialOrder.grevlex(n, perm)
    gb = I.groebner(order)
    out = []
    for g in gb.elements:
        k = min(m[i] for m in g.terms)
        if not saturate:
            k = min(k, 1)
        if k:
            out.append(Polynomial._raw(ring, {tuple(e - k if j == i else e for j, e in enumerate(m)): c for m, c in g.terms.items()}))
        else:
            out.append(g)
    return Ideal(ring, out)


def ideal_colon(I: Ideal, f: "Polynomial | Ideal") -> Ideal:
    """``(I : f)`` for a homogeneous polynomial or an ideal."""
    ring = I.ring
    if isinstance(f, Ideal):
        _same_ring(I, f)
        if f.is_zero():
            return Ideal.unit(ring)
        result = None
        for g in f.generators:
            c = ideal_colon(I, g)
            result = c if result is None else ideal_intersection(result, c)
        return result
    if f.ring != ring:
        raise RingMismatchError(f"{f.ring} vs {ring}")
    if not f:
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise NonHomogeneousError(f"{f} is not homogeneous")
    if f.is_constant():
        return I
    if f.is_monomial():
        (m, _), = f.terms.items()
        result = I
        for i, e in enumerate(m):
            for _ in range(e):
                result = _colon_variable(result, i)
        return result
    inter = ideal_intersection(I, Ideal(ring, [f]))
    order = I.default_order
    return Ideal(ring, [exact_divide(g, f, order) for g in inter.generators])


def saturate_irrelevant(I: Ideal) -> Ideal:
    """Saturation with respect to the irrelevant ideal.

    Computed as the intersection of the per-variable saturations
    ``(I : a_i^inf)``, which equals ``(I : m^inf)``.
    """
    ring = I.ring
    if I.is_zero():
        return I
    result = None
    for i in range(ring.nvars):
        si = _colon_variable(I, i, saturate=True)
        if si.is_unit():
            continue
        result = si if result is None else ideal_intersection(result, si)
    if result is None:
        return Ideal.unit(ring)
    return Ideal(ring, result.groebner().elements)


def colon_irrelevant(I: Ideal) -> Ideal:
    """``(I : m)`` as the intersection of ``(I : a_i)``."""
    result = None
    for i in range(I.ring.nvars):
        c = _colon_variable(I, i)
        result = c if result is None else ideal_intersection(result, c)
    return result


def is_saturated(I: Ideal) -> bool:
    if I.is_zero():
        return True
    if I.is_unit():
        return True
    return colon_irrelevant(I) == I


def monomial_radical(I: Ideal) -> Ideal:
    if not I.is_monomial():
        raise ValueError("radical is only implemented for monomial ideals")
    ring = I.ring
    gens = [ring.monomial(tuple(min(1, e) for e in next(iter(g.terms)))) for g in I.generators]
    return Ideal(ring, Ideal(ring, gens).minimal_monomial_generators())


def point_prime(ring: PolyRing, point: Sequence) -> Ideal:
    """Linear forms vanishing at a projective point."""
    from .linalg import nullspace

    pt = [Fraction(c) for c in point]
    if len(pt) != ring.nvars or not any(pt):
        raise ValueError(f"bad projective point {point}")
    basis = nullspace([pt], ring.nvars)
    forms = [Polynomial(ring, {tuple(int(k == j) for k in range(ring.nvars)): v[j] for j in range(ring.nvars)}) for v in basis]
    return Ideal(ring, forms)


def _normalize_point(point: Sequence) -> tuple[Fraction, ...]:
    pt = [Fraction(c) for c in point]
    lead = next(c for c in pt if c)
    return tuple(c / lead for c in pt)


def points_ideal(ring: PolyRing, points: Sequence[Sequence]) -> Ideal:
    """Vanishing ideal of distinct projective points (intersection of their primes)."""
    if not points:
        return Ideal.unit(ring)
    normed = [_normalize_point(p) for p in points]
    if len(set(normed)) != len(normed):
        raise ValueError("duplicate points")
    result = None
    for p in points:
        P = point_prime(ring, p)
        result = P if result is None else ideal_intersection(result, P)
    return Ideal(ring, result.groebner().elements)


# -- Hilbert functions -----------------------------------------------------


def _standard_count(lms: Sequence[Monomial], nvars: int, d: int) -> int:
    if d < 0:
        return 0
    return sum(1 for m in monomials_of_degree(nvars, d) if not any(mono_divides(g, m) for g in lms))


def standard_monomials(I: Ideal, d: int, order: MonomialOrder | None = None) -> list[Monomial]:
    gb = I.groebner(order, degree_bound=d)
    lms = gb.leading_monomials()
    return [m for m in monomials_of_degree(I.ring.nvars, d) if not any(mono_divides(g, m) for g in lms)]


def hilbert_function(I: Ideal, d: int) -> int:
    """``dim (S/I)_d`` by counting standard monomials of the initial ideal."""
    if d < 0:
        return 0
    if I.is_zero():
        return graded_piece_dim(I.ring, d)
    gb = I.groebner(degree_bound=d)
    return _standard_count(gb.leading_monomials(), I.ring.nvars, d)


@dataclass(frozen=True)
class HilbertTable:
    """Hilbert function values for degrees ``0..horizon``.

    When ``eventual_constant`` is set, every degree past the horizon has that
    value too.
    """

    values: tuple[int, ...]
    eventual_constant: int | None = None

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("Hilbert values must be non-negative")
        if self.eventual_constant is not None:
            if len(self.values) < 2 or self.values[-1] != self.eventual_constant or self.values[-2] != self.eventual_constant:
                raise ValueError("eventual constant must equal the last two stored values")

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __call__(self, a: int) -> int:
        if a < 0:
            return 0
        if a < len(self.values):
            return self.values[a]
        if self.eventual_constant is None:
            raise IndexError(f"degree {a} beyond horizon {self.horizon} with no known tail")
        return self.eventual_constant

    def extended(self, horizon: int) -> "HilbertTable":
        """Same function stored up to a larger horizon (needs a known tail)."""
        if horizon <= self.horizon:
            return self
        vals = tuple(self(a) for a in range(horizon + 1))
        return HilbertTable(vals, self.eventual_constant)

    def agrees_with(self, other: "HilbertTable") -> bool:
        if self.eventual_constant is None or other.eventual_constant is None:
            top = min(self.horizon, other.horizon)
        else:
            top = max(self.horizon, other.horizon)
        return all(self(a) == other(a) for a in range(top + 1))

    def differing_degrees(self, other: "HilbertTable") -> list[int]:
        top = max(self.horizon, other.horizon)
        return [a for a in range(top + 1) if self(a) != other(a)]

    def __str__(self) -> str:
        body = ",".join(map(str, self.values))
        return f"({body},...)" if self.eventual_constant is not None else f"({body})"


def krull_dimension_at_most_one(lms: Sequence[Monomial], nvars: int) -> bool:
    """Whether the monomial quotient has Krull dimension <= 1.

    True iff every pair of variables carries a generator supported on it.
    """
    for i in range(nvars):
        for j in range(i + 1, nvars):
            if not any(all(e == 0 for k, e in enumerate(m) if k not in (i, j)) for m in lms):
                return False
    if nvars == 1:
        return True
    return True


def _monomial_stabilization(lms: Sequence[Monomial], nvars: int) -> tuple[int, int]:
    """(constant value, least degree from which the Hilbert function is that value)."""
    B = max((max(m) for m in lms), default=0)
    hp = 0
    for i in range(nvars):
        others = [k for k in range(nvars) if k != i]
        for exps in iproduct(range(B + 1), repeat=len(others)):
            m = [0] * nvars
            m[i] = B + 1
            for k, e in zip(others, exps):
                m[k] = e
            m = tuple(m)
            if not any(mono_divides(g, m) for g in lms):
                hp += 1
    # past (n)*B + B + 1 every standard monomial has exactly one exponent > B
    bound = nvars * B + 1
    start = 0
    for d in range(bound, -1, -1):
        if _standard_count(lms, nvars, d) != hp:
            start = d + 1
            break
    return hp, start


def hilbert_stabilization(I: Ideal) -> tuple[int, int]:
    """Exact (Hilbert polynomial constant, degree from which the function equals it)."""
    if I.is_zero():
        if I.ring.nvars > 1:
            raise NotZeroDimensionalError("zero ideal has non-constant Hilbert polynomial")
        return 1, 0
    gb = I.groebner()
    lms = gb.leading_monomials()
    if not krull_dimension_at_most_one(lms, I.ring.nvars):
        raise NotZeroDimensionalError(f"S/I has Krull dimension > 1 for I = {I!r}")
    return _monomial_stabilization(lms, I.ring.nvars)


def constant_hilbert_value(I: Ideal) -> int:
    """The eventual constant of ``H_{S/I}`` (the constant Hilbert polynomial)."""
    return hilbert_stabilization(I)[0]


def hilbert_table(I: Ideal, D: int, stable_from: int | None = None) -> HilbertTable:
    """Hilbert function for degrees ``0..D`` with the tail flag when it is known.

    The tail is set when ``S/I`` has Krull dimension at most one and the
    function has reached its constant value by degree ``D - 1``.
    ``stable_from`` overrides the computed stabilization degree.
    """
    if D < 1:
        raise ValueError("horizon must be at least 1")
    values = tuple(hilbert_function(I, d) for d in range(D + 1))
    tail = None
    try:
        hp, start = hilbert_stabilization(I)
    except NotZeroDimensionalError:
        hp, start = None, None
    if stable_from is not None:
        hp, start = values[-1], stable_from
    if hp is not None and start <= D - 1 and values[-1] == hp and values[-2] == hp:
        tail = hp
    return HilbertTable(values, tail)


def hilbert_table_auto(I: Ideal, min_horizon: int = 1) -> HilbertTable:
    """Table stored just far enough to carry its constant tail."""
    hp, start = hilbert_stabilization(I)
    return hilbert_table(I, max(start + 1, min_horizon, 1))


def generic_hf(r: int, n: int) -> HilbertTable:
    """``h_{r,n}(a) = min(dim S_a, r)`` for ``n + 1`` variables."""
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    vals = []
    a = 0
    while True:
        vals.append(min(graded_piece_dim(n + 1, a), r))
        if len(vals) >= 2 and vals[-1] == r and vals[-2] == r:
            break
        a += 1
    return HilbertTable(tuple(vals), r)


def min_degree_e(h: HilbertTable, r: int) -> int:
    for a, v in enumerate(h.values):
        if v == r:
            return a
    if h.eventual_constant == r:
        return len(h.values)
    raise ValueError(f"value {r} not attained within horizon {h.horizon}")


def satisfies_condition_asterisk(I: Ideal) -> int | None:
    """Least positive ``d`` with ``S_d`` contained in ``I``, or None."""
    if I.is_zero():
        return None
    lms = I.groebner().leading_monomials()
    n = I.ring.nvars
    pure = {}
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 0:
            return 1
        if len(support) == 1:
            i = support[0]
            pure[i] = min(pure.get(i, m[i]), m[i])
    if len(pure) < n:
        return None
    bound = sum(pure.values()) - n + 1
    for d in range(1, bound + 1):
        if _standard_count(lms, n, d) == 0:
            return d
    return bound


def extended_ideal(I: Ideal, ring: PolyRing, index_map: Sequence[int]) -> Ideal:
    """Image of ``I`` under the inclusion sending variable ``k`` to ``index_map[k]``."""
    out = []
    for g in I.generators:
        terms = {}
        for m, c in g.terms.items():
            e = [0] * ring.nvars
            for k, v in enumerate(m):
                e[index_map[k]] += v
            terms[tuple(e)] = c
        out.append(Polynomial(ring, terms))
    return Ideal(ring, out)
