"""Multivariate division and Buchberger's algorithm.

The core routines work on raw ``{monomial: Fraction}`` dicts and an order key
so that the ideal toolkit can also run them in auxiliary rings (elimination
for intersections).  The public functions take and return :class:`Polynomial`.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import (
    Monomial,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)
from .orders import MonomialOrder

Terms = dict  # Monomial -> Fraction
Key = Callable[[Monomial], tuple]


class ComputationLimitExceeded(RuntimeError):
    """A configured size or degree cap was hit before the computation finished."""


class NonHomogeneousError(ValueError):
    """Raised when the homogeneous-only pipeline receives inhomogeneous input."""


@dataclass(frozen=True)
class Limits:
    max_basis: int = 4000
    max_degree: int = 120


_limits = Limits(
    max_basis=int(os.environ.get("SLIPCHECK_MAX_BASIS", Limits.max_basis)),
    max_degree=int(os.environ.get("SLIPCHECK_MAX_DEGREE", Limits.max_degree)),
)


def get_limits() -> Limits:
    return _limits


def set_limits(max_basis: int | None = None, max_degree: int | None = None) -> Limits:
    """Override the global caps; returns the previous setting."""
    global _limits
    old = _limits
    _limits = Limits(
        max_basis=old.max_basis if max_basis is None else max_basis,
        max_degree=old.max_degree if max_degree is None else max_degree,
    )
    return old


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True
    # None for a complete basis; otherwise only valid up to this degree
    degree_bound: int | None = None
    stats: dict = field(default_factory=dict, compare=False)

    def leading_monomials(self) -> list[Monomial]:
        key = self.order.key
        return [max(g.terms, key=key) for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def covers_degree(self, d: int) -> bool:
        return self.degree_bound is None or d <= self.degree_bound


# -- raw-dict kernels ------------------------------------------------------


def _lead(p: Terms, key: Key) -> Monomial:
    return max(p, key=key)


def _monic(p: Terms, lm: Monomial) -> Terms:
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def _sub_scaled_shift(p: Terms, g: Terms, c: Fraction, shift: Monomial) -> None:
    """In place: ``p -= c * x^shift * g``."""
    for m, v in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        nv = p.get(mm, 0) - c * v
        if nv:
            p[mm] = nv
        else:
            del p[mm]


def _reduce(p: Terms, basis: Sequence[tuple[Monomial, Terms]], key: Key, quotients: list | None = None) -> Terms:
    """Full normal form of ``p`` by ``basis`` (pairs of leading monomial, terms).

    The largest remaining term is treated first; the first basis element in
    list order whose leading monomial divides it is used.
    """
    p = dict(p)
    rem: Terms = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for idx, (glm, g) in enumerate(basis):
            if mono_divides(glm, lm):
                shift = mono_div(lm, glm)
                coef = c / g[glm]
                _sub_scaled_shift(p, g, coef, shift)
                if quotients is not None:
                    q = quotients[idx]
                    q[shift] = q.get(shift, 0) + coef
                break
        else:
            rem[lm] = c
            del p[lm]
    return rem


def _spoly(f: Terms, lf: Monomial, g: Terms, lg: Monomial) -> Terms:
    lcm = mono_lcm(lf, lg)
    out: Terms = {}
    sf = mono_div(lcm, lf)
    sg = mono_div(lcm, lg)
    cf = 1 / f[lf]
    cg = 1 / g[lg]
    for m, v in f.items():
        mm = tuple(a + b for a, b in zip(m, sf))
        out[mm] = out.get(mm, 0) + v * cf
    for m, v in g.items():
        mm = tuple(a + b for a, b in zip(m, sg))
        nv = out.get(mm, 0) - v * cg
        if nv:
            out[mm] = nv
        else:
            out.pop(mm, None)
    return {m: v for m, v in out.items() if v}


def _default_degree(m: Monomial) -> int:
    return sum(m)


def _interreduce(basis: list[tuple[Monomial, Terms]], key: Key) -> list[tuple[Monomial, Terms]]:
    # drop elements whose leading monomial is divisible by another one
    kept: list[tuple[Monomial, Terms]] = []
    for i, (lm, g) in enumerate(basis):
        redundant = False
        for j, (lm2, _) in enumerate(basis):
            if j == i:
                continue
            if mono_divides(lm2, lm) and (lm2 != lm or j < i):
                redundant = True
                break
        if not redundant:
            kept.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(kept):
        others = [kept[j] for j in range(len(kept)) if j != i]
        tail = dict(g)
        c = tail.pop(lm)
        red = _reduce(tail, others, key) if tail else {}
        red[lm] = c
        out.append((lm, _monic(red, lm)))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return out


def groebner_terms(
    polys: Iterable[Terms],
    key: Key,
    degree_of: Callable[[Monomial], int] = _default_degree,
    degree_bound: int | None = None,
    limits: Limits | None = None,
) -> list[tuple[Monomial, Terms]]:
    """Reduced Groebner basis of raw polynomials (homogeneous w.r.t. ``degree_of``).

    Pairs are processed by ascending lcm degree, ties by position.  Pairs
    with coprime leading monomials are skipped, as are pairs covered by
    Buchberger's chain criterion.  With ``degree_bound`` only pairs of lcm
    degree at most the bound are treated, giving a basis valid up to it.
    """
    limits = limits or get_limits()
    G: list[tuple[Monomial, Terms]] = []
    for p in polys:
        p = {m: Fraction(v) for m, v in p.items() if v}
        if not p:
            continue
        lm = _lead(p, key)
        if degree_bound is not None and degree_of(lm) > degree_bound:
            continue
        G.append((lm, _monic(p, lm)))
    G.sort(key=lambda t: degree_of(t[0]))
    # reduce the inputs against each other up front; keeps the basis small
    basis: list[tuple[Monomial, Terms]] = []
    heap: list[tuple[int, int, int]] = []
    pending: set[tuple[int, int]] = set()

    def add(lm: Monomial, g: Terms) -> None:
        k = len(basis)
        basis.append((lm, g))
        if len(basis) > limits.max_basis:
            raise ComputationLimitExceeded(f"Groebner basis exceeded {limits.max_basis} elements")
        for i in range(k):
            lcm = mono_lcm(basis[i][0], lm)
            dl = degree_of(lcm)
            if degree_bound is not None and dl > degree_bound:
                continue
            heapq.heappush(heap, (dl, k, i))
            pending.add((i, k))

    inputs = list(G)
    ii = 0
    while ii < len(inputs) or heap:
        # feed inputs in degree order interleaved with pairs of the same degree
        next_pair_deg = heap[0][0] if heap else None
        if ii < len(inputs) and (next_pair_deg is None or degree_of(inputs[ii][0]) <= next_pair_deg):
            lm, g = inputs[ii]
            ii += 1
            h = _reduce(g, basis, key)
            if h:
                hl = _lead(h, key)
                add(hl, _monic(h, hl))
            continue
        dl, k, i = heapq.heappop(heap)
        if (i, k) not in pending:
            continue
        pending.discard((i, k))
        if dl > limits.max_degree:
            raise ComputationLimitExceeded(f"S-pair degree {dl} exceeds cap {limits.max_degree}")
        li, gi = basis[i]
        lk, gk = basis[k]
        if mono_coprime(li, lk):
            continue
        lcm = mono_lcm(li, lk)
        chain = False
        for j, (lj, _) in enumerate(basis):
            if j in (i, k):
                continue
            if mono_divides(lj, lcm) and (min(i, j), max(i, j)) not in pending and (min(k, j), max(k, j)) not in pending:
                chain = True
                break
        if chain:
            continue
        s = _spoly(gi, li, gk, lk)
        h = _reduce(s, basis, key)
        if h:
            hl = _lead(h, key)
            add(hl, _monic(h, hl))
    return _interreduce(basis, key)


# -- public API ------------------------------------------------------------


def _check_same_ring(polys: Sequence[Polynomial]):
    if polys:
        ring = polys[0].ring
        for p in polys:
            if p.ring != ring:
                from .algebra import RingMismatchError

                raise RingMismatchError(f"{p.ring} vs {ring}")


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (in list order)."""
    if not G:
        raise ValueError("normal form needs a nonempty divisor list")
    _check_same_ring([f, *G])
    key = order.key
    basis = [(max(g.terms, key=key), g.terms) for g in G if g]
    return Polynomial._raw(f.ring, _reduce(f.terms, basis, key))


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> tuple[list[Polynomial], Polynomial]:
    """Division with quotients: ``f = sum q_i g_i + r``."""
    _check_same_ring([f, *G])
    key = order.key
    nz = [i for i, g in enumerate(G) if g]
    basis = [(max(G[i].terms, key=key), G[i].terms) for i in nz]
    qs: list[dict] = [{} for _ in nz]
    r = _reduce(f.terms, basis, key, quotients=qs)
    quotients = [f.ring.zero() for _ in G]
    for pos, i in enumerate(nz):
        quotients[i] = Polynomial(f.ring, qs[pos])
    return quotients, Polynomial._raw(f.ring, r)


def exact_divide(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises ValueError otherwise."""
    order = order or MonomialOrder.grevlex(f.ring.nvars)
    (q,), r = divide(f, [g], order)
    if r:
        raise ValueError(f"{g} does not divide {f}")
    return q


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    degree_bound: int | None = None,
    limits: Limits | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of homogeneous generators."""
    gens = [g for g in gens if g]
    _check_same_ring(gens)
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneousError(f"generator {g} is not homogeneous")
    if not gens:
        return GroebnerBasis((), order, True, degree_bound)
    ring = gens[0].ring
    if order.nvars != ring.nvars:
        raise ValueError("order and ring have different variable counts")
    raw = groebner_terms([g.terms for g in gens], order.key, degree_bound=degree_bound, limits=limits)
    elems = tuple(Polynomial._raw(ring, t) for _, t in raw)
    return GroebnerBasis(elems, order, True, degree_bound)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key
    lf, lg = max(f.terms, key=key), max(g.terms, key=key)
    return Polynomial._raw(f.ring, _spoly(f.terms, lf, g.terms, lg))


def is_groebner(gens: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = [g for g in gens if g]
    _check_same_ring(gens)
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneousError(f"generator {g} is not homogeneous")
    key = order.key
    basis = [(max(g.terms, key=key), g.terms) for g in gens]
    for k in range(len(basis)):
        for i in range(k):
            li, gi = basis[i]
            lk, gk = basis[k]
            if mono_coprime(li, lk):
                continue
            if _reduce(_spoly(gi, li, gk, lk), basis, key):
                return False
    return True


def initial_ideal(I, order: MonomialOrder):
    """Monomial ideal generated by the leading monomials of the reduced basis."""
    from .ideals import Ideal

    gb = I.groebner(order)
    ring = I.ring
    return Ideal(ring, [ring.monomial(m) for m in gb.leading_monomials()])


def ideal_member(f: Polynomial, I, order: MonomialOrder | None = None) -> bool:
    """Whether the homogeneous ``f`` lies in ``I``."""
    if not f:
        return True
    if not f.is_homogeneous():
        raise NonHomogeneousError(f"{f} is not homogeneous")
    if f.ring != I.ring:
        from .algebra import RingMismatchError

        raise RingMismatchError(f"{f.ring} vs {I.ring}")
    if not I.generators:
        return False
    order = order or I.default_order
    gb = I.groebner(order, degree_bound=f.degree())
    return not normal_form(f, list(gb.elements), order) if gb.elements else False
