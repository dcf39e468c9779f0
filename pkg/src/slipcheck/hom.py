"""Dimensions of graded pieces of ``Hom_S(I, S/J)`` by degree-wise linear algebra.

A degree-``d`` homomorphism is a choice of image in ``(S/J)_{deg g + d}`` for
each generator ``g`` of ``I``.  It is well defined iff every syzygy among the
generators maps to zero.  Syzygies are collected degree by degree as the
kernel of ``(c_i) -> sum c_i g_i`` up to a truncation degree ``D``.

The generators are taken to be a reduced Groebner basis of ``I``, so the
syzygy module is generated in degrees at most the largest lcm degree of two
leading monomials (Schreyer).  Any ``D`` at or above that bound gives the
exact answer; the stabilization trace is still reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import Monomial, mono_divides, mono_lcm, mono_mul, monomials_of_degree
from .groebner import _reduce, get_limits, ComputationLimitExceeded
from .ideals import Ideal
from .linalg import SparseEchelon, nullspace


@dataclass(frozen=True)
class HomComputation:
    """Outcome of one graded Hom computation, with its audit trail."""

    ideal: Ideal = field(repr=False)
    degree: int
    truncation: int
    dimension: int
    stabilized: bool
    schreyer_bound: int
    trace: tuple[tuple[int, int], ...] = ()
    target: Ideal | None = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.truncation >= self.schreyer_bound

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "truncation": self.truncation,
            "stabilized": self.stabilized,
            "schreyer_bound": self.schreyer_bound,
            "exact": self.exact,
            "trace": [list(p) for p in self.trace],
        }


class HomSystem:
    """Cached syzygy kernels and normal forms shared across degrees ``d``."""

    def __init__(self, source: Ideal, target: Ideal | None = None):
        target = source if target is None else target
        if source.ring != target.ring:
            raise ValueError("source and target ideals live in different rings")
        self.source = source
        self.target = target
        self.nvars = source.ring.nvars
        gb = source.groebner()
        self.gens = [dict(g.terms) for g in gb.elements]
        self.degrees = [g.degree() for g in gb.elements]
        lms = gb.leading_monomials()
        pair_degrees = [sum(mono_lcm(a, b)) for a, b in combinations(lms, 2)]
        self.schreyer_bound = max(pair_degrees + self.degrees + [0])
        if target.is_zero():
            self._tbasis = []
        else:
            tgb = target.groebner()
            key = tgb.order.key
            self._tkey = key
            self._tbasis = [(lm, dict(g.terms)) for lm, g in zip(tgb.leading_monomials(), tgb.elements)]
        self._tlms = [lm for lm, _ in self._tbasis]
        self._std: dict[int, dict[Monomial, int]] = {}
        self._nf: dict[Monomial, dict[Monomial, Fraction]] = {}
        self._kernels: dict[int, list[list[dict[Monomial, Fraction]]]] = {}

    def standard(self, deg: int) -> dict[Monomial, int]:
        """Standard monomials of ``(S/J)_deg`` with their column positions."""
        if deg < 0:
            return {}
        if deg not in self._std:
            monos = [m for m in monomials_of_degree(self.nvars, deg) if not any(mono_divides(g, m) for g in self._tlms)]
            self._std[deg] = {m: k for k, m in enumerate(monos)}
        return self._std[deg]

    def normal_form(self, m: Monomial) -> dict[Monomial, Fraction]:
        nf = self._nf.get(m)
        if nf is None:
            if not any(mono_divides(g, m) for g in self._tlms):
                nf = {m: Fraction(1)}
            else:
                nf = _reduce({m: Fraction(1)}, self._tbasis, self._tkey)
            self._nf[m] = nf
        return nf

    def syzygies(self, t: int) -> list[list[dict[Monomial, Fraction]]]:
        """Basis of degree-``t`` syzygies, each a list of coefficient polynomials."""
        if t in self._kernels:
            return self._kernels[t]
        cols = []
        for i, dg in enumerate(self.degrees):
            for m in monomials_of_degree(self.nvars, t - dg) if t >= dg else ():
                cols.append((i, m))
        rows_index = {m: k for k, m in enumerate(monomials_of_degree(self.nvars, t))}
        out: list[list[dict[Monomial, Fraction]]] = []
        if cols:
            mat = [[Fraction(0)] * len(cols) for _ in rows_index]
            for c, (i, m) in enumerate(cols):
                for gm, gc in self.gens[i].items():
                    mat[rows_index[mono_mul(gm, m)]][c] = gc
            for vec in nullspace(mat, len(cols)):
                syz = [dict() for _ in self.gens]
                for c, v in enumerate(vec):
                    if v:
                        i, m = cols[c]
                        syz[i][m] = v
                out.append(syz)
        self._kernels[t] = out
        return out

    def unknowns(self, d: int) -> dict[tuple[int, Monomial], int]:
        cols: dict[tuple[int, Monomial], int] = {}
        for i, dg in enumerate(self.degrees):
            for u in self.standard(dg + d):
                cols[(i, u)] = len(cols)
        return cols

    def constraint_rows(self, t: int, d: int, cols) -> list[dict[int, Fraction]]:
        if not self.standard(t + d):
            return []
        rows = []
        for syz in self.syzygies(t):
            acc: dict[Monomial, dict[int, Fraction]] = {}
            for i, coeffs in enumerate(syz):
                if not coeffs:
                    continue
                for u in self.standard(self.degrees[i] + d):
                    col = cols[(i, u)]
                    for m, c in coeffs.items():
                        for w, v in self.normal_form(mono_mul(m, u)).items():
                            row = acc.setdefault(w, {})
                            nv = row.get(col, 0) + c * v
                            if nv:
                                row[col] = nv
                            else:
                                row.pop(col, None)
            rows.extend(r for r in acc.values() if r)
        return rows

    def compute(self, d: int, D: int | None = None) -> HomComputation:
        limits = get_limits()
        cols = self.unknowns(d)
        maxdeg = max(self.degrees, default=0)
        auto = D is None
        start = max(self.schreyer_bound, maxdeg + 2) if auto else D
        ech = SparseEchelon()
        lo = min(self.degrees, default=0)
        t = lo
        trace: list[tuple[int, int]] = []

        def advance(to: int) -> int:
            nonlocal t
            while t <= to:
                for row in self.constraint_rows(t, d, cols):
                    ech.add(row)
                t += 1
            return len(cols) - ech.rank

        if not cols:
            return HomComputation(self.source, d, start, 0, True, self.schreyer_bound, ((start, 0),), self.target)
        dim = advance(start)
        trace.append((start, dim))
        if not auto:
            return HomComputation(self.source, d, start, dim, False, self.schreyer_bound, tuple(trace), self.target)
        cur = start
        while True:
            cur += 1
            if cur > limits.max_degree:
                raise ComputationLimitExceeded(f"Hom truncation passed degree cap {limits.max_degree}")
            nxt = advance(cur)
            trace.append((cur, nxt))
            if nxt == dim:
                return HomComputation(self.source, d, cur, nxt, True, self.schreyer_bound, tuple(trace), self.target)
            dim = nxt


def hom_graded_dim(I: Ideal, d: int, D: int | None = None, target: Ideal | None = None) -> HomComputation:
    """``dim Hom_S(I, S/target)_d``; ``target`` defaults to ``I``."""
    return HomSystem(I, target).compute(d, D)


def tangent_dim_hilb(I: Ideal) -> int:
    """Tangent space dimension of the multigraded Hilbert scheme at ``I``."""
    return hom_graded_dim(I, 0).dimension


def _box_degree_range(I: Ideal) -> int:
    from .staircase import staircase_from_ideal

    diag = staircase_from_ideal(I)
    return max(s + t for s, t in diag.boxes)


def hom_positive_oracle(I: Ideal) -> int:
    """``sum_{d > 0} dim Hom_T(I, T/I)_d`` for a finite-colength monomial ideal of ``k[x, y]``."""
    top = _box_degree_range(I)
    system = HomSystem(I)
    return sum(system.compute(d).dimension for d in range(1, top + 1))


def hom_total_dim(I: Ideal) -> int:
    """``sum_d dim Hom_T(I, T/I)_d`` over all degrees, negative ones included."""
    top = _box_degree_range(I)
    system = HomSystem(I)
    low = -max(system.degrees)
    return sum(system.compute(d).dimension for d in range(low, top + 1))
