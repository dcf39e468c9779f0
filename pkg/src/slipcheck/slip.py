"""One-sided criteria for membership in the closure of the locus of reduced points.

Each check returns a ``CheckReport``.  Sufficient checks can only prove
membership, necessary checks can only refute it, and ``slip_verdict``
combines them into a three-valued answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra import PolyRing, graded_piece_dim, monomials_of_degree
from .groebner import ideal_member
from .ideals import (
    HilbertTable,
    Ideal,
    NotZeroDimensionalError,
    generic_hf,
    hilbert_function,
    hilbert_stabilization,
    hilbert_table_auto,
    ideal_power,
    is_saturated,
    min_degree_e,
    saturate_irrelevant,
)

IN_SLIP, NOT_IN_SLIP, UNKNOWN = "InSlip", "NotInSlip", "Unknown"
PASS, FAIL, NOT_APPLICABLE, INCONCLUSIVE = "pass", "fail", "not_applicable", "inconclusive"


class HilbertMismatchError(ValueError):
    """The ideal's Hilbert function differs from the one supplied."""


class VerdictConflictError(RuntimeError):
    """A sufficient check passed while a necessary check failed."""


@dataclass(frozen=True)
class CheckReport:
    criterion: str
    kind: str  # "sufficient" or "necessary"
    outcome: str
    parameters: dict = field(default_factory=dict)
    observed: dict = field(default_factory=dict)
    statement: str = ""

    @property
    def conclusive(self) -> bool:
        return (self.kind == "sufficient" and self.outcome == PASS) or (self.kind == "necessary" and self.outcome == FAIL)

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "kind": self.kind,
            "outcome": self.outcome,
            "parameters": self.parameters,
            "observed": self.observed,
            "statement": self.statement,
        }


@dataclass(frozen=True)
class SlipVerdict:
    status: str
    evidence: tuple[CheckReport, ...] = ()

    def to_json(self) -> dict:
        return {"status": self.status, "evidence": [rep.to_json() for rep in self.evidence]}


# -- Hilbert function gates -----------------------------------------------


def generic_mismatch(I: Ideal, r: int) -> int | None:
    """First degree where ``H_{S/I}`` differs from ``h_{r,n}``; None if they agree everywhere."""
    n = I.ring.nvars - 1
    try:
        hp, start = hilbert_stabilization(I)
    except NotZeroDimensionalError:
        hp, start = None, 0
    h = generic_hf(r, n)
    top = max(start, h.horizon)
    for a in range(top + 1):
        if hilbert_function(I, a) != h(a):
            return a
    if hp != r:
        return top + 1
    return None


def _check_table(I: Ideal, h: HilbertTable) -> None:
    for a in range(h.horizon + 1):
        v = hilbert_function(I, a)
        if v != h(a):
            raise HilbertMismatchError(f"H_S/I({a}) = {v}, expected {h(a)}")
    if h.eventual_constant is not None:
        hp, start = hilbert_stabilization(I)
        if hp != h.eventual_constant:
            raise HilbertMismatchError(f"Hilbert polynomial {hp}, expected {h.eventual_constant}")
        for a in range(h.horizon + 1, start + 1):
            if hilbert_function(I, a) != hp:
                raise HilbertMismatchError(f"H_S/I({a}) differs from the tail value {hp}")


# -- necessary checks -------------------------------------------------------


def power_necessary_check(
    I: Ideal,
    r: int,
    h: HilbertTable | None = None,
    k_max: int = 3,
    window: int = 2,
) -> CheckReport:
    """Lower bounds ``H_{S/I^k}(d) >= r * dim S_{k-1}`` for ``d`` in ``[ke+k, ke+k+window]``.

    ``h`` defaults to the generic function ``h_{r,n}``; ``I`` must realize it.
    """
    n = I.ring.nvars - 1
    h = h or generic_hf(r, n)
    _check_table(I, h)
    e = min_degree_e(h, r)
    params = {"r": r, "e": e, "k_max": k_max, "window": window}
    probes = []
    for k in range(1, k_max + 1):
        Ik = I if k == 1 else ideal_power(I, k)
        threshold = r * graded_piece_dim(I.ring, k - 1)
        for d in range(k * e + k, k * e + k + window + 1):
            value = hilbert_function(Ik, d)
            probes.append({"k": k, "d": d, "value": value, "threshold": threshold})
            if value < threshold:
                return CheckReport(
                    "power",
                    "necessary",
                    FAIL,
                    params,
                    {"witness": {"k": k, "d": d, "value": value, "threshold": threshold}, "probes": probes},
                    "H_{S/I^k}(d) >= r dim S_{k-1} for d >= ke+k",
                )
    return CheckReport("power", "necessary", PASS, params, {"probes": probes}, "H_{S/I^k}(d) >= r dim S_{k-1} for d >= ke+k")


def line_dagger_check(I: Ideal, r: int) -> CheckReport:
    """Containment ``sat(I)^2 * m^(r-4)`` in ``I`` for schemes spanning a line."""
    statement = "sat(I)^2 * m^(r-4) contained in I when H_{S/sat(I)}(1) = 2"
    n = I.ring.nvars - 1
    params = {"r": r, "n": n}
    if n < 2 or r < 4:
        return CheckReport("dagger", "necessary", NOT_APPLICABLE, params, {"reason": "needs n >= 2 and r >= 4"}, statement)
    bad = generic_mismatch(I, r)
    if bad is not None:
        return CheckReport("dagger", "necessary", NOT_APPLICABLE, params, {"reason": f"Hilbert function differs from h_r,n at degree {bad}"}, statement)
    sat = saturate_irrelevant(I)
    h1 = hilbert_function(sat, 1)
    observed = {"saturation": [str(g) for g in sat.generators], "sat_hilbert_1": h1}
    if h1 != 2:
        observed["reason"] = "support does not span a line"
        return CheckReport("dagger", "necessary", NOT_APPLICABLE, params, observed, statement)
    gens = sorted(sat.generators, key=lambda g: (g.degree(), str(g)))
    shifts = [I.ring.monomial(m) for m in monomials_of_degree(I.ring.nvars, r - 4)]
    for i, f in enumerate(gens):
        for g in gens[i:]:
            prod = f * g
            for m in shifts:
                p = prod * m
                if not ideal_member(p, I):
                    observed["witness"] = {"product": str(prod), "shift": str(m), "element": str(p)}
                    return CheckReport("dagger", "necessary", FAIL, params, observed, statement)
    return CheckReport("dagger", "necessary", PASS, params, observed, statement)


# -- sufficient checks ------------------------------------------------------


def _differing_degrees(f: HilbertTable, r: int) -> list[int]:
    g = generic_hf(r, 2)
    if f.eventual_constant is None and f.horizon < g.horizon:
        raise ValueError("table too short to compare with h_r,2")
    top = max(f.horizon, g.horizon)
    return [a for a in range(top + 1) if f(a) != g(a)]


def star_predicate(f: HilbertTable, r: int) -> bool:
    """``f`` agrees with ``h_{r,2}`` except in at most one positive degree."""
    diff = _differing_degrees(f, r)
    return len(diff) == 0 or (len(diff) == 1 and diff[0] > 0 and f(diff[0]) > 0)


def star2_predicate(f: HilbertTable, r: int) -> bool:
    """The one-degree deviation ``f(e) = d`` with ``dim S_{e-1} < d < r < dim S_e``."""
    if not star_predicate(f, r):
        return False
    diff = _differing_degrees(f, r)
    if not diff:
        return False
    e = diff[0]
    d = f(e)
    return graded_piece_dim(3, e - 1) < d < r < graded_piece_dim(3, e)


def sufficient_star_check(I: Ideal, r: int) -> CheckReport:
    """Plane criterion: a saturated ideal, or a saturation deviating from ``h_{r,2}`` in one degree."""
    statement = "H_{S/sat(I)} deviates from h_r,2 in at most one degree (plane)"
    params = {"r": r}
    if I.ring.nvars != 3:
        return CheckReport("star", "sufficient", NOT_APPLICABLE, params, {"reason": "needs three variables"}, statement)
    bad = generic_mismatch(I, r)
    if bad is not None:
        return CheckReport("star", "sufficient", NOT_APPLICABLE, params, {"reason": f"Hilbert function differs from h_r,2 at degree {bad}"}, statement)
    if is_saturated(I):
        return CheckReport("star", "sufficient", PASS, params, {"saturated": True}, statement)
    sat = saturate_irrelevant(I)
    f = hilbert_table_auto(sat, min_horizon=generic_hf(r, 2).horizon)
    ok = star_predicate(f, r)
    observed = {"saturated": False, "sat_hilbert": list(f.values), "tail": f.eventual_constant, "star": ok, "star2": star2_predicate(f, r)}
    return CheckReport("star", "sufficient", PASS if ok else INCONCLUSIVE, params, observed, statement)


# -- verdict ----------------------------------------------------------------


def slip_verdict(
    I: Ideal,
    r: int,
    k_max: int = 3,
    window: int = 2,
    h: HilbertTable | None = None,
    exhaustive: bool = False,
) -> SlipVerdict:
    """Run the sufficient check (plane only), then the line and power checks.

    Stops at the first conclusive report unless ``exhaustive`` is set, in
    which case every check runs and contradictory outcomes raise.
    """
    bad = generic_mismatch(I, r)
    if bad is not None and h is None:
        raise HilbertMismatchError(f"H_S/I differs from h_{r},{I.ring.nvars - 1} at degree {bad}")
    reports: list[CheckReport] = []
    status = UNKNOWN
    runners = []
    if I.ring.nvars == 3 and h is None:
        runners.append(lambda: sufficient_star_check(I, r))
    if h is None:
        runners.append(lambda: line_dagger_check(I, r))
    runners.append(lambda: power_necessary_check(I, r, h, k_max, window))
    for run in runners:
        rep = run()
        reports.append(rep)
        if rep.conclusive:
            found = IN_SLIP if rep.kind == "sufficient" else NOT_IN_SLIP
            if status not in (UNKNOWN, found):
                raise VerdictConflictError(f"criteria disagree: {[x.to_json() for x in reports]}")
            status = found
            if not exhaustive:
                break
    return SlipVerdict(status, tuple(reports))


# -- constructions ----------------------------------------------------------


def plane_ring() -> PolyRing:
    return PolyRing.standard(3)


def family_parameters_valid(r: int, d: int, e: int) -> bool:
    s = graded_piece_dim(3, e - 1)
    return e >= 1 and s < d < r < graded_piece_dim(3, e) and r - d <= d - s


def valid_family_triples(r_max: int) -> list[tuple[int, int, int]]:
    out = []
    for r in range(1, r_max + 1):
        for e in range(1, r + 1):
            for d in range(1, r):
                if family_parameters_valid(r, d, e):
                    out.append((r, d, e))
    return out


def family_jik(r: int, d: int, e: int) -> tuple[Ideal, Ideal, Ideal]:
    """The saturated ideal ``J``, its one-degree truncation ``I`` and the lift ``K``.

    ``K`` has lex initial ideal ``I`` (order ``a0 > a2 > a1``) and ``sat(I) = J``.
    """
    if not family_parameters_valid(r, d, e):
        raise ValueError(f"(r,d,e)=({r},{d},{e}) violates dim S_e-1 < d < r < dim S_e with r-d <= d-s")
    R = plane_ring()
    s = graded_piece_dim(3, e - 1)
    a0 = R.gen(0)

    def mono(i: int, deg: int):
        return R.monomial((0, i, deg - i))

    A = lambda i: mono(i, e)
    B = lambda i: mono(i, e + 1)
    C = lambda i: mono(i, e + 2)
    tail = [B(i) for i in range(d - s - 1, r - d - 1, -1)] + [C(i) for i in range(r - d - 1, -1, -1)]
    J = [A(i) for i in range(e, d - s - 1, -1)] + tail
    head = [A(i) for i in range(e, r - s - 1, -1)]
    I, K = list(head), list(head)
    for i in range(r - s - 1, d - s - 1, -1):
        I += [A(i) * R.gen(2), A(i) * a0]
        K += [A(i) * R.gen(2), A(i) * a0 + B(i + s - d)]
    return Ideal(R, J), Ideal(R, I + tail), Ideal(R, K + tail)


def singular_interior_examples() -> tuple[Ideal, Ideal, Ideal]:
    R = plane_ring()
    I1 = Ideal.parse(R, ["a1^2*a2", "a0*a1^2 + a1*a2^2", "a1^4", "a1*a2^3", "a2^5"])
    I2 = Ideal.parse(R, ["a0*a1^2", "a1^2*a2", "a1^4", "a1*a2^3", "a2^5"])
    I3 = Ideal.parse(R, ["a1^3", "a1^2*a2", "a1^2*a0^2", "a1*a2^3", "a2^5"])
    return I1, I2, I3


def line_reducible_example() -> Ideal:
    """The length-4 plane ideal rejected by the line criterion."""
    return Ideal.parse(plane_ring(), ["a0*a1", "a0*a2", "a0^3", "a1^4"])


def square_deficit_example() -> Ideal:
    """A four-variable ideal whose square has a Hilbert deficit in degree 6."""
    R = PolyRing.standard(4)
    return Ideal.parse(R, ["a0^2*a1", "a0*a1^2", "a0*a2", "a0*a3", "a1*a2", "a1*a3", "a2^4"])


def double_point_example() -> Ideal:
    """``(a0^2, a0*a1, a1^2)``: a fat point of length 3 whose square has length 10."""
    return Ideal.parse(plane_ring(), ["a0^2", "a0*a1", "a1^2"])


def borel_line_ideal(n: int, r: int) -> Ideal:
    """Borel-fixed ideal with saturation ``(a0..a_{n-2}, a_{n-1}^r)``.

    Degree ``r-2`` part: all monomials in ``(a0..a_{n-2})`` except
    ``a_{n-2} a_n^{r-3}``; plus ``a_{n-2} a_n^{r-2}`` and ``a_{n-1}^r``.
    """
    if n < 2 or r < 4:
        raise ValueError("needs n >= 2 and r >= 4")
    R = PolyRing.standard(n + 1)
    skip = tuple([0] * (n - 2) + [1, 0, r - 3])
    gens = [
        R.monomial(m)
        for m in monomials_of_degree(n + 1, r - 2)
        if any(m[i] for i in range(n - 1)) and m != skip
    ]
    gens.append(R.monomial(tuple([0] * (n - 2) + [1, 0, r - 2])))
    gens.append(R.monomial(tuple([0] * (n - 1) + [r, 0])))
    return Ideal(R, Ideal(R, gens).minimal_monomial_generators())


def borel_line_tangent_bound(n: int, r: int) -> int:
    return comb(n + r - 2, n) + 2 * n - 1


def paper_examples() -> dict[str, Ideal]:
    """Every fixed ideal used by the regression suite, by name."""
    I1, I2, I3 = singular_interior_examples()
    out = {
        "line_reducible": line_reducible_example(),
        "square_deficit": square_deficit_example(),
        "double_point": double_point_example(),
        "singular_interior_1": I1,
        "singular_interior_2": I2,
        "singular_interior_3": I3,
        "borel_line_2_4": borel_line_ideal(2, 4),
    }
    for r, d, e in valid_family_triples(9):
        J, I, K = family_jik(r, d, e)
        out[f"family_{r}_{d}_{e}_J"] = J
        out[f"family_{r}_{d}_{e}_I"] = I
        out[f"family_{r}_{d}_{e}_K"] = K
    return out
