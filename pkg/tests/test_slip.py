import random

import pytest

from oracles import monomial_in, monos
from properties import R3, random_points
from slipcheck import HilbertTable, Ideal, PolyRing, generic_hf, hilbert_function, ideal_power, initial_ideal, min_degree_e, points_ideal
from slipcheck import MonomialOrder
from slipcheck.ideals import hilbert_table_auto
from slipcheck.regression import family_checks, family_ok
from slipcheck.slip import (
    FAIL,
    IN_SLIP,
    INCONCLUSIVE,
    NOT_APPLICABLE,
    NOT_IN_SLIP,
    PASS,
    UNKNOWN,
    HilbertMismatchError,
    borel_line_ideal,
    family_jik,
    family_parameters_valid,
    line_dagger_check,
    line_reducible_example,
    paper_examples,
    power_necessary_check,
    singular_interior_examples,
    slip_verdict,
    square_deficit_example,
    star2_predicate,
    star_predicate,
    sufficient_star_check,
    valid_family_triples,
)

F1 = HilbertTable((1, 3, 6, 7, 8, 8), 8)
F2 = HilbertTable((1, 3, 5, 7, 8, 8), 8)


def square_count_by_enumeration(gens, d):
    """Degree-d monomials outside the square of a monomial ideal, by direct enumeration."""
    squares = [tuple(a + b for a, b in zip(x, y)) for x in gens for y in gens]
    return sum(1 for m in monos(3, d) if not monomial_in(m, squares))


def test_power_check_on_square_deficit():
    rep = power_necessary_check(square_deficit_example(), 6)
    assert rep.outcome == FAIL
    assert rep.observed["witness"] == {"k": 2, "d": 6, "value": 23, "threshold": 24}


def test_power_check_on_line_example_degree_six():
    # the square misses only 11 monomials of degree 6, one below r(n+1) = 12
    I = line_reducible_example()
    gens = [next(iter(g.terms)) for g in I.generators]
    assert square_count_by_enumeration(gens, 6) == 11
    assert hilbert_function(ideal_power(I, 2), 6) == 11
    rep = power_necessary_check(I, 4, k_max=2, window=0)
    assert rep.outcome == FAIL
    assert rep.observed["witness"] == {"k": 2, "d": 6, "value": 11, "threshold": 12}


def test_power_check_on_coordinate_points():
    P = points_ideal(R3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    rep = power_necessary_check(P, 3)
    assert rep.outcome == PASS
    assert all(p["value"] == p["threshold"] for p in rep.observed["probes"])
    assert len(rep.observed["probes"]) == 9


def test_power_check_never_fails_on_points():
    rng = random.Random(67)
    for _ in range(8):
        pts = random_points(rng, rng.randint(1, 5))
        assert power_necessary_check(points_ideal(R3, pts), len(pts)).outcome == PASS


def test_power_check_requires_matching_hilbert_function():
    with pytest.raises(HilbertMismatchError):
        power_necessary_check(line_reducible_example(), 5)


def test_power_check_with_custom_table():
    fat = Ideal.parse(R3, ["a0^2", "a0*a1", "a1^2"])
    h = hilbert_table_auto(fat)
    assert str(h) == "(1,3,3,...)"
    rep = power_necessary_check(fat, 3, h=h)
    assert rep.parameters["e"] == min_degree_e(h, 3) == 1
    assert rep.outcome == PASS
    assert [p["value"] for p in rep.observed["probes"] if p["k"] == 2] == [10, 10, 10]


def test_dagger_examples():
    rep = line_dagger_check(line_reducible_example(), 4)
    assert rep.outcome == FAIL
    assert rep.observed["witness"]["element"] == "a0^2"
    assert line_dagger_check(borel_line_ideal(2, 4), 4).outcome == PASS
    P = points_ideal(R3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert line_dagger_check(P, 4).outcome == NOT_APPLICABLE
    assert line_dagger_check(line_reducible_example(), 3).outcome == NOT_APPLICABLE


def test_borel_line_square_containment():
    I0 = borel_line_ideal(2, 4)
    for g in Ideal.parse(R3, ["a0^2", "a0*a1^4", "a1^8"]).generators:
        assert I0.contains(g)


def test_dagger_probe_sits_inside_power_window():
    for n in range(2, 7):
        for r in range(4, 51):
            e = min_degree_e(generic_hf(r, n), r)
            assert 2 * r - 2 >= 2 * e + 2, (n, r)


def test_star_predicates():
    assert star_predicate(F1, 8) and not star_predicate(F2, 8)
    h = generic_hf(5, 2)
    assert star_predicate(h, 5) and not star2_predicate(h, 5)
    assert star2_predicate(F1, 8)
    assert str(hilbert_table_auto(family_jik(8, 7, 3)[0])) == "(1,3,6,7,8,8,...)"


def test_sufficient_check_examples():
    _, If, _ = family_jik(5, 4, 2)
    assert sufficient_star_check(If, 5).outcome == PASS
    I1, I2, I3 = singular_interior_examples()
    assert sufficient_star_check(I1, 8).outcome == PASS
    assert sufficient_star_check(I3, 8).outcome == INCONCLUSIVE
    P = points_ideal(R3, random_points(random.Random(71), 5))
    assert sufficient_star_check(P, 5).observed == {"saturated": True}
    assert sufficient_star_check(square_deficit_example(), 6).outcome == NOT_APPLICABLE


def test_singular_interior_initial_ideal():
    I1, I2, _ = singular_interior_examples()
    assert initial_ideal(I1, MonomialOrder.lex(3)) == I2


def test_verdicts():
    v = slip_verdict(line_reducible_example(), 4)
    assert v.status == NOT_IN_SLIP
    assert [r.criterion for r in v.evidence] == ["star", "dagger"]
    assert slip_verdict(family_jik(5, 4, 2)[1], 5).status == IN_SLIP
    assert slip_verdict(square_deficit_example(), 6).status == NOT_IN_SLIP
    assert slip_verdict(singular_interior_examples()[2], 8).status == UNKNOWN


def test_verdict_json():
    doc = slip_verdict(line_reducible_example(), 4).to_json()
    assert doc["status"] == "NotInSlip"
    assert doc["evidence"][-1]["outcome"] == "fail"


def test_verdict_soundness_on_corpus():
    for name, I in paper_examples().items():
        for r in range(1, 11):
            try:
                v = slip_verdict(I, r, exhaustive=True)
            except HilbertMismatchError:
                continue
            outcomes = {(rep.kind, rep.outcome) for rep in v.evidence}
            assert not (("sufficient", PASS) in outcomes and ("necessary", FAIL) in outcomes), name


def test_verdict_requires_generic_hilbert_function():
    with pytest.raises(HilbertMismatchError):
        slip_verdict(line_reducible_example(), 5)


def test_family_examples():
    J, I, K = family_jik(5, 4, 2)
    assert J == Ideal.parse(R3, ["a1^2", "a1*a2", "a2^4"])
    assert I == Ideal.parse(R3, ["a1^2", "a1*a2^2", "a0*a1*a2", "a2^4"])
    assert K == Ideal.parse(R3, ["a1^2", "a1*a2^2", "a0*a1*a2 + a2^3", "a2^4"])
    J8, _, _ = family_jik(8, 7, 3)
    assert J8 == Ideal.parse(R3, ["a1^3", "a1^2*a2", "a1*a2^2", "a2^5"])
    with pytest.raises(ValueError):
        family_jik(4, 3, 2)


def test_valid_triples():
    assert valid_family_triples(9) == [(5, 4, 2), (8, 7, 3), (9, 8, 3)]
    assert not family_parameters_valid(9, 7, 3)


@pytest.mark.parametrize("r,d,e", valid_family_triples(9))
def test_family_invariants(r, d, e):
    checks = family_checks(r, d, e)
    assert family_ok(checks), checks


def test_check_report_json_is_plain():
    rep = power_necessary_check(square_deficit_example(), 6)
    doc = rep.to_json()
    assert doc["criterion"] == "power" and doc["kind"] == "necessary"
    assert isinstance(doc["statement"], str)
