import random

import pytest

from oracles import evaluation_kernel_dim, intersection_dim, monomial_saturation_contains, monos, piece_dim, quotient_dim, same_piece, vanishes_at
from properties import (
    PROPERTY_CHECKS,
    R3,
    check_point_power_hilbert_values,
    random_monomial_ideal,
    random_points,
    run_property,
    terms,
)
from slipcheck import (
    HilbertTable,
    Ideal,
    PolyRing,
    constant_hilbert_value,
    generic_hf,
    hilbert_function,
    hilbert_table,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_saturated,
    min_degree_e,
    monomial_radical,
    points_ideal,
    satisfies_condition_asterisk,
    saturate_irrelevant,
)
from slipcheck.ideals import NotZeroDimensionalError, colon_irrelevant, hilbert_stabilization, hilbert_table_auto
from slipcheck.slip import double_point_example, family_jik, line_reducible_example, square_deficit_example

R2 = PolyRing.standard(2)


def I3(*gens):
    return Ideal.parse(R3, gens)


def test_sum_product_power_examples():
    assert ideal_power(I3("a0", "a1"), 2) == I3("a0^2", "a0*a1", "a1^2")
    assert ideal_product(I3("a0"), I3("a1")) == I3("a0*a1")
    J = I3("a0*a1 - a2^2", "a1^3")
    assert ideal_power(J, 1) == J
    assert ideal_sum(I3("a0"), I3("a1")) == I3("a0", "a1")
    assert J + Ideal(R3) == J


def test_zero_and_unit():
    assert Ideal(R3, ["0"]).is_zero()
    assert Ideal.unit(R3).is_unit()
    assert not Ideal.irrelevant(R3).is_unit()
    assert Ideal(R3) != Ideal.unit(R3)


def test_intersection_examples():
    assert ideal_intersection(I3("a0"), I3("a1")) == I3("a0*a1")
    assert ideal_intersection(I3("a0", "a1"), I3("a0", "a2")) == I3("a0", "a1*a2")
    J = I3("a0*a1 - a2^2", "a1^2")
    assert (J & J) == J


def test_intersection_matches_degreewise_kernel():
    rng = random.Random(3)
    a, b = I3("a0", "a1"), I3("a0", "a2")
    for d in range(5):
        assert piece_dim(terms(a & b), 3, d) == intersection_dim(terms(a), terms(b), 3, d)
    for _ in range(6):
        P = points_ideal(R3, random_points(rng, 2, bound=3))
        Q = I3("a0^2 - a1*a2", "a2^3")
        inter = ideal_intersection(P, Q)
        for d in range(6):
            assert piece_dim(terms(inter), 3, d) == intersection_dim(terms(P), terms(Q), 3, d)


def test_colon_examples():
    assert ideal_colon(I3("a0^2"), R3("a0")) == I3("a0")
    J = I3("a0*a1 - a2^2", "a1^3")
    assert ideal_colon(J, R3.one()) == J
    Jf, _, _ = family_jik(5, 4, 2)
    assert ideal_colon(Jf, R3("a0")) == Jf
    assert ideal_colon(I3("a0*a1", "a0*a2"), I3("a1", "a2")) == I3("a0")
    assert ideal_colon(I3("a0^2*a1"), R3("a0 + a1")) == I3("a0^2*a1")
    assert ideal_colon(I3("a0^2 - a1^2"), R3("a0 - a1")) == I3("a0 + a1")


def test_colon_rejects_zero_and_inhomogeneous():
    with pytest.raises(ValueError):
        ideal_colon(I3("a0"), R3.zero())
    with pytest.raises(ValueError):
        ideal_colon(I3("a0"), R3("a0 + a1^2"))


def test_saturation_examples():
    I = line_reducible_example()
    assert saturate_irrelevant(I) == I3("a0", "a1^4")
    assert saturate_irrelevant(ideal_power(Ideal.irrelevant(R3), 3)).is_unit()
    S = I3("a0", "a1^4")
    assert saturate_irrelevant(S) == S


def test_is_saturated_examples():
    assert is_saturated(I3("a0", "a1^4"))
    assert not is_saturated(line_reducible_example())
    assert is_saturated(Ideal.unit(R3))
    # a0 * m^2 lies in I but a0 * m does not
    I = line_reducible_example()
    assert all(I.contains(R3("a0") * R3.monomial(m)) for m in monos(3, 2))
    assert not all(I.contains(R3("a0") * R3.monomial(m)) for m in monos(3, 1))


def test_saturation_against_monomial_oracle():
    rng = random.Random(17)
    for _ in range(30):
        I = random_monomial_ideal(rng)
        S = saturate_irrelevant(I)
        gens = [next(iter(g.terms)) for g in I.generators]
        for d in range(6):
            for m in monos(3, d):
                assert S.contains(R3.monomial(m)) == monomial_saturation_contains(m, gens, 3)


def test_saturation_is_a_colon_fixpoint():
    rng = random.Random(19)
    for _ in range(20):
        S = saturate_irrelevant(random_monomial_ideal(rng))
        assert colon_irrelevant(S) == S and is_saturated(S)


def test_radical_examples():
    assert monomial_radical(I3("a0^2")) == I3("a0")
    assert monomial_radical(I3("a0*a1", "a0^3")) == I3("a0")
    R = I3("a0*a1", "a2")
    assert monomial_radical(R) == R
    with pytest.raises(ValueError):
        monomial_radical(I3("a0 + a1"))


def test_points_ideal_examples():
    assert points_ideal(R3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == I3("a0*a1", "a0*a2", "a1*a2")
    assert points_ideal(R3, [(1, 0, 0)]) == I3("a1", "a2")
    assert points_ideal(R2, [(1, 0), (0, 1)]) == Ideal.parse(R2, ["a0*a1"])
    with pytest.raises(ValueError):
        points_ideal(R3, [(1, 2, 3), (2, 4, 6)])


def test_points_ideal_matches_evaluation_kernel():
    rng = random.Random(23)
    for _ in range(8):
        pts = random_points(rng, rng.randint(1, 5))
        I = points_ideal(R3, pts)
        assert is_saturated(I)
        for g in I.generators:
            assert all(vanishes_at(g.terms, p) for p in pts)
        for d in range(5):
            assert piece_dim(terms(I), 3, d) == evaluation_kernel_dim(pts, 3, d)
        assert constant_hilbert_value(I) == len(pts)


def test_hilbert_function_values():
    fat = double_point_example()
    assert hilbert_function(fat, 5) == 3
    assert hilbert_function(ideal_power(fat, 2), 6) == 10
    assert hilbert_function(ideal_power(square_deficit_example(), 2), 6) == 23
    assert hilbert_function(Ideal(R3), 2) == 6
    assert hilbert_function(Ideal.unit(R3), 0) == 0


def test_hilbert_function_matches_brute_force():
    rng = random.Random(29)
    for _ in range(10):
        I = random_monomial_ideal(rng)
        for d in range(7):
            assert hilbert_function(I, d) == quotient_dim(terms(I), 3, d)


def test_constant_hilbert_values():
    fat = double_point_example()
    assert constant_hilbert_value(fat) == 3
    assert constant_hilbert_value(ideal_power(fat, 2)) == 10
    P = points_ideal(R3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert constant_hilbert_value(ideal_power(P, 2)) == 9
    with pytest.raises(NotZeroDimensionalError):
        constant_hilbert_value(I3("a0"))


def test_hilbert_tables():
    t = hilbert_table(I3("a0", "a1^4"), 6)
    assert t.values[:5] == (1, 2, 3, 4, 4) and t.eventual_constant == 4
    _, If, _ = family_jik(5, 4, 2)
    assert hilbert_table_auto(If).agrees_with(generic_hf(5, 2))
    assert str(hilbert_table_auto(If)) == "(1,3,5,5,...)"
    unit = hilbert_table(Ideal.unit(R3), 3)
    assert unit.values == (0, 0, 0, 0) and unit.eventual_constant == 0
    # no tail when the quotient is not zero-dimensional
    assert hilbert_table(I3("a0"), 4).eventual_constant is None


def test_hilbert_table_tail_and_override():
    I = I3("a0", "a1^4")
    short = hilbert_table(I, 3)
    assert short.eventual_constant is None
    with pytest.raises(IndexError):
        short(10)
    assert hilbert_table(I, 3, stable_from=2).eventual_constant is None
    assert hilbert_table(I, 5, stable_from=4).eventual_constant == 4
    with pytest.raises(ValueError):
        HilbertTable((1, 2, 3), 3)


def test_stabilization_degree_is_exact():
    rng = random.Random(31)
    for _ in range(25):
        I = random_monomial_ideal(rng)
        try:
            hp, start = hilbert_stabilization(I)
        except NotZeroDimensionalError:
            continue
        assert all(quotient_dim(terms(I), 3, d) == hp for d in range(start, start + 4))
        if start > 0:
            assert quotient_dim(terms(I), 3, start - 1) != hp


def test_generic_tables():
    assert generic_hf(4, 2).values == (1, 3, 4, 4)
    assert generic_hf(6, 3).values == (1, 4, 6, 6)
    assert generic_hf(1, 5)(9) == 1
    assert min_degree_e(generic_hf(4, 2), 4) == 2
    assert min_degree_e(generic_hf(6, 3), 6) == 2
    assert min_degree_e(generic_hf(3, 2), 3) == 1
    with pytest.raises(ValueError):
        min_degree_e(HilbertTable((1, 2)), 5)


def test_condition_asterisk():
    assert satisfies_condition_asterisk(Ideal.irrelevant(R3)) == 1
    assert satisfies_condition_asterisk(I3("a0")) is None
    assert satisfies_condition_asterisk(Ideal.parse(R2, ["a0", "a1^3"])) == 3
    # degree-wise containment cross-check
    for d in range(1, 5):
        assert (quotient_dim([{(1, 0): 1}, {(0, 3): 1}], 2, d) == 0) == (d >= 3)


def test_json_round_trip():
    J = I3("1/2*a0*a1 - a2^2", "a1^3")
    assert Ideal.from_json(J.to_json()) == J
    assert Ideal.from_json(J.to_json()).to_json() == J.to_json()


def test_membership_matches_linear_algebra():
    rng = random.Random(37)
    I = I3("a0*a1 - a2^2", "a1^3 + a0*a2^2")
    for _ in range(20):
        d = rng.randint(2, 5)
        g = R3.monomial(rng.choice(monos(3, d - 2))) * I.generators[0] + R3.monomial(rng.choice(monos(3, d)))
        in_span = same_piece(terms(I), terms(I) + [dict(g.terms)], 3, d)
        assert I.contains(g) == in_span


@pytest.mark.parametrize("name", sorted(PROPERTY_CHECKS))
def test_property(name):
    assert run_property(PROPERTY_CHECKS[name], instances=50, seed=101) == 50


def test_point_powers_reach_expected_values():
    rng = random.Random(41)
    for _ in range(6):
        check_point_power_hilbert_values(rng)
