import random

import pytest

from oracles import hom_dim_linear
from properties import R3, random_points, terms
from slipcheck import Ideal, points_ideal
from slipcheck.hom import HomSystem, hom_graded_dim, hom_positive_oracle, hom_total_dim, tangent_dim_hilb
from slipcheck.slip import borel_line_ideal, borel_line_tangent_bound, family_jik, singular_interior_examples, valid_family_triples
from slipcheck.staircase import all_staircases, plane_ring

T = plane_ring()


def test_small_examples():
    assert hom_graded_dim(Ideal.parse(R3, ["a0", "a1"]), 0).dimension == 2
    assert hom_graded_dim(Ideal.irrelevant(R3), 0).dimension == 0


def test_singular_interior_tangent_dims():
    _, I2, I3 = singular_interior_examples()
    assert tangent_dim_hilb(I2) == 16
    assert tangent_dim_hilb(I3) == 17


def test_borel_line_bound():
    I0 = borel_line_ideal(2, 4)
    assert I0 == Ideal.parse(R3, ["a0^2", "a0*a1", "a0*a2^2", "a1^4"])
    assert borel_line_tangent_bound(2, 4) == 9
    assert tangent_dim_hilb(I0) <= 9


@pytest.mark.parametrize("r,d,e", valid_family_triples(9))
def test_family_tangent_bound_and_two_ideal_variant(r, d, e):
    J, I, _ = family_jik(r, d, e)
    assert tangent_dim_hilb(I) <= 2 * r
    assert hom_graded_dim(J, 0, target=I).dimension == 2 * r


def test_plane_oracle_examples():
    assert hom_positive_oracle(Ideal.parse(T, ["a2", "a1^4"])) == 2
    assert hom_positive_oracle(Ideal.parse(T, ["a1", "a2"])) == 0
    assert hom_positive_oracle(Ideal.parse(T, ["a1^3", "a1^2*a2", "a2^2"])) == 0


@pytest.mark.parametrize("r", range(1, 6))
def test_total_hom_is_twice_colength(r):
    for D in all_staircases(r):
        assert hom_total_dim(D.ideal()) == 2 * r


@pytest.mark.parametrize("r", range(1, 6))
def test_extended_tangent_dim(r):
    for D in all_staircases(r):
        assert tangent_dim_hilb(D.extended_ideal()) == D.extended_tangent_dim()


def test_engine_matches_linear_oracle():
    cases = list(singular_interior_examples()) + [
        Ideal.parse(R3, ["a0*a1", "a0*a2", "a0^3", "a1^4"]),
        family_jik(5, 4, 2)[2],
    ]
    rng = random.Random(47)
    cases += [points_ideal(R3, random_points(rng, rng.randint(2, 5), bound=3)) for _ in range(4)]
    for I in cases:
        top = max(2 * I.max_generator_degree(), 5)
        for d in (-1, 0, 1):
            assert hom_graded_dim(I, d).dimension == hom_dim_linear(terms(I), 3, d, top), (I, d)


def test_points_have_tangent_dim_twice_r():
    rng = random.Random(53)
    for _ in range(5):
        pts = random_points(rng, rng.randint(1, 5))
        assert tangent_dim_hilb(points_ideal(R3, pts)) == 2 * len(pts)


def test_truncation_soundness():
    corpus = list(singular_interior_examples()) + [borel_line_ideal(2, 4), family_jik(8, 7, 3)[1]]
    for I in corpus:
        system = HomSystem(I)
        auto = system.compute(0)
        assert auto.stabilized and auto.exact
        dims = [system.compute(0, D).dimension for D in range(min(system.degrees), auto.truncation + 3)]
        assert all(x >= y for x, y in zip(dims, dims[1:])), dims
        assert dims[-1] == dims[-2] == dims[-3] == auto.dimension
        assert [t for t, _ in auto.trace] == list(range(auto.trace[0][0], auto.truncation + 1))


def test_report_json():
    rep = hom_graded_dim(Ideal.parse(R3, ["a0", "a1"]), 0)
    doc = rep.to_json()
    assert doc["dimension"] == 2 and doc["exact"] and doc["stabilized"]
    assert doc["truncation"] >= doc["schreyer_bound"]


def test_explicit_truncation_is_reported():
    _, I2, _ = singular_interior_examples()
    rep = hom_graded_dim(I2, 0, D=3)
    assert rep.truncation == 3 and not rep.stabilized and not rep.exact
    assert rep.dimension >= 16


def test_rejects_mixed_rings():
    with pytest.raises(ValueError):
        HomSystem(Ideal.parse(R3, ["a0"]), Ideal.parse(T, ["a1"]))
