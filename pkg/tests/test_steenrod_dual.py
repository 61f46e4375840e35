import pytest

from versalp.free_algebra import enumerate_monomials, series_of
from versalp.steenrod_dual import milnor_generator_degrees, milnor_generators

from oracles import naive_series


def test_p3_generators_and_expansion():
    gens = milnor_generator_degrees(3, 8)
    assert [(g.label, g.degree, g.kind) for g in gens] == [
        ("tau_0", 1, "exterior"),
        ("xi_1", 4, "polynomial"),
        ("tau_1", 5, "exterior"),
    ]
    assert series_of(gens, 8).coefficients == (1, 1, 0, 0, 1, 2, 1, 0, 1)
    triples = [(g.degree, g.kind) for g in gens]
    assert list(series_of(gens, 8).coefficients) == naive_series(triples, 8)


def test_p2_generators():
    gens = milnor_generator_degrees(2, 8)
    assert [(g.label, g.degree, g.kind) for g in gens] == [
        ("xi_1", 1, "polynomial"),
        ("xi_2", 3, "polynomial"),
        ("xi_3", 7, "polynomial"),
    ]


def test_p7_generators():
    gens = milnor_generator_degrees(7, 24)
    assert [(g.label, g.degree, g.kind) for g in gens] == [
        ("tau_0", 1, "exterior"),
        ("xi_1", 12, "polynomial"),
        ("tau_1", 13, "exterior"),
    ]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_degrees_strictly_increase_within_each_family(p):
    gens = milnor_generators(p, 200)
    for family in ("xi", "tau"):
        degrees = [g.degree for g in gens if g.family == family]
        assert degrees == sorted(set(degrees))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_three_smallest_odd_prime_degrees(p):
    degrees = [g.degree for g in milnor_generators(p, 4 * (p - 1))]
    assert degrees[:3] == [1, 2 * p - 2, 2 * p - 1]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_seven_elements_through_degree_4p_minus_4(p):
    bound = 4 * (p - 1)
    dims = enumerate_monomials(milnor_generator_degrees(p, bound), bound).dimensions()
    assert sum(dims) == 7


def test_families_and_indices():
    gens = milnor_generators(5, 60)
    assert [(g.family, g.index, g.degree) for g in gens] == [
        ("tau", 0, 1),
        ("xi", 1, 8),
        ("tau", 1, 9),
        ("xi", 2, 48),
        ("tau", 2, 49),
    ]


def test_empty_range_and_validation():
    assert len(milnor_generator_degrees(2, 0)) == 0
    with pytest.raises(ValueError):
        milnor_generator_degrees(9, 4)
    with pytest.raises(ValueError):
        milnor_generator_degrees(2, -1)
