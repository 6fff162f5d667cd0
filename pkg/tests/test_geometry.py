from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from qvarchenko.geometry import (
    Arrangement, ArrangementError, Hyperplane, LabelError, deletion, distance_enumerator,
    enumerate_regions, find_labeling, intersection_poset, label, match_ordering, parse_label,
    poincare_polynomial, realized_labels, region_containing, region_count, restriction, sep_count,
    sep_set, strict_feasible_point, varchenko_matrix,
)
from qvarchenko.models import shapes
from qvarchenko.models.pyramid import PYRAMID4_LABELS
from qvarchenko.poly import PolyZ, Q, qpow


def lines(*eqs):
    return Arrangement.from_equations(eqs)


def test_hyperplane_basics():
    h = Hyperplane((1, 2), 3)
    assert h.value((1, 1)) == 0
    assert h.side((0, 0)) == -1 and h.side((5, 5)) == 1
    assert Hyperplane((2, 4), 6).key() == h.key()
    assert Hyperplane((-1, -2), -3).key() == h.key()
    with pytest.raises(ArrangementError):
        Hyperplane((0, 0), 1)


def test_arrangement_validation():
    with pytest.raises(ArrangementError):
        lines((1, 0, 0), (2, 0, 0))
    with pytest.raises(ArrangementError):
        Arrangement(2, (Hyperplane((1, 0, 0), 0),))
    with pytest.raises(ArrangementError):
        Arrangement.from_equations([])


def test_arrangement_json_round_trip():
    a = shapes.pyramid_arrangement(4)
    assert Arrangement.from_json(a.to_json()) == a
    obj = {"dim": 2, "hyperplanes": [{"normal": ["1", "0"], "offset": "1"}]}
    assert Arrangement.from_json_obj(obj) == lines((1, 0, 1))
    with pytest.raises(ArrangementError):
        Arrangement.from_json_obj({"dim": 2, "hyperplanes": [{"normal": ["x", "0"], "offset": "1"}]})


def test_strict_feasibility():
    # x > 0 and x < 1
    p = strict_feasible_point([((Fraction(1),), Fraction(0)), ((Fraction(-1),), Fraction(-1))], 1)
    assert p is not None and 0 < p[0] < 1
    # x > 1 and x < 0
    assert strict_feasible_point([((Fraction(1),), Fraction(1)), ((Fraction(-1),), Fraction(0))], 1) is None
    # x > 0 and x < 0 on a line touching only at a point
    assert strict_feasible_point([((Fraction(1),), Fraction(0)), ((Fraction(-1),), Fraction(0))], 1) is None


def test_small_region_counts():
    assert region_count(lines((1, 0, 0))) == 2
    assert region_count(lines((1, 0, 0), (0, 1, 0))) == 4
    assert region_count(lines((1, 0, 0), (1, 0, 1))) == 3
    assert region_count(lines((1, 0, 0), (0, 1, 0), (1, 1, 1))) == 7


def test_model_region_counts_and_enumerators():
    # C_n has 1 + n*p regions, p = (n+1)//2
    for n in range(3, 11):
        assert region_count(shapes.polygon_arrangement(n)) == 1 + n * ((n + 1) // 2)
    cube = shapes.cube_arrangement()
    base = region_containing(cube, shapes.CENTRE_3D)
    assert distance_enumerator(cube, base) == PolyZ([1, 6, 12, 8])
    tet = shapes.tetrahedron_arrangement()
    assert distance_enumerator(tet, region_containing(tet, shapes.CENTRE_3D)) == PolyZ([1, 4, 6, 4])
    octa = shapes.octahedron_arrangement()
    assert distance_enumerator(octa, region_containing(octa, shapes.CENTRE_3D)) == PolyZ([1, 8, 12, 24, 14])
    assert region_count(shapes.pyramid_arrangement(4)) == 23
    assert region_count(shapes.pyramid_arrangement(5)) == 38
    for n in range(3, 6):
        assert region_count(shapes.prism_arrangement(n)) == 2 * (n * ((n + 1) // 2) + 1)


def test_region_containing_rejects_points_on_planes():
    with pytest.raises(ArrangementError):
        region_containing(lines((1, 0, 0)), (0, 5))


def test_single_hyperplane_varchenko():
    a = lines((1, 0))
    regions = enumerate_regions(a)
    assert varchenko_matrix(a, regions).tolist() == [[1, Q], [Q, 1]]
    with pytest.raises(ArrangementError):
        varchenko_matrix(a, regions[:1])


def test_labels():
    assert parse_label("0") == frozenset() and parse_label("") == frozenset()
    assert parse_label("134") == frozenset({1, 3, 4})
    assert parse_label({2, 5}) == frozenset({2, 5})
    a = lines((1, 0, 1), (0, 1, 1))
    base = region_containing(a, (0, 0))
    order = match_ordering(a, ["0", "1", "2", "12"], base)
    assert [label(r, base) for r in order] == [frozenset(), {1}, {2}, {1, 2}]
    with pytest.raises(LabelError) as err:
        match_ordering(a, ["0", "3"], base)
    assert err.value.label == frozenset({3})
    with pytest.raises(LabelError):
        match_ordering(a, ["0", "0"], base)


def test_square_pyramid_printed_labels():
    printed = PYRAMID4_LABELS.split() + "1235 2345 1345 1245 12345".split()
    hit, miss = realized_labels(shapes.pyramid_arrangement(4), printed, shapes.ABOVE_BASE)
    assert len(hit) == 23
    assert sorted(miss) == sorted("1235 2345 1345 1245 12345".split())


def test_find_labeling_recovers_a_permutation():
    tet = shapes.tetrahedron_arrangement()
    scrambled = tet.permuted([2, 0, 3, 1])
    labels = "0 1 2 3 4 12 23 34 14 13 24 123 234 341 412".split()
    order = find_labeling(scrambled, labels, shapes.CENTRE_3D)
    assert order is not None
    match_ordering(scrambled.permuted(order), labels, shapes.CENTRE_3D)
    assert find_labeling(lines((1, 0, 1), (0, 1, 1)), ["0", "1", "2"], (0, 0)) is None


def test_deletion_and_restriction():
    a = shapes.pyramid_arrangement(4)
    assert len(deletion(a, 4)) == 4
    base = restriction(a, 4)
    assert base.dim == 2 and len(base) == 4
    assert region_count(base) == 9
    assert region_count(deletion(a, 4)) == 14


def test_poincare_examples():
    assert poincare_polynomial(intersection_poset(lines((1, 0, 0), (0, 1, 0)))) == PolyZ([1, 2, 1])
    assert poincare_polynomial(intersection_poset(lines((1, 0, 0), (1, 0, 1)))) == PolyZ([1, 2])
    # three lines through one point
    three = lines((1, 0, 0), (0, 1, 0), (1, 1, 0))
    assert poincare_polynomial(intersection_poset(three)) == PolyZ([1, 3, 2])
    assert poincare_polynomial(intersection_poset(shapes.tetrahedron_arrangement())) == PolyZ([1, 4, 6, 4])


def test_poset_order():
    p = intersection_poset(lines((1, 0, 0), (0, 1, 0)))
    assert len(p.elements) == 4
    assert p.leq(0, 3) and not p.leq(3, 0)
    assert [p.codim(x) for x in range(4)] == [0, 1, 1, 2]


# --- properties -----------------------------------------------------------------

coef = st.integers(-3, 3)
line = st.tuples(coef, coef, coef).filter(lambda e: e[0] or e[1])


@st.composite
def arrangements(draw, min_size=1, max_size=5):
    eqs = draw(st.lists(line, min_size=min_size, max_size=max_size))
    keys = {Hyperplane(e[:2], e[2]).key() for e in eqs}
    assume(len(keys) == len(eqs))
    return lines(*eqs)


@given(arrangements(), st.data())
def test_sep_sets_compose_by_symmetric_difference(a, data):
    regions = enumerate_regions(a)
    r0, r1, r2 = (data.draw(st.sampled_from(regions)) for _ in range(3))
    assert sep_set(r1, r2) == sep_set(r0, r1) ^ sep_set(r0, r2)


@given(arrangements(), st.data())
def test_separation_count_is_a_metric(a, data):
    regions = enumerate_regions(a)
    x, y, z = (data.draw(st.sampled_from(regions)) for _ in range(3))
    assert sep_count(x, x) == 0
    assert sep_count(x, y) == sep_count(y, x)
    assert (sep_count(x, y) == 0) == (x == y)
    assert sep_count(x, z) <= sep_count(x, y) + sep_count(y, z)


@given(arrangements(min_size=2), st.data())
def test_deletion_restriction_counts(a, data):
    k = data.draw(st.integers(0, len(a) - 1))
    assert region_count(a) == region_count(deletion(a, k)) + region_count(restriction(a, k))


@given(arrangements())
def test_region_count_equals_betti_sum(a):
    assert region_count(a) == poincare_polynomial(intersection_poset(a)).eval(1)


@given(arrangements())
def test_witnesses_lie_in_their_regions(a):
    regions = enumerate_regions(a)
    assert len({r.sign_vector for r in regions}) == len(regions)
    for r in regions:
        assert a.sign_vector(r.witness) == r.sign_vector


@given(arrangements())
def test_varchenko_entries_are_q_powers_of_label_differences(a):
    regions = enumerate_regions(a)
    base = regions[0]
    v = varchenko_matrix(a, regions)
    labs = [label(r, base) for r in regions]
    for i, x in enumerate(labs):
        for j, y in enumerate(labs):
            assert v[i, j] == qpow(len(x ^ y))
