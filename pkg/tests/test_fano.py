import itertools

import pytest

from fano.cubes import (
    check_equivariance,
    cubes_of_family,
    diagonal_triples,
    face_multiplicities,
    harmonic_cubes,
    harmonic_faces,
    induced_collineation,
    is_harmonic_labeling,
    pair_of_triangle,
    printed_rows_matched,
    triangle_pair_correspondence,
    triangle_pair_rows,
)
from fano.orientations import (
    Orientation,
    coherent_orientations,
    is_coherent,
    orientation_equivariance_failures,
    orientation_from_point,
    orientation_orbits,
    oriented_triangle_to_triple,
    oriented_triangle_triples,
    rule_is_cyclic,
    triangles_matching_diagonals,
    triple_equivariance_failures,
)
from fano.plane import Triangle, collineation_maps, collineations, fano_lines, third_point, triangles
from fano.projective_line import (
    INFINITY,
    P1_POINTS,
    cross_ratio,
    format_points,
    is_harmonic,
    parse_point,
    pgl27_elements,
    psl27_elements,
)
from fano.reference_tables import DRAWN_LINES, DRAWN_TO_XOR, drawn_points


# ==============================================================
# FANO PLANE
# ==============================================================

def test_lines_and_triangles():
    assert len(fano_lines()) == 7
    assert all(a ^ b == c for a, b, c in fano_lines())
    assert len(triangles()) == 28


def test_drawn_lines_map_to_xor_lines():
    converted = {tuple(sorted(drawn_points(line))) for line in DRAWN_LINES}
    assert converted == set(fano_lines())
    assert all(DRAWN_TO_XOR[DRAWN_TO_XOR[p]] == p for p in DRAWN_TO_XOR)


def test_symmetric_point():
    assert third_point(1, 2) == 3
    with pytest.raises(ValueError):
        third_point(4, 4)


def test_collinear_points_are_not_a_triangle():
    with pytest.raises(ValueError):
        Triangle.of((1, 2, 3))


def test_triangle_center_lies_on_no_side():
    for t in triangles():
        assert all(t.center not in side for side in t.sides)


def test_collineations():
    assert len(collineation_maps()) == 168
    group = collineations()
    assert group.order() == 168
    assert group.is_transitive()


# ==============================================================
# P¹(F7)
# ==============================================================

def test_psl_and_pgl_orders():
    assert len(psl27_elements()) == 168
    assert len(pgl27_elements()) == 336


def test_cross_ratio_normalization():
    for x in range(2, 7):
        assert cross_ratio(INFINITY, 0, 1, x) == x


def test_cross_ratio_is_psl_invariant():
    points = (0, 1, 3, INFINITY)
    value = cross_ratio(*points)
    for g in psl27_elements():
        assert cross_ratio(*(g[p] for p in points)) == value


def test_cross_ratio_needs_distinct_points():
    with pytest.raises(ValueError):
        cross_ratio(0, 0, 1, 2)


def test_harmonic_quadruple():
    assert is_harmonic(INFINITY, 0, 1, 6)


def test_point_parsing():
    assert parse_point("∞") == INFINITY
    assert format_points(P1_POINTS) == "0123456∞"
    with pytest.raises(ValueError):
        parse_point("7")


# ==============================================================
# HARMONIC CUBES
# ==============================================================

def test_harmonic_cubes():
    cubes = harmonic_cubes()
    assert len(cubes) == 14
    assert len(cubes_of_family("p")) == 7
    assert len(cubes_of_family("l")) == 7
    assert all(is_harmonic_labeling(c.labels) for c in cubes)
    assert len(harmonic_faces()) == 42


def test_triangle_pair_table():
    rows = triangle_pair_rows()
    assert len(rows) == 28
    assert ("01", "256") in rows
    assert printed_rows_matched() == 28
    assert len(set(triangle_pair_correspondence().values())) == 28


@pytest.mark.parametrize("family", ["p", "l"])
def test_each_face_lies_in_one_cube_per_family(family):
    counts = face_multiplicities(family)
    assert set(counts) == harmonic_faces()
    assert set(counts.values()) == {1}


def test_equivariance():
    assert check_equivariance()



def test_induced_collineation_of_identity():
    assert induced_collineation(tuple(P1_POINTS)) == (1, 2, 3, 4, 5, 6, 7)


# ==============================================================
# ORIENTATIONS
# ==============================================================

def test_sixteen_coherent_orientations():
    found = coherent_orientations()
    assert len(found) == 16
    assert sorted(len(o) for o in orientation_orbits(found)) == [8, 8]


def test_reversal_keeps_coherence():
    assert all(is_coherent(o.reversed()) for o in coherent_orientations())


def test_incoherent_count():
    assert sum(1 for bits in range(128) if not is_coherent(Orientation.from_bits(bits))) == 112


def test_orientations_from_points():
    found = {orientation_from_point(p) for p in P1_POINTS}
    assert len(found) == 8
    assert all(is_coherent(o) for o in found)
    assert any(found == set(orbit) for orbit in orientation_orbits(coherent_orientations()))
    assert all(rule_is_cyclic(p) for p in P1_POINTS)


def test_theta_is_antisymmetric():
    o = coherent_orientations()[0]
    for a, b in itertools.permutations(range(1, 8), 2):
        assert o.theta(a, b) == -o.theta(b, a)


def test_oriented_triangles_cover_all_triples():
    values = oriented_triangle_triples()
    assert len(values) == 56
    assert set(values.values()) == {frozenset(t) for t in itertools.combinations(P1_POINTS, 3)}


@pytest.mark.parametrize("family", ["p", "l"])
def test_orientations_give_the_two_diagonal_triples(family):
    for t in triangles():
        forward = oriented_triangle_to_triple(t, 1)
        backward = oriented_triangle_to_triple(t, -1)
        assert forward != backward
        assert {forward, backward} == diagonal_triples(pair_of_triangle()[t], family)
    assert triangles_matching_diagonals(family) == 28


def test_orientation_from_point_is_equivariant():
    for g in psl27_elements()[:12]:
        h = induced_collineation(g)
        for p in P1_POINTS:
            assert orientation_from_point(g[p]) == orientation_from_point(p).transformed(h)
    assert orientation_equivariance_failures() == 0


def test_oriented_triples_are_equivariant():
    assert triple_equivariance_failures() == 0


def test_bad_sense():
    with pytest.raises(ValueError):
        oriented_triangle_to_triple(triangles()[0], 0)
