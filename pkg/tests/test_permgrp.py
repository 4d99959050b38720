import numpy as np
import pytest

from fano.plane import collineation_maps, triangle_permutation, triangles
from permgrp.aronhold_systems import (
    aronhold_triangle_systems,
    centers_cover_plane,
    is_steiner_system,
    triangles_appear_twice,
    verify_triangle_systems,
)
from permgrp.hesse import (
    all_bifids_in_group,
    bifid,
    bifid_splits,
    hesse_group,
    hesse_pairs,
    hesse_tetrad_census,
)
from permgrp.pascal import (
    all_pascal_bifids_in_group,
    pascal_bifid,
    pascal_group,
    pascal_triples,
    ten_cycle,
)
from permgrp.schreier_sims import (
    PermutationGroup,
    as_perm,
    is_involution,
    symmetric_group_generators,
)
from permgrp.triangle_sigma import (
    HESSE_GROUP_ORDER,
    SIGMA_READING,
    SigmaConstructionError,
    all_sigmas_are_involutions,
    resolve_sigma_reading,
    sigma_families,
    sigma_t,
    triangle_sigma_group,
)
from rootlat.presets import parent_system
from rootlat.root_system import reflection_permutations


# ==============================================================
# SCHREIER-SIMS
# ==============================================================

def test_symmetric_group_order():
    assert PermutationGroup(symmetric_group_generators(8), degree=8).order() == 40320


def test_empty_generator_set():
    group = PermutationGroup([], degree=5)
    assert group.order() == 1
    assert group.contains(list(range(5)))
    assert not group.contains([1, 0, 2, 3, 4])


def test_empty_generator_set_needs_a_degree():
    with pytest.raises(ValueError):
        PermutationGroup([])


def test_non_bijective_generator_is_rejected():
    with pytest.raises(ValueError):
        PermutationGroup([[0, 0, 1]])


def test_mixed_degrees_are_rejected():
    with pytest.raises(ValueError):
        PermutationGroup([[1, 0], [1, 2, 0]])


def test_e6_reflections_on_roots():
    rs = parent_system("E6")
    group = PermutationGroup(reflection_permutations(rs, rs.roots), degree=72)
    assert group.order() == 51840
    assert group.order() == int(np.prod(group.fundamental_orbit_sizes()))


def test_random_elements_are_members():
    group = PermutationGroup(symmetric_group_generators(6), degree=6)
    rng = np.random.default_rng(3)
    assert all(group.contains(group.random_element(rng)) for _ in range(20))


def test_alternating_group_membership():
    three_cycles = [[1, 2, 0, 3, 4], [0, 2, 3, 1, 4], [0, 1, 3, 4, 2]]
    group = PermutationGroup(three_cycles)
    assert group.order() == 60
    assert not group.contains([1, 0, 2, 3, 4])


# ==============================================================
# HESSE GROUP
# ==============================================================

def test_hesse_group():
    group = hesse_group()
    assert group.order() == 1451520
    assert group.is_transitive()
    assert group.stabilizer_order(0) == 51840


def test_bifid_swaps_inside_quadruples():
    index = {p: k for k, p in enumerate(hesse_pairs())}
    s = bifid(((1, 2, 3, 4), (5, 6, 7, 8)))
    assert s[index[(1, 2)]] == index[(3, 4)]
    assert s[index[(5, 6)]] == index[(7, 8)]
    assert s[index[(1, 5)]] == index[(1, 5)]
    assert is_involution(as_perm(s))


def test_all_bifids_in_group():
    assert len(bifid_splits()) == 35
    assert all_bifids_in_group()


def test_zero_sum_tetrads():
    census = hesse_tetrad_census()
    assert (census.matchings, census.four_cycles, census.other) == (105, 210, 0)
    assert census.total == 315


# ==============================================================
# σ-TRANSFORMATIONS
# ==============================================================

def test_frozen_sigma_reading_is_the_only_accepted_one():
    assert resolve_sigma_reading() == SIGMA_READING
    with pytest.raises(SigmaConstructionError):
        sigma_t(triangles()[0], "v")
    with pytest.raises(ValueError):
        sigma_t(triangles()[0], "q")


def test_sigma_group():
    assert all_sigmas_are_involutions()
    assert sigma_families().bifid_split() == (7, 7, 21)
    group = triangle_sigma_group()
    assert group.order() == HESSE_GROUP_ORDER
    assert group.is_transitive()
    assert group.stabilizer_order(0) == 51840


def test_sigma_group_contains_the_collineations():
    group = triangle_sigma_group()
    assert all(group.contains(triangle_permutation(m)) for m in collineation_maps())


# ==============================================================
# PASCAL GROUP
# ==============================================================

def test_pascal_group():
    group = pascal_group()
    assert group.degree == len(pascal_triples()) == 120
    assert group.order() == 348364800
    assert group.is_transitive()


def test_pascal_bifid_rule():
    index = {t: k for k, t in enumerate(pascal_triples())}
    s = pascal_bifid((1, 2, 3))
    assert s[index[(1, 2, 4)]] == index[(0, 3, 4)]
    assert s[index[(0, 3, 4)]] == index[(1, 2, 4)]
    assert is_involution(as_perm(s))


def test_pascal_bifids_and_ten_cycle():
    assert all_pascal_bifids_in_group()
    assert not pascal_group().contains(ten_cycle())


def test_pascal_bifid_needs_a_triple_of_nine():
    with pytest.raises(ValueError):
        pascal_bifid((0, 1, 2))


# ==============================================================
# ARONHOLD TRIANGLE SYSTEMS
# ==============================================================

def test_triangle_systems():
    systems = aronhold_triangle_systems()
    assert len(systems) == 8
    assert all(len(s.triangles) == 7 for s in systems)
    assert all(is_steiner_system(s) and centers_cover_plane(s) for s in systems)
    assert triangles_appear_twice(systems)


def test_triangle_systems_match_printed_table():
    report = verify_triangle_systems()
    assert report.table_rows_matched == 8
    assert report.mismatches == []
    assert report.ok
