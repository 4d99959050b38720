import itertools

import pytest

from configs.bitangents28 import (
    aronhold_orbit,
    bitangent_group,
    bitangents28,
    complex_triads,
    fano_heptads,
    hesse_aronhold_sets_in_orbit,
    hesse_models_agree,
    steiner_complexes,
    symplectic_census,
    tetrad_splittings_16,
)
from configs.branching import all_branching_names, branch_preset, expected_branching
from configs.lines27 import (
    azygetic_triads,
    classify_double_six_pair,
    double_sixes,
    is_classical_double_six,
    lines27,
    planes_per_line,
    steiner_incidence_census,
    steiner_sets_27,
    steiner_triple_systems,
    syzygetic_tetrads_of_double_sixes,
    tetrads_through_pairs,
    tritangent_planes_27,
)
from configs.tritangents120 import (
    azygetic_triads_e8,
    complexes_e8,
    e8_complexes_and_triads,
    partition_shape,
    partition_shapes,
    sl9_split,
    tetrad_completions,
    tritangents120,
)
from rootlat.presets import reference_weights


# ==============================================================
# 27 LINES
# ==============================================================

def test_every_line_meets_ten_others():
    config = lines27()
    assert len(config) == 27
    assert set(config.incidence_degrees()) == {10}


def test_tritangent_planes():
    planes = tritangent_planes_27()
    assert len(planes) == 45
    assert set(planes_per_line().values()) == {5}
    config = lines27()
    assert all(config.incident(a, b) for plane in planes for a, b in itertools.combinations(plane, 2))


def test_double_sixes():
    sixes = double_sixes()
    assert len(sixes) == 36
    assert all(len(d.members) == 12 for d in sixes)
    assert all(is_classical_double_six(d) for d in sixes)


def test_double_six_pair_kinds():
    sixes = double_sixes()
    kinds = {classify_double_six_pair(a, b) for a, b in itertools.combinations(sixes[:10], 2)}
    assert kinds <= {"azygetic", "syzygetic"}
    with pytest.raises(ValueError):
        classify_double_six_pair(sixes[0], sixes[0])


def test_triads_and_tetrads():
    assert len(azygetic_triads()) == 120
    assert len(syzygetic_tetrads_of_double_sixes()) == 135
    assert set(tetrads_through_pairs().values()) == {3}


def test_steiner_sets():
    sets = steiner_sets_27()
    assert len(sets) == 120
    assert all(len(s.members) == 9 and len(s.planes) == 6 for s in sets)
    assert len(steiner_triple_systems()) == 40


def test_steiner_incidence():
    census = steiner_incidence_census()
    assert set(census.degrees) == {56}
    assert census.common_with_completion == 28
    assert set(census.restricted_degrees) == {8}


# ==============================================================
# 28 BITANGENTS
# ==============================================================

def test_bitangents_are_weight_pairs():
    config = bitangents28()
    assert len(config) == 28
    assert all(len(m) == 2 for m in config.members)


def test_bitangent_group():
    group = bitangent_group()
    assert group.order() == 1451520
    assert group.is_transitive()


def test_steiner_complexes():
    complexes = steiner_complexes()
    assert len(complexes) == 63
    assert {len(c.members) for c in complexes} == {12}


def test_complex_triads():
    counts = complex_triads()
    assert (counts.syzygetic, counts.azygetic) == (315, 336)
    assert counts.syzygetic_completions == (1,)


def test_fano_heptads():
    heptads = fano_heptads()
    assert len(heptads) == 135
    assert all(h.is_fano() for h in heptads)
    assert symplectic_census() == (63, 315, 135)


def test_aronhold_sets():
    assert len(aronhold_orbit()) == 288
    assert hesse_models_agree()
    assert hesse_aronhold_sets_in_orbit()


def test_tetrad_splittings():
    census = tetrad_splittings_16()
    assert census.tetrads == 24
    assert census.all_t_sigma
    assert census.splittings == 24
    assert census.matching_printed == 12


# ==============================================================
# 120 TRITANGENT PLANES
# ==============================================================

def test_e8_census():
    assert len(tritangents120()) == 120
    census = e8_complexes_and_triads()
    assert census.complex_sizes == (56,)
    assert census.azygetic_triads == 1120
    assert census.syzygetic_tetrads == 9450
    assert census.triad_partitions == ((27, 27, 27, 36),)
    assert census.tetrad_partitions == ((8, 12, 16, 16, 16, 16, 16, 16),)


def test_partition_shapes_over_dense_samples():
    triads = azygetic_triads_e8()
    assert partition_shapes(triads, stride=7) == ((27, 27, 27, 36),)
    assert len(triads[::100]) == 12
    with pytest.raises(ValueError):
        partition_shapes(triads, stride=0)


def test_complexes_exclude_their_own_plane():
    assert all(k not in c for k, c in enumerate(complexes_e8()))


def test_partition_shape_counts_every_other_plane():
    shape = partition_shape((0,))
    assert sum(shape.values()) == 119


def test_orthogonal_pairs_complete_to_fifteen_tetrads():
    assert set(tetrad_completions()) == {15}


def test_sl9_split():
    assert sl9_split() == (84, 36)


# ==============================================================
# BRANCHING
# ==============================================================

@pytest.mark.parametrize("name", all_branching_names())
def test_branching_matches_expected(name):
    label, sizes = expected_branching(name)
    report = branch_preset(name)
    assert report.subsystem.type_label == label
    assert sorted(report.sizes, reverse=True) == sorted(sizes, reverse=True)
    assert report.is_partition_of(reference_weights(name.split(".")[0]))


def test_unknown_branching():
    with pytest.raises(ValueError):
        branch_preset("E7.ex42")
