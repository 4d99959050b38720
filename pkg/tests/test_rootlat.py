from fractions import Fraction

import pytest

from rootlat.lattice import E8_SPACE, LatticeVector, conventional_inner, inner, reflect
from rootlat.mod2 import mod2_quadric_census
from rootlat.presets import d4_d4_subsystem, parent_system, preset_subsystem
from rootlat.root_system import (
    build_root_system,
    classify_root_set,
    minuscule_weights_e6,
    minuscule_weights_e7,
    parse_type_label,
    subsystem,
    weyl_group_order,
)


@pytest.mark.parametrize("label, roots", [("A2", 6), ("D4", 24), ("E6", 72), ("E7", 126), ("E8", 240)])
def test_root_counts(label, roots):
    assert len(build_root_system(label).roots) == roots


@pytest.mark.parametrize("label, order", [("A3", 24), ("D4", 192), ("E6", 51840), ("E7", 2903040)])
def test_weyl_group_orders(label, order):
    assert weyl_group_order(parent_system(label) if label[0] == "E" else build_root_system(label)) == order


def test_weyl_group_order_e8():
    assert weyl_group_order(parent_system("E8")) == 696729600


def test_minuscule_orbits():
    assert len(minuscule_weights_e6()) == 27
    assert len(minuscule_weights_e7()) == 56


def test_e6_weights_pair_to_thirds():
    weights = minuscule_weights_e6().weights
    values = {conventional_inner(weights[0], w) for w in weights[1:]}
    assert values == {Fraction(1, 3), Fraction(-2, 3)}


def test_roots_have_norm_two():
    rs = parent_system("E8")
    assert {conventional_inner(r, r) for r in rs.roots} == {2}


def test_reflection_is_an_involution():
    rs = parent_system("E7")
    alpha, v = rs.simple_roots[0], rs.roots[17]
    assert reflect(reflect(v, alpha), alpha) == v
    assert reflect(alpha, alpha) == -alpha


def test_ambient_mismatch_is_rejected():
    with pytest.raises(ValueError):
        inner(LatticeVector.zero(E8_SPACE), parent_system("E6").roots[0])


@pytest.mark.parametrize("label", ["E9", "D3", "B4", "", "A0"])
def test_bad_type_labels(label):
    with pytest.raises(ValueError):
        parse_type_label(label)


def test_classify_root_set():
    assert classify_root_set(parent_system("E8").roots) == ["E8"]
    assert classify_root_set([]) == []
    assert d4_d4_subsystem().type_label == "D4xD4"


def test_subsystem_rejects_non_roots():
    rs = parent_system("E6")
    with pytest.raises(ValueError):
        subsystem(rs, [rs.roots[0].scaled(2)])


@pytest.mark.parametrize("name, label", [
    ("E6.ex1", "D5"), ("E6.ex3", "A5xA1"), ("E6.ex4", "A2xA2xA2"),
    ("E7.ex2", "D6xA1"), ("E7.ex3", "A7"), ("E7.ex6", "A5xA2"), ("E8.ex3", "A8"),
])
def test_preset_subsystem_types(name, label):
    assert preset_subsystem(name).type_label == label


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset_subsystem("E6.ex99")


def test_mod2_census():
    census = mod2_quadric_census()
    assert (census.norm0, census.norm1) == (136, 120)
    assert census.quadratic_form_ok
    assert census.root_classes == 120
    assert census.root_classes_all_odd


def test_mod2_census_requires_e8():
    with pytest.raises(ValueError):
        mod2_quadric_census(parent_system("E7"))
