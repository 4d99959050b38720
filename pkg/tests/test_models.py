from fractions import Fraction

import pytest

from liealg.grading import (
    EXPECTED_TYPES,
    antipodal_factors_commute,
    check_o_grading,
    matches_root_system,
    subalgebra_types,
)
from liealg.jacobi import verify_jacobi
from liealg.mod import literal_reading_abelian, mod_components, multiplicative_od
from liealg.module56 import build_v56, factor_line_pairs, killed_line, module_axiom_failure
from liealg.ograded import (
    ModelConstructionError,
    assemble_algebra,
    build_e8,
    e7_factors,
    e7_shape,
    e8_factors,
    e8_shape,
    octonion_cross_sign,
    solve_inner_coefficient,
    unknown_cross_sign,
)
from liealg.structure import StructureConstantAlgebra
from octonion.algebra import default_sign_table, sign_table
from rootlat.presets import parent_system

pytestmark = pytest.mark.slow


def test_factor_counts():
    assert len(e7_factors()) == 7
    assert len(e8_factors()) == 14
    assert all(len(f.slots) == 4 for f in e8_factors())


# ==============================================================
# e7
# ==============================================================

def test_e7_dimension_and_jacobi(e7):
    assert e7.dim == 133
    assert e7.provenance["theta_index"] == 0
    assert verify_jacobi(e7.algebra).ok


def test_e7_grading(e7):
    report = check_o_grading(e7.algebra)
    assert report.ok
    assert set(report.point_dims.values()) == {37}
    assert set(report.line_dims.values()) == {69}


def test_e7_subalgebra_types(e7):
    types = subalgebra_types(e7)
    assert types["point"] == {EXPECTED_TYPES[("e7", "point")]: 7}
    assert types["line"] == {EXPECTED_TYPES[("e7", "line")]: 7}
    assert matches_root_system(e7, parent_system("E7").roots)


def test_v56(e7):
    module = build_v56(e7)
    assert module.dim == 56
    assert module_axiom_failure(module) is None
    assert module.form_signs
    for q in range(len(e7.shape.factors)):
        assert len(factor_line_pairs(module, q)) == 3
        assert len(killed_line(module, q)) == 1


def test_v56_needs_e7(e8):
    with pytest.raises(ValueError):
        build_v56(e8)


# ==============================================================
# e8
# ==============================================================

def test_e8_dimension_and_sign_system(e8):
    assert e8.dim == 248
    assert e8.provenance["interacting_pairs"] == 84
    assert e8.provenance["antipodal_pairs"] == 7
    assert antipodal_factors_commute(e8)


def test_e8_jacobi(e8):
    assert verify_jacobi(e8.algebra, chunk_size=32).ok


def test_e8_grading_and_types(e8):
    report = check_o_grading(e8.algebra)
    assert report.ok
    assert set(report.point_dims.values()) == {56}
    assert set(report.line_dims.values()) == {120}
    types = subalgebra_types(e8)
    assert types["point"] == {"D4xD4": 7}
    assert types["line"] == {"D8": 7}


def test_e8_document_round_trip(e8):
    restored = StructureConstantAlgebra.from_dict(e8.algebra.to_dict())
    assert restored.table == e8.algebra.table
    assert restored.grading == e8.algebra.grading


# ==============================================================
# WITHIN-FACTOR COEFFICIENT
# ==============================================================

@pytest.mark.parametrize("index", range(16))
def test_e7_coefficient_is_the_same_for_every_theta(index):
    shape = e7_shape()
    solution = solve_inner_coefficient(shape, octonion_cross_sign(shape, sign_table(index)), exhaustive=True)
    assert solution.passing == (Fraction(1, 2),)
    assert not solution.free_inner_signs


def test_e8_coefficient_is_unique():
    shape = e8_shape()
    solution = solve_inner_coefficient(shape, unknown_cross_sign(shape), exhaustive=True)
    assert solution.passing == (Fraction(1, 2),)
    assert not solution.free_inner_signs


def test_zero_coefficient_breaks_jacobi():
    shape = e7_shape()
    control = assemble_algebra(shape, octonion_cross_sign(shape, default_sign_table()), Fraction(0))
    report = verify_jacobi(control)
    assert report.ok is False
    assert report.first_failure is not None
    assert control.jacobi_at(*report.first_failure)


def test_no_inner_coefficient_passes():
    with pytest.raises(ModelConstructionError):
        build_e8(candidates=(), verify=False)


# ==============================================================
# MULTIPLICATIVE ORTHOGONAL DECOMPOSITION
# ==============================================================

def test_mod(e8):
    decomposition = multiplicative_od(e8)
    assert len(decomposition.components) == 31
    assert {c.dim for c in decomposition.components} == {8}
    assert decomposition.total_dim == 248
    assert decomposition.direct_sum
    assert all(decomposition.abelian.values())
    assert not decomposition.failures
    assert decomposition.ok


def test_per_quadruple_reading_is_not_abelian(e8):
    assert not literal_reading_abelian(e8)


def test_mod_needs_e8(e7):
    with pytest.raises(ValueError):
        mod_components(e7)
