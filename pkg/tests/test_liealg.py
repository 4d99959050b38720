from fractions import Fraction

import numpy as np
import pytest

from liealg.chevalley import chevalley_oracle, oracle_roots
from liealg.doubled_fano import (
    doubled_fano_configuration,
    doubled_fano_report,
    format_partition,
    parameters,
    partition_of,
    xor_array,
)
from liealg.gf2 import GF2System, InconsistentSystem, parity
from liealg.jacobi import jacobi_on_sample, verify_jacobi
from liealg.structure import StructureConstantAlgebra
from liealg.tetrad_signs import format_signs, parse_signs, printed_table_present, tetrad_sign_tables
from rootlat.lattice import LatticeVector, d_space
from rootlat.presets import parent_system
from rootlat.root_system import RootSystem, build_root_system


def _corrupted(algebra: StructureConstantAlgebra) -> StructureConstantAlgebra:
    """Doubles one root-root bracket and its mirror; antisymmetry survives, Jacobi does not."""
    rank = algebra.provenance["rank"]
    table = dict(algebra.table)
    (i, j), terms = next(
        (key, terms) for key, terms in sorted(table.items())
        if key[0] >= rank and key[1] >= rank and len(terms) == 1 and terms[0][0] >= rank
    )
    table[(i, j)] = tuple((k, 2 * c) for k, c in terms)
    table[(j, i)] = tuple((k, -2 * c) for k, c in terms)
    return StructureConstantAlgebra(algebra.name + "-broken", algebra.basis, table)


# ==============================================================
# GF(2) ELIMINATION
# ==============================================================

def test_gf2_solution_satisfies_every_equation():
    system = GF2System(3)
    equations = [(0b011, 1), (0b110, 0)]
    for row, rhs in equations:
        assert system.add(row, rhs)
    x = system.solve()
    assert all(parity(row, x) == rhs for row, rhs in equations)
    assert system.rank == 2


def test_gf2_redundant_equation_keeps_rank():
    system = GF2System(3)
    system.add(0b011, 1)
    system.add(0b110, 1)
    assert not system.add(0b101, 0)
    assert system.rank == 2


def test_gf2_inconsistency():
    system = GF2System(2)
    system.add(0b11, 1)
    assert not system.is_consistent_with(0b11, 0)
    trial = system.copy()
    with pytest.raises(InconsistentSystem):
        trial.add(0b11, 0)
    assert system.rank == 1


# ==============================================================
# CHEVALLEY ORACLE & JACOBI
# ==============================================================

@pytest.mark.parametrize("label, dim", [("A2", 8), ("D4", 28), ("E6", 78)])
def test_oracle_dimension_and_jacobi(label, dim):
    rs = parent_system(label) if label == "E6" else build_root_system(label)
    oracle = chevalley_oracle(rs)
    assert oracle.dim == dim
    assert len(oracle_roots(rs)) == dim - rs.rank
    report = verify_jacobi(oracle)
    assert report.antisymmetric
    assert report.ok
    assert report.triples == dim ** 3


@pytest.mark.slow
@pytest.mark.parametrize("label, dim", [("E7", 133), ("E8", 248)])
def test_oracle_for_e7_and_e8(label, dim):
    oracle = chevalley_oracle(parent_system(label))
    assert oracle.dim == dim
    assert verify_jacobi(oracle, chunk_size=32).ok


def test_oracle_rejects_a_non_simply_laced_system():
    space = d_space(2)
    vectors = [(2, 0), (-2, 0), (0, 2), (0, -2), (2, 2), (2, -2), (-2, 2), (-2, -2)]
    roots = tuple(sorted(LatticeVector.of(space, v) for v in vectors))
    b2 = RootSystem("B2", space, (LatticeVector.of(space, (2, -2)), LatticeVector.of(space, (0, 2))), roots)
    with pytest.raises(ValueError, match="not simply-laced"):
        chevalley_oracle(b2)


def test_jacobi_on_several_workers():
    oracle = chevalley_oracle(build_root_system("A3"))
    assert verify_jacobi(oracle, threads=2, chunk_size=4).ok


def test_broken_bracket_is_caught():
    broken = _corrupted(chevalley_oracle(build_root_system("A2")))
    assert broken.is_antisymmetric()
    report = verify_jacobi(broken)
    assert not report.ok
    assert report.first_failure is not None
    assert broken.jacobi_at(*report.first_failure)
    assert jacobi_on_sample(broken, [report.first_failure]) == [report.first_failure]


def test_cartan_is_abelian():
    rs = build_root_system("A3")
    oracle = chevalley_oracle(rs)
    assert oracle.closes(range(rs.rank))
    assert oracle.bracket({0: Fraction(1)}, {1: Fraction(1)}) == {}


# ==============================================================
# STRUCTURE-CONSTANT DOCUMENTS
# ==============================================================

def test_structure_constants_document():
    oracle = chevalley_oracle(build_root_system("A2"))
    payload = oracle.to_dict()
    assert (payload["schema"], payload["kind"]) == (1, "structure_constants")
    restored = StructureConstantAlgebra.from_dict(payload)
    assert restored.basis == oracle.basis
    assert restored.table == oracle.table
    assert restored.provenance == oracle.provenance


def test_wrong_document_kind():
    with pytest.raises(ValueError):
        StructureConstantAlgebra.from_dict({"schema": 1, "kind": "module_action"})


# ==============================================================
# DOUBLED FANO & XOR ARRAY
# ==============================================================

def test_doubled_fano_configuration():
    assert parameters(doubled_fano_configuration()) == (14, 6, 28, 3)
    assert doubled_fano_report()["ok"]


def test_xor_array():
    array = xor_array()
    assert array.shape == (8, 8)
    assert array[1][2] == 3
    assert set(np.diag(array)) == {0}


def test_pair_partitions():
    assert format_partition(partition_of(1)) == "(12)(34)(56)(78)"
    with pytest.raises(ValueError):
        partition_of(0)


# ==============================================================
# TETRAD SIGN TABLES
# ==============================================================

def test_sign_words():
    assert parse_signs("+-+-") == (1, -1, 1, -1)
    assert format_signs((1, 1, -1, -1)) == "++--"


def test_tetrads_sum_to_zero():
    splittings = tetrad_sign_tables()
    assert splittings
    for s in splittings:
        assert not np.any(np.sum(s.first, axis=0))
        assert not np.any(np.sum(s.second, axis=0))
    assert printed_table_present(splittings)


def test_bad_factor():
    with pytest.raises(ValueError):
        tetrad_sign_tables((1, 1, 2, 3))
