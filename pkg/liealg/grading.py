"""
Grading law, graded subalgebras and root-type recognition for the O-graded models.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from fano.plane import fano_lines
from liealg.ograded import OGradedModel
from liealg.structure import StructureConstantAlgebra
from rootlat.lattice import LatticeVector, conventional_inner
from rootlat.root_system import classify_root_set, format_type

logger = logging.getLogger(__name__)

EXPECTED_TYPES = {
    ("e7", "point"): "D4xA1xA1xA1",
    ("e7", "line"): "D6xA1",
    ("e8", "point"): "D4xD4",
    ("e8", "line"): "D8",
}


@dataclass
class GradingReport:
    name: str
    violations: List[Tuple[int, int, int]] = field(default_factory=list)
    h0_closed: bool = False
    point_dims: Dict[int, int] = field(default_factory=dict)
    point_closed: Dict[int, bool] = field(default_factory=dict)
    line_dims: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    line_closed: Dict[Tuple[int, ...], bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (not self.violations and self.h0_closed
                and all(self.point_closed.values()) and all(self.line_closed.values()))

    def to_dict(self) -> dict:
        return {
            "algebra": self.name,
            "violations": [list(v) for v in self.violations[:20]],
            "violation_count": len(self.violations),
            "h0_closed": self.h0_closed,
            "point_dims": sorted(set(self.point_dims.values())),
            "line_dims": sorted(set(self.line_dims.values())),
            "ok": self.ok,
        }


def graded_indices(grading: Sequence[int], grades: Iterable[int]) -> List[int]:
    wanted = set(grades)
    return [i for i, g in enumerate(grading) if g in wanted]


def check_o_grading(algebra: StructureConstantAlgebra, grading: Optional[Sequence[int]] = None) -> GradingReport:
    """[g_a, g_b] ⊆ g_{a⊕b} on every basis pair, then closure of h_0, each g_i and each g_ℓ."""
    grading = tuple(grading if grading is not None else algebra.grading)
    report = GradingReport(algebra.name)
    for (i, j), terms in sorted(algebra.table.items()):
        for k, _ in terms:
            if grading[k] != grading[i] ^ grading[j]:
                report.violations.append((i, j, k))
    report.h0_closed = algebra.closes(graded_indices(grading, [0]))
    for u in range(1, 8):
        indices = graded_indices(grading, [0, u])
        report.point_dims[u] = len(indices)
        report.point_closed[u] = algebra.closes(indices)
    for line in fano_lines():
        key = tuple(sorted(line))
        indices = graded_indices(grading, (0,) + key)
        report.line_dims[key] = len(indices)
        report.line_closed[key] = algebra.closes(indices)
    status = "✓" if report.ok else "✗"
    logger.info(f"  {status} grading of {algebra.name}: {len(report.violations)} violations, "
                f"g_i dims {sorted(set(report.point_dims.values()))}, "
                f"g_ℓ dims {sorted(set(report.line_dims.values()))}")
    return report


# ================================================================== #
#  ROOT TYPES                                                          #
# ================================================================== #

def subspace_roots(model: OGradedModel, indices: Sequence[int]) -> List[Tuple[int, ...]]:
    """Nonzero Cartan weights of the basis vectors in `indices`."""
    return sorted({model.shape.weight_of(i) for i in indices} - {(0,) * model.shape.n_slots})


def identify_subalgebra_type(model: OGradedModel, indices: Sequence[int]) -> str:
    members = set(indices)
    missing = [i for i in model.cartan_indices() if i not in members]
    if missing:
        names = ", ".join(model.algebra.basis[i] for i in missing)
        raise ValueError(f"subspace does not contain the diagonal Cartan (missing {names})")
    if not model.algebra.closes(members):
        raise ValueError("subspace is not closed under the bracket")
    return format_type(classify_root_set(subspace_roots(model, sorted(members))))


def point_subalgebra(model: OGradedModel, u: int) -> List[int]:
    return graded_indices(model.grading, [0, u])


def line_subalgebra(model: OGradedModel, line: Iterable[int]) -> List[int]:
    return graded_indices(model.grading, [0, *line])


def subalgebra_types(model: OGradedModel) -> Dict[str, Counter]:
    """Type multiset of every g_i and every g_ℓ."""
    points = Counter(identify_subalgebra_type(model, point_subalgebra(model, u)) for u in range(1, 8))
    lines = Counter(identify_subalgebra_type(model, line_subalgebra(model, l)) for l in fano_lines())
    return {"point": points, "line": lines}


# ================================================================== #
#  ORACLE COMPARISON                                                   #
# ================================================================== #

def model_inner(u: Sequence[int], v: Sequence[int]) -> Fraction:
    return Fraction(sum(a * b for a, b in zip(u, v)), 2)


def inner_product_histogram(vectors: Sequence, pairing) -> Counter:
    """Counts of pairing(u, v) over ordered pairs of distinct vectors."""
    out = Counter()
    for u, v in itertools.permutations(vectors, 2):
        out[pairing(u, v)] += 1
    return out


def model_root_histogram(model: OGradedModel) -> Counter:
    return inner_product_histogram(subspace_roots(model, range(model.dim)), model_inner)


def lattice_histogram(vectors: Sequence[LatticeVector]) -> Counter:
    return inner_product_histogram(list(vectors), conventional_inner)


def matches_root_system(model: OGradedModel, roots: Sequence[LatticeVector]) -> bool:
    """Same number of roots and the same inner-product distribution."""
    ours = subspace_roots(model, range(model.dim))
    if len(ours) != len(roots):
        return False
    return model_root_histogram(model) == lattice_histogram(roots)


def antipodal_factors_commute(model: OGradedModel) -> bool:
    """[A_Q, A_Q*] = 0 for the two factors of each grade (e8 only has such pairs)."""
    for p, q in model.shape.antipodal_pairs:
        for i in model.factor_indices(p):
            for j in model.factor_indices(q):
                if model.algebra.bracket_basis(i, j):
                    return False
    return True
