"""
Chevalley-basis oracle for simply-laced root systems.

    [h_i, E_α]     = (α_i, α) E_α
    [E_α, E_−α]    = −α                    (in the span of the h_i)
    [E_α, E_β]     = ε(α, β) E_{α+β}       when α + β is a root

ε is bimultiplicative on the root lattice, fixed on the base by
ε(α_i, α_i) = −1 and, for i < j, ε(α_i, α_j) = −1 exactly when the nodes
are joined, so that ε(α, α) = (−1)^{(α,α)/2}.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from liealg.structure import StructureConstantAlgebra, Terms
from rootlat.lattice import LatticeVector, conventional_inner
from rootlat.root_system import RootSystem

logger = logging.getLogger(__name__)


def epsilon_exponents(rs: RootSystem) -> np.ndarray:
    r = rs.rank
    out = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        out[i, i] = 1
        for j in range(i + 1, r):
            if conventional_inner(rs.simple_roots[i], rs.simple_roots[j]) != 0:
                out[i, j] = 1
    return out


def root_coefficients(rs: RootSystem, root: LatticeVector) -> Tuple[int, ...]:
    if root in rs.simple_coefficients:
        return rs.simple_coefficients[root]
    return tuple(-c for c in rs.simple_coefficients[-root])


def _label(coefficients: Tuple[int, ...]) -> str:
    return "E(" + ",".join(str(c) for c in coefficients) + ")"


def chevalley_oracle(rs: RootSystem) -> StructureConstantAlgebra:
    lengths = {conventional_inner(r, r) for r in rs.roots}
    if lengths != {2}:
        raise ValueError(f"{rs.type_label} is not simply-laced (root norms {sorted(lengths)})")

    r = rs.rank
    exponents = epsilon_exponents(rs)
    roots = oracle_roots(rs)
    coefficients = [np.array(root_coefficients(rs, x), dtype=np.int64) for x in roots]
    position: Dict[LatticeVector, int] = {x: r + k for k, x in enumerate(roots)}

    def eps(a: int, b: int) -> int:
        return -1 if int(coefficients[a] @ exponents @ coefficients[b]) & 1 else 1

    table: Dict[Tuple[int, int], Terms] = {}
    for k, alpha in enumerate(roots):
        idx = r + k
        for i, simple in enumerate(rs.simple_roots):
            value = conventional_inner(simple, alpha)
            if value:
                table[(i, idx)] = ((idx, Fraction(value)),)
                table[(idx, i)] = ((idx, -Fraction(value)),)
        for l, beta in enumerate(roots):
            if l == k:
                continue
            total = alpha + beta
            if total.is_zero():
                terms = tuple((i, Fraction(-int(c))) for i, c in enumerate(coefficients[k]) if c)
                table[(idx, r + l)] = terms
            elif total in position:
                table[(idx, r + l)] = ((position[total], Fraction(eps(k, l))),)

    basis = tuple(f"h{i + 1}" for i in range(r)) + tuple(_label(root_coefficients(rs, x)) for x in roots)
    logger.debug(f"  → Chevalley basis for {rs.type_label}: dim {len(basis)}")
    return StructureConstantAlgebra(
        name=f"chevalley-{rs.type_label}",
        basis=basis,
        table=table,
        provenance={"type": rs.type_label, "rank": r, "roots": len(roots)},
    )


def oracle_roots(rs: RootSystem) -> List[LatticeVector]:
    """Roots in the oracle's basis order (positive by height, then negatives)."""
    positives = sorted(rs.positive_roots, key=lambda x: (rs.height(x), x))
    return positives + [-x for x in positives]
