"""
Marked affine Dynkin diagrams.

Node 0 is always the affine node −(highest root); nodes 1..n follow Bourbaki.
Marking a node removes it; the unmarked nodes are the simple roots of the
subsystem. The three affine diagrams, drawn with their Bourbaki labels:

    E6:  1 - 3 - 4 - 5 - 6        E7:  0 - 1 - 3 - 4 - 5 - 6 - 7
                 |                                  |
                 2                                  2
                 |
                 0                E8:  1 - 3 - 4 - 5 - 6 - 7 - 8 - 0
                                                |
                                                2
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from rootlat.lattice import LatticeVector, inner
from rootlat.root_system import (
    RootSystem,
    WeightSet,
    adjoint_weights_e8,
    build_root_system,
    minuscule_weights_e6,
    minuscule_weights_e7,
    subsystem,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubsystemPreset:
    name: str
    parent: str
    marked: Tuple[int, ...]
    expected_type: str
    # Orbit sizes of the parent's reference weight set (J, V or the E8 roots)
    expected_branching: Tuple[int, ...] = field(default=())
    note: str = ""


PRESETS: Dict[str, SubsystemPreset] = {
    p.name: p
    for p in (
        # ---- 27 lines ----
        SubsystemPreset("E6.ex1", "E6", (1, 6), "D5", (16, 10, 1), "J = ℓ ⊕ Δ ⊕ U"),
        SubsystemPreset("E6.ex2", "E6", (0, 1, 6), "D4", (8, 8, 8, 1, 1, 1)),
        SubsystemPreset("E6.ex3", "E6", (2,), "A5xA1", (15, 12), "binary model"),
        SubsystemPreset("E6.ex4", "E6", (4,), "A2xA2xA2", (9, 9, 9), "ternary model"),
        SubsystemPreset("E6.tetrad", "E6", (2, 3, 5), "A1xA1xA1xA1",
                        (4, 4, 4, 4, 4, 4, 1, 1, 1), "four-ality / Reye split"),
        # ---- 28 bitangents ----
        SubsystemPreset("E7.ex1", "E7", (0, 7), "E6", (27, 27, 1, 1), "V = C ⊕ J ⊕ J* ⊕ C"),
        SubsystemPreset("E7.ex2", "E7", (1,), "D6xA1", (32, 24), "binary model"),
        SubsystemPreset("E7.ex3", "E7", (2,), "A7", (28, 28), "Hesse notation"),
        SubsystemPreset("E7.ex4", "E7", (0, 2), "A6", (21, 21, 7, 7), "Aronhold sets"),
        SubsystemPreset("E7.ex5", "E7", (4,), "A3xA3xA1", (16, 16, 12, 12)),
        SubsystemPreset("E7.ex6", "E7", (3,), "A5xA2", (20, 18, 18), "ternary model"),
        SubsystemPreset("E7.ex7", "E7", (1, 6), "D4xA1xA1", (16, 16, 8, 8, 4, 4), "triality"),
        # ---- 120 tritangent planes ----
        SubsystemPreset("E8.ex1", "E8", (8,), "E7xA1", (126, 112, 2), "e8 = sl2 × e7 ⊕ A ⊗ V"),
        SubsystemPreset("E8.ex2", "E8", (1,), "D8", (128, 112), "e8 = spin16 ⊕ Δ"),
        SubsystemPreset("E8.ex3", "E8", (2,), "A8", (84, 84, 72), "e8 = sl9 ⊕ Λ³U ⊕ Λ⁶U"),
    )
}


@lru_cache(maxsize=None)
def parent_system(type_label: str) -> RootSystem:
    return build_root_system(type_label)


@lru_cache(maxsize=None)
def reference_weights(type_label: str) -> WeightSet:
    if type_label == "E6":
        return minuscule_weights_e6()
    if type_label == "E7":
        return minuscule_weights_e7()
    if type_label == "E8":
        return adjoint_weights_e8()
    raise ValueError(f"no reference weight set for {type_label}")


def affine_nodes(rs: RootSystem) -> Tuple[LatticeVector, ...]:
    return rs.extended_simple_roots


def unmarked_roots(rs: RootSystem, marked: Tuple[int, ...]) -> List[LatticeVector]:
    nodes = affine_nodes(rs)
    for m in marked:
        if not 0 <= m < len(nodes):
            raise ValueError(f"node {m} does not exist on the affine {rs.type_label} diagram")
    return [alpha for i, alpha in enumerate(nodes) if i not in marked]


def preset_subsystem(name: str) -> RootSystem:
    try:
        preset = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown subsystem preset: {name!r}")
    rs = parent_system(preset.parent)
    return subsystem(rs, unmarked_roots(rs, preset.marked))


# ================================================================== #
#  EXTRA E8 SUBSYSTEMS                                                 #
# ================================================================== #

def d4_d4_subsystem() -> RootSystem:
    """so8 × so8 inside e8: simple roots e1−e2, e2−e3, e3−e4, e3+e4 and the same on e5..e8."""
    rs = parent_system("E8")
    simple = []
    for offset in (0, 4):
        for a, b, sign in ((0, 1, -1), (1, 2, -1), (2, 3, -1), (2, 3, 1)):
            c = [0] * 8
            c[offset + a], c[offset + b] = 2, 2 * sign
            simple.append(LatticeVector.of(rs.ambient, c))
    return subsystem(rs, simple)


def a2_fourfold_subsystem() -> RootSystem:
    """
    sl3⁴ inside e8 for the Z3×Z3 grading: three A2's cut from the A8 chain
    α1-α3-α4-α5-α6-α7-α8-α0, plus the A2 orthogonal to all three.
    """
    rs = parent_system("E8")
    nodes = affine_nodes(rs)
    chain = [nodes[i] for i in (1, 3, 4, 5, 6, 7, 8, 0)]
    simple = [chain[0], chain[1], chain[3], chain[4], chain[6], chain[7]]
    span = subsystem(rs, simple)
    orthogonal = [r for r in rs.roots if all(inner(r, s) == 0 for s in simple)]
    positive = sorted((r for r in orthogonal if rs.height(r) > 0), key=rs.height)
    fourth = positive[:2]
    logger.debug(f"  → fourth A2 from {len(orthogonal)} orthogonal roots")
    return subsystem(rs, simple + fourth)


EXTRA_BRANCHINGS = {
    "E8.d4xd4": (d4_d4_subsystem, "D4xD4", (64, 64, 64, 24, 24)),
    "E8.z3xz3": (a2_fourfold_subsystem, "A2xA2xA2xA2", (27,) * 8 + (6,) * 4),
}
