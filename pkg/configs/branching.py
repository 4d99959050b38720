from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple

from rootlat.lattice import LatticeVector, reflect
from rootlat.presets import EXTRA_BRANCHINGS, PRESETS, preset_subsystem, reference_weights
from rootlat.root_system import RootSystem, WeightSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchPart:
    orbit_id: int
    members: Tuple[LatticeVector, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BranchingReport:
    weights_label: str
    subsystem: RootSystem
    parts: Tuple[BranchPart, ...]

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(p.size for p in self.parts)

    def is_partition_of(self, weights: WeightSet) -> bool:
        seen = [w for p in self.parts for w in p.members]
        return len(seen) == len(set(seen)) and set(seen) == set(weights.weights)

    def to_dict(self) -> dict:
        return {
            "weights": self.weights_label,
            "subsystem": self.subsystem.type_label,
            "sizes": list(self.sizes),
            "parts": [[list(w.coords) for w in p.members] for p in self.parts],
        }


def branch(weights: WeightSet, sub: RootSystem) -> BranchingReport:
    """Orbits of `weights` under the reflections of `sub`, largest first."""
    for alpha in sub.simple_roots:
        if alpha.ambient != weights.ambient:
            raise ValueError(f"{sub.type_label} lives in {alpha.ambient.name}, "
                             f"weights in {weights.ambient.name}")
    remaining = set(weights.weights)
    orbits: List[Tuple[LatticeVector, ...]] = []
    for start in weights.weights:
        if start not in remaining:
            continue
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for alpha in sub.simple_roots:
                w = reflect(v, alpha)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        remaining -= seen
        orbits.append(tuple(sorted(seen)))
    orbits.sort(key=lambda o: (-len(o), o))
    parts = tuple(BranchPart(k, o) for k, o in enumerate(orbits))
    return BranchingReport(weights.label, sub, parts)


def branch_preset(name: str) -> BranchingReport:
    if name in PRESETS:
        preset = PRESETS[name]
        return branch(reference_weights(preset.parent), preset_subsystem(name))
    if name in EXTRA_BRANCHINGS:
        builder, _, _ = EXTRA_BRANCHINGS[name]
        return branch(reference_weights("E8"), builder())
    raise ValueError(f"unknown branching: {name!r}")


def expected_branching(name: str) -> Tuple[str, Tuple[int, ...]]:
    if name in PRESETS:
        return PRESETS[name].expected_type, PRESETS[name].expected_branching
    if name in EXTRA_BRANCHINGS:
        _, label, sizes = EXTRA_BRANCHINGS[name]
        return label, sizes
    raise ValueError(f"unknown branching: {name!r}")


def all_branching_names() -> List[str]:
    return list(PRESETS) + list(EXTRA_BRANCHINGS)
