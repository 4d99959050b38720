"""
The 120 tritangent planes through a point of a degree-one del Pezzo
surface, as the ± pairs of E8 roots.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from configs.base import LineConfiguration, orthogonal_cliques, orthogonality_masks, pair_opposites
from configs.branching import branch
from rootlat.lattice import LatticeVector, inner
from rootlat.presets import parent_system, preset_subsystem
from rootlat.root_system import RootSystem, adjoint_weights_e8

logger = logging.getLogger(__name__)

PARTITION_SAMPLE_STRIDE = 100


@lru_cache(maxsize=None)
def tritangents120() -> LineConfiguration:
    weights = adjoint_weights_e8()
    return LineConfiguration("tritangents120", weights, pair_opposites(weights))


def e8_roots() -> RootSystem:
    return parent_system("E8")


@lru_cache(maxsize=None)
def plane_masks() -> Tuple[int, ...]:
    """Bit j of mask k: planes k and j are orthogonal."""
    config = tritangents120()
    return tuple(orthogonality_masks([config.representative(k) for k in range(len(config))]))


@lru_cache(maxsize=None)
def complexes_e8() -> Tuple[FrozenSet[int], ...]:
    """S_α: the planes not orthogonal to α, one per plane α."""
    n = len(tritangents120())
    full = (1 << n) - 1
    out = []
    for k, mask in enumerate(plane_masks()):
        others = full & ~mask & ~(1 << k)
        out.append(frozenset(j for j in range(n) if others >> j & 1))
    return tuple(out)


# ================================================================== #
#  AZYGETIC TRIADS                                                     #
# ================================================================== #

def azygetic_triads_e8() -> List[Tuple[int, int, int]]:
    """Plane triples {α, β, α±β}: the A2 subsystems."""
    config = tritangents120()
    lookup = config.member_of_weight
    found = set()
    for a, b in itertools.combinations(range(len(config)), 2):
        u, v = config.representative(a), config.representative(b)
        if inner(u, v) == 0:
            continue
        third = lookup[u - v if inner(u, v) > 0 else u + v]
        found.add(tuple(sorted((a, b, third))))
    return sorted(found)


def membership_partition(chosen: Sequence[int]) -> Counter:
    """For the planes outside `chosen`, the subset of `chosen` whose complex contains them."""
    complexes = complexes_e8()
    counts = Counter()
    for k in range(len(tritangents120())):
        if k in chosen:
            continue
        key = tuple(c for c in chosen if k in complexes[c])
        counts[key] += 1
    return counts


# ================================================================== #
#  SYZYGETIC TETRADS                                                   #
# ================================================================== #

def _common_orthogonal(chosen: Sequence[int]) -> int:
    masks = plane_masks()
    m = (1 << len(masks)) - 1
    for c in chosen:
        m &= masks[c]
    return m


@lru_cache(maxsize=None)
def syzygetic_tetrads_e8() -> Tuple[Tuple[int, int, int, int], ...]:
    """
    Four pairwise orthogonal planes whose common orthogonal is a D4
    (12 planes = 24 roots); three tetrads per D4 subsystem.
    """
    config = tritangents120()
    vectors = [config.representative(k) for k in range(len(config))]
    out = tuple(
        t for t in orthogonal_cliques(vectors, 4, list(plane_masks()))
        if bin(_common_orthogonal(t)).count("1") == 12
    )
    logger.debug(f"  → {len(out)} syzygetic tetrads of planes")
    return out


def tetrad_completions() -> Counter:
    """Distinct numbers of syzygetic tetrads through an orthogonal pair of planes."""
    per_pair = Counter()
    for t in syzygetic_tetrads_e8():
        for pair in itertools.combinations(t, 2):
            per_pair[pair] += 1
    return Counter(per_pair.values())


@dataclass(frozen=True)
class E8Census:
    complex_sizes: Tuple[int, ...]
    azygetic_triads: int
    syzygetic_tetrads: int
    triad_partitions: Tuple[Tuple[int, ...], ...]    # distinct sorted part sizes over sampled triads
    tetrad_partitions: Tuple[Tuple[int, ...], ...]   # the same over sampled tetrads


def partition_shapes(chosen_sets: Sequence[Sequence[int]],
                     stride: int = PARTITION_SAMPLE_STRIDE) -> Tuple[Tuple[int, ...], ...]:
    """Distinct sorted part sizes of membership_partition over every `stride`-th set."""
    if stride < 1:
        raise ValueError(f"stride must be positive, got {stride}")
    shapes = {tuple(sorted(membership_partition(c).values())) for c in chosen_sets[::stride]}
    return tuple(sorted(shapes))


def e8_complexes_and_triads(stride: int = PARTITION_SAMPLE_STRIDE) -> E8Census:
    complexes = complexes_e8()
    triads = azygetic_triads_e8()
    tetrads = syzygetic_tetrads_e8()
    return E8Census(
        complex_sizes=tuple(sorted({len(c) for c in complexes})),
        azygetic_triads=len(triads),
        syzygetic_tetrads=len(tetrads),
        triad_partitions=partition_shapes(triads, stride),
        tetrad_partitions=partition_shapes(tetrads, stride),
    )


def partition_shape(chosen: Sequence[int]) -> Dict[int, int]:
    """Number of chosen complexes containing a plane -> number of planes."""
    out = Counter()
    for key, count in membership_partition(chosen).items():
        out[len(key)] += count
    return dict(sorted(out.items()))


# ================================================================== #
#  sl9 SPLIT                                                           #
# ================================================================== #

def sl9_split() -> Tuple[int, int]:
    """(planes from Λ³U ∪ Λ⁶U, planes from the roots of sl9): 84 and 36."""
    config = tritangents120()
    report = branch(config.weights, preset_subsystem("E8.ex3"))
    roots_part = next(p for p in report.parts if p.size == 72)
    inside = {config.member_of_weight[w] for w in roots_part.members}
    return len(config) - len(inside), len(inside)
