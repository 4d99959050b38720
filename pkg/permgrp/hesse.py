"""
The bitangent group in Hesse notation.

Bitangents are the 28 pairs (ij), 1 <= i < j <= 8. The group is generated by
the relabelings S8 together with the bifid involutions s_(pqrs|xyzt), which
swap complementary pairs inside each of the two quadruples.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from permgrp.schreier_sims import PermutationGroup, induced_action, symmetric_group_generators

logger = logging.getLogger(__name__)

HESSE_INDICES: Tuple[int, ...] = tuple(range(1, 9))

Pair = Tuple[int, int]
Split = Tuple[Tuple[int, ...], Tuple[int, ...]]


@lru_cache(maxsize=None)
def hesse_pairs() -> Tuple[Pair, ...]:
    return tuple(itertools.combinations(HESSE_INDICES, 2))


def format_pair(pair: Sequence[int]) -> str:
    return "".join(str(i) for i in pair)


def relabeling(sigma: Sequence[int]) -> List[int]:
    """sigma is an image array on 0..7 acting on the labels 1..8."""
    return induced_action(
        hesse_pairs(), lambda p: tuple(sorted((sigma[p[0] - 1] + 1, sigma[p[1] - 1] + 1)))
    )


@lru_cache(maxsize=None)
def bifid_splits() -> Tuple[Split, ...]:
    """The 35 splittings of 1..8 into two quadruples, the one containing 1 first."""
    out = []
    for rest in itertools.combinations(range(2, 9), 3):
        first = (1,) + rest
        second = tuple(i for i in HESSE_INDICES if i not in first)
        out.append((first, second))
    return tuple(out)


def bifid_image(split: Split, pair: Pair) -> Pair:
    for quadruple in split:
        if set(pair) <= set(quadruple):
            return tuple(sorted(set(quadruple) - set(pair)))
    return pair


def bifid(split: Split) -> List[int]:
    return induced_action(hesse_pairs(), lambda p: bifid_image(split, p))


@lru_cache(maxsize=None)
def hesse_group() -> PermutationGroup:
    """S8 on the 28 pairs plus the bifid s_(1234|5678)."""
    gens = [relabeling(s) for s in symmetric_group_generators(8)]
    gens.append(bifid(((1, 2, 3, 4), (5, 6, 7, 8))))
    group = PermutationGroup(gens, degree=28)
    logger.info(f"  → Hesse group: order {group.order()}")
    return group


def all_bifids_in_group(group: PermutationGroup | None = None) -> bool:
    group = group or hesse_group()
    return all(group.contains(bifid(split)) for split in bifid_splits())


def aronhold_set(i: int) -> FrozenSet[int]:
    """A_i = {(ij) : j != i} as indices into hesse_pairs()."""
    if i not in HESSE_INDICES:
        raise ValueError(f"Hesse index must be in 1..8, got {i}")
    index = {p: k for k, p in enumerate(hesse_pairs())}
    return frozenset(index[tuple(sorted((i, j)))] for j in HESSE_INDICES if j != i)


# ================================================================== #
#  SYZYGETIC TETRADS IN HESSE COORDINATES                              #
# ================================================================== #

@dataclass(frozen=True)
class HesseTetradCensus:
    matchings: int          # (12)(34)(56)(78) type
    four_cycles: int        # (12)(34)(13)(24) type
    other: int

    @property
    def total(self) -> int:
        return self.matchings + self.four_cycles + self.other


def _pair_vector(pair: Pair) -> np.ndarray:
    v = np.zeros(8, dtype=np.int64)
    v[pair[0] - 1] = v[pair[1] - 1] = 1
    return v


def is_zero_sum_tetrad(tetrad: Sequence[Pair]) -> bool:
    """
    Some choice of signs makes Σ ±(ε_i + ε_j) a multiple of ε_1 + … + ε_8,
    the weights of Λ²U being taken modulo that vector.
    """
    vectors = [_pair_vector(p) for p in tetrad]
    for signs in itertools.product((1, -1), repeat=3):
        total = vectors[0] + sum(s * v for s, v in zip(signs, vectors[1:]))
        if np.all(total == total[0]):
            return True
    return False


def hesse_tetrad_census() -> HesseTetradCensus:
    matchings = cycles = other = 0
    for tetrad in itertools.combinations(hesse_pairs(), 4):
        if not is_zero_sum_tetrad(tetrad):
            continue
        support = set().union(*tetrad)
        if len(support) == 8:
            matchings += 1
        elif len(support) == 4:
            cycles += 1
        else:
            other += 1
    census = HesseTetradCensus(matchings, cycles, other)
    logger.debug(f"  → zero-sum bitangent tetrads: {census}")
    return census


def pair_index() -> Dict[Pair, int]:
    return {p: k for k, p in enumerate(hesse_pairs())}
