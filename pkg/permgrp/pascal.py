"""
The tritangent-plane group on the 120 triples of {0, …, 9}.

A triple (0ij) stands for the pair (ij) of sl9 roots; the others (ijk) for
the weights of Λ³U. S9 permutes 1..9 and fixes 0; the bifid attached to a
triple (ijk) exchanges (ijℓ) with (0kℓ), sends (abc) to the complementary
triple of ijkabc inside 1..9, and fixes everything else.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from permgrp.schreier_sims import PermutationGroup, induced_action, symmetric_group_generators

logger = logging.getLogger(__name__)

PASCAL_LABELS: Tuple[int, ...] = tuple(range(10))
NINE: frozenset = frozenset(range(1, 10))

Triple = Tuple[int, int, int]


@lru_cache(maxsize=None)
def pascal_triples() -> Tuple[Triple, ...]:
    return tuple(itertools.combinations(PASCAL_LABELS, 3))


def relabeling(sigma: Sequence[int]) -> List[int]:
    """sigma is an image array on 0..9."""
    return induced_action(pascal_triples(), lambda t: tuple(sorted(sigma[x] for x in t)))


def pascal_bifid_image(ijk: Triple, triple: Triple) -> Triple:
    ijk_set = set(ijk)
    t = set(triple)
    if 0 in t:
        rest = t - {0}
        # (0kℓ) ↔ (ijℓ)
        inside = rest & ijk_set
        outside = rest - ijk_set
        if len(inside) == 1 and len(outside) == 1:
            return tuple(sorted((ijk_set - inside) | outside))
        return triple
    inside = t & ijk_set
    if len(inside) == 2:
        (ell,) = t - ijk_set
        (k,) = ijk_set - inside
        return tuple(sorted((0, k, ell)))
    if not inside:
        return tuple(sorted(NINE - ijk_set - t))
    return triple


def pascal_bifid(ijk: Sequence[int]) -> List[int]:
    ijk = tuple(sorted(ijk))
    if len(set(ijk)) != 3 or not set(ijk) <= NINE:
        raise ValueError(f"a bifid is indexed by a triple of 1..9, got {ijk}")
    return induced_action(pascal_triples(), lambda t: pascal_bifid_image(ijk, t))


@lru_cache(maxsize=None)
def pascal_group() -> PermutationGroup:
    """S9 fixing 0, plus the bifid (123)."""
    gens = []
    for s in symmetric_group_generators(9):
        gens.append(relabeling([0] + [x + 1 for x in s]))
    gens.append(pascal_bifid((1, 2, 3)))
    group = PermutationGroup(gens, degree=len(pascal_triples()))
    logger.info(f"  → tritangent group: order {group.order()}")
    return group


def all_pascal_bifids_in_group(group: PermutationGroup | None = None) -> bool:
    group = group or pascal_group()
    return all(group.contains(pascal_bifid(t)) for t in itertools.combinations(range(1, 10), 3))


def ten_cycle() -> List[int]:
    """The relabeling i ↦ i+1 mod 10; S10 is not inside the group."""
    return relabeling([(x + 1) % 10 for x in PASCAL_LABELS])


def bifid_fixed_points(ijk: Sequence[int]) -> int:
    perm = pascal_bifid(ijk)
    return sum(1 for i, j in enumerate(perm) if i == j)
