"""
Shared plumbing for the three line configurations.

Bitangents and tritangent planes are unordered pairs {γ, −γ}; they are kept
as index pairs into the underlying weight set so that signed representatives
stay available for zero-sum tests.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from rootlat.lattice import LatticeVector, conventional_inner, inner
from rootlat.root_system import RootSystem, WeightSet

logger = logging.getLogger(__name__)

KINDS = ("lines27", "bitangents28", "tritangents120")


@dataclass(frozen=True)
class LineConfiguration:
    """
    kind        lines27 | bitangents28 | tritangents120
    weights     the underlying WeightSet (27, 56 or 240 vectors)
    members     one tuple of weight indices per element: (i,) for lines,
                (i, j) with w_j = −w_i and i < j for ± pairs
    """

    kind: str
    weights: WeightSet
    members: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown configuration kind: {self.kind!r}")

    def __len__(self) -> int:
        return len(self.members)

    def representative(self, k: int) -> LatticeVector:
        return self.weights.weights[self.members[k][0]]

    def signed(self, k: int) -> Tuple[LatticeVector, ...]:
        return tuple(self.weights.weights[i] for i in self.members[k])

    @cached_property
    def member_of_weight(self) -> Dict[LatticeVector, int]:
        out = {}
        for k, member in enumerate(self.members):
            for i in member:
                out[self.weights.weights[i]] = k
        return out

    def incident(self, a: int, b: int) -> bool:
        """
        lines27: the two lines meet, i.e. their weights pair to −2/3.
        Paired kinds: the representatives are not orthogonal.
        """
        if a == b:
            return False
        u, v = self.representative(a), self.representative(b)
        if self.kind == "lines27":
            return conventional_inner(u, v) == Fraction(-2, 3)
        return inner(u, v) != 0

    def incidence_degrees(self) -> List[int]:
        n = len(self)
        return [sum(self.incident(a, b) for b in range(n)) for a in range(n)]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "weights": self.weights.to_dict(),
            "members": [list(m) for m in self.members],
        }


def pair_opposites(weights: WeightSet) -> Tuple[Tuple[int, int], ...]:
    index = weights.index
    pairs = []
    for i, w in enumerate(weights.weights):
        j = index.get(-w)
        if j is None:
            raise ValueError(f"weight {w} has no opposite in {weights.label}")
        if i < j:
            pairs.append((i, j))
    return tuple(pairs)


# ================================================================== #
#  ± ROOT PAIRS                                                        #
# ================================================================== #

def root_pairs(rs: RootSystem) -> Tuple[LatticeVector, ...]:
    """One positive representative per ± pair, in canonical order."""
    return tuple(sorted(rs.positive_roots))


def pair_class(rs: RootSystem, root: LatticeVector) -> LatticeVector:
    return root if root in rs.simple_coefficients else -root


def orthogonality_masks(vectors: Sequence[LatticeVector]) -> List[int]:
    """Bit j of mask i is set iff vectors i and j are orthogonal."""
    masks = []
    for u in vectors:
        m = 0
        for j, v in enumerate(vectors):
            if inner(u, v) == 0:
                m |= 1 << j
        masks.append(m)
    return masks


def orthogonal_cliques(vectors: Sequence[LatticeVector], size: int,
                       masks: Optional[List[int]] = None) -> Iterator[Tuple[int, ...]]:
    """
    Pairwise-orthogonal index sets of the given size, increasing order,
    by backtracking over candidate bitsets.
    """
    masks = masks if masks is not None else orthogonality_masks(vectors)
    n = len(vectors)

    def extend(chosen: Tuple[int, ...], candidates: int):
        if len(chosen) == size:
            yield chosen
            return
        if bin(candidates).count("1") < size - len(chosen):
            return
        c = candidates
        while c:
            low = c & -c
            j = low.bit_length() - 1
            c ^= low
            yield from extend(chosen + (j,), candidates & masks[j] & ~((low << 1) - 1))

    yield from extend((), (1 << n) - 1)


def is_zero_sum(vectors: Sequence[LatticeVector]) -> bool:
    total = vectors[0]
    for v in vectors[1:]:
        total = total + v
    return total.is_zero()


def zero_sum_triples(vectors: Sequence[LatticeVector]) -> List[Tuple[int, int, int]]:
    index = {v: i for i, v in enumerate(vectors)}
    out = []
    for i, j in itertools.combinations(range(len(vectors)), 2):
        k = index.get(-(vectors[i] + vectors[j]))
        if k is not None and k > j:
            out.append((i, j, k))
    return out
