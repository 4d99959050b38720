"""
The 27 lines on a cubic surface as the weights of the minimal e6-module J.

    lines       27 weights, two lines meet when their pairing is −2/3
    planes      zero-sum triples of weights (tritangent planes)
    double-six  D_α = weights not orthogonal to a root α
    Steiner set the nine weights orthogonal to an A2 subsystem
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from configs.base import (
    LineConfiguration,
    orthogonal_cliques,
    orthogonality_masks,
    root_pairs,
    zero_sum_triples,
)
from rootlat.lattice import LatticeVector, conventional_inner, inner
from rootlat.presets import parent_system
from rootlat.root_system import RootSystem, minuscule_weights_e6

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def lines27() -> LineConfiguration:
    weights = minuscule_weights_e6()
    return LineConfiguration("lines27", weights, tuple((i,) for i in range(len(weights))))


def e6_roots() -> RootSystem:
    return parent_system("E6")


def tritangent_planes_27(config: Optional[LineConfiguration] = None) -> List[Tuple[int, int, int]]:
    config = config or lines27()
    return zero_sum_triples(config.weights.weights)


# ================================================================== #
#  DOUBLE-SIXES                                                        #
# ================================================================== #

@dataclass(frozen=True)
class DoubleSix:
    root: LatticeVector                       # positive representative of ±α
    members: FrozenSet[int]                   # 12 line indices
    pairs: Tuple[Tuple[int, int], ...]        # (ℓ_i, ℓ'_i), ℓ_i·α = 1 and ℓ'_i = ℓ_i − α

    @property
    def sixes(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(a for a, _ in self.pairs), tuple(b for _, b in self.pairs)


def double_six_of(root: LatticeVector, config: LineConfiguration) -> DoubleSix:
    weights = config.weights
    members = frozenset(i for i, w in enumerate(weights.weights) if inner(w, root) != 0)
    pairs = []
    for i in sorted(members):
        w = weights.weights[i]
        if conventional_inner(w, root) == 1:
            pairs.append((i, weights.index[w - root]))
    return DoubleSix(root, members, tuple(pairs))


@lru_cache(maxsize=None)
def double_sixes() -> Tuple[DoubleSix, ...]:
    config = lines27()
    out = tuple(double_six_of(alpha, config) for alpha in root_pairs(e6_roots()))
    logger.debug(f"  → {len(out)} double-sixes")
    return out


def is_classical_double_six(d: DoubleSix, config: Optional[LineConfiguration] = None) -> bool:
    """ℓ_i meets ℓ'_j exactly when i != j, and lines inside one six are skew."""
    config = config or lines27()
    first, second = d.sixes
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            if config.incident(a, b) != (i != j):
                return False
    for six in (first, second):
        if any(config.incident(a, b) for a, b in itertools.combinations(six, 2)):
            return False
    return True


def classify_double_six_pair(d1: DoubleSix, d2: DoubleSix) -> str:
    """azygetic when the roots pair non-trivially (|D_α ∩ D_β| = 6), syzygetic otherwise (4)."""
    if d1.root == d2.root or d1.root == -d2.root:
        raise ValueError(f"{d1.root} and {d2.root} give the same double-six")
    kind = "azygetic" if inner(d1.root, d2.root) != 0 else "syzygetic"
    expected = 6 if kind == "azygetic" else 4
    found = len(d1.members & d2.members)
    if found != expected:
        raise RuntimeError(f"{kind} double-sixes meet in {found} lines, expected {expected}")
    return kind


def azygetic_triads(rs: Optional[RootSystem] = None) -> List[FrozenSet[LatticeVector]]:
    """± root pairs {α, β, α±β}, i.e. the A2 subsystems."""
    rs = rs or e6_roots()
    positives = root_pairs(rs)
    positive_set = set(positives)
    found = set()
    for a, b in itertools.combinations(positives, 2):
        if inner(a, b) == 0:
            continue
        third = a - b if inner(a, b) > 0 else a + b
        third = third if third in positive_set else -third
        found.add(frozenset((a, b, third)))
    return sorted(found, key=lambda s: sorted(s))


def syzygetic_tetrads_of_double_sixes() -> List[Tuple[int, ...]]:
    """4-sets of pairwise syzygetic double-sixes (A1⁴ subsystems), as indices into double_sixes()."""
    roots = [d.root for d in double_sixes()]
    return list(orthogonal_cliques(roots, 4))


def tetrads_through_pairs() -> Counter:
    """How many syzygetic tetrads contain each syzygetic pair of double-sixes."""
    counts = Counter()
    for tetrad in syzygetic_tetrads_of_double_sixes():
        for pair in itertools.combinations(tetrad, 2):
            counts[pair] += 1
    return counts


# ================================================================== #
#  STEINER SETS                                                        #
# ================================================================== #

@dataclass(frozen=True)
class SteinerSet:
    a2: FrozenSet[LatticeVector]               # the three positive roots of the A2
    members: FrozenSet[int]                    # nine line indices
    rows: Tuple[Tuple[int, int, int], ...]     # three disjoint tritangent planes
    columns: Tuple[Tuple[int, int, int], ...]  # the other three

    @property
    def planes(self) -> FrozenSet[Tuple[int, int, int]]:
        return frozenset(self.rows + self.columns)


def steiner_set_of(a2: FrozenSet[LatticeVector], config: LineConfiguration) -> SteinerSet:
    members = sorted(
        i for i, w in enumerate(config.weights.weights) if all(inner(w, r) == 0 for r in a2)
    )
    if len(members) != 9:
        raise RuntimeError(f"A2 {sorted(a2)} is orthogonal to {len(members)} lines, expected 9")
    local = [config.weights.weights[i] for i in members]
    planes = [tuple(sorted(members[k] for k in t)) for t in zero_sum_triples(local)]
    if len(planes) != 6:
        raise RuntimeError(f"Steiner set has {len(planes)} tritangent planes, expected 6")
    rows = [planes[0]]
    for p in planes[1:]:
        if all(not set(p) & set(r) for r in rows):
            rows.append(p)
    columns = [p for p in planes if p not in rows]
    if len(rows) != 3 or any(len(set(r) & set(c)) != 1 for r in rows for c in columns):
        raise RuntimeError("Steiner set is not a 3×3 array of tritangent planes")
    return SteinerSet(a2, frozenset(members), tuple(rows), tuple(columns))


@lru_cache(maxsize=None)
def steiner_sets_27() -> Tuple[SteinerSet, ...]:
    config = lines27()
    return tuple(steiner_set_of(a2, config) for a2 in azygetic_triads())


def steiner_triple_systems() -> List[Tuple[int, int, int]]:
    """Three Steiner sets with pairwise orthogonal A2's; they cover the 27 lines."""
    sets = steiner_sets_27()
    out = []
    for i, j, k in itertools.combinations(range(len(sets)), 3):
        roots = [sets[x].a2 for x in (i, j, k)]
        if all(inner(a, b) == 0 for x, y in itertools.combinations(roots, 2) for a in x for b in y):
            if len(sets[i].members | sets[j].members | sets[k].members) != 27:
                raise RuntimeError("orthogonal Steiner sets do not cover the 27 lines")
            out.append((i, j, k))
    return out


def steiner_incident(s: SteinerSet, t: SteinerSet) -> bool:
    """Two Steiner sets are incident when they share no tritangent plane."""
    return s is not t and not (s.planes & t.planes)


@dataclass(frozen=True)
class SteinerIncidenceCensus:
    degrees: Tuple[int, ...]              # over all 120 sets
    common_with_completion: int           # incident to a set and to one completing set
    restricted_degrees: Tuple[int, ...]   # inside the remaining 27


def steiner_incidence_census(start: int = 0) -> SteinerIncidenceCensus:
    sets = steiner_sets_27()
    n = len(sets)
    adjacency = [[steiner_incident(sets[a], sets[b]) for b in range(n)] for a in range(n)]
    degrees = tuple(sum(row) for row in adjacency)

    system = next(t for t in steiner_triple_systems() if start in t)
    partner, third = [x for x in system if x != start]
    common = [x for x in range(n) if adjacency[start][x] and adjacency[partner][x]]
    remaining = [x for x in common if x != third]
    restricted = tuple(sum(adjacency[a][b] for b in remaining) for a in remaining)
    return SteinerIncidenceCensus(degrees, len(common), restricted)


def planes_per_line() -> Dict[int, int]:
    counts = Counter(i for t in tritangent_planes_27() for i in t)
    return dict(sorted(counts.items()))
