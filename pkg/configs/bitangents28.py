"""
The 28 bitangents of a plane quartic as the ± pairs of weights of the
56-dimensional e7-module V.

Steiner complexes, their triads, the Fano heptads and the Aronhold sets all
live on the 28 pairs. W(E7) acts on them through W(E7)⁺ ≅ Sp(6,F2), the
central −1 acting trivially.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from configs.base import LineConfiguration, orthogonal_cliques, orthogonality_masks, pair_opposites, root_pairs
from configs.branching import branch
from permgrp.hesse import aronhold_set, hesse_group, hesse_pairs
from permgrp.schreier_sims import PermutationGroup
from rootlat.lattice import LatticeVector, conventional_inner, inner, reflect
from rootlat.presets import affine_nodes, parent_system, preset_subsystem
from rootlat.root_system import RootSystem, minuscule_weights_e7

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@lru_cache(maxsize=None)
def bitangents28() -> LineConfiguration:
    weights = minuscule_weights_e7()
    return LineConfiguration("bitangents28", weights, pair_opposites(weights))


def e7_roots() -> RootSystem:
    return parent_system("E7")


@lru_cache(maxsize=None)
def bitangent_group() -> PermutationGroup:
    """Simple reflections of E7 acting on the 28 bitangent pairs."""
    config = bitangents28()
    lookup = config.member_of_weight
    gens = []
    for alpha in e7_roots().simple_roots:
        gens.append([lookup[reflect(config.representative(k), alpha)] for k in range(len(config))])
    return PermutationGroup(gens, degree=len(config))


# ================================================================== #
#  STEINER COMPLEXES                                                   #
# ================================================================== #

@dataclass(frozen=True)
class SteinerComplex:
    root: LatticeVector          # positive representative of ±α
    members: FrozenSet[int]      # 12 bitangent indices


def complex_of(root: LatticeVector, config: LineConfiguration) -> SteinerComplex:
    members = frozenset(k for k in range(len(config)) if inner(config.representative(k), root) != 0)
    return SteinerComplex(root, members)


@lru_cache(maxsize=None)
def steiner_complexes() -> Tuple[SteinerComplex, ...]:
    config = bitangents28()
    return tuple(complex_of(alpha, config) for alpha in root_pairs(e7_roots()))


def complex_intersection_sizes() -> Counter:
    """(orthogonal?, |S_α ∩ S_β|) -> number of pairs."""
    counts = Counter()
    for a, b in itertools.combinations(steiner_complexes(), 2):
        counts[(inner(a.root, b.root) == 0, len(a.members & b.members))] += 1
    return counts


@dataclass(frozen=True)
class TriadCounts:
    syzygetic: int
    azygetic: int
    syzygetic_completions: Tuple[int, ...]   # per orthogonal pair, sorted distinct values


def _covers_all(complexes: Sequence[SteinerComplex], triple: Sequence[int]) -> bool:
    return len(frozenset().union(*(complexes[i].members for i in triple))) == 28


@lru_cache(maxsize=None)
def syzygetic_triads() -> Tuple[Tuple[int, int, int], ...]:
    """Pairwise orthogonal triples of complexes whose union is all 28 bitangents."""
    complexes = steiner_complexes()
    roots = [c.root for c in complexes]
    return tuple(t for t in orthogonal_cliques(roots, 3) if _covers_all(complexes, t))


def complex_triads() -> TriadCounts:
    complexes = steiner_complexes()
    roots = [c.root for c in complexes]
    positive = set(roots)
    azygetic = set()
    for a, b in itertools.combinations(roots, 2):
        if inner(a, b) == 0:
            continue
        third = a - b if inner(a, b) > 0 else a + b
        third = third if third in positive else -third
        azygetic.add(frozenset((a, b, third)))

    triads = syzygetic_triads()
    completions = Counter()
    for t in triads:
        for pair in itertools.combinations(t, 2):
            completions[pair] += 1
    orthogonal_pairs = [p for p in itertools.combinations(range(len(roots)), 2)
                        if inner(roots[p[0]], roots[p[1]]) == 0]
    per_pair = sorted({completions[p] for p in orthogonal_pairs})
    return TriadCounts(len(triads), len(azygetic), tuple(per_pair))


# ================================================================== #
#  FANO HEPTADS                                                        #
# ================================================================== #

@dataclass(frozen=True)
class FanoHeptad:
    complexes: Tuple[int, ...]                  # seven pairwise orthogonal complexes
    triads: Tuple[Tuple[int, int, int], ...]    # the syzygetic triads inside

    def is_fano(self) -> bool:
        """The triads form an S(2,3,7) on the seven complexes."""
        counts = Counter(p for t in self.triads for p in itertools.combinations(t, 2))
        return len(self.triads) == 7 and all(
            counts[p] == 1 for p in itertools.combinations(self.complexes, 2)
        )


@lru_cache(maxsize=None)
def fano_heptads() -> Tuple[FanoHeptad, ...]:
    complexes = steiner_complexes()
    roots = [c.root for c in complexes]
    masks = orthogonality_masks(roots)
    triads = set(syzygetic_triads())
    out = []
    for heptad in orthogonal_cliques(roots, 7, masks):
        inside = tuple(t for t in itertools.combinations(heptad, 3) if t in triads)
        out.append(FanoHeptad(heptad, inside))
    logger.debug(f"  → {len(out)} Fano heptads")
    return tuple(out)


def symplectic_census() -> Tuple[int, int, int]:
    """(points, lines, planes) of the Sp(6,F2) geometry: complexes, syzygetic triads, heptads."""
    return len(steiner_complexes()), len(syzygetic_triads()), len(fano_heptads())


# ================================================================== #
#  ARONHOLD SETS & HESSE NOTATION                                      #
# ================================================================== #

def aronhold_seed() -> FrozenSet[int]:
    """Bitangents carrying the seven U-weights of the sl7 branching."""
    config = bitangents28()
    report = branch(config.weights, preset_subsystem("E7.ex4"))
    part = next(p for p in report.parts if p.size == 7)
    return frozenset(config.member_of_weight[w] for w in part.members)


def aronhold_orbit(seed: Optional[FrozenSet[int]] = None) -> Set[frozenset]:
    seed = seed if seed is not None else aronhold_seed()
    if len(seed) != 7:
        raise ValueError(f"an Aronhold set has 7 bitangents, got {len(seed)}")
    orbit = bitangent_group().set_orbit(seed)
    logger.debug(f"  → Aronhold orbit: {len(orbit)}")
    return orbit


def _chain_coordinates(w: LatticeVector, chain: Sequence[LatticeVector]) -> List[int]:
    """ε-coordinates, up to a common shift, from the pairings with ε_k − ε_{k+1}."""
    c = [0]
    for beta in chain:
        c.append(c[-1] - int(conventional_inner(w, beta)))
    return c


@lru_cache(maxsize=None)
def hesse_labeling() -> Dict[int, Pair]:
    """Bitangent index -> (ij), read off the A7 chain α0-α1-α3-α4-α5-α6-α7."""
    config = bitangents28()
    nodes = affine_nodes(e7_roots())
    chain = [nodes[k] for k in (0, 1, 3, 4, 5, 6, 7)]
    out: Dict[int, Pair] = {}
    for k in range(len(config)):
        for w in config.signed(k):
            c = _chain_coordinates(w, chain)
            top = max(c)
            where = [i + 1 for i, x in enumerate(c) if x == top]
            if len(where) == 2:
                out[k] = tuple(where)
                break
        else:
            raise RuntimeError(f"bitangent {k} is not of the form ±(ε_i + ε_j)")
    if sorted(out.values()) != list(hesse_pairs()):
        raise RuntimeError("Hesse labeling is not a bijection onto the 28 pairs")
    return out


def hesse_image_group() -> PermutationGroup:
    """The bitangent group transported to the Hesse pairs."""
    labeling = hesse_labeling()
    position = {p: i for i, p in enumerate(hesse_pairs())}
    to_hesse = [position[labeling[k]] for k in range(28)]
    gens = []
    for g in bitangent_group().generators:
        image = [0] * 28
        for k in range(28):
            image[to_hesse[k]] = to_hesse[int(g[k])]
        gens.append(image)
    return PermutationGroup(gens, degree=28)


def hesse_models_agree() -> bool:
    a, b = hesse_image_group(), hesse_group()
    return (
        a.order() == b.order()
        and all(b.contains(g) for g in a.generators)
        and all(a.contains(g) for g in b.generators)
    )


def seed_in_hesse_notation() -> FrozenSet[Pair]:
    labeling = hesse_labeling()
    return frozenset(labeling[k] for k in aronhold_seed())


def hesse_aronhold_sets_in_orbit() -> bool:
    """Every A_i = {(ij) : j != i} is an Aronhold set."""
    orbit = aronhold_orbit()
    labeling = hesse_labeling()
    back = {pair: k for k, pair in labeling.items()}
    pairs = hesse_pairs()
    for i in range(1, 9):
        members = frozenset(back[pairs[x]] for x in aronhold_set(i))
        if members not in orbit:
            return False
    return True


# ================================================================== #
#  SYZYGETIC TETRADS OF THE A⊗B FACTOR                                 #
# ================================================================== #

V4 = frozenset({(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)})
CYCLIC4 = frozenset({(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 1, 0), (3, 2, 0, 1)})

Perm4 = Tuple[int, int, int, int]


def _odd_one_out(c: Sequence[int]) -> int:
    counts = Counter(c)
    odd = [i for i, x in enumerate(c) if counts[x] == 1]
    if len(odd) != 1:
        raise RuntimeError(f"{c} is not a weight of a natural sl4-module")
    return odd[0]


@lru_cache(maxsize=None)
def tensor_square_16() -> Dict[Tuple[int, int], LatticeVector]:
    """(i, j) -> weight, for the 16-part A ⊗ B of the sl4 × sl4 × sl2 branching."""
    config = bitangents28()
    report = branch(config.weights, preset_subsystem("E7.ex5"))
    part = next(p for p in report.parts if p.size == 16)
    nodes = affine_nodes(e7_roots())
    chain_a = [nodes[k] for k in (0, 1, 3)]
    chain_b = [nodes[k] for k in (5, 6, 7)]
    grid = {}
    for w in part.members:
        key = (_odd_one_out(_chain_coordinates(w, chain_a)), _odd_one_out(_chain_coordinates(w, chain_b)))
        if key in grid:
            raise RuntimeError(f"two weights of the 16-part sit at {key}")
        grid[key] = w
    return grid


def tetrad_of(sigma: Perm4) -> Tuple[LatticeVector, ...]:
    grid = tensor_square_16()
    return tuple(grid[(i, sigma[i])] for i in range(4))


def zero_sum_tetrads_16() -> List[FrozenSet[LatticeVector]]:
    weights = sorted(tensor_square_16().values())
    out = []
    for quad in itertools.combinations(weights, 4):
        total = quad[0] + quad[1] + quad[2] + quad[3]
        if total.is_zero():
            out.append(frozenset(quad))
    return out


def _compose(p: Perm4, q: Perm4) -> Perm4:
    """i ↦ p(q(i))."""
    return tuple(p[q[i]] for i in range(4))


def _inverse(p: Perm4) -> Perm4:
    inv = [0] * 4
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


@dataclass(frozen=True)
class SplittingCensus:
    tetrads: int                 # zero-sum 4-subsets of the 16 weights
    all_t_sigma: bool            # they are exactly the T_σ
    splittings: int              # partitions into four T_σ
    matching_printed: int        # partitions of the two printed shapes


def matches_printed_shape(rows: Sequence[Perm4]) -> bool:
    """rows = τH for H the Klein group or the cyclic group <(1 3 2 4)>."""
    first = rows[0]
    shape = frozenset(_compose(_inverse(first), r) for r in rows)
    return shape in (V4, CYCLIC4)


def tetrad_splittings_16() -> SplittingCensus:
    sigmas = list(itertools.permutations(range(4)))
    t_sets = {frozenset(tetrad_of(s)) for s in sigmas}
    zero_sum = zero_sum_tetrads_16()
    if any(not (t[0] + t[1] + t[2] + t[3]).is_zero() for t in map(tuple, t_sets)):
        raise RuntimeError("a T_σ does not sum to zero")

    splittings = []
    for rows in itertools.combinations(sigmas, 4):
        if all(a[i] != b[i] for a, b in itertools.combinations(rows, 2) for i in range(4)):
            splittings.append(rows)
    matching = sum(matches_printed_shape(rows) for rows in splittings)
    return SplittingCensus(
        tetrads=len(zero_sum),
        all_t_sigma=set(zero_sum) == t_sets,
        splittings=len(splittings),
        matching_printed=matching,
    )
