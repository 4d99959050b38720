from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from fano.cubes import cubes_of_family, diagonal_triples, induced_collineation, pair_of_triangle
from fano.plane import POINTS, PointMap, Triangle, apply_map, collineation_maps, fano_lines, triangles
from fano.projective_line import P1_POINTS, cross_ratio, format_point, psl27_elements

logger = logging.getLogger(__name__)

Cycle = Tuple[int, int, int]


def _rotate_to_min(cycle: Sequence[int]) -> Cycle:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


@dataclass(frozen=True, order=True)
class Orientation:
    """One cyclic order per Fano line, stored in the order of fano_lines()."""

    cycles: Tuple[Cycle, ...]

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]]) -> "Orientation":
        by_line = {tuple(sorted(c)): _rotate_to_min(tuple(c)) for c in cycles}
        return cls(tuple(by_line[line] for line in fano_lines()))

    @classmethod
    def from_bits(cls, bits: int) -> "Orientation":
        """Bit k reverses line k (0: the sorted order (a,b,c) is positive)."""
        cycles = []
        for k, (a, b, c) in enumerate(fano_lines()):
            cycles.append((a, c, b) if bits >> k & 1 else (a, b, c))
        return cls(tuple(cycles))

    def theta(self, alpha: int, beta: int) -> int:
        """+1 iff (α, β, α⊕β) is the positive cycle of its line."""
        if alpha == beta:
            raise ValueError("θ is defined on distinct points only")
        gamma = alpha ^ beta
        for cycle in self.cycles:
            if set(cycle) == {alpha, beta, gamma}:
                rotations = {cycle, cycle[1:] + cycle[:1], cycle[2:] + cycle[:2]}
                return 1 if (alpha, beta, gamma) in rotations else -1
        raise ValueError(f"no line through {alpha} and {beta}")

    def reversed(self) -> "Orientation":
        return Orientation.from_cycles([(a, c, b) for a, b, c in self.cycles])

    def transformed(self, m: PointMap) -> "Orientation":
        return Orientation.from_cycles([tuple(apply_map(m, p) for p in cycle) for cycle in self.cycles])

    def __str__(self) -> str:
        return " ".join("".join(str(p) for p in cycle) for cycle in self.cycles)


def triangle_relations(o: Orientation) -> List[bool]:
    """
    The 56 relations θ_{αβ}θ_{α+β,γ} = θ_{βγ}θ_{β+γ,α} = θ_{γα}θ_{γ+α,β},
    one per triangle and cyclic order of its vertices.
    """
    out = []
    for t in itertools.combinations(POINTS, 3):
        if t[0] ^ t[1] ^ t[2] == 0:
            continue
        for a, b, c in (t, (t[0], t[2], t[1])):
            first = o.theta(a, b) * o.theta(a ^ b, c)
            second = o.theta(b, c) * o.theta(b ^ c, a)
            third = o.theta(c, a) * o.theta(c ^ a, b)
            out.append(first == second == third)
    return out


def is_coherent(o: Orientation) -> bool:
    return all(triangle_relations(o))


@lru_cache(maxsize=None)
def coherent_orientations() -> Tuple[Orientation, ...]:
    """Exhaustive search over the 2^7 choices of line cycles."""
    found = sorted(o for o in (Orientation.from_bits(b) for b in range(1 << 7)) if is_coherent(o))
    logger.debug(f"  → {len(found)} coherent orientations")
    return tuple(found)


def orientation_orbits(orientations: Sequence[Orientation]) -> List[List[Orientation]]:
    remaining = set(orientations)
    out = []
    while remaining:
        start = min(remaining)
        orbit = sorted({start.transformed(m) for m in collineation_maps()})
        out.append(orbit)
        remaining.difference_update(orbit)
    return out


# ================================================================== #
#  ORIENTATIONS FROM P¹(F7)                                            #
# ================================================================== #

def diagonal_partners(p: int) -> Dict[int, int]:
    """x ↦ q_x, where p q_x is a diagonal of the p-cube of x."""
    return {cube.point: cube.diagonal_partner(p) for cube in cubes_of_family("p")}


@lru_cache(maxsize=None)
def orientation_from_point(p: int) -> Orientation:
    """The line (xyz) is positive when the cross-ratio (p q_x; q_y q_z) equals 3."""
    q = diagonal_partners(p)
    cycles = []
    for x, y, z in fano_lines():
        value = cross_ratio(p, q[x], q[y], q[z])
        if value == 3:
            cycles.append((x, y, z))
        elif value == 5:
            cycles.append((x, z, y))
        else:
            raise RuntimeError(
                f"cross-ratio {value} for p={format_point(p)} on line {x}{y}{z}; expected 3 or 5"
            )
    return Orientation.from_cycles(cycles)


def rule_is_cyclic(p: int) -> bool:
    """The '= 3' verdict is the same for (xyz), (yzx) and (zxy)."""
    q = diagonal_partners(p)
    for x, y, z in fano_lines():
        verdicts = {cross_ratio(p, q[a], q[b], q[c]) == 3 for a, b, c in ((x, y, z), (y, z, x), (z, x, y))}
        if len(verdicts) != 1:
            return False
    return True


# ================================================================== #
#  ORIENTED TRIANGLES ↔ TRIPLES                                        #
# ================================================================== #

def oriented_triangle_to_triple(t: Triangle, sense: int = 1) -> FrozenSet[int]:
    """
    For each vertex v, take the middle point of the opposite side and the
    next vertex along the orientation; the three triangles so obtained
    correspond to the three pairs of a triple of P¹(F7).
    """
    if sense not in (1, -1):
        raise ValueError(f"sense must be ±1, got {sense}")
    a, b, c = t.vertices
    order = (a, b, c) if sense == 1 else (a, c, b)
    pairs_found = []
    for k, v in enumerate(order):
        nxt = order[(k + 1) % 3]
        derived = Triangle.of((v, t.middle_of_opposite_side(v), nxt))
        pairs_found.append(frozenset(pair_of_triangle()[derived]))
    triple = frozenset().union(*pairs_found)
    if len(triple) != 3 or len(set(pairs_found)) != 3:
        raise RuntimeError(f"oriented triangle {t} ({sense:+d}) does not give a triple")
    return triple


def oriented_triangle_triples() -> Dict[Tuple[Triangle, int], FrozenSet[int]]:
    return {(t, s): oriented_triangle_to_triple(t, s) for t in triangles() for s in (1, -1)}


def _sense_of(t: Triangle, cycle: Sequence[int]) -> int:
    a, b, c = t.vertices
    return 1 if tuple(cycle) in {(a, b, c), (b, c, a), (c, a, b)} else -1


def triangles_matching_diagonals(family: str) -> int:
    """
    Triangles whose two oriented triples are the neighbour triples of the
    diagonal named by their pair, in the `family` cube carrying it.
    """
    triples = oriented_triangle_triples()
    matched = 0
    for t in triangles():
        forward, backward = triples[(t, 1)], triples[(t, -1)]
        if forward != backward and {forward, backward} == diagonal_triples(pair_of_triangle()[t], family):
            matched += 1
    return matched


# ================================================================== #
#  PSL(2,7)-EQUIVARIANCE                                               #
# ================================================================== #

def orientation_equivariance_failures() -> int:
    """Pairs (g, p) with orientation_from_point(g·p) ≠ h·orientation_from_point(p)."""
    failures = 0
    for g in psl27_elements():
        h = induced_collineation(g)
        for p in P1_POINTS:
            if orientation_from_point(g[p]) != orientation_from_point(p).transformed(h):
                failures += 1
    return failures


def triple_equivariance_failures() -> int:
    """Pairs (g, oriented triangle) where the triple of the image is not g of the triple."""
    triples = oriented_triangle_triples()
    failures = 0
    for g in psl27_elements():
        h = induced_collineation(g)
        for (t, sense), triple in triples.items():
            a, b, c = t.vertices
            cycle = [apply_map(h, v) for v in ((a, b, c) if sense == 1 else (a, c, b))]
            image = Triangle.of(cycle)
            if triples[(image, _sense_of(image, cycle))] != frozenset(g[x] for x in triple):
                failures += 1
    if failures:
        logger.warning(f"  ⚠ {failures} oriented triangles break PSL(2,7)-equivariance")
    return failures
