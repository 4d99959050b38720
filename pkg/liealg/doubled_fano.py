"""
The (14_6, 28_3) configuration of the fourteen e8 quadruples.

Points are the quadruples, lines the triples (ijkl), (klmn), (ijmn). The
quadruple {x : u·x = c} (labels x + 1) sits at the point (u, c) of PG(3,2);
the configuration is PG(3,2) with p∞ = (0, 1) and its seven lines removed.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from fano.reference_tables import PAIR_PARTITIONS, XOR_ARRAY
from liealg.ograded import e8_factors

logger = logging.getLogger(__name__)

P_INFINITY = 0b1000

Quadruple = FrozenSet[int]
Partition = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class DoubledFano:
    points: Tuple[Quadruple, ...]
    lines: Tuple[Tuple[int, int, int], ...]

    def lines_through(self, p: int) -> List[Tuple[int, int, int]]:
        return [line for line in self.lines if p in line]

    def collinear_with(self, p: int) -> FrozenSet[int]:
        return frozenset(q for line in self.lines_through(p) for q in line if q != p)

    def antipode(self, p: int) -> int:
        """The unique other point not joined to p."""
        others = [q for q in range(len(self.points)) if q != p and q not in self.collinear_with(p)]
        if len(others) != 1:
            raise RuntimeError(f"point {p} has {len(others)} non-collinear partners")
        return others[0]

    def name(self, p: int) -> str:
        return "".join(str(x) for x in sorted(self.points[p]))


@lru_cache(maxsize=None)
def doubled_fano_configuration() -> DoubledFano:
    points = tuple(frozenset(x + 1 for x in f.slots) for f in e8_factors())
    index = {q: k for k, q in enumerate(points)}
    lines = set()
    for a, b in itertools.combinations(range(len(points)), 2):
        if len(points[a] & points[b]) == 2:
            c = index[points[a] ^ points[b]]
            lines.add(tuple(sorted((a, b, c))))
    return DoubledFano(points, tuple(sorted(lines)))


def parameters(config: DoubledFano) -> Tuple[int, int, int, int]:
    """(points, lines per point, lines, points per line)."""
    degrees = {len(config.lines_through(p)) for p in range(len(config.points))}
    sizes = {len(set(line)) for line in config.lines}
    if len(degrees) != 1 or len(sizes) != 1:
        raise RuntimeError(f"irregular configuration: degrees {degrees}, line sizes {sizes}")
    return len(config.points), degrees.pop(), len(config.lines), sizes.pop()


# ================================================================== #
#  PG(3,2)                                                             #
# ================================================================== #

def pg_coordinate(quadruple: Quadruple) -> int:
    """(u, c) packed as u | c << 3, for quadruple = {x : u·x = c}."""
    xs = [x - 1 for x in quadruple]
    for u in range(1, 8):
        values = {bin(u & x).count("1") & 1 for x in xs}
        if len(values) == 1 and len(xs) == 4:
            return u | (values.pop() << 3)
    raise ValueError(f"{sorted(quadruple)} is not an affine plane of F2³")


def is_pg32_model(config: DoubledFano) -> bool:
    """Coordinates hit PG(3,2) minus p∞, and lines are the lines missing p∞."""
    coords = [pg_coordinate(q) for q in config.points]
    if sorted(coords) != sorted(v for v in range(1, 16) if v != P_INFINITY):
        return False
    ours = {frozenset(coords[k] for k in line) for line in config.lines}
    theirs = {
        frozenset((a, b, a ^ b)) for a, b in itertools.combinations(range(1, 16), 2)
        if P_INFINITY not in (a, b, a ^ b)
    }
    return ours == theirs


def antipodes_are_pinfinity_partners(config: DoubledFano) -> bool:
    coords = [pg_coordinate(q) for q in config.points]
    return all(coords[config.antipode(p)] == coords[p] ^ P_INFINITY for p in range(len(config.points)))


def pencil_pairs(config: DoubledFano, p: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Pairs of lines through p whose four other points lie on two lines
    through the antipode p*.
    """
    star = config.antipode(p)
    through_star = [set(line) - {star} for line in config.lines_through(star)]
    out = []
    for a, b in itertools.combinations(config.lines_through(p), 2):
        rest = (set(a) | set(b)) - {p}
        covered = [s for s in through_star if s <= rest]
        if len(covered) == 2 and covered[0] | covered[1] == rest:
            out.append((a, b))
    return out


def pencils_split_in_pairs(config: DoubledFano) -> bool:
    for p in range(len(config.points)):
        pairs = pencil_pairs(config, p)
        used = [line for pair in pairs for line in pair]
        if len(pairs) != 3 or len(set(used)) != 6:
            return False
    return True


def sub_configurations(config: DoubledFano) -> Dict[str, int]:
    """Planes of PG(3,2): Fano planes avoiding p∞ and pointed planes (6_2, 4_3) through it."""
    coords = [pg_coordinate(q) for q in config.points]
    fano, pointed = 0, 0
    for a in range(1, 16):
        members = {k for k, v in enumerate(coords) if not bin(a & v).count("1") & 1}
        inside = [line for line in config.lines if set(line) <= members]
        if a & P_INFINITY:
            if len(members) == 7 and len(inside) == 7:
                fano += 1
        elif len(members) == 6 and len(inside) == 4:
            pointed += 1
    return {"fano": fano, "pointed": pointed}


# ================================================================== #
#  XOR ARRAY & PARTITIONS                                              #
# ================================================================== #

def xor_array() -> np.ndarray:
    labels = np.arange(8)
    return np.bitwise_xor.outer(labels, labels)


def array_matches_xor() -> bool:
    return bool(np.array_equal(np.array(XOR_ARRAY), xor_array()))


def partition_of(j: int) -> Partition:
    """Cells holding j in the XOR array, as pairs of labels 1..8."""
    if not 1 <= j <= 7:
        raise ValueError(f"partition index must be in 1..7, got {j}")
    return tuple((l + 1, (l ^ j) + 1) for l in range(8) if l < l ^ j)


def format_partition(partition: Partition) -> str:
    return "".join(f"({a}{b})" for a, b in partition)


def partitions_match_printed() -> bool:
    return tuple(format_partition(partition_of(j)) for j in range(1, 8)) == PAIR_PARTITIONS


def partition_quadruples(partition: Partition) -> FrozenSet[Quadruple]:
    return frozenset(frozenset(a) | frozenset(b) for a, b in itertools.combinations(partition, 2))


def partition_grades(j: int) -> FrozenSet[int]:
    """Grades of the six quadruples of partition j: the Fano line orthogonal to j."""
    return frozenset(pg_coordinate(q) & 7 for q in partition_quadruples(partition_of(j)))


def partitions_index_fano_lines(config: DoubledFano) -> bool:
    """Each partition carries three antipodal pairs, and two partitions meet in one pair."""
    point_index = {q: k for k, q in enumerate(config.points)}
    for j in range(1, 8):
        quads = partition_quadruples(partition_of(j))
        if len(quads) != 6 or partition_grades(j) != frozenset(u for u in range(1, 8) if not bin(u & j).count("1") & 1):
            return False
        if any(config.points[config.antipode(point_index[q])] not in quads for q in quads):
            return False
    for j, k in itertools.combinations(range(1, 8), 2):
        common = partition_quadruples(partition_of(j)) & partition_quadruples(partition_of(k))
        if len(common) != 2:
            return False
        a, b = (point_index[q] for q in common)
        if config.antipode(a) != b:
            return False
    return True


def doubled_fano_report() -> dict:
    config = doubled_fano_configuration()
    report = {
        "parameters": list(parameters(config)),
        "pg32": is_pg32_model(config),
        "antipodes": antipodes_are_pinfinity_partners(config),
        "pencils": pencils_split_in_pairs(config),
        "sub_configurations": sub_configurations(config),
        "xor_array": array_matches_xor(),
        "partitions": partitions_match_printed(),
        "partition_incidence": partitions_index_fano_lines(config),
    }
    report["ok"] = (report["parameters"] == [14, 6, 28, 3] and report["pg32"] and report["antipodes"]
                    and report["pencils"] and report["sub_configurations"] == {"fano": 8, "pointed": 7}
                    and report["xor_array"] and report["partitions"] and report["partition_incidence"])
    return report
