from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from permgrp.schreier_sims import PermutationGroup

logger = logging.getLogger(__name__)

POINTS: Tuple[int, ...] = tuple(range(1, 8))

Line = Tuple[int, int, int]


def third_point(a: int, b: int) -> int:
    """Third point of the line through a and b; also the symmetric of a with respect to b."""
    if a == b:
        raise ValueError(f"no line through a single point {a}")
    return a ^ b


def fano_lines() -> Tuple[Line, ...]:
    """The seven XOR-closed triples, sorted."""
    lines = {tuple(sorted((a, b, a ^ b))) for a, b in itertools.combinations(POINTS, 2)}
    return tuple(sorted(lines))


def line_through(a: int, b: int) -> Line:
    return tuple(sorted((a, b, third_point(a, b))))


def is_collinear(a: int, b: int, c: int) -> bool:
    return a ^ b ^ c == 0


def lines_through(p: int) -> Tuple[Line, ...]:
    return tuple(line for line in fano_lines() if p in line)


def format_points(points: Sequence[int]) -> str:
    return "".join(str(p) for p in points)


@dataclass(frozen=True, order=True)
class Triangle:
    vertices: Tuple[int, int, int]

    def __post_init__(self):
        a, b, c = self.vertices
        if len({a, b, c}) != 3 or is_collinear(a, b, c):
            raise ValueError(f"{self.vertices} is not a triangle")

    @classmethod
    def of(cls, points: Sequence[int]) -> "Triangle":
        return cls(tuple(sorted(points)))

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    @property
    def sides(self) -> Tuple[Line, ...]:
        a, b, c = self.vertices
        return tuple(sorted((line_through(a, b), line_through(b, c), line_through(a, c))))

    @property
    def middle_points(self) -> FrozenSet[int]:
        a, b, c = self.vertices
        return frozenset((a ^ b, b ^ c, a ^ c))

    def middle_of_opposite_side(self, v: int) -> int:
        others = [x for x in self.vertices if x != v]
        return others[0] ^ others[1]

    @property
    def center(self) -> int:
        """The unique point on no side."""
        a, b, c = self.vertices
        return a ^ b ^ c

    def __str__(self) -> str:
        return format_points(self.vertices)


@lru_cache(maxsize=None)
def triangles() -> Tuple[Triangle, ...]:
    return tuple(
        Triangle(t) for t in itertools.combinations(POINTS, 3) if not is_collinear(*t)
    )


@lru_cache(maxsize=None)
def triangle_index() -> Dict[Triangle, int]:
    return {t: i for i, t in enumerate(triangles())}


# ================================================================== #
#  COLLINEATIONS                                                       #
# ================================================================== #

PointMap = Tuple[int, ...]   # m[p - 1] is the image of point p


@lru_cache(maxsize=None)
def collineation_maps() -> Tuple[PointMap, ...]:
    """All line-preserving permutations of 1..7 (brute force over 7!)."""
    out = []
    for images in itertools.permutations(POINTS):
        m = dict(zip(POINTS, images))
        if all(m[a ^ b] == m[a] ^ m[b] for a, b in itertools.combinations(POINTS, 2)):
            out.append(images)
    logger.debug(f"  → {len(out)} collineations")
    return tuple(out)


def apply_map(m: PointMap, p: int) -> int:
    return m[p - 1]


def collineations() -> PermutationGroup:
    """PSL(3,F2) as a permutation group on points 0..6 (= Fano points 1..7)."""
    gens = [[m[p - 1] - 1 for p in POINTS] for m in collineation_maps()]
    return PermutationGroup(gens, degree=7)


def triangle_permutation(m: PointMap) -> List[int]:
    index = triangle_index()
    return [index[Triangle.of(apply_map(m, v) for v in t.vertices)] for t in triangles()]


def collineations_on_triangles() -> PermutationGroup:
    return PermutationGroup([triangle_permutation(m) for m in collineation_maps()], degree=28)


def line_image(m: PointMap, line: Line) -> Line:
    return tuple(sorted(apply_map(m, p) for p in line))


def is_collineation(m: Dict[int, int]) -> bool:
    return all(m[a ^ b] == m[a] ^ m[b] for a, b in itertools.combinations(POINTS, 2))
