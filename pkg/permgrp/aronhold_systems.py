from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from fano.cubes import triangle_pair_correspondence
from fano.plane import POINTS, Triangle, fano_lines
from fano.projective_line import P1_POINTS, format_point, parse_point
from fano.reference_tables import T_SYSTEM_COLUMNS, T_SYSTEM_TABLE, drawn_points

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TriangleSystem:
    """T_i: the triangles of the seven pairs (ij), j != i, of P¹(F7)."""

    label: int
    triangles: FrozenSet[Triangle]

    @property
    def name(self) -> str:
        return f"T{format_point(self.label)}"

    def sorted_triangles(self) -> List[Triangle]:
        return sorted(self.triangles)


@lru_cache(maxsize=None)
def aronhold_triangle_systems() -> Tuple[TriangleSystem, ...]:
    correspondence = triangle_pair_correspondence()
    systems = []
    for i in P1_POINTS:
        members = frozenset(correspondence[tuple(sorted((i, j)))] for j in P1_POINTS if j != i)
        systems.append(TriangleSystem(i, members))
    return tuple(systems)


# ================================================================== #
#  PROPERTIES                                                          #
# ================================================================== #

def is_steiner_system(system: TriangleSystem) -> bool:
    """Any two points are vertices of exactly one triangle."""
    counts = Counter()
    for t in system.triangles:
        for pair in itertools.combinations(t.vertices, 2):
            counts[pair] += 1
    return len(system.triangles) == 7 and all(
        counts[pair] == 1 for pair in itertools.combinations(POINTS, 2)
    )


def triangles_appear_twice(systems: Tuple[TriangleSystem, ...]) -> bool:
    counts = Counter(t for s in systems for t in s.triangles)
    return len(counts) == 28 and set(counts.values()) == {2}


def centers_cover_plane(system: TriangleSystem) -> bool:
    return sorted(t.center for t in system.triangles) == list(POINTS)


def points_in_three(system: TriangleSystem) -> bool:
    counts = Counter(v for t in system.triangles for v in t.vertices)
    return all(counts[p] == 3 for p in POINTS)


def lines_in_three(system: TriangleSystem) -> bool:
    counts = Counter(side for t in system.triangles for side in t.sides)
    return all(counts[line] == 3 for line in fano_lines())


@dataclass
class SystemsReport:
    steiner: bool
    twice: bool
    centers: bool
    points: bool
    lines: bool
    table_rows_matched: int
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all((self.steiner, self.twice, self.centers, self.points, self.lines)) \
            and self.table_rows_matched == 8


# ================================================================== #
#  PRINTED TABLE                                                       #
# ================================================================== #

def printed_system(label: str) -> Dict[Tuple[int, ...], Triangle]:
    """Column line (XOR labels) -> triangle, for one printed row."""
    row = T_SYSTEM_TABLE[label]
    return {
        tuple(sorted(drawn_points(header))): Triangle.of(drawn_points(cell))
        for header, cell in zip(T_SYSTEM_COLUMNS, row)
    }


def column_of(system: TriangleSystem, line: Tuple[int, ...]) -> Triangle:
    """The unique triangle of the system with no vertex on `line`."""
    avoiding = [t for t in system.triangles if not set(t.vertices) & set(line)]
    if len(avoiding) != 1:
        raise RuntimeError(f"{system.name}: {len(avoiding)} triangles avoid line {line}")
    return avoiding[0]


def match_printed_table(systems: Tuple[TriangleSystem, ...]) -> Tuple[int, List[str]]:
    by_label = {s.label: s for s in systems}
    matched, mismatches = 0, []
    for label in T_SYSTEM_TABLE:
        system = by_label[parse_point(label)]
        row_ok = True
        for line, printed in printed_system(label).items():
            if set(printed.vertices) & set(line):
                mismatches.append(f"T{label}: printed {printed} meets its column line {line}")
                row_ok = False
            elif column_of(system, line) != printed:
                mismatches.append(f"T{label}: column {line} computed {column_of(system, line)}, printed {printed}")
                row_ok = False
        matched += row_ok
    return matched, mismatches


def verify_triangle_systems() -> SystemsReport:
    systems = aronhold_triangle_systems()
    matched, mismatches = match_printed_table(systems)
    report = SystemsReport(
        steiner=all(is_steiner_system(s) for s in systems),
        twice=triangles_appear_twice(systems),
        centers=all(centers_cover_plane(s) for s in systems),
        points=all(points_in_three(s) for s in systems),
        lines=all(lines_in_three(s) for s in systems),
        table_rows_matched=matched,
        mismatches=mismatches,
    )
    for m in mismatches:
        logger.warning(f"  ⚠ {m}")
    return report
