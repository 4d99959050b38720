from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from fano.plane import (
    Line,
    PointMap,
    Triangle,
    fano_lines,
    is_collineation,
    line_image,
    triangles,
)
from fano.projective_line import (
    P1_POINTS,
    cross_ratio,
    format_points,
    HARMONIC,
    pairs,
    parse_points,
    psl27_elements,
)
from fano.reference_tables import DRAWN_TO_XOR, FIGURE_CUBES, TRIANGLE_PAIR_TABLE, drawn_points

logger = logging.getLogger(__name__)

# Cube vertex v = x + 2y + 4z; edges flip one bit.
EDGES: Tuple[Tuple[int, int], ...] = tuple(
    (v, v ^ (1 << k)) for v in range(8) for k in range(3) if v < v ^ (1 << k)
)
DIAGONALS: Tuple[Tuple[int, int], ...] = tuple((v, v ^ 7) for v in range(4))


def _faces() -> Tuple[Tuple[int, int, int, int], ...]:
    out = []
    for k in range(3):
        i, j = [b for b in range(3) if b != k]
        for c in (0, 1):
            base = c << k
            # cyclic order around the face
            out.append((base, base | 1 << i, base | 1 << i | 1 << j, base | 1 << j))
    return tuple(out)


FACES = _faces()


@lru_cache(maxsize=None)
def cube_symmetries() -> Tuple[Tuple[int, ...], ...]:
    """The 48 graph automorphisms: a permutation of the three bits followed by a translation."""
    out = []
    for perm in itertools.permutations(range(3)):
        for t in range(8):
            out.append(tuple(
                sum(((v >> perm[b]) & 1) << b for b in range(3)) ^ t for v in range(8)
            ))
    return tuple(out)


def canonical_labels(labels: Sequence[int]) -> Tuple[int, ...]:
    return min(tuple(labels[s[v]] for v in range(8)) for s in cube_symmetries())


def face_key(labels: Sequence[int], face: Sequence[int]) -> FrozenSet[FrozenSet[int]]:
    w, x, y, z = (labels[v] for v in face)
    return frozenset((frozenset((w, y)), frozenset((x, z))))


def is_harmonic_labeling(labels: Sequence[int]) -> bool:
    for w, x, y, z in FACES:
        if cross_ratio(labels[w], labels[y], labels[x], labels[z]) != HARMONIC:
            return False
    return True


def labels_from_figure(bottom: str, top: str) -> Tuple[int, ...]:
    """Bottom face b0 b1 b2 b3 sits on vertices 0 1 3 2, the top face above it on 4 5 7 6."""
    b, t = parse_points(bottom), parse_points(top)
    labels = [0] * 8
    for vertex, value in zip((0, 1, 3, 2, 4, 5, 7, 6), b + t):
        labels[vertex] = value
    return tuple(labels)


@dataclass(frozen=True)
class HarmonicCube:
    labels: Tuple[int, ...]
    family: str          # "p" or "l"
    name: str            # Fano point ("3") or line ("145"), XOR labels

    @cached_property
    def edges(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset((self.labels[a], self.labels[b])) for a, b in EDGES)

    @cached_property
    def diagonals(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset((self.labels[a], self.labels[b])) for a, b in DIAGONALS)

    @cached_property
    def faces(self) -> FrozenSet[FrozenSet[FrozenSet[int]]]:
        return frozenset(face_key(self.labels, f) for f in FACES)

    def vertex_of(self, point: int) -> int:
        return self.labels.index(point)

    def diagonal_partner(self, point: int) -> int:
        return self.labels[self.vertex_of(point) ^ 7]

    def neighbours(self, point: int) -> FrozenSet[int]:
        v = self.vertex_of(point)
        return frozenset(self.labels[v ^ (1 << k)] for k in range(3))

    @property
    def point(self) -> int:
        if self.family != "p":
            raise ValueError(f"ℓ-cube {self.name} has no point")
        return int(self.name)

    @property
    def line(self) -> Line:
        if self.family != "l":
            raise ValueError(f"p-cube {self.name} has no line")
        return tuple(int(ch) for ch in self.name)

    def __str__(self) -> str:
        return f"({self.name}) " + format_points(self.labels[v] for v in (0, 1, 3, 2)) \
            + "/" + format_points(self.labels[v] for v in (4, 5, 7, 6))


# ================================================================== #
#  ENUMERATION                                                         #
# ================================================================== #

@lru_cache(maxsize=None)
def harmonic_labelings() -> Tuple[Tuple[int, ...], ...]:
    """Canonical forms of all harmonic labelings of the cube by P¹(F7)."""
    found = set()
    count = 0
    for labels in itertools.permutations(P1_POINTS):
        if is_harmonic_labeling(labels):
            count += 1
            found.add(canonical_labels(labels))
    logger.debug(f"  → {count} harmonic labelings, {len(found)} up to symmetry")
    return tuple(sorted(found))


def act(g: Sequence[int], labels: Sequence[int]) -> Tuple[int, ...]:
    return canonical_labels([g[x] for x in labels])


def psl_orbits(cubes: Sequence[Tuple[int, ...]]) -> List[List[Tuple[int, ...]]]:
    remaining = set(cubes)
    out = []
    while remaining:
        start = min(remaining)
        orbit = sorted({act(g, start) for g in psl27_elements()})
        out.append(orbit)
        remaining.difference_update(orbit)
    return out


def _figure_names() -> Dict[Tuple[int, ...], Tuple[str, str]]:
    """canonical labels -> (family, XOR name) from the printed cubes."""
    out = {}
    for key, (bottom, top) in FIGURE_CUBES.items():
        labels = canonical_labels(labels_from_figure(bottom, top))
        if len(key) == 1:
            out[labels] = ("p", str(DRAWN_TO_XOR[int(key)]))
        else:
            out[labels] = ("l", "".join(str(p) for p in sorted(drawn_points(key))))
    return out


@lru_cache(maxsize=None)
def harmonic_cubes() -> Tuple[HarmonicCube, ...]:
    """
    The 14 harmonic cubes, named after the printed figure: p-cubes by Fano
    points, ℓ-cubes by Fano lines. The two families are the PSL(2,F7)-orbits.
    """
    labelings = harmonic_labelings()
    names = _figure_names()
    for labels in names:
        if labels not in labelings:
            raise RuntimeError(f"printed cube {format_points(labels)} is not harmonic")

    cubes = []
    for orbit in psl_orbits(labelings):
        families = {names[c][0] for c in orbit if c in names}
        if len(families) != 1:
            raise RuntimeError(f"PSL(2,7)-orbit of size {len(orbit)} mixes printed families {families}")
        for labels in orbit:
            family, name = names[labels]
            cubes.append(HarmonicCube(labels, family, name))
    cubes.sort(key=lambda c: (c.family != "p", c.name))
    return tuple(cubes)


def cubes_of_family(family: str) -> Tuple[HarmonicCube, ...]:
    return tuple(c for c in harmonic_cubes() if c.family == family)


def harmonic_faces() -> FrozenSet[FrozenSet[FrozenSet[int]]]:
    return frozenset(f for c in harmonic_cubes() for f in c.faces)


# ================================================================== #
#  TRIANGLES ↔ PAIRS                                                   #
# ================================================================== #

@lru_cache(maxsize=None)
def triangle_pair_correspondence() -> Dict[Tuple[int, int], Triangle]:
    """
    Pair {a, b} of P¹(F7) -> Fano triangle. The p-cubes having {a, b} as an
    edge name the vertices, the ℓ-cubes having it as an edge name the sides.
    """
    out: Dict[Tuple[int, int], Triangle] = {}
    for a, b in pairs():
        edge = frozenset((a, b))
        vertices = [c.point for c in cubes_of_family("p") if edge in c.edges]
        sides = sorted(c.line for c in cubes_of_family("l") if edge in c.edges)
        if len(vertices) != 3 or len(sides) != 3:
            raise RuntimeError(f"pair {format_points((a, b))} is an edge of "
                               f"{len(vertices)} p-cubes and {len(sides)} ℓ-cubes")
        triangle = Triangle.of(vertices)
        if tuple(sides) != triangle.sides:
            raise RuntimeError(f"pair {format_points((a, b))}: ℓ-cubes {sides} "
                               f"are not the sides of {triangle}")
        out[(a, b)] = triangle
    if len(set(out.values())) != len(triangles()):
        raise RuntimeError("triangle-pair correspondence is not a bijection")
    return out


@lru_cache(maxsize=None)
def pair_of_triangle() -> Dict[Triangle, Tuple[int, int]]:
    return {t: pair for pair, t in triangle_pair_correspondence().items()}


def to_drawn_labels(points) -> str:
    """XOR labels -> the printed labels, sorted (DRAWN_TO_XOR is an involution)."""
    return "".join(str(p) for p in sorted(DRAWN_TO_XOR[x] for x in points))


def triangle_pair_rows() -> List[Tuple[str, str]]:
    """(pair, triangle) in the printed labels, pairs in canonical order."""
    return [(format_points(pair), to_drawn_labels(t.vertices))
            for pair, t in sorted(triangle_pair_correspondence().items())]


def printed_rows_matched() -> int:
    return sum(TRIANGLE_PAIR_TABLE.get(pair) == triangle for pair, triangle in triangle_pair_rows())


def induced_collineation(g: Sequence[int]) -> PointMap:
    """The collineation by which g ∈ PSL(2,7) permutes the p-cubes."""
    by_labels = {c.labels: c for c in harmonic_cubes()}
    images = {}
    for cube in cubes_of_family("p"):
        images[cube.point] = by_labels[act(g, cube.labels)].point
    if not is_collineation(images):
        raise RuntimeError("PSL(2,7) element does not induce a collineation")
    return tuple(images[p] for p in range(1, 8))


def check_equivariance() -> bool:
    """Every g ∈ PSL(2,7) acts compatibly on p-cubes, ℓ-cubes and the correspondence."""
    by_labels = {c.labels: c for c in harmonic_cubes()}
    correspondence = triangle_pair_correspondence()
    for g in psl27_elements():
        h = induced_collineation(g)
        for cube in cubes_of_family("l"):
            if by_labels[act(g, cube.labels)].line != line_image(h, cube.line):
                return False
        for (a, b), t in correspondence.items():
            image_pair = tuple(sorted((g[a], g[b])))
            if correspondence[image_pair] != Triangle.of(h[v - 1] for v in t.vertices):
                return False
    return True


def diagonal_triples(pair: Tuple[int, int], family: str) -> FrozenSet[FrozenSet[int]]:
    """Neighbours of p and of q in the unique cube of `family` with diagonal {p, q}."""
    p, q = pair
    diagonal = frozenset(pair)
    matches = [c for c in cubes_of_family(family) if diagonal in c.diagonals]
    if len(matches) != 1:
        raise RuntimeError(f"{len(matches)} {family}-cubes have diagonal {format_points(pair)}")
    cube = matches[0]
    return frozenset((cube.neighbours(p), cube.neighbours(q)))


def format_pair(pair: Tuple[int, int]) -> str:
    return format_points(pair)


def fano_lines_as_text() -> List[str]:
    return ["".join(str(p) for p in line) for line in fano_lines()]


def face_multiplicities(family: str) -> Counter:
    """How many cubes of `family` contain each harmonic face."""
    return Counter(f for c in cubes_of_family(family) for f in c.faces)
