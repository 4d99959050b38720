from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import sympy

from rootlat.lattice import (
    Ambient,
    E6_SPACE,
    E8_SPACE,
    LatticeVector,
    a_space,
    d_space,
    inner,
    reflect,
)

logger = logging.getLogger(__name__)

_TYPE_PATTERN = re.compile(r"^([ADE])_?(\d+)$")

# Bourbaki simple roots of E8 in doubled coordinates:
#   α1 = ½(e1+e8) − ½(e2+…+e7), α2 = e1+e2, α3 = e2−e1, …, α8 = e7−e6
_E8_SIMPLE_DOUBLED = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)

# Minuscule seeds: ω1 of E6 = ⅔(e8−e7−e6) at scale 6, ω7 of E7 = e6 + ½(e8−e7) at scale 2
E6_MINUSCULE_SEED = (0, 0, 0, 0, 0, -4, -4, 4)
E7_MINUSCULE_SEED = (0, 0, 0, 0, 0, 2, -1, 1)


@dataclass(frozen=True)
class WeightSet:
    label: str
    ambient: Ambient
    weights: Tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    @cached_property
    def index(self) -> Dict[LatticeVector, int]:
        return {w: i for i, w in enumerate(self.weights)}

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "ambient": self.ambient.name,
            "scale": self.ambient.scale,
            "doubled": self.ambient.scale == 2,
            "vectors": [list(w.coords) for w in self.weights],
        }


@dataclass(frozen=True)
class RootSystem:
    """
    Simply-laced root system with a recorded base.

    `roots` is sorted lexicographically on stored coordinates; `simple_roots`
    keeps the Bourbaki order for the named types and the caller's order for
    subsystems.
    """

    type_label: str
    ambient: Ambient
    simple_roots: Tuple[LatticeVector, ...]
    roots: Tuple[LatticeVector, ...]

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def root_set(self) -> FrozenSet[LatticeVector]:
        return frozenset(self.roots)

    @cached_property
    def index(self) -> Dict[LatticeVector, int]:
        return {r: i for i, r in enumerate(self.roots)}

    def is_root(self, v: LatticeVector) -> bool:
        return v in self.root_set

    @cached_property
    def simple_coefficients(self) -> Dict[LatticeVector, Tuple[int, ...]]:
        """Coordinates of every positive root in the base, by repeated addition of simple roots."""
        coefficients: Dict[LatticeVector, Tuple[int, ...]] = {}
        queue = deque()
        for i, alpha in enumerate(self.simple_roots):
            c = tuple(1 if j == i else 0 for j in range(self.rank))
            coefficients[alpha] = c
            queue.append(alpha)
        while queue:
            beta = queue.popleft()
            for i, alpha in enumerate(self.simple_roots):
                gamma = beta + alpha
                if gamma in self.root_set and gamma not in coefficients:
                    c = list(coefficients[beta])
                    c[i] += 1
                    coefficients[gamma] = tuple(c)
                    queue.append(gamma)
        return coefficients

    @cached_property
    def positive_roots(self) -> Tuple[LatticeVector, ...]:
        return tuple(sorted(self.simple_coefficients))

    def height(self, root: LatticeVector) -> int:
        if root in self.simple_coefficients:
            return sum(self.simple_coefficients[root])
        return -sum(self.simple_coefficients[-root])

    @cached_property
    def highest_root(self) -> LatticeVector:
        return max(self.positive_roots, key=lambda r: (self.height(r), r))

    @cached_property
    def extended_simple_roots(self) -> Tuple[LatticeVector, ...]:
        """Affine diagram nodes: index 0 is −(highest root), then α1..αn."""
        return (-self.highest_root,) + self.simple_roots

    def to_dict(self) -> dict:
        return {
            "type_label": self.type_label,
            "ambient": self.ambient.name,
            "scale": self.ambient.scale,
            "doubled": self.ambient.scale == 2,
            "simple_roots": [list(a.coords) for a in self.simple_roots],
            "vectors": [list(r.coords) for r in self.roots],
        }


# ================================================================== #
#  CONSTRUCTION                                                        #
# ================================================================== #

def parse_type_label(type_label: str) -> Tuple[str, int]:
    match = _TYPE_PATTERN.match(type_label.strip())
    if not match:
        raise ValueError(f"unknown root system type: {type_label!r}")
    family, rank = match.group(1), int(match.group(2))
    if family == "A" and rank >= 1:
        return family, rank
    if family == "D" and rank >= 4:
        return family, rank
    if family == "E" and rank in (6, 7, 8):
        return family, rank
    raise ValueError(f"unknown root system type: {type_label!r} (invalid rank)")


def simple_roots_for(family: str, rank: int) -> Tuple[LatticeVector, ...]:
    if family == "A":
        ambient = a_space(rank)
        roots = []
        for i in range(rank):
            c = [0] * (rank + 1)
            c[i], c[i + 1] = 2, -2
            roots.append(LatticeVector.of(ambient, c))
        return tuple(roots)
    if family == "D":
        ambient = d_space(rank)
        roots = []
        for i in range(rank - 1):
            c = [0] * rank
            c[i], c[i + 1] = 2, -2
            roots.append(LatticeVector.of(ambient, c))
        c = [0] * rank
        c[rank - 2], c[rank - 1] = 2, 2
        roots.append(LatticeVector.of(ambient, c))
        return tuple(roots)
    # E series: Bourbaki α1..α_rank inside R^8
    if rank == 6:
        return tuple(
            LatticeVector.of(E6_SPACE, (3 * x for x in _E8_SIMPLE_DOUBLED[i]))
            for i in range(6)
        )
    return tuple(LatticeVector.of(E8_SPACE, _E8_SIMPLE_DOUBLED[i]) for i in range(rank))


def reflection_closure(generators: Sequence[LatticeVector]) -> Tuple[LatticeVector, ...]:
    """All vectors reachable from `generators` by their own reflections."""
    seen = set(generators)
    queue = deque(generators)
    while queue:
        v = queue.popleft()
        for alpha in generators:
            w = reflect(v, alpha)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen))


def build_root_system(type_label: str) -> RootSystem:
    family, rank = parse_type_label(type_label)
    simple = simple_roots_for(family, rank)
    roots = reflection_closure(simple)
    label = f"{family}{rank}"
    logger.debug(f"  → built {label}: {len(roots)} roots")
    return RootSystem(label, simple[0].ambient, simple, roots)


def weyl_orbit(seed: LatticeVector, rs: RootSystem, label: str = "") -> WeightSet:
    """Orbit of `seed` under the reflections of `rs`, canonically ordered."""
    if seed.is_zero():
        return WeightSet(label or "0", seed.ambient, (seed,))
    seen = {seed}
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for alpha in rs.simple_roots:
            w = reflect(v, alpha)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return WeightSet(label or f"W({rs.type_label})·{seed}", seed.ambient, tuple(sorted(seen)))


def minuscule_weights_e6() -> WeightSet:
    rs = build_root_system("E6")
    return weyl_orbit(LatticeVector.of(E6_SPACE, E6_MINUSCULE_SEED), rs, label="J")


def minuscule_weights_e7() -> WeightSet:
    rs = build_root_system("E7")
    return weyl_orbit(LatticeVector.of(E8_SPACE, E7_MINUSCULE_SEED), rs, label="V")


def adjoint_weights_e8() -> WeightSet:
    rs = build_root_system("E8")
    return WeightSet("adjoint", rs.ambient, rs.roots)


def reflection_permutations(rs: RootSystem, points: Sequence[LatticeVector],
                            reflecting: Optional[Sequence[LatticeVector]] = None) -> List[List[int]]:
    """Image arrays of reflections acting on `points` (a reflection-stable set)."""
    index = {p: i for i, p in enumerate(points)}
    perms = []
    for alpha in (reflecting if reflecting is not None else rs.simple_roots):
        perms.append([index[reflect(p, alpha)] for p in points])
    return perms


def weyl_group_order(rs: RootSystem) -> int:
    """|W| from the permutation action of simple reflections on the roots."""
    from permgrp.schreier_sims import PermutationGroup

    if rs.rank == 0:
        return 1
    group = PermutationGroup(reflection_permutations(rs, rs.roots), degree=len(rs.roots))
    return group.order()


# ================================================================== #
#  SUBSYSTEMS & TYPE RECOGNITION                                       #
# ================================================================== #

def _type_from_counts(rank: int, count: int) -> str:
    if count == rank * (rank + 1):
        return f"A{rank}"
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return f"D{rank}"
    exceptional = {(6, 72): "E6", (7, 126): "E7", (8, 240): "E8"}
    if (rank, count) in exceptional:
        return exceptional[(rank, count)]
    raise ValueError(f"no simply-laced type with rank {rank} and {count} roots")


def _type_sort_key(label: str) -> Tuple[int, int]:
    return (-int(label[1:]), "EDA".index(label[0]))


def classify_root_set(vectors: Sequence[Sequence[int]]) -> List[str]:
    """
    Split a simply-laced root set into irreducible components (non-orthogonality
    graph) and name each one from its rank and size. Sorted by decreasing rank.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vectors)))
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if sum(a * b for a, b in zip(vectors[i], vectors[j])) != 0:
                graph.add_edge(i, j)
    labels = []
    for component in nx.connected_components(graph):
        members = [vectors[i] for i in sorted(component)]
        rank = sympy.Matrix(members).rank()
        labels.append(_type_from_counts(rank, len(members)))
    return sorted(labels, key=_type_sort_key)


def format_type(labels: Iterable[str]) -> str:
    labels = list(labels)
    return "x".join(labels) if labels else "0"


def subsystem(rs: RootSystem, selection: Sequence[LatticeVector]) -> RootSystem:
    """Root subsystem generated by `selection`, kept in the ambient of `rs`."""
    for v in selection:
        if v not in rs.root_set:
            raise ValueError(f"{v} is not a root of {rs.type_label}")
    if not selection:
        return RootSystem("0", rs.ambient, (), ())
    roots = reflection_closure(tuple(selection))
    label = format_type(classify_root_set([r.coords for r in roots]))
    return RootSystem(label, rs.ambient, tuple(selection), roots)


def is_orthogonal_family(vectors: Sequence[LatticeVector]) -> bool:
    return all(inner(a, b) == 0 for i, a in enumerate(vectors) for b in vectors[i + 1:])
