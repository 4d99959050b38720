"""
The bitangent group acting on the 28 triangles of the Fano plane.

"The symmetric point of a with respect to b" is the third point of the line
ab, that is a ⊕ b. Four families of involutions generate the group:

    σ_T      one per triangle T       (the transpositions s_ij)
    σ_p      one per point p          ┐
    σ_ℓ      one per line ℓ           ├ the 35 bifids, split 7 + 7 + 21
    σ_{p,ℓ}  one per flag p ∈ ℓ       ┘
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from fano.plane import (
    POINTS,
    Line,
    Triangle,
    collineation_maps,
    fano_lines,
    lines_through,
    triangle_index,
    triangle_permutation,
    triangles,
)
from permgrp.schreier_sims import PermutationGroup, as_perm, cycles, is_involution

logger = logging.getLogger(__name__)

HESSE_GROUP_ORDER = 1451520

# "the symmetric point with respect to the center" does not say which point
# is reflected. Reflecting v collapses pairs of source triangles onto one
# image; reflecting p gives an involution. resolve_sigma_reading() re-derives this.
SIGMA_READING = "p"

TriangleMap = Callable[[Triangle], Optional[Triangle]]


class SigmaConstructionError(RuntimeError):
    """A σ-rule is not a well-defined involution on the triangles."""


# ================================================================== #
#  ELEMENTARY TRANSFORMATIONS                                          #
# ================================================================== #

def _sigma_t_partial(t: Triangle, reading: str) -> Dict[Triangle, Triangle]:
    """
    σ_T on the triangles {v, c, p}: v a vertex of T, c its center, p the
    middle point of a side of T through v. The image is {p, w, v⊕w} where w
    is the symmetric point of p (reading "p") or of v (reading "v") with
    respect to c.
    """
    if reading not in ("p", "v"):
        raise ValueError(f"unknown σ_T reading {reading!r}")
    c = t.center
    out: Dict[Triangle, Triangle] = {}
    for v in t.vertices:
        for u in t.vertices:
            if u == v:
                continue
            p = u ^ v
            source = Triangle.of((v, c, p))
            w = (p if reading == "p" else v) ^ c
            try:
                image = Triangle.of((p, w, v ^ w))
            except ValueError:
                raise SigmaConstructionError(f"σ_{t} ({reading}) degenerates on {source}")
            out[source] = image
    return out


def sigma_t(t: Triangle, reading: str = SIGMA_READING) -> List[int]:
    partial = _sigma_t_partial(t, reading)
    return _involution_from_partial(partial, f"σ_{t}")


def sigma_p(p: int) -> List[int]:
    def image(t: Triangle) -> Optional[Triangle]:
        for v in t.vertices:
            if t.middle_of_opposite_side(v) == p:
                others = [x for x in t.vertices if x != v]
                return Triangle.of(others + [v ^ p])
        return None

    return _permutation_from_rule(image, f"σ_{p}")


def sigma_line(line: Line) -> List[int]:
    def image(t: Triangle) -> Optional[Triangle]:
        on_line = [x for x in t.vertices if x in line]
        if len(on_line) != 1:
            return None
        v = on_line[0]
        return Triangle.of([v] + [x ^ v for x in t.vertices if x != v])

    return _permutation_from_rule(image, f"σ_{''.join(map(str, line))}")


def sigma_flag(p: int, line: Line) -> List[int]:
    if p not in line:
        raise ValueError(f"point {p} is not on line {line}")
    m_choices = lines_through(p)

    def image(t: Triangle) -> Optional[Triangle]:
        on_line = [x for x in t.vertices if x in line]
        if len(on_line) != 1 or on_line[0] == p:
            return None
        v = on_line[0]
        if t.middle_of_opposite_side(v) != p:
            return None
        side = tuple(sorted([x for x in t.vertices if x != v] + [p]))
        # the symmetric of the side with respect to ℓ is the third line through p
        m = next(l for l in m_choices if l != tuple(line) and l != side)
        return Triangle.of([v ^ p] + [x for x in m if x != p])

    return _permutation_from_rule(image, f"σ_{p},{''.join(map(str, line))}")


def _permutation_from_rule(rule: TriangleMap, name: str) -> List[int]:
    partial = {}
    for t in triangles():
        try:
            image = rule(t)
        except ValueError:
            raise SigmaConstructionError(f"{name} degenerates on {t}")
        if image is not None:
            partial[t] = image
    return _involution_from_partial(partial, name)


def _involution_from_partial(partial: Dict[Triangle, Triangle], name: str) -> List[int]:
    """Extend a partial map by its inverse and the identity; it must be an involution."""
    full: Dict[Triangle, Triangle] = {}
    for source, image in partial.items():
        for a, b in ((source, image), (image, source)):
            if full.get(a, b) != b:
                raise SigmaConstructionError(f"{name} is not an involution at {a}")
            full[a] = b
    index = triangle_index()
    perm = [index[full.get(t, t)] for t in triangles()]
    if len(set(perm)) != len(perm):
        raise SigmaConstructionError(f"{name} is not injective")
    return perm


# ================================================================== #
#  THE GROUP                                                           #
# ================================================================== #

@dataclass
class SigmaFamilies:
    transpositions: List[List[int]]
    points: List[List[int]]
    lines: List[List[int]]
    flags: List[List[int]]

    def all(self) -> List[List[int]]:
        return self.transpositions + self.points + self.lines + self.flags

    def bifid_split(self) -> Tuple[int, int, int]:
        return len(self.points), len(self.lines), len(self.flags)


def sigma_families(reading: str = SIGMA_READING) -> SigmaFamilies:
    return SigmaFamilies(
        transpositions=[sigma_t(t, reading) for t in triangles()],
        points=[sigma_p(p) for p in POINTS],
        lines=[sigma_line(line) for line in fano_lines()],
        flags=[sigma_flag(p, line) for line in fano_lines() for p in line],
    )


def _reading_accepted(reading: str) -> Tuple[bool, str]:
    try:
        families = sigma_families(reading)
    except SigmaConstructionError as e:
        return False, str(e)
    group = PermutationGroup(families.all(), degree=28)
    if group.order() != HESSE_GROUP_ORDER:
        return False, f"order {group.order()}"
    if not all(group.contains(triangle_permutation(m)) for m in collineation_maps()):
        return False, "collineations missing"
    return True, "ok"


@lru_cache(maxsize=None)
def resolve_sigma_reading() -> str:
    """
    The σ_T sentence leaves open whether w is the symmetric of p or of v.
    Each reading is tried; exactly one must give an involutive family
    generating a group of order 1451520 that contains the collineations.
    The result should equal SIGMA_READING.
    """
    accepted = []
    for reading in ("p", "v"):
        ok, why = _reading_accepted(reading)
        logger.debug(f"  → σ_T reading {reading!r}: {why}")
        if ok:
            accepted.append(reading)
    if len(accepted) != 1:
        raise SigmaConstructionError(f"σ_T readings accepted: {accepted}")
    return accepted[0]


@lru_cache(maxsize=None)
def triangle_sigma_group() -> PermutationGroup:
    families = sigma_families(SIGMA_READING)
    group = PermutationGroup(families.all(), degree=28)
    logger.info(f"  → σ-group on triangles: order {group.order()}")
    return group


def all_sigmas_are_involutions(reading: str = SIGMA_READING) -> bool:
    return all(is_involution(as_perm(g)) for g in sigma_families(reading).all())


def moved_pair_counts(reading: str = SIGMA_READING) -> List[int]:
    """Number of 2-cycles of each generator, in family order."""
    return [len(cycles(as_perm(g))) for g in sigma_families(reading).all()]
