"""
Deterministic Schreier-Sims for permutation groups of small degree.

Permutations are numpy image arrays: p[i] is the image of point i. The
product "p then q" is q[p]. A group is a stabilizer chain of levels; each
level keeps a base point, the generators added there, a transversal
(point -> representative u with u[base] = point) and the next level.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

logger = logging.getLogger(__name__)

Perm = np.ndarray


def check_perm(p: Sequence[int]) -> None:
    if set(int(x) for x in p) != set(range(len(p))):
        raise ValueError("not a permutation")


def as_perm(p: Sequence[int]) -> Perm:
    check_perm(p)
    return np.asarray(p, dtype=np.int32)


def identity(degree: int) -> Perm:
    return np.arange(degree, dtype=np.int32)


def compose(p: Perm, q: Perm) -> Perm:
    """p then q."""
    return q[p]


def inverse(p: Perm) -> Perm:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def is_identity(p: Perm) -> bool:
    return bool(np.all(p == np.arange(len(p))))


def perm_key(p: Perm) -> bytes:
    return p.tobytes()


def cycles(p: Perm) -> List[Tuple[int, ...]]:
    seen: Set[int] = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cycle = [i]
        seen.add(i)
        j = int(p[i])
        while j != i:
            seen.add(j)
            cycle.append(j)
            j = int(p[j])
        out.append(tuple(cycle))
    return out


def is_involution(p: Perm) -> bool:
    return not is_identity(p) and is_identity(p[p])


class _Level:
    def __init__(self, degree: int):
        self.degree = degree
        self.base: Optional[int] = None
        self.gens: List[Perm] = []
        self.transversal: Dict[int, Perm] = {}
        self.inverse_transversal: Dict[int, Perm] = {}
        self.stab: Optional[_Level] = None
        self._processed: Set[Tuple[int, int]] = set()

    # ---- queries ----

    def order(self) -> int:
        if self.base is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def sift(self, g: Perm) -> Tuple[Perm, "_Level"]:
        """Strip g down the chain; returns the residue and the level where it stopped."""
        level = self
        while level.base is not None:
            a = int(g[level.base])
            if a not in level.inverse_transversal:
                return g, level
            g = compose(g, level.inverse_transversal[a])
            level = level.stab
        return g, level

    def contains(self, g: Perm) -> bool:
        residue, _ = self.sift(g)
        return is_identity(residue)

    # ---- construction ----

    def add_gen(self, g: Perm) -> bool:
        residue, level = self.sift(g)
        if is_identity(residue):
            return False
        level._extend(residue)
        return True

    def _extend(self, g: Perm) -> None:
        if self.base is None:
            self.base = int(np.flatnonzero(g != np.arange(self.degree))[0])
            ident = identity(self.degree)
            self.transversal = {self.base: ident}
            self.inverse_transversal = {self.base: ident}
            self.stab = _Level(self.degree)
        self.gens.append(g)

        # orbit extension, existing representatives are kept
        queue = deque(self.transversal)
        while queue:
            a = queue.popleft()
            u = self.transversal[a]
            for s in self.gens:
                b = int(s[a])
                if b not in self.transversal:
                    rep = compose(u, s)
                    self.transversal[b] = rep
                    self.inverse_transversal[b] = inverse(rep)
                    queue.append(b)

        # Schreier generators u_a · s · u_{s(a)}^{-1}
        for a in list(self.transversal):
            for k, s in enumerate(self.gens):
                if (a, k) in self._processed:
                    continue
                self._processed.add((a, k))
                b = int(s[a])
                schreier = compose(compose(self.transversal[a], s), self.inverse_transversal[b])
                if not is_identity(schreier):
                    self.stab.add_gen(schreier)


class PermutationGroup:
    """Group generated by image arrays on points 0..degree-1."""

    def __init__(self, generators: Iterable[Sequence[int]] = (), degree: Optional[int] = None):
        gens = [as_perm(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for an empty generator list")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.generators: List[Perm] = gens
        self._chain = _Level(degree)
        for g in gens:
            self._chain.add_gen(g)
        logger.debug(f"  → BSGS on {degree} points: base {self.base()}, order {self.order()}")

    # ---- structure ----

    def base(self) -> List[int]:
        out, level = [], self._chain
        while level.base is not None:
            out.append(level.base)
            level = level.stab
        return out

    def fundamental_orbit_sizes(self) -> List[int]:
        out, level = [], self._chain
        while level.base is not None:
            out.append(len(level.transversal))
            level = level.stab
        return out

    def strong_generators(self) -> List[Perm]:
        out, level = [], self._chain
        while level.base is not None:
            out.extend(level.gens)
            level = level.stab
        return out

    # ---- queries ----

    def order(self) -> int:
        return self._chain.order()

    def contains(self, g: Sequence[int]) -> bool:
        g = np.asarray(g, dtype=np.int32)
        if len(g) != self.degree:
            return False
        check_perm(g)
        return self._chain.contains(g)

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            a = queue.popleft()
            for g in self.generators:
                b = int(g[a])
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def orbits(self) -> List[List[int]]:
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orbit = self.orbit(min(remaining))
            out.append(orbit)
            remaining.difference_update(orbit)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def stabilizer_order(self, point: int) -> int:
        return self.order() // len(self.orbit(point))

    def set_orbit(self, subset: Iterable[int]) -> Set[frozenset]:
        """Orbit of a point set under the group (setwise action)."""
        start = frozenset(subset)
        seen = {start}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for g in self.generators:
                t = frozenset(int(g[x]) for x in s)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    def random_element(self, rng: np.random.Generator) -> Perm:
        """Uniform element as a product of one transversal representative per level."""
        g = identity(self.degree)
        level = self._chain
        reps = []
        while level.base is not None:
            points = sorted(level.transversal)
            reps.append(level.transversal[points[int(rng.integers(len(points)))]])
            level = level.stab
        for rep in reversed(reps):
            g = compose(g, rep)
        return g

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order(),
            "generators": [[int(x) for x in g] for g in self.generators],
        }


def symmetric_group_generators(n: int) -> List[List[int]]:
    if n < 2:
        return []
    transposition = list(range(n))
    transposition[0], transposition[1] = 1, 0
    cycle = [(i + 1) % n for i in range(n)]
    return [transposition, cycle]


def induced_action(points: Sequence, image_of) -> List[int]:
    """Image array of a map on an indexed point list; `image_of` maps a point to a point."""
    index = {p: i for i, p in enumerate(points)}
    try:
        return [index[image_of(p)] for p in points]
    except KeyError as e:
        raise ValueError(f"map does not preserve the point set: {e}")
