from __future__ import annotations

import logging
from collections import deque
from functools import lru_cache
from typing import Iterable, List, Tuple

logger = logging.getLogger(__name__)

P = 7
INFINITY = 7
P1_POINTS: Tuple[int, ...] = tuple(range(8))   # 0..6 and INFINITY
HARMONIC = P - 1                               # cross-ratio −1

Matrix = Tuple[int, int, int, int]             # (a, b, c, d) acting as x ↦ (ax+b)/(cx+d)


def format_point(x: int) -> str:
    return "∞" if x == INFINITY else str(x)


def parse_point(text: str) -> int:
    text = text.strip()
    if text in ("∞", "inf", "i", "oo"):
        return INFINITY
    value = int(text)
    if not 0 <= value < P:
        raise ValueError(f"{text!r} is not a point of P¹(F7)")
    return value


def parse_points(text: str) -> Tuple[int, ...]:
    return tuple(parse_point(ch) for ch in text)


def format_points(points: Iterable[int]) -> str:
    return "".join(format_point(x) for x in points)


def _homogeneous(x: int) -> Tuple[int, int]:
    return (1, 0) if x == INFINITY else (x, 1)


def _bracket(x: int, y: int) -> int:
    (x0, x1), (y0, y1) = _homogeneous(x), _homogeneous(y)
    return (x0 * y1 - x1 * y0) % P


def _from_fraction(numerator: int, denominator: int) -> int:
    numerator, denominator = numerator % P, denominator % P
    if denominator == 0:
        if numerator == 0:
            raise ValueError("0/0 in P¹(F7)")
        return INFINITY
    return numerator * pow(denominator, -1, P) % P


def cross_ratio(a: int, b: int, c: int, d: int) -> int:
    """
    (a,b;c,d) = ((c−a)(d−b)) / ((c−b)(d−a)), written with 2×2 determinants
    so ∞ needs no special case. (∞,0;1,x) = x.
    """
    if len({a, b, c, d}) != 4:
        raise ValueError(f"cross-ratio needs four distinct points, got {format_points((a, b, c, d))}")
    return _from_fraction(
        _bracket(c, a) * _bracket(d, b),
        _bracket(c, b) * _bracket(d, a),
    )


def is_harmonic(a: int, b: int, c: int, d: int) -> bool:
    return cross_ratio(a, b, c, d) == HARMONIC


# ================================================================== #
#  PGL(2,F7)                                                           #
# ================================================================== #

def moebius(m: Matrix, x: int) -> int:
    a, b, c, d = m
    x0, x1 = _homogeneous(x)
    return _from_fraction(a * x0 + b * x1, c * x0 + d * x1)


def moebius_permutation(m: Matrix) -> Tuple[int, ...]:
    return tuple(moebius(m, x) for x in P1_POINTS)


PSL_GENERATORS: Tuple[Matrix, ...] = (
    (1, 1, 0, 1),    # x + 1
    (4, 0, 0, 2),    # 2x
    (0, -1, 1, 0),   # −1/x
)


def _closure(generators: Iterable[Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    gens = list(generators)
    start = tuple(P1_POINTS)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(s[g[x]] for x in P1_POINTS)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def psl27_elements() -> Tuple[Tuple[int, ...], ...]:
    """PSL(2,F7) as image tuples on the eight points, generated by x+1, 2x and −1/x."""
    elements = _closure(moebius_permutation(m) for m in PSL_GENERATORS)
    logger.debug(f"  → |PSL(2,7)| = {len(elements)}")
    return elements


@lru_cache(maxsize=None)
def pgl27_elements() -> Tuple[Tuple[int, ...], ...]:
    gens = [moebius_permutation(m) for m in PSL_GENERATORS] + [moebius_permutation((3, 0, 0, 1))]
    return _closure(gens)


def inverse_element(g: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(g)
    for x, y in enumerate(g):
        inv[y] = x
    return tuple(inv)


def pairs() -> List[Tuple[int, int]]:
    return [(a, b) for a in P1_POINTS for b in P1_POINTS if a < b]
