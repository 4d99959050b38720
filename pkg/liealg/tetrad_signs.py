"""Splittings of a factor's sixteen roots ±ε_i±ε_j±ε_k±ε_l into two syzygetic tetrads."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from fano.reference_tables import TETRAD_SIGN_TABLES

logger = logging.getLogger(__name__)

Signs = Tuple[int, int, int, int]


def parse_signs(word: str) -> Signs:
    return tuple(1 if ch == "+" else -1 for ch in word)


def format_signs(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def root_pairs() -> List[Signs]:
    """One representative per ± pair, first sign +."""
    return [(1,) + rest for rest in itertools.product((1, -1), repeat=3)]


def zero_sum_choice(pairs: Sequence[Signs]) -> Tuple[Signs, ...] | None:
    """Signs ε with Σ ε_r·r = 0 and ε_0 = +1, lexicographically first; None if there is none."""
    vectors = np.array(pairs)
    for rest in itertools.product((1, -1), repeat=len(pairs) - 1):
        eps = np.array((1,) + rest)
        if not np.any(eps @ vectors):
            return tuple(tuple(int(x) for x in e * v) for e, v in zip(eps, vectors))
    return None


def _as_root_set(rows: Sequence[Signs]) -> FrozenSet[Signs]:
    return frozenset(tuple(r) for r in rows)


def _same_up_to_sign(rows: Sequence[Signs], other: Sequence[Signs]) -> bool:
    a = _as_root_set(rows)
    return a == _as_root_set(other) or a == _as_root_set([tuple(-x for x in r) for r in other])


@dataclass(frozen=True)
class TetradSplitting:
    factor: Tuple[int, int, int, int]
    first: Tuple[Signs, ...]
    second: Tuple[Signs, ...]

    def tables(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return tuple(map(format_signs, self.first)), tuple(map(format_signs, self.second))

    def roots(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
        """The tetrads as weight vectors in eight coordinates."""
        def embed(signs: Signs) -> Tuple[int, ...]:
            w = [0] * 8
            for slot, s in zip(self.factor, signs):
                w[slot - 1] = s
            return tuple(w)
        return tuple(map(embed, self.first)), tuple(map(embed, self.second))

    def matches(self, table_a: Sequence[str], table_b: Sequence[str]) -> bool:
        a = [parse_signs(w) for w in table_a]
        b = [parse_signs(w) for w in table_b]
        return ((_same_up_to_sign(self.first, a) and _same_up_to_sign(self.second, b))
                or (_same_up_to_sign(self.first, b) and _same_up_to_sign(self.second, a)))


def tetrad_sign_tables(factor: Sequence[int] = (1, 2, 3, 4)) -> List[TetradSplitting]:
    factor = tuple(sorted(factor))
    if len(factor) != 4 or len(set(factor)) != 4 or not all(1 <= i <= 8 for i in factor):
        raise ValueError(f"a factor is four distinct labels in 1..8, got {factor}")
    pairs = root_pairs()
    out = []
    for rest in itertools.combinations(range(1, 8), 3):
        chosen = (0,) + rest
        other = tuple(k for k in range(8) if k not in chosen)
        first = zero_sum_choice([pairs[k] for k in chosen])
        second = zero_sum_choice([pairs[k] for k in other])
        if first is not None and second is not None:
            out.append(TetradSplitting(factor, first, second))
    logger.debug(f"  → {len(out)} splittings of the roots of {factor} into syzygetic tetrads")
    return out


def printed_table_present(splittings: Sequence[TetradSplitting]) -> bool:
    return any(s.matches(*TETRAD_SIGN_TABLES) for s in splittings)
