"""Incremental linear systems over GF(2), rows kept as int bitsets."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)


class InconsistentSystem(ValueError):
    pass


class GF2System:
    def __init__(self, n_vars: int):
        self.n_vars = n_vars
        self._pivots: Dict[int, Tuple[int, int]] = {}   # pivot bit -> (row, rhs)
        self.equations_seen = 0

    def _reduce(self, row: int, rhs: int) -> Tuple[int, int]:
        while row:
            top = row.bit_length() - 1
            if top not in self._pivots:
                break
            prow, prhs = self._pivots[top]
            row ^= prow
            rhs ^= prhs
        return row, rhs

    def add(self, row: int, rhs: int) -> bool:
        """Add Σ x_i (i in row) = rhs; returns True when the rank grew."""
        self.equations_seen += 1
        row, rhs = self._reduce(row, rhs & 1)
        if not row:
            if rhs:
                raise InconsistentSystem("0 = 1")
            return False
        self._pivots[row.bit_length() - 1] = (row, rhs)
        return True

    def is_consistent_with(self, row: int, rhs: int) -> bool:
        row, rhs = self._reduce(row, rhs & 1)
        return bool(row) or not rhs

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def copy(self) -> "GF2System":
        other = GF2System(self.n_vars)
        other._pivots = dict(self._pivots)
        other.equations_seen = self.equations_seen
        return other

    def solve(self) -> int:
        """One solution as a bitset, free variables set to 0."""
        x = 0
        for bit in sorted(self._pivots):
            row, rhs = self._pivots[bit]
            rest = row & ~(1 << bit)
            value = rhs ^ (bin(rest & x).count("1") & 1)
            if value:
                x |= 1 << bit
        return x


def parity(mask: int, x: int) -> int:
    return bin(mask & x).count("1") & 1
