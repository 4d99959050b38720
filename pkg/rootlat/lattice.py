from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Ambient:
    """
    Euclidean space a lattice lives in.

    SCALING
    ────────────────────────────────────────────────────────────────────
    Every stored coordinate is `scale` times its conventional value, so
    that all vectors we ever need are integer arrays:

      - A_n, D_n, E7, E8 : scale 2  (half-integer E8 roots become exact)
      - E6               : scale 6  (the 27 weights of J have thirds)

    inner() therefore returns scale**2 times the conventional pairing:
    a root has inner(α, α) == 2 * scale**2 (8 for doubled ambients).
    ────────────────────────────────────────────────────────────────────
    """

    name: str
    dim: int
    scale: int


E8_SPACE = Ambient("R8", 8, 2)
E6_SPACE = Ambient("R8/3", 8, 6)


def a_space(rank: int) -> Ambient:
    return Ambient(f"R{rank + 1}", rank + 1, 2)


def d_space(rank: int) -> Ambient:
    return Ambient(f"R{rank}", rank, 2)


@dataclass(frozen=True, order=True)
class LatticeVector:
    """Exact vector stored at `ambient.scale` times its conventional coordinates."""

    coords: Tuple[int, ...]
    ambient: Ambient

    def __post_init__(self):
        if len(self.coords) != self.ambient.dim:
            raise ValueError(
                f"expected {self.ambient.dim} coordinates for {self.ambient.name}, "
                f"got {len(self.coords)}"
            )

    # ---- Construction ----

    @classmethod
    def of(cls, ambient: Ambient, coords: Iterable[int]) -> "LatticeVector":
        return cls(tuple(int(c) for c in coords), ambient)

    @classmethod
    def zero(cls, ambient: Ambient) -> "LatticeVector":
        return cls((0,) * ambient.dim, ambient)

    # ---- Arithmetic ----

    def _check(self, other: "LatticeVector"):
        if self.ambient != other.ambient:
            raise ValueError(
                f"ambient mismatch: {self.ambient.name} vs {other.ambient.name}"
            )

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.ambient)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.ambient)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords), self.ambient)

    def scaled(self, k: int) -> "LatticeVector":
        return LatticeVector(tuple(k * a for a in self.coords), self.ambient)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conventional(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.ambient.scale) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.conventional()) + ")"


def inner(u: LatticeVector, v: LatticeVector) -> int:
    """Pairing in stored units: scale**2 times the conventional value."""
    u._check(v)
    return sum(a * b for a, b in zip(u.coords, v.coords))


def conventional_inner(u: LatticeVector, v: LatticeVector) -> Fraction:
    return Fraction(inner(u, v), u.ambient.scale ** 2)


def reflect(v: LatticeVector, alpha: LatticeVector) -> LatticeVector:
    """s_α(v) = v − 2(v,α)/(α,α)·α, exact."""
    denominator = inner(alpha, alpha)
    if denominator == 0:
        raise ValueError("cannot reflect in the zero vector")
    q, r = divmod(2 * inner(v, alpha), denominator)
    if r:
        raise ValueError(f"{v} is not in the weight lattice of {alpha}")
    if q == 0:
        return v
    return v - alpha.scaled(q)
