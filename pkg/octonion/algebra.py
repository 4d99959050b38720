from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np

from fano.orientations import Orientation, coherent_orientations, is_coherent, triangle_relations
from fano.plane import POINTS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignTable:
    """θ_{α,β} for distinct α, β in 1..7; e_α e_β = θ_{α,β} e_{α⊕β}."""

    orientation: Orientation
    signs: Tuple[Tuple[int, ...], ...]      # 8×8, zero on the diagonal and row/column 0

    def theta(self, alpha: int, beta: int) -> int:
        if alpha == beta or alpha == 0 or beta == 0:
            raise ValueError(f"θ is undefined at ({alpha}, {beta})")
        return self.signs[alpha][beta]

    @property
    def index(self) -> int:
        """Position among the 16 coherent orientations."""
        return coherent_orientations().index(self.orientation)

    def relations_hold(self) -> bool:
        return all(triangle_relations(self.orientation))

    def rows(self) -> list:
        return [[self.signs[a][b] if a != b else 0 for b in POINTS] for a in POINTS]


def theta_from_orientation(o: Orientation) -> SignTable:
    if not is_coherent(o):
        raise ValueError(f"orientation {o} is not coherent")
    signs = [[0] * 8 for _ in range(8)]
    for a, b in itertools.permutations(POINTS, 2):
        signs[a][b] = o.theta(a, b)
    return SignTable(o, tuple(tuple(row) for row in signs))


def sign_table(index: int = 0) -> SignTable:
    """Index into the sorted coherent orientations; 0 is the lexicographically least."""
    orientations = coherent_orientations()
    if not 0 <= index < len(orientations):
        raise ValueError(f"θ index must be in 0..{len(orientations) - 1}, got {index}")
    return theta_from_orientation(orientations[index])


@lru_cache(maxsize=None)
def default_sign_table() -> SignTable:
    return sign_table(0)


# ================================================================== #
#  CAYLEY ALGEBRA                                                      #
# ================================================================== #

@dataclass(frozen=True)
class Octonion:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError(f"an octonion has 8 coordinates, got {len(self.coords)}")

    @classmethod
    def of(cls, values: Sequence) -> "Octonion":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def unit(cls, k: int) -> "Octonion":
        return cls.of([1 if i == k else 0 for i in range(8)])

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def basis_product(theta: SignTable, i: int, j: int) -> Tuple[int, int]:
    """(sign, k) with e_i e_j = sign · e_k."""
    if i == 0:
        return 1, j
    if j == 0:
        return 1, i
    if i == j:
        return -1, 0
    return theta.theta(i, j), i ^ j


def multiply(x: Octonion, y: Octonion, theta: SignTable | None = None) -> Octonion:
    theta = theta or default_sign_table()
    out = [Fraction(0)] * 8
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j, b in enumerate(y.coords):
            if not b:
                continue
            sign, k = basis_product(theta, i, j)
            out[k] += sign * a * b
    return Octonion(tuple(out))


def conjugate(x: Octonion) -> Octonion:
    """x̄ = x₀ − Σ x_k e_k."""
    return Octonion((x.coords[0],) + tuple(-a for a in x.coords[1:]))


def norm(x: Octonion) -> Fraction:
    return sum((a * a for a in x.coords), Fraction(0))


def associator(x: Octonion, y: Octonion, z: Octonion, theta: SignTable | None = None) -> Octonion:
    """A(x,y,z) = (xy)z − x(yz)."""
    return multiply(multiply(x, y, theta), z, theta) - multiply(x, multiply(y, z, theta), theta)


# ================================================================== #
#  CHECKS                                                              #
# ================================================================== #

def is_alternative_on_basis(theta: SignTable) -> bool:
    """
    The associator is alternating on all 8³ basis triples:
    A(x,y,z) = −A(y,x,z) = −A(x,z,y). By trilinearity this is alternativity.
    """
    units = [Octonion.unit(k) for k in range(8)]
    for i, j, k in itertools.product(range(8), repeat=3):
        x, y, z = units[i], units[j], units[k]
        a = associator(x, y, z, theta)
        if not (a + associator(y, x, z, theta)).is_zero() or not (a + associator(x, z, y, theta)).is_zero():
            logger.debug(f"  ✗ associator is not alternating at (e{i}, e{j}, e{k})")
            return False
    return True


def triple_identity_holds(theta: SignTable) -> bool:
    """(e_α e_β) e_γ = (e_β e_γ) e_α for distinct non-collinear α, β, γ."""
    for a, b, c in itertools.permutations(POINTS, 3):
        if a ^ b ^ c == 0:
            continue
        ea, eb, ec = Octonion.unit(a), Octonion.unit(b), Octonion.unit(c)
        left = multiply(multiply(ea, eb, theta), ec, theta)
        right = multiply(multiply(eb, ec, theta), ea, theta)
        if left != right:
            return False
    return True


def random_octonion(rng: np.random.Generator, bound: int = 9) -> Octonion:
    numerators = rng.integers(-bound, bound + 1, size=8)
    denominators = rng.integers(1, bound + 1, size=8)
    return Octonion(tuple(Fraction(int(n), int(d)) for n, d in zip(numerators, denominators)))


def composition_law_holds(theta: SignTable, samples: int = 1000, seed: int = 0) -> bool:
    """N(xy) = N(x) N(y) on seeded pseudorandom rational pairs."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        x, y = random_octonion(rng), random_octonion(rng)
        if norm(multiply(x, y, theta)) != norm(x) * norm(y):
            return False
    return True


def multiplication_table(theta: SignTable) -> Dict[Tuple[int, int], Tuple[int, int]]:
    return {(i, j): basis_product(theta, i, j) for i in range(8) for j in range(8)}


def conjugation_gives_norm(theta: SignTable, samples: int = 100, seed: int = 0) -> bool:
    """x x̄ = x̄ x = N(x) on seeded pseudorandom rationals."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        x = random_octonion(rng)
        real = Octonion.of([norm(x)] + [0] * 7)
        if multiply(x, conjugate(x), theta) != real or multiply(conjugate(x), x, theta) != real:
            return False
    return True
