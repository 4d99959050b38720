from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from rootlat.root_system import RootSystem, build_root_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Mod2Census:
    norm0: int
    norm1: int
    quadratic_form_ok: bool
    root_classes: int
    root_classes_all_odd: bool


def cartan_matrix(rs: RootSystem) -> np.ndarray:
    """Conventional Gram matrix of the simple roots (integer for simply-laced systems)."""
    scale2 = rs.ambient.scale ** 2
    simple = np.array([a.coords for a in rs.simple_roots], dtype=np.int64)
    gram = simple @ simple.T
    if np.any(gram % scale2):
        raise ValueError(f"{rs.type_label} simple roots do not have an integral Gram matrix")
    return gram // scale2


def mod2_quadric_census(rs: RootSystem | None = None) -> Mod2Census:
    """
    Classify the 256 classes of Q/2Q by q(x) = (x,x)/2 mod 2.

    Classes are the sums Σ ε_i α_i with ε ∈ {0,1}^8. The quadratic-form law
    q(x+y) = q(x) + q(y) + (x,y) mod 2 is checked on all ordered pairs.
    """
    rs = rs or build_root_system("E8")
    if rs.rank != 8 or rs.type_label != "E8":
        raise ValueError("mod-2 census is defined on the E8 root lattice")
    cartan = cartan_matrix(rs)
    # row c holds the bits of c, so a class is addressed by its code
    codes = np.arange(256, dtype=np.int64)
    eps = (codes[:, None] >> np.arange(8)) & 1     # (256, 8)

    gram = eps @ cartan @ eps.T                     # (x, y) for every pair of classes
    q = (np.diag(gram) // 2) % 2
    norm1 = int(q.sum())
    norm0 = len(q) - norm1

    # x + y mod 2Q corresponds to ε XOR ε'
    xor_codes = codes[:, None] ^ codes[None, :]
    q_sum = q[xor_codes]
    quadratic_ok = bool(np.all((q_sum - q[:, None] - q[None, :] - gram) % 2 == 0))

    # roots: class of each positive root through its simple coefficients
    root_codes = set()
    for coefficients in rs.simple_coefficients.values():
        root_codes.add(sum((c % 2) << i for i, c in enumerate(coefficients)))
    root_q = {int(q[c]) for c in root_codes}

    census = Mod2Census(norm0, norm1, quadratic_ok, len(root_codes), root_q == {1})
    logger.debug(f"  → mod-2 census: {census}")
    return census
