"""
Multiplicative orthogonal decomposition of the e8 model into 31 Cartan subalgebras.

Two involutions act on every A_i at once: φ1 fixes e and negates f, φ2
swaps e and f. Together with the octonion grading they generate an F2⁵
of automorphisms; its 31 nontrivial joint eigenspaces are

    t_0 = ⟨H_i⟩,  t_+ = ⟨X_i + Y_i⟩,  t_− = ⟨X_i − Y_i⟩
    t_{u,p,s} = ⟨b + s·b̄ : b ∈ A_Q ⊕ A_Q*, b has p letters f mod 2⟩

where Q, Q* are the two antipodal factors of grade u and b̄ swaps e and f.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from liealg.ograded import E, F, OGradedModel
from liealg.structure import Vector, add_into

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusComponent:
    name: str
    character: int                     # u in bits 0-2, φ1 in bit 3, φ2 in bit 4
    vectors: Tuple[Dict[int, Fraction], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def support(self) -> frozenset:
        return frozenset(k for v in self.vectors for k in v)

    def contains(self, vector: Vector) -> bool:
        """Membership for spans of vectors with pairwise disjoint supports."""
        if not vector:
            return True
        remaining = dict(vector)
        for basis_vector in self.vectors:
            keys = list(basis_vector)
            ratio = None
            for k in keys:
                value = remaining.pop(k, Fraction(0))
                r = value / basis_vector[k]
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return not remaining


@dataclass
class CartanDecomposition:
    components: Tuple[TorusComponent, ...]
    abelian: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[Tuple[str, str], Optional[str]] = field(default_factory=dict)
    failures: List[Tuple[str, str]] = field(default_factory=list)
    direct_sum: bool = False
    total_dim: int = 0

    @property
    def ok(self) -> bool:
        return (len(self.components) == 31 and self.direct_sum and all(self.abelian.values())
                and not self.failures)

    def to_dict(self) -> dict:
        return {
            "components": [{"name": c.name, "dim": c.dim, "character": c.character} for c in self.components],
            "total_dim": self.total_dim,
            "direct_sum": self.direct_sum,
            "abelian": all(self.abelian.values()),
            "multiplicative": not self.failures,
            "zero_brackets": sum(1 for w in self.witnesses.values() if w is None),
            "ok": self.ok,
        }


def _flip(bits: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(F if b == E else E for b in bits)


def _character(u: int, phi1: int, phi2: int) -> int:
    return u | (phi1 << 3) | (phi2 << 4)


def mod_components(model: OGradedModel) -> Tuple[TorusComponent, ...]:
    if model.name != "e8":
        raise ValueError(f"the 31-component decomposition is built on e8, got {model.name}")
    shape = model.shape
    one = Fraction(1)
    slots = range(shape.n_slots)
    out = [
        TorusComponent("t0", _character(0, 0, 1),
                       tuple({shape.h_index(s, "H"): one} for s in slots)),
        TorusComponent("t+", _character(0, 1, 0),
                       tuple({shape.h_index(s, "X"): one, shape.h_index(s, "Y"): one} for s in slots)),
        TorusComponent("t-", _character(0, 1, 1),
                       tuple({shape.h_index(s, "X"): one, shape.h_index(s, "Y"): -one} for s in slots)),
    ]
    for u in range(1, 8):
        pair = [q for q, f in enumerate(shape.factors) if f.grade == u]
        for p in (0, 1):
            for s in (1, -1):
                vectors = []
                for q in pair:
                    for bits in itertools.product((E, F), repeat=4):
                        if sum(bits) % 2 != p or bits > _flip(bits):
                            continue
                        vectors.append({shape.g_index(q, bits): one,
                                        shape.g_index(q, _flip(bits)): Fraction(s)})
                name = f"t{u}{'ef'[p]}{'+' if s > 0 else '-'}"
                out.append(TorusComponent(name, _character(u, p, int(s < 0)), tuple(vectors)))
    return tuple(out)


def _bracket_spans(model: OGradedModel, a: TorusComponent, b: TorusComponent) -> List[Vector]:
    algebra = model.algebra
    out = []
    for x in a.vectors:
        for y in b.vectors:
            value = algebra.bracket(x, y)
            if value:
                out.append(value)
    return out


def is_abelian(model: OGradedModel, component: TorusComponent) -> bool:
    return not _bracket_spans(model, component, component)


def span_rank(vectors: Sequence[Vector], dim: int) -> int:
    matrix = np.zeros((len(vectors), dim))
    for r, v in enumerate(vectors):
        for k, c in v.items():
            matrix[r, k] = float(c)
    return int(np.linalg.matrix_rank(matrix))


def multiplicative_od(model: OGradedModel) -> CartanDecomposition:
    components = mod_components(model)
    by_character = {c.character: c for c in components}
    report = CartanDecomposition(components)
    report.total_dim = sum(c.dim for c in components)
    report.direct_sum = (report.total_dim == model.dim
                         and span_rank([v for c in components for v in c.vectors], model.dim) == model.dim)
    for c in components:
        report.abelian[c.name] = is_abelian(model, c)
    for a, b in itertools.permutations(components, 2):
        results = _bracket_spans(model, a, b)
        if not results:
            report.witnesses[(a.name, b.name)] = None
            continue
        target = by_character.get(a.character ^ b.character)
        if target is not None and all(target.contains(v) for v in results):
            report.witnesses[(a.name, b.name)] = target.name
        else:
            report.failures.append((a.name, b.name))
    status = "✓" if report.ok else "✗"
    logger.info(f"  {status} MOD: {len(components)} components, total dim {report.total_dim}, "
                f"{sum(report.abelian.values())} abelian, {len(report.failures)} containment failures")
    return report


def literal_factor_components(model: OGradedModel) -> Tuple[TorusComponent, ...]:
    """⟨b ± b̄ : b ∈ A_Q⟩ taken inside a single factor, for each of the 14 quadruples."""
    shape = model.shape
    one = Fraction(1)
    out = []
    for q, factor in enumerate(shape.factors):
        for s in (1, -1):
            vectors = tuple(
                {shape.g_index(q, bits): one, shape.g_index(q, _flip(bits)): Fraction(s)}
                for bits in itertools.product((E, F), repeat=4) if bits < _flip(bits)
            )
            out.append(TorusComponent(f"t{factor.name}{'+' if s > 0 else '-'}", -1, vectors))
    return tuple(out)


def literal_reading_abelian(model: OGradedModel) -> bool:
    return all(is_abelian(model, c) for c in literal_factor_components(model))
