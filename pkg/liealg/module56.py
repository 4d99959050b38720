"""
The 56-dimensional e7-module V = ⊕_L A_i⊗A_j⊗A_k over the seven Fano lines L.

A graded factor A_Q (Q the complement of the line λ) kills V_λ and swaps
the other six lines in three pairs: for L = {i, j, m} with i, j ∈ Q,

    a · v = κ η_{Q,L} ω(a_i, v_i) ω(a_j, v_j) a_k ⊗ a_l ⊗ v_m  ∈ V_{k,l,m}

The signs η and the scale κ come from module-axiom probes, solved over GF(2).
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from fano.plane import fano_lines
from liealg.gf2 import GF2System, InconsistentSystem, parity
from liealg.ograded import E, F, SL2_ACTION, OGradedModel, omega, sign_equations
from liealg.structure import Vector

logger = logging.getLogger(__name__)

SCALE_CANDIDATES: Tuple[Fraction, ...] = (
    Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(2), Fraction(-2),
)


class ModuleConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ModuleLabel:
    block: int                  # index into fano_lines()
    bits: Tuple[int, int, int]


def module_blocks() -> Tuple[Tuple[int, ...], ...]:
    """Slot tuples (points − 1) of the seven lines."""
    return tuple(tuple(p - 1 for p in line) for line in fano_lines())


def module_labels() -> Tuple[ModuleLabel, ...]:
    return tuple(ModuleLabel(b, bits) for b in range(7) for bits in itertools.product((E, F), repeat=3))


class SymbolicModule:
    def __init__(self, model: OGradedModel, scale: Fraction):
        if model.name != "e7":
            raise ValueError(f"V56 is an e7-module, got {model.name}")
        self.model = model
        self.scale = Fraction(scale)
        self.blocks = module_blocks()
        self.labels = module_labels()
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.block_of = {frozenset(b): k for k, b in enumerate(self.blocks)}
        self._memo: Dict[Tuple[int, int], tuple] = {}

    def variable(self, factor: int, block: int) -> int:
        return factor * 7 + block

    def __call__(self, x: int, v: int) -> tuple:
        key = (x, v)
        if key not in self._memo:
            self._memo[key] = self._compute(x, v)
        return self._memo[key]

    def _compute(self, x: int, v: int) -> tuple:
        a = self.model.shape.labels[x]
        target = self.labels[v]
        slots = self.blocks[target.block]
        if a.kind == "h":
            if a.slot not in slots:
                return ()
            pos = slots.index(a.slot)
            rule = SL2_ACTION.get((a.element, target.bits[pos]))
            if rule is None:
                return ()
            coef, bit = rule
            bits = target.bits[:pos] + (bit,) + target.bits[pos + 1:]
            return ((self.index[ModuleLabel(target.block, bits)], Fraction(coef), 0),)

        factor = self.model.shape.factors[a.factor]
        shared = [s for s in slots if s in factor.slot_set]
        if len(shared) != 2:
            return ()
        coef = 1
        for s in shared:
            coef *= omega(a.bits[factor.slots.index(s)], target.bits[slots.index(s)])
        if not coef:
            return ()
        (m,) = [s for s in slots if s not in factor.slot_set]
        new_slots = (factor.slot_set - set(shared)) | {m}
        block = self.block_of[frozenset(new_slots)]
        bits = tuple(
            a.bits[factor.slots.index(s)] if s != m else target.bits[slots.index(m)]
            for s in self.blocks[block]
        )
        mask = 1 << self.variable(a.factor, target.block)
        return ((self.index[ModuleLabel(block, bits)], self.scale * coef, mask),)

    def _apply(self, x: int, terms: Dict[Tuple[int, int], Fraction], sign: int,
               into: Dict[Tuple[int, int], Fraction]) -> None:
        for (u, mask), c in terms.items():
            for w, c2, m2 in self(x, u):
                key = (w, mask ^ m2)
                value = into.get(key, Fraction(0)) + sign * c * c2
                if value:
                    into[key] = value
                else:
                    into.pop(key, None)

    def axiom_defect(self, x: int, y: int, v: int) -> Dict[int, List[Tuple[int, Fraction]]]:
        """ρ([x,y])v − ρ(x)ρ(y)v + ρ(y)ρ(x)v, grouped by module index."""
        acc: Dict[Tuple[int, int], Fraction] = {}
        start = {(v, 0): Fraction(1)}
        for k, c in self.model.algebra.bracket_basis(x, y):
            self._apply(k, start, c, acc)
        for first, second, sign in ((y, x, -1), (x, y, 1)):
            step: Dict[Tuple[int, int], Fraction] = {}
            self._apply(first, start, 1, step)
            self._apply(second, step, sign, acc)
        grouped: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (w, mask), value in acc.items():
            grouped.setdefault(w, []).append((mask, value))
        return grouped


# ================================================================== #
#  MODULE                                                              #
# ================================================================== #

@dataclass
class ModuleAction:
    model: OGradedModel
    labels: Tuple[ModuleLabel, ...]
    action: Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]]
    scale: Fraction
    sign_bits: int
    form_signs: Tuple[int, ...] = ()
    provenance: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def act(self, x: int, vector: Vector) -> Vector:
        out: Vector = {}
        for v, a in vector.items():
            for w, c in self.action.get((x, v), ()):
                value = out.get(w, Fraction(0)) + a * c
                if value:
                    out[w] = value
                else:
                    out.pop(w, None)
        return out

    def render(self, v: int) -> str:
        label = self.labels[v]
        line = "".join(str(s + 1) for s in module_blocks()[label.block])
        return f"{line}:" + "".join("ef"[b] for b in label.bits)

    @cached_property
    def denominator(self) -> int:
        den = 1
        for terms in self.action.values():
            for _, c in terms:
                den = math.lcm(den, c.denominator)
        return den

    def matrices(self) -> np.ndarray:
        """denominator · ρ(b_x) for every algebra basis vector, exact in float64."""
        n, d = self.model.dim, self.denominator
        out = np.zeros((n, self.dim, self.dim))
        for (x, v), terms in self.action.items():
            for w, c in terms:
                out[x, w, v] = float(c * d)
        return out

    def weights(self) -> List[Tuple[int, ...]]:
        blocks = module_blocks()
        out = []
        for label in self.labels:
            w = [0] * 7
            for s, b in zip(blocks[label.block], label.bits):
                w[s] = 1 if b == E else -1
            out.append(tuple(w))
        return out

    def form_matrix(self, signs: Optional[Sequence[int]] = None) -> np.ndarray:
        signs = tuple(signs if signs is not None else self.form_signs)
        return symplectic_form(self.labels, signs)

    def to_dict(self) -> dict:
        entries = []
        for (x, v) in sorted(self.action):
            entries.append([x, v, [[w, c.numerator, c.denominator] for w, c in self.action[(x, v)]]])
        return {
            "schema": 1,
            "kind": "module_action",
            "algebra": self.model.name,
            "basis": [self.render(v) for v in range(self.dim)],
            "action": entries,
            "provenance": self.provenance,
        }


def symplectic_form(labels: Sequence[ModuleLabel], signs: Sequence[int]) -> np.ndarray:
    """Ω = Σ_L σ_L ω⊗ω⊗ω, pairing each V_L with itself."""
    n = len(labels)
    out = np.zeros((n, n))
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            if a.block != b.block:
                continue
            value = signs[a.block]
            for x, y in zip(a.bits, b.bits):
                value *= omega(x, y)
            out[i, j] = value
    return out


def _probe_scale(model: OGradedModel, scale: Fraction) -> Optional[int]:
    module = SymbolicModule(model, scale)
    system = GF2System(7 * len(model.shape.factors))
    shape = model.shape
    try:
        for p, q in itertools.combinations_with_replacement(range(len(shape.factors)), 2):
            top = shape.g_index(p, (E,) * len(shape.factors[p].slots))
            for y in shape.factor_basis(q):
                for v in range(len(module.labels)):
                    for entries in module.axiom_defect(top, y, v).values():
                        equations = sign_equations(entries)
                        if equations is None:
                            return None
                        for row, rhs in equations:
                            system.add(row, rhs)
    except InconsistentSystem:
        return None
    return system.solve()


def _realize(model: OGradedModel, scale: Fraction, bits: int) -> Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]]:
    module = SymbolicModule(model, scale)
    action = {}
    for x in range(model.dim):
        for v in range(len(module.labels)):
            terms = tuple((w, -c if parity(mask, bits) else c) for w, c, mask in module(x, v))
            if terms:
                action[(x, v)] = terms
    return action


def module_axiom_failure(module: ModuleAction) -> Optional[Tuple[int, int]]:
    """First (x, y) with ρ([x,y]) != [ρ(x), ρ(y)], over all ordered basis pairs."""
    algebra = module.model.algebra
    rho = module.matrices()
    d = module.denominator
    lcd = algebra.common_denominator
    n = algebra.dim
    structure = np.zeros((n, n, n))
    for (i, j), terms in algebra.table.items():
        for k, c in terms:
            structure[i, j, k] = float(c * lcd)
    for x in range(n):
        left = np.tensordot(structure[x], rho, axes=(1, 0)) * d        # L·d²·ρ([x, y])
        right = (np.matmul(rho[x], rho) - np.matmul(rho, rho[x])) * lcd  # L·d²·[ρ(x), ρ(y)]
        bad = np.nonzero(np.any(left != right, axis=(1, 2)))[0]
        if len(bad):
            return x, int(bad[0])
    return None


def invariant_form_signs(module: ModuleAction) -> Optional[Tuple[int, ...]]:
    """First σ (σ_0 = +1) with ρ(x)ᵀΩ + Ωρ(x) = 0 for every basis x."""
    rho = module.matrices()
    for rest in itertools.product((1, -1), repeat=6):
        signs = (1,) + rest
        omega_matrix = symplectic_form(module.labels, signs)
        products = np.transpose(rho, (0, 2, 1)) @ omega_matrix + omega_matrix @ rho
        if not np.any(products):
            return signs
    return None


def build_v56(model: OGradedModel, candidates: Sequence[Fraction] = SCALE_CANDIDATES) -> ModuleAction:
    logger.info("→ Building the 56-dimensional module")
    for scale in candidates:
        bits = _probe_scale(model, Fraction(scale))
        if bits is None:
            logger.debug(f"  ✗ κ = {scale}")
            continue
        module = ModuleAction(model, module_labels(), _realize(model, Fraction(scale), bits), Fraction(scale), bits)
        failure = module_axiom_failure(module)
        if failure is not None:
            x, y = failure
            raise ModuleConstructionError(
                f"module axiom fails for ({model.algebra.basis[x]}, {model.algebra.basis[y]})"
            )
        signs = invariant_form_signs(module)
        if signs is None:
            raise ModuleConstructionError("no sign choice makes ω⊗ω⊗ω invariant")
        module.form_signs = signs
        module.provenance = {
            "scale": str(module.scale),
            "eta_bits": format(bits, "x"),
            "form_signs": list(signs),
            "theta_index": model.provenance.get("theta_index"),
        }
        logger.info(f"  ✓ V56: κ = {scale}, module axiom on all {model.dim}² pairs, invariant form found")
        return module
    raise ModuleConstructionError(f"no scale in {[str(c) for c in candidates]} satisfies the probes")


def factor_line_pairs(module: ModuleAction, factor: int) -> List[Tuple[int, int]]:
    """Pairs of lines swapped by A_Q, read off the built action."""
    shape = module.model.shape
    pairs = set()
    for x in shape.factor_basis(factor):
        for v in range(module.dim):
            for w, _ in module.action.get((x, v), ()):
                a, b = module.labels[v].block, module.labels[w].block
                pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


def killed_line(module: ModuleAction, factor: int) -> List[int]:
    """Lines on which the whole factor acts by zero."""
    shape = module.model.shape
    touched = {module.labels[v].block for x in shape.factor_basis(factor)
               for v in range(module.dim) if (x, v) in module.action}
    return [b for b in range(7) if b not in touched]
