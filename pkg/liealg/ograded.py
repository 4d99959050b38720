"""
O-graded structure-constant models of e7 and e8.

    e7 = ⊕ sl(A_i) ⊕ ⊕_Q A_Q        slots 1..7, Q runs over the 7 quadruples
                                     complementary to the Fano lines
    e8 = ⊕ sl(A_i) ⊕ ⊕_Q A_Q        slots 1..8, Q runs over the 14 affine
                                     planes of F2³ (labels x + 1)

Each A_i is two-dimensional with basis e = 0, f = 1 and ω(e, f) = 1.
A_Q is the tensor product of the A_i, i in Q, and carries grade u, the
octonion unit whose orthogonal hyperplane cuts out Q.

BRACKETS
────────────────────────────────────────────────────────────────────────
  (a) sl(A_i) × sl(A_i)     the sl2 table, [H,X] = 2X, [H,Y] = −2Y, [X,Y] = H
  (b) sl(A_i) × A_Q         slot-wise action when i ∈ Q, zero otherwise
  (c) A_Q × A_Q', |Q∩Q'|=2  θ·ω(a_i,b_i)ω(a_j,b_j)·(a on Q∖Q')⊗(b on Q'∖Q)
  (d) A_Q × A_Q             c·Σ_s Π_{t≠s} ω(a_t,b_t)·S(a_s,b_s) in sl(A_s)
────────────────────────────────────────────────────────────────────────

e7 takes θ from an octonion sign table. e8 takes one unknown sign per
interacting pair of factors; the signs and the global coefficient c are
fixed by Jacobi probes reduced to linear equations over GF(2).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from fano.orientations import coherent_orientations
from liealg.gf2 import GF2System, InconsistentSystem, parity
from liealg.jacobi import describe_triple, verify_jacobi
from liealg.structure import StructureConstantAlgebra, Terms
from octonion.algebra import SignTable, default_sign_table, sign_table

logger = logging.getLogger(__name__)

E, F = 0, 1
SL2 = ("H", "X", "Y")

INNER_CANDIDATES: Tuple[Fraction, ...] = (
    Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2),
    Fraction(1, 4), Fraction(-1, 4), Fraction(2), Fraction(-2),
)

# sl2 on A: (element, vector) -> (coefficient, vector)
SL2_ACTION = {("H", E): (1, E), ("H", F): (-1, F), ("X", F): (1, E), ("Y", E): (1, F)}
_SL2_BRACKET = {
    ("H", "X"): (2, "X"), ("X", "H"): (-2, "X"),
    ("H", "Y"): (-2, "Y"), ("Y", "H"): (2, "Y"),
    ("X", "Y"): (1, "H"), ("Y", "X"): (-1, "H"),
}
# S(x, y) z = ω(x, z) y + ω(y, z) x
_S = {(E, E): (2, "X"), (F, F): (-2, "Y"), (E, F): (-1, "H"), (F, E): (-1, "H")}

SymbolicTerms = Tuple[Tuple[int, Fraction, int], ...]   # (k, coefficient, sign mask)


class ModelConstructionError(RuntimeError):
    pass


def omega(a: int, b: int) -> int:
    if a == b:
        return 0
    return 1 if a == E else -1


# ================================================================== #
#  SHAPE                                                               #
# ================================================================== #

@dataclass(frozen=True)
class Factor:
    slots: Tuple[int, ...]      # sorted slot indices
    grade: int                  # octonion unit 1..7
    name: str                   # slot labels, e.g. "1247"

    @property
    def slot_set(self) -> FrozenSet[int]:
        return frozenset(self.slots)


@dataclass(frozen=True)
class BasisLabel:
    kind: str                   # "h" for ⊕ sl(A_i), "g" for a graded factor
    slot: int = -1
    element: str = ""
    factor: int = -1
    bits: Tuple[int, ...] = ()

    def render(self, shape: "ModelShape") -> str:
        if self.kind == "h":
            return f"{self.element}{shape.slot_names[self.slot]}"
        word = "".join("ef"[b] for b in self.bits)
        return f"{shape.factors[self.factor].name}:{word}"


def _odd(x: int) -> int:
    return bin(x).count("1") & 1


def e7_factors() -> Tuple[Factor, ...]:
    """Q_u = {x in 1..7 : u·x = 1}, the complement of the line orthogonal to u."""
    out = []
    for u in range(1, 8):
        points = [x for x in range(1, 8) if _odd(u & x)]
        out.append(Factor(tuple(x - 1 for x in points), u, "".join(map(str, points))))
    return tuple(sorted(out, key=lambda f: f.name))


def e8_factors() -> Tuple[Factor, ...]:
    """Q_{u,c} = {x in F2³ : u·x = c}, labelled x + 1."""
    out = []
    for u in range(1, 8):
        for c in (0, 1):
            points = [x for x in range(8) if _odd(u & x) == c]
            out.append(Factor(tuple(points), u, "".join(str(x + 1) for x in points)))
    return tuple(sorted(out, key=lambda f: f.name))


@dataclass
class ModelShape:
    name: str
    slot_names: Tuple[str, ...]
    factors: Tuple[Factor, ...]

    @cached_property
    def labels(self) -> Tuple[BasisLabel, ...]:
        out = [BasisLabel("h", slot=s, element=el) for s in range(len(self.slot_names)) for el in SL2]
        for q, factor in enumerate(self.factors):
            for bits in itertools.product((E, F), repeat=len(factor.slots)):
                out.append(BasisLabel("g", factor=q, bits=bits))
        return tuple(out)

    @cached_property
    def index(self) -> Dict[BasisLabel, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_slots(self) -> int:
        return len(self.slot_names)

    def h_index(self, slot: int, element: str) -> int:
        return 3 * slot + SL2.index(element)

    def g_index(self, factor: int, bits: Tuple[int, ...]) -> int:
        return self.index[BasisLabel("g", factor=factor, bits=tuple(bits))]

    def factor_basis(self, factor: int) -> List[int]:
        size = len(self.factors[factor].slots)
        return [self.g_index(factor, bits) for bits in itertools.product((E, F), repeat=size)]

    @cached_property
    def factor_by_slots(self) -> Dict[FrozenSet[int], int]:
        return {f.slot_set: q for q, f in enumerate(self.factors)}

    @cached_property
    def interacting_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(
            (p, q) for p, q in itertools.combinations(range(len(self.factors)), 2)
            if len(self.factors[p].slot_set & self.factors[q].slot_set) == 2
        )

    @cached_property
    def antipodal_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(
            (p, q) for p, q in itertools.combinations(range(len(self.factors)), 2)
            if not self.factors[p].slot_set & self.factors[q].slot_set
        )

    @cached_property
    def pair_variable(self) -> Dict[Tuple[int, int], int]:
        return {pair: v for v, pair in enumerate(self.interacting_pairs)}

    def inner_variable(self, factor: int) -> int:
        return len(self.interacting_pairs) + factor

    @property
    def n_variables(self) -> int:
        return len(self.interacting_pairs) + len(self.factors)

    def grade_of(self, i: int) -> int:
        label = self.labels[i]
        return 0 if label.kind == "h" else self.factors[label.factor].grade

    def weight_of(self, i: int) -> Tuple[int, ...]:
        """Eigenvalues of the diagonal Cartan H_1..H_n on basis vector i."""
        label = self.labels[i]
        w = [0] * self.n_slots
        if label.kind == "h":
            w[label.slot] = {"H": 0, "X": 2, "Y": -2}[label.element]
        else:
            for s, b in zip(self.factors[label.factor].slots, label.bits):
                w[s] = 1 if b == E else -1
        return tuple(w)


def e7_shape() -> ModelShape:
    return ModelShape("e7", tuple(str(i) for i in range(1, 8)), e7_factors())


def e8_shape() -> ModelShape:
    return ModelShape("e8", tuple(str(i) for i in range(1, 9)), e8_factors())


# ================================================================== #
#  SYMBOLIC BRACKET                                                    #
# ================================================================== #

CrossSign = Callable[[int, int], Tuple[int, int]]


def octonion_cross_sign(shape: ModelShape, theta: SignTable) -> CrossSign:
    def sign(p: int, q: int) -> Tuple[int, int]:
        return theta.theta(shape.factors[p].grade, shape.factors[q].grade), 0
    return sign


def unknown_cross_sign(shape: ModelShape) -> CrossSign:
    """θ_{Q,Q'} = (−1)^x for Q < Q' and −(−1)^x for Q > Q', one x per pair."""
    def sign(p: int, q: int) -> Tuple[int, int]:
        if p < q:
            return 1, 1 << shape.pair_variable[(p, q)]
        return -1, 1 << shape.pair_variable[(q, p)]
    return sign


class SymbolicBracket:
    """Brackets whose signs are monomials (−1)^{mask·x} in the unknown sign bits x."""

    def __init__(self, shape: ModelShape, inner_coefficient: Fraction, cross_sign: CrossSign):
        self.shape = shape
        self.c = Fraction(inner_coefficient)
        self.cross_sign = cross_sign
        self._memo: Dict[Tuple[int, int], SymbolicTerms] = {}

    def __call__(self, i: int, j: int) -> SymbolicTerms:
        key = (i, j)
        if key not in self._memo:
            self._memo[key] = self._compute(i, j)
        return self._memo[key]

    def _compute(self, i: int, j: int) -> SymbolicTerms:
        labels = self.shape.labels
        a, b = labels[i], labels[j]
        if a.kind == "h" and b.kind == "h":
            if a.slot != b.slot or (a.element, b.element) not in _SL2_BRACKET:
                return ()
            coef, el = _SL2_BRACKET[(a.element, b.element)]
            return ((self.shape.h_index(a.slot, el), Fraction(coef), 0),)
        if a.kind == "h":
            return self._act(a, b)
        if b.kind == "h":
            return tuple((k, -v, m) for k, v, m in self._act(b, a))
        if a.factor == b.factor:
            return self._within(a, b)
        return self._cross(a, b)

    def _act(self, h: BasisLabel, g: BasisLabel) -> SymbolicTerms:
        factor = self.shape.factors[g.factor]
        if h.slot not in factor.slots:
            return ()
        pos = factor.slots.index(h.slot)
        rule = SL2_ACTION.get((h.element, g.bits[pos]))
        if rule is None:
            return ()
        coef, bit = rule
        bits = g.bits[:pos] + (bit,) + g.bits[pos + 1:]
        return ((self.shape.g_index(g.factor, bits), Fraction(coef), 0),)

    def _within(self, a: BasisLabel, b: BasisLabel) -> SymbolicTerms:
        factor = self.shape.factors[a.factor]
        forms = [omega(x, y) for x, y in zip(a.bits, b.bits)]
        mask = 1 << self.shape.inner_variable(a.factor)
        out = []
        for s, slot in enumerate(factor.slots):
            product = 1
            for t, w in enumerate(forms):
                if t != s:
                    product *= w
            if not product:
                continue
            coef, el = _S[(a.bits[s], b.bits[s])]
            out.append((self.shape.h_index(slot, el), self.c * product * coef, mask))
        return tuple(out)

    def _cross(self, a: BasisLabel, b: BasisLabel) -> SymbolicTerms:
        qa, qb = self.shape.factors[a.factor], self.shape.factors[b.factor]
        shared = qa.slot_set & qb.slot_set
        if len(shared) != 2:
            return ()
        coef = 1
        for slot in shared:
            coef *= omega(a.bits[qa.slots.index(slot)], b.bits[qb.slots.index(slot)])
        if not coef:
            return ()
        target = self.shape.factor_by_slots[qa.slot_set ^ qb.slot_set]
        bits = tuple(
            a.bits[qa.slots.index(s)] if s in qa.slot_set else b.bits[qb.slots.index(s)]
            for s in self.shape.factors[target].slots
        )
        sign, mask = self.cross_sign(a.factor, b.factor)
        return ((self.shape.g_index(target, bits), Fraction(sign * coef), mask),)

    # ---- Jacobi ----

    def nested(self, i: int, j: int, k: int, into: Dict[Tuple[int, int], Fraction]) -> None:
        for m, c1, m1 in self(i, j):
            for q, c2, m2 in self(m, k):
                key = (q, m1 ^ m2)
                value = into.get(key, Fraction(0)) + c1 * c2
                if value:
                    into[key] = value
                else:
                    into.pop(key, None)

    def jacobi(self, i: int, j: int, k: int) -> Dict[int, List[Tuple[int, Fraction]]]:
        """Nonzero Jacobi components, grouped by basis index as (mask, coefficient) lists."""
        acc: Dict[Tuple[int, int], Fraction] = {}
        self.nested(i, j, k, acc)
        self.nested(j, k, i, acc)
        self.nested(k, i, j, acc)
        grouped: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (q, mask), value in acc.items():
            grouped.setdefault(q, []).append((mask, value))
        return grouped


# ================================================================== #
#  SIGN EQUATIONS                                                      #
# ================================================================== #

def sign_equations(entries: Sequence[Tuple[int, Fraction]]) -> Optional[List[Tuple[int, int]]]:
    """
    Parity equations forcing Σ coef·(−1)^{mask·x} = 0.

    Returns None when no sign pattern cancels, the equations when exactly
    one pattern (up to a global sign) does, and [] when several do.
    """
    if len(entries) == 1:
        return None
    base_mask = entries[0][0]
    patterns = []
    for signs in itertools.product((1, -1), repeat=len(entries) - 1):
        full = (1,) + signs
        if sum(s * c for s, (_, c) in zip(full, entries)) == 0:
            patterns.append(full)
    if not patterns:
        return None
    if len(patterns) > 1:
        return []
    return [(mask ^ base_mask, int(s == -1)) for s, (mask, _) in zip(patterns[0], entries)][1:]


def probe_triples(shape: ModelShape) -> List[Tuple[int, int, int]]:
    """Factor triples p ≤ q ≤ r, those with repeated factors first."""
    triples = list(itertools.combinations_with_replacement(range(len(shape.factors)), 3))
    return sorted(triples, key=lambda t: (len(set(t)), t))


def probe_candidate(shape: ModelShape, inner_coefficient: Fraction, cross_sign: CrossSign,
                    free_inner_signs: bool = False) -> Optional[int]:
    """
    Run the Jacobi probes for one within-factor coefficient; the solved sign
    bits on success, None on the first contradiction.

    The first argument of each probe is the highest-weight vector of its
    factor; sl2-equivariance of every bracket makes this sufficient.
    """
    bracket = SymbolicBracket(shape, inner_coefficient, cross_sign)
    system = GF2System(shape.n_variables)
    try:
        if not free_inner_signs:
            for q in range(len(shape.factors)):
                system.add(1 << shape.inner_variable(q), 0)
        for p, q, r in probe_triples(shape):
            top = shape.g_index(p, (E,) * len(shape.factors[p].slots))
            second = shape.factor_basis(q)
            third = shape.factor_basis(r)
            for j in second:
                for k in third:
                    for entries in bracket.jacobi(top, j, k).values():
                        equations = sign_equations(entries)
                        if equations is None:
                            logger.debug(f"  ✗ c={inner_coefficient}: probe ({top},{j},{k}) cannot cancel")
                            return None
                        for row, rhs in equations:
                            system.add(row, rhs)
    except InconsistentSystem:
        logger.debug(f"  ✗ c={inner_coefficient}: sign equations are inconsistent")
        return None
    logger.debug(f"  ✓ c={inner_coefficient}: rank {system.rank} from {system.equations_seen} equations")
    return system.solve()


@dataclass(frozen=True)
class CoefficientSolution:
    inner_coefficient: Fraction
    sign_bits: int
    free_inner_signs: bool
    passing: Tuple[Fraction, ...]


def solve_inner_coefficient(shape: ModelShape, cross_sign: CrossSign,
                            candidates: Sequence[Fraction] = INNER_CANDIDATES,
                            exhaustive: bool = False) -> CoefficientSolution:
    """
    First candidate c whose probes are consistent. Within-factor signs stay +1
    unless no candidate passes with them fixed. With `exhaustive`, every
    candidate is tried and all passing ones are reported.
    """
    for free in (False, True):
        passing: List[Tuple[Fraction, int]] = []
        for c in candidates:
            bits = probe_candidate(shape, Fraction(c), cross_sign, free_inner_signs=free)
            if bits is not None:
                passing.append((Fraction(c), bits))
                if not exhaustive:
                    break
        if passing:
            c, bits = passing[0]
            logger.info(f"  ✓ {shape.name}: within-factor coefficient c = {c}"
                        + (" (per-factor signs freed)" if free else ""))
            return CoefficientSolution(c, bits, free, tuple(p for p, _ in passing))
    raise ModelConstructionError(
        f"{shape.name}: no within-factor coefficient in {[str(c) for c in candidates]} passes the probes"
    )

def coefficient_survey(theta_indices: Optional[Sequence[int]] = None) -> Dict[int, Tuple[Fraction, ...]]:
    """Passing within-factor coefficients of the e7 model for each θ table."""
    shape = e7_shape()
    if theta_indices is None:
        theta_indices = range(len(coherent_orientations()))
    return {
        i: solve_inner_coefficient(shape, octonion_cross_sign(shape, sign_table(i)), exhaustive=True).passing
        for i in theta_indices
    }



# ================================================================== #
#  MODELS                                                              #
# ================================================================== #

@dataclass
class OGradedModel:
    shape: ModelShape
    algebra: StructureConstantAlgebra
    inner_coefficient: Fraction
    sign_bits: int = 0
    theta: Optional[SignTable] = None
    provenance: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return self.shape.name

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def grading(self) -> Tuple[int, ...]:
        return self.algebra.grading

    def cartan_indices(self) -> List[int]:
        return [self.shape.h_index(s, "H") for s in range(self.shape.n_slots)]

    def h0_indices(self) -> List[int]:
        return list(range(3 * self.shape.n_slots))

    def factor_indices(self, q: int) -> List[int]:
        return [i for i, label in enumerate(self.shape.labels) if label.factor == q]

    def weights(self) -> List[Tuple[int, ...]]:
        return [self.shape.weight_of(i) for i in range(self.dim)]

    def cross_theta(self, p: int, q: int) -> int:
        """Realized sign of the bracket A_p × A_q for an interacting pair."""
        if self.theta is not None:
            return self.theta.theta(self.shape.factors[p].grade, self.shape.factors[q].grade)
        lo, hi = min(p, q), max(p, q)
        sign = -1 if parity(1 << self.shape.pair_variable[(lo, hi)], self.sign_bits) else 1
        return sign if p < q else -sign


def realize(bracket: SymbolicBracket, sign_bits: int) -> Dict[Tuple[int, int], Terms]:
    table: Dict[Tuple[int, int], Terms] = {}
    n = bracket.shape.dim
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            terms = []
            for k, coef, mask in bracket(i, j):
                terms.append((k, -coef if parity(mask, sign_bits) else coef))
            if terms:
                table[(i, j)] = tuple(sorted(terms))
    return table


def _provenance(shape: ModelShape, solution: CoefficientSolution, theta: Optional[SignTable]) -> dict:
    return {
        "model": shape.name,
        "theta_index": theta.index if theta is not None else None,
        "inner_coefficient": str(solution.inner_coefficient),
        "passing_coefficients": [str(c) for c in solution.passing],
        "free_inner_signs": solution.free_inner_signs,
        "sign_bits": format(solution.sign_bits, "x"),
        "interacting_pairs": len(shape.interacting_pairs),
        "antipodal_pairs": len(shape.antipodal_pairs),
    }


def assemble_algebra(shape: ModelShape, cross_sign: CrossSign, inner_coefficient: Fraction,
                     sign_bits: int = 0, provenance: Optional[dict] = None) -> StructureConstantAlgebra:
    """Realize the bracket for a fixed coefficient and sign assignment, no checks."""
    bracket = SymbolicBracket(shape, inner_coefficient, cross_sign)
    return StructureConstantAlgebra(
        name=shape.name,
        basis=tuple(label.render(shape) for label in shape.labels),
        table=realize(bracket, sign_bits),
        grading=tuple(shape.grade_of(i) for i in range(shape.dim)),
        provenance=provenance if provenance is not None else {},
    )


def _assemble(shape: ModelShape, cross_sign: CrossSign, solution: CoefficientSolution,
              theta: Optional[SignTable], verify: bool, threads: int) -> OGradedModel:
    provenance = _provenance(shape, solution, theta)
    algebra = assemble_algebra(shape, cross_sign, solution.inner_coefficient, solution.sign_bits, provenance)
    table = algebra.table
    failure = algebra.first_antisymmetry_failure()
    if failure is not None:
        raise ModelConstructionError(f"{shape.name}: bracket is not antisymmetric at {failure}")
    if verify:
        report = verify_jacobi(algebra, threads=threads)
        if not report.ok:
            raise ModelConstructionError(
                f"{shape.name}: Jacobi fails at {describe_triple(algebra, report.first_failure)}"
            )
        provenance["jacobi_verified"] = True
    logger.info(f"  ✓ {shape.name} model: dim {algebra.dim}, {len(table)} nonzero basis brackets")
    return OGradedModel(shape, algebra, solution.inner_coefficient, solution.sign_bits, theta, provenance)


def build_e7(theta: Optional[SignTable] = None, candidates: Sequence[Fraction] = INNER_CANDIDATES,
             verify: bool = True, threads: int = 1) -> OGradedModel:
    theta = theta or default_sign_table()
    shape = e7_shape()
    cross_sign = octonion_cross_sign(shape, theta)
    logger.info(f"→ Building e7 from θ table {theta.index}")
    solution = solve_inner_coefficient(shape, cross_sign, candidates)
    return _assemble(shape, cross_sign, solution, theta, verify, threads)


def build_e8(candidates: Sequence[Fraction] = INNER_CANDIDATES,
             verify: bool = True, threads: int = 1) -> OGradedModel:
    shape = e8_shape()
    cross_sign = unknown_cross_sign(shape)
    logger.info(f"→ Building e8: solving {len(shape.interacting_pairs)} cross-factor signs")
    solution = solve_inner_coefficient(shape, cross_sign, candidates)
    return _assemble(shape, cross_sign, solution, None, verify, threads)
