"""
Finite-dimensional algebras over Q given by a sparse bracket table.

Sparse vectors are dicts {basis index: Fraction}. The bracket table maps an
ordered pair (i, j), i != j, to the tuple of (k, coefficient) in [b_i, b_j];
pairs with a zero bracket are absent.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]
Terms = Tuple[Tuple[int, Fraction], ...]


def add_into(target: Vector, source: Mapping[int, Fraction], scale: Fraction = Fraction(1)) -> None:
    for k, v in source.items():
        value = target.get(k, Fraction(0)) + scale * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


@dataclass
class StructureConstantAlgebra:
    name: str
    basis: Tuple[str, ...]
    table: Dict[Tuple[int, int], Terms]
    grading: Tuple[int, ...] = ()
    provenance: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def basis_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.basis)}

    # ---- brackets ----

    def bracket_basis(self, i: int, j: int) -> Terms:
        return self.table.get((i, j), ())

    def bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.table.get((i, j), ()):
                    value = out.get(k, Fraction(0)) + a * b * c
                    if value:
                        out[k] = value
                    else:
                        out.pop(k, None)
        return out

    def is_antisymmetric(self) -> bool:
        for (i, j), terms in self.table.items():
            if i == j and terms:
                return False
            mirror = dict(self.table.get((j, i), ()))
            if dict(terms) != {k: -v for k, v in mirror.items()}:
                return False
        return True

    def first_antisymmetry_failure(self) -> Optional[Tuple[int, int]]:
        for (i, j), terms in sorted(self.table.items()):
            mirror = dict(self.table.get((j, i), ()))
            if dict(terms) != {k: -v for k, v in mirror.items()}:
                return (i, j)
        return None

    def jacobi_at(self, i: int, j: int, k: int) -> Vector:
        bi, bj, bk = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
        out: Vector = {}
        add_into(out, self.bracket(self.bracket(bi, bj), bk))
        add_into(out, self.bracket(self.bracket(bj, bk), bi))
        add_into(out, self.bracket(self.bracket(bk, bi), bj))
        return out

    # ---- integer sparse form ----

    @cached_property
    def common_denominator(self) -> int:
        den = 1
        for terms in self.table.values():
            for _, c in terms:
                den = math.lcm(den, c.denominator)
        return den

    def scaled_matrices(self) -> Tuple[sp.csr_matrix, sp.csr_matrix, int]:
        """
        (C2, M, L): the structure tensor times L as integer CSR matrices,
        C2[m, k*n + q] = L·C[m,k,q] and M[i*n + j, m] = L·C[i,j,m].
        """
        n, den = self.dim, self.common_denominator
        rows, cols, data = [], [], []
        for (i, j), terms in self.table.items():
            for k, c in terms:
                value = c * den
                rows.append(i)
                cols.append(j * n + k)
                data.append(int(value))
        data = np.array(data, dtype=np.int64)
        c2 = sp.csr_matrix((data, (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
                           shape=(n, n * n))
        pair_rows = np.array(rows, dtype=np.int64) * n + np.array(cols, dtype=np.int64) // n
        m = sp.csr_matrix((data, (pair_rows, np.array(cols, dtype=np.int64) % n)), shape=(n * n, n))
        return c2, m, den

    # ---- subspaces ----

    def closes(self, indices: Iterable[int]) -> bool:
        """Is the span of these basis vectors a subalgebra?"""
        members = set(indices)
        for i in members:
            for j in members:
                for k, _ in self.table.get((i, j), ()):
                    if k not in members:
                        return False
        return True

    # ---- serialization ----

    def to_dict(self) -> dict:
        brackets = []
        for (i, j) in sorted(self.table):
            terms = self.table[(i, j)]
            brackets.append([i, j, [[k, c.numerator, c.denominator] for k, c in terms]])
        return {
            "schema": 1,
            "kind": "structure_constants",
            "name": self.name,
            "basis": list(self.basis),
            "grading": list(self.grading),
            "brackets": brackets,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "StructureConstantAlgebra":
        if payload.get("schema") != 1 or payload.get("kind") != "structure_constants":
            raise ValueError("not a schema-1 structure-constant document")
        table = {}
        for i, j, terms in payload["brackets"]:
            table[(int(i), int(j))] = tuple((int(k), Fraction(int(num), int(den))) for k, num, den in terms)
        return cls(
            name=payload["name"],
            basis=tuple(payload["basis"]),
            table=table,
            grading=tuple(payload.get("grading", ())),
            provenance=dict(payload.get("provenance", {})),
        )


def table_from_function(dim: int, bracket_of) -> Dict[Tuple[int, int], Terms]:
    """Build a table from bracket_of(i, j) -> Vector, evaluated for every ordered pair."""
    table = {}
    for i in range(dim):
        for j in range(dim):
            if i == j:
                continue
            vector = bracket_of(i, j)
            if vector:
                table[(i, j)] = tuple(sorted(vector.items()))
    return table
