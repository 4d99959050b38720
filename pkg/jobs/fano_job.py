import itertools
import sys
from pathlib import Path
from typing import List

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from fano.cubes import (
    check_equivariance,
    cubes_of_family,
    face_multiplicities,
    harmonic_cubes,
    harmonic_faces,
    printed_rows_matched,
)
from fano.orientations import (
    Orientation,
    coherent_orientations,
    is_coherent,
    orientation_equivariance_failures,
    orientation_from_point,
    orientation_orbits,
    oriented_triangle_triples,
    rule_is_cyclic,
    triangle_relations,
    triangles_matching_diagonals,
    triple_equivariance_failures,
)
from fano.plane import collineations, fano_lines, triangles
from fano.projective_line import P1_POINTS, psl27_elements
from models.models import CheckSpec, SuiteContext
from octonion.algebra import (
    composition_law_holds,
    conjugation_gives_norm,
    is_alternative_on_basis,
    theta_from_orientation,
    triple_identity_holds,
)

FANO_SUITES = ("fano", "octonion")


# ==============================================================
# FANO PLANE & P¹(F7)
# ==============================================================

def _orientations_from_points() -> dict:
    found = {orientation_from_point(p) for p in P1_POINTS}
    coherent = set(coherent_orientations())
    orbits = [set(o) for o in orientation_orbits(coherent_orientations())]
    return {
        "distinct": len(found),
        "coherent": found <= coherent,
        "one_orbit": any(found == orbit for orbit in orbits),
        "cyclic_rule": all(rule_is_cyclic(p) for p in P1_POINTS),
    }


def _oriented_triples() -> dict:
    values = oriented_triangle_triples()
    every_triple = {frozenset(t) for t in itertools.combinations(P1_POINTS, 3)}
    return {"pairs": len(values), "onto": set(values.values()) == every_triple}


def _faces_per_family() -> dict:
    return {
        family: {"faces": len(counts), "multiplicity": sorted(set(counts.values()))}
        for family, counts in ((f, face_multiplicities(f)) for f in ("p", "l"))
    }


def fano_suite(context: SuiteContext) -> List[CheckSpec]:
    return [
        CheckSpec("lines", 7, lambda: len(fano_lines())),
        CheckSpec("triangles", 28, lambda: len(triangles())),
        CheckSpec("PSL(3,F2) order", 168, lambda: collineations().order()),
        CheckSpec("PSL(2,F7) order", 168, lambda: len(psl27_elements())),
        CheckSpec("coherent orientations", 16, lambda: len(coherent_orientations())),
        CheckSpec("orientation orbits", [8, 8],
                  lambda: sorted(len(o) for o in orientation_orbits(coherent_orientations()))),
        CheckSpec("orientations from P¹(F7)",
                  {"distinct": 8, "coherent": True, "one_orbit": True, "cyclic_rule": True},
                  _orientations_from_points),
        CheckSpec("harmonic cubes", 14, lambda: len(harmonic_cubes())),
        CheckSpec("harmonic faces", 42, lambda: len(harmonic_faces())),
        CheckSpec("cube families", [7, 7], lambda: [len(cubes_of_family("p")), len(cubes_of_family("l"))]),
        CheckSpec("harmonic faces per family",
                  {"l": {"faces": 42, "multiplicity": [1]}, "p": {"faces": 42, "multiplicity": [1]}},
                  _faces_per_family),
        CheckSpec("triangle ↔ pair rows matching the printed table", 28, printed_rows_matched),
        CheckSpec("PSL(2,F7)-equivariance", True, check_equivariance),
        CheckSpec("oriented triangles ↔ triples", {"pairs": 56, "onto": True}, _oriented_triples),
        CheckSpec("oriented triples are diagonal triples", [28, 28],
                  lambda: [triangles_matching_diagonals("p"), triangles_matching_diagonals("l")]),
        CheckSpec("orientation from a point is equivariant", 0, orientation_equivariance_failures),
        CheckSpec("oriented triples are equivariant", 0, triple_equivariance_failures),
    ]


# ==============================================================
# OCTONIONS
# ==============================================================

def _relations_per_orientation() -> List[int]:
    return sorted({sum(triangle_relations(o)) for o in coherent_orientations()})


def _incoherent_count() -> int:
    return sum(1 for bits in range(1 << 7) if not is_coherent(Orientation.from_bits(bits)))


def octonion_suite(context: SuiteContext) -> List[CheckSpec]:
    def tables():
        return [theta_from_orientation(o) for o in coherent_orientations()]

    samples, seed = context.composition_samples, context.seed
    return [
        CheckSpec("triangle relations holding, per orientation", [56], _relations_per_orientation),
        CheckSpec("incoherent orientations rejected", 112, _incoherent_count),
        CheckSpec("alternative on the basis", True, lambda: all(is_alternative_on_basis(t) for t in tables())),
        CheckSpec("triple identity", True, lambda: all(triple_identity_holds(t) for t in tables())),
        CheckSpec(f"composition law on {samples} pairs", True,
                  lambda: all(composition_law_holds(t, samples=samples, seed=seed) for t in tables())),
        CheckSpec(f"x·x̄ = N(x) on {samples} samples", True,
                  lambda: all(conjugation_gives_norm(t, samples=samples, seed=seed) for t in tables())),
    ]


SUITES = {
    "fano": fano_suite,
    "octonion": octonion_suite,
}


def run_fano_job() -> bool:
    from orchestrator.orchestrator import VerificationOrchestrator

    reports = VerificationOrchestrator(SuiteContext()).run(FANO_SUITES)
    return all(r.ok for r in reports)


if __name__ == "__main__":
    try:
        ok = run_fano_job()
    except Exception:
        import traceback
        traceback.print_exc()
        exit(2)
    exit(0 if ok else 1)
