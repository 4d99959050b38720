import sys
from pathlib import Path
from typing import List

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from configs.bitangents28 import (
    aronhold_orbit,
    bitangent_group,
    bitangents28,
    complex_intersection_sizes,
    complex_triads,
    fano_heptads,
    hesse_aronhold_sets_in_orbit,
    hesse_models_agree,
    steiner_complexes,
    symplectic_census,
    tetrad_splittings_16,
)
from configs.branching import all_branching_names, branch_preset, expected_branching
from configs.lines27 import (
    azygetic_triads,
    classify_double_six_pair,
    double_sixes,
    is_classical_double_six,
    lines27,
    planes_per_line,
    steiner_incidence_census,
    steiner_sets_27,
    steiner_triple_systems,
    syzygetic_tetrads_of_double_sixes,
    tetrads_through_pairs,
    tritangent_planes_27,
)
from configs.tritangents120 import (
    e8_complexes_and_triads,
    sl9_split,
    tetrad_completions,
    tritangents120,
)
from models.models import CheckSpec, SuiteContext
from rootlat.mod2 import mod2_quadric_census
from rootlat.presets import parent_system
from rootlat.root_system import minuscule_weights_e6, minuscule_weights_e7, weyl_group_order

LINE_SUITES = ("e6-lines", "e7-bitangents", "e8-planes")


# ==============================================================
# SHARED CHECKS
# ==============================================================

def root_data_checks(type_label: str, roots: int, weyl_order: int) -> List[CheckSpec]:
    return [
        CheckSpec(f"roots of {type_label}", roots, lambda: len(parent_system(type_label).roots)),
        CheckSpec(f"Weyl group order of {type_label}", weyl_order,
                  lambda: weyl_group_order(parent_system(type_label))),
    ]


def branching_checks(parent: str) -> List[CheckSpec]:
    """Subsystem type and orbit sizes of every registered branching of `parent`."""
    checks = []
    for name in all_branching_names():
        if not name.startswith(parent + "."):
            continue
        label, sizes = expected_branching(name)

        def actual(name=name):
            report = branch_preset(name)
            return {"type": report.subsystem.type_label, "sizes": sorted(report.sizes, reverse=True)}

        checks.append(CheckSpec(f"branching {name}", {"type": label, "sizes": sorted(sizes, reverse=True)}, actual))
    return checks


def _intersection_sizes_by_kind(pairs) -> dict:
    out = {}
    for kind, size in pairs:
        out.setdefault(kind, set()).add(size)
    return {kind: sorted(sizes) for kind, sizes in sorted(out.items())}


# ==============================================================
# 27 LINES
# ==============================================================

def _double_six_intersections() -> dict:
    sixes = double_sixes()
    pairs = []
    for a in range(len(sixes)):
        for b in range(a + 1, len(sixes)):
            pairs.append((classify_double_six_pair(sixes[a], sixes[b]), len(sixes[a].members & sixes[b].members)))
    return _intersection_sizes_by_kind(pairs)


def _steiner_incidence() -> dict:
    census = steiner_incidence_census()
    return {
        "degrees": sorted(set(census.degrees)),
        "common": census.common_with_completion,
        "restricted": sorted(set(census.restricted_degrees)),
    }


def e6_lines_suite(context: SuiteContext) -> List[CheckSpec]:
    return root_data_checks("E6", 72, 51840) + [
        CheckSpec("minuscule orbit", 27, lambda: len(minuscule_weights_e6())),
        CheckSpec("incidence degree", [10], lambda: sorted(set(lines27().incidence_degrees()))),
        CheckSpec("tritangent planes", 45, lambda: len(tritangent_planes_27())),
        CheckSpec("planes through a line", [5], lambda: sorted(set(planes_per_line().values()))),
        CheckSpec("double-sixes", 36, lambda: len(double_sixes())),
        CheckSpec("double-sixes are classical", True,
                  lambda: all(is_classical_double_six(d) for d in double_sixes())),
        CheckSpec("double-six intersections", {"azygetic": [6], "syzygetic": [4]}, _double_six_intersections),
        CheckSpec("azygetic triads", 120, lambda: len(azygetic_triads())),
        CheckSpec("syzygetic tetrads", 135, lambda: len(syzygetic_tetrads_of_double_sixes())),
        CheckSpec("tetrads through a syzygetic pair", [3], lambda: sorted(set(tetrads_through_pairs().values()))),
        CheckSpec("Steiner sets", 120, lambda: len(steiner_sets_27())),
        CheckSpec("Steiner triple systems", 40, lambda: len(steiner_triple_systems())),
        CheckSpec("Steiner incidence", {"degrees": [56], "common": 28, "restricted": [8]}, _steiner_incidence),
    ] + branching_checks("E6")


# ==============================================================
# 28 BITANGENTS
# ==============================================================

def _complex_intersections() -> dict:
    pairs = []
    for (orthogonal, size), _ in complex_intersection_sizes().items():
        pairs.append(("syzygetic" if orthogonal else "azygetic", size))
    return _intersection_sizes_by_kind(pairs)


def _triad_counts() -> dict:
    counts = complex_triads()
    return {
        "syzygetic": counts.syzygetic,
        "azygetic": counts.azygetic,
        "completions": list(counts.syzygetic_completions),
    }


def _splittings() -> dict:
    census = tetrad_splittings_16()
    return {
        "tetrads": census.tetrads,
        "all_t_sigma": census.all_t_sigma,
        "splittings": census.splittings,
        "printed_shapes": census.matching_printed,
    }


def e7_bitangents_suite(context: SuiteContext) -> List[CheckSpec]:
    return root_data_checks("E7", 126, 2903040) + [
        CheckSpec("minuscule orbit", 56, lambda: len(minuscule_weights_e7())),
        CheckSpec("bitangents", 28, lambda: len(bitangents28())),
        CheckSpec("bitangent group order", 1451520, lambda: bitangent_group().order()),
        CheckSpec("Steiner complexes", 63, lambda: len(steiner_complexes())),
        CheckSpec("complex size", [12], lambda: sorted({len(c.members) for c in steiner_complexes()})),
        CheckSpec("complex intersections", {"azygetic": [6], "syzygetic": [4]}, _complex_intersections),
        CheckSpec("complex triads", {"syzygetic": 315, "azygetic": 336, "completions": [1]}, _triad_counts),
        CheckSpec("Fano heptads", 135, lambda: len(fano_heptads())),
        CheckSpec("heptads realize S(2,3,7)", True, lambda: all(h.is_fano() for h in fano_heptads())),
        CheckSpec("Sp(6,F2) census", (63, 315, 135), symplectic_census),
        CheckSpec("Aronhold sets", 288, lambda: len(aronhold_orbit())),
        CheckSpec("Hesse notation agrees", True, hesse_models_agree),
        CheckSpec("A_i are Aronhold sets", True, hesse_aronhold_sets_in_orbit),
        CheckSpec("A⊗B tetrad splittings",
                  {"tetrads": 24, "all_t_sigma": True, "splittings": 24, "printed_shapes": 12}, _splittings),
    ] + branching_checks("E7")


# ==============================================================
# 120 TRITANGENT PLANES
# ==============================================================

def _census() -> dict:
    census = e8_complexes_and_triads()
    return {
        "complex_sizes": list(census.complex_sizes),
        "azygetic_triads": census.azygetic_triads,
        "syzygetic_tetrads": census.syzygetic_tetrads,
        "triad_partitions": [list(p) for p in census.triad_partitions],
        "tetrad_partitions": [list(p) for p in census.tetrad_partitions],
    }


def _mod2() -> tuple:
    census = mod2_quadric_census()
    return census.norm0, census.norm1, census.quadratic_form_ok, census.root_classes, census.root_classes_all_odd


def e8_planes_suite(context: SuiteContext) -> List[CheckSpec]:
    expected_census = {
        "complex_sizes": [56],
        "azygetic_triads": 1120,
        "syzygetic_tetrads": 9450,
        "triad_partitions": [[27, 27, 27, 36]],
        "tetrad_partitions": [[8, 12, 16, 16, 16, 16, 16, 16]],
    }
    return root_data_checks("E8", 240, 696729600) + [
        CheckSpec("tritangent planes", 120, lambda: len(tritangents120())),
        CheckSpec("complexes and triads", expected_census, _census),
        CheckSpec("tetrads through an orthogonal pair", [15], lambda: sorted(tetrad_completions())),
        CheckSpec("mod-2 census", (136, 120, True, 120, True), _mod2),
        CheckSpec("sl9 split", (84, 36), sl9_split),
    ] + branching_checks("E8")


SUITES = {
    "e6-lines": e6_lines_suite,
    "e7-bitangents": e7_bitangents_suite,
    "e8-planes": e8_planes_suite,
}


def run_lines_job(threads: int = 1) -> bool:
    from orchestrator.orchestrator import VerificationOrchestrator

    orchestrator = VerificationOrchestrator(SuiteContext(threads=threads))
    reports = orchestrator.run(LINE_SUITES)
    return all(r.ok for r in reports)


if __name__ == "__main__":
    try:
        ok = run_lines_job()
    except Exception:
        import traceback
        traceback.print_exc()
        exit(2)
    exit(0 if ok else 1)
