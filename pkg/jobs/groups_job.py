import sys
from pathlib import Path
from typing import List

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from configs.bitangents28 import bitangent_group, hesse_models_agree
from models.models import CheckSpec, SuiteContext
from permgrp.aronhold_systems import aronhold_triangle_systems, verify_triangle_systems
from permgrp.hesse import all_bifids_in_group, hesse_group, hesse_tetrad_census
from permgrp.pascal import all_pascal_bifids_in_group, pascal_group, ten_cycle
from permgrp.triangle_sigma import (
    HESSE_GROUP_ORDER,
    SIGMA_READING,
    all_sigmas_are_involutions,
    resolve_sigma_reading,
    sigma_families,
    triangle_sigma_group,
)

GROUP_SUITES = ("groups",)


# ==============================================================
# W(E7) ON 28 OBJECTS
# ==============================================================

def _tetrad_census() -> tuple:
    census = hesse_tetrad_census()
    return census.matchings, census.four_cycles, census.other


def _triangle_systems() -> dict:
    report = verify_triangle_systems()
    return {"systems": len(aronhold_triangle_systems()), "ok": report.ok, "rows": report.table_rows_matched}


def hesse_checks() -> List[CheckSpec]:
    return [
        CheckSpec("Hesse group order", HESSE_GROUP_ORDER, lambda: hesse_group().order()),
        CheckSpec("Hesse group transitive", True, lambda: hesse_group().is_transitive()),
        CheckSpec("Hesse point stabilizer", 51840, lambda: hesse_group().stabilizer_order(0)),
        CheckSpec("bifids lie in the Hesse group", True, all_bifids_in_group),
        CheckSpec("zero-sum tetrads (matchings, 4-cycles, other)", (105, 210, 0), _tetrad_census),
        CheckSpec("agrees with W(E7)/±1 on bitangents", True, hesse_models_agree),
        CheckSpec("bitangent group order", HESSE_GROUP_ORDER, lambda: bitangent_group().order()),
    ]


def sigma_checks() -> List[CheckSpec]:
    return [
        CheckSpec("σ_T reading is the only accepted one", SIGMA_READING, resolve_sigma_reading),
        CheckSpec("σ generators are involutions", True, all_sigmas_are_involutions),
        CheckSpec("σ bifid split (points, lines, flags)", (7, 7, 21), lambda: sigma_families().bifid_split()),
        CheckSpec("σ group order", HESSE_GROUP_ORDER, lambda: triangle_sigma_group().order()),
        CheckSpec("σ group transitive on triangles", True, lambda: triangle_sigma_group().is_transitive()),
        CheckSpec("σ triangle stabilizer", 51840, lambda: triangle_sigma_group().stabilizer_order(0)),
        CheckSpec("Aronhold triangle systems", {"systems": 8, "ok": True, "rows": 8}, _triangle_systems),
    ]


# ==============================================================
# W(E8) ON 120 TRIPLES
# ==============================================================

def pascal_checks() -> List[CheckSpec]:
    return [
        CheckSpec("tritangent group degree", 120, lambda: pascal_group().degree),
        CheckSpec("tritangent group order", 348364800, lambda: pascal_group().order()),
        CheckSpec("tritangent group transitive", True, lambda: pascal_group().is_transitive()),
        CheckSpec("every bifid lies in the group", True, all_pascal_bifids_in_group),
        CheckSpec("10-cycle lies in the group", False, lambda: pascal_group().contains(ten_cycle())),
    ]


def groups_suite(context: SuiteContext) -> List[CheckSpec]:
    return hesse_checks() + sigma_checks() + pascal_checks()


SUITES = {
    "groups": groups_suite,
}


def run_groups_job() -> bool:
    from orchestrator.orchestrator import VerificationOrchestrator

    reports = VerificationOrchestrator(SuiteContext()).run(GROUP_SUITES)
    return all(r.ok for r in reports)


if __name__ == "__main__":
    try:
        ok = run_groups_job()
    except Exception:
        import traceback
        traceback.print_exc()
        exit(2)
    exit(0 if ok else 1)
