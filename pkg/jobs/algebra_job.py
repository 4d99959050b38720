import sys
from pathlib import Path
from fractions import Fraction
from typing import List

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from fano.plane import fano_lines
from liealg.chevalley import oracle_roots
from liealg.doubled_fano import array_matches_xor, doubled_fano_report, partitions_match_printed
from liealg.grading import (
    antipodal_factors_commute,
    check_o_grading,
    inner_product_histogram,
    lattice_histogram,
    line_subalgebra,
    matches_root_system,
    model_inner,
    point_subalgebra,
    subalgebra_types,
    subspace_roots,
)
from liealg.jacobi import verify_jacobi
from liealg.mod import literal_reading_abelian, multiplicative_od
from liealg.module56 import build_v56, factor_line_pairs, killed_line, module_axiom_failure
from liealg.ograded import (
    OGradedModel,
    assemble_algebra,
    build_e7,
    build_e8,
    coefficient_survey,
    e7_shape,
    e8_shape,
    octonion_cross_sign,
    solve_inner_coefficient,
    unknown_cross_sign,
)
from liealg.tetrad_signs import printed_table_present, tetrad_sign_tables
from models.models import CheckSpec, SuiteContext
from octonion.algebra import sign_table
from rootlat.presets import parent_system
from rootlat.root_system import minuscule_weights_e7

ALGEBRA_SUITES = ("e7-model", "e8-model", "mod")


# ==============================================================
# CACHED BUILDS
# ==============================================================

def e7_model(context: SuiteContext) -> OGradedModel:
    return context.cached("e7", lambda: build_e7(sign_table(context.theta_index), verify=False))


def e8_model(context: SuiteContext) -> OGradedModel:
    return context.cached("e8", lambda: build_e8(verify=False))


def v56_module(context: SuiteContext):
    return context.cached("v56", lambda: build_v56(e7_model(context)))


def jacobi_report(context: SuiteContext, model: OGradedModel):
    return context.cached(f"jacobi:{model.name}", lambda: verify_jacobi(
        model.algebra, threads=context.threads, chunk_size=context.chunk_size, progress=context.progress,
    ))


def grading_report(context: SuiteContext, model: OGradedModel):
    return context.cached(f"grading:{model.name}", lambda: check_o_grading(model.algebra))


def type_census(context: SuiteContext, model: OGradedModel) -> dict:
    types = context.cached(f"types:{model.name}", lambda: subalgebra_types(model))
    return {kind: dict(sorted(counter.items())) for kind, counter in types.items()}


def _root_counts(model: OGradedModel) -> dict:
    return {
        "point": sorted({len(subspace_roots(model, point_subalgebra(model, u))) for u in range(1, 8)}),
        "line": sorted({len(subspace_roots(model, line_subalgebra(model, l))) for l in fano_lines()}),
    }


def model_checks(context: SuiteContext, build, dim: int, point_dim: int, line_dim: int,
                 point_type: str, line_type: str, point_roots: int, line_roots: int) -> List[CheckSpec]:
    """Checks shared by the e7 and e8 models."""
    return [
        CheckSpec("dimension", dim, lambda: build(context).dim),
        CheckSpec("antisymmetry", True, lambda: build(context).algebra.is_antisymmetric()),
        CheckSpec("Jacobi on all ordered triples", True, lambda: jacobi_report(context, build(context)).ok),
        CheckSpec("O-grading law", True, lambda: grading_report(context, build(context)).ok),
        CheckSpec("g_i dimension", [point_dim],
                  lambda: sorted(set(grading_report(context, build(context)).point_dims.values()))),
        CheckSpec("g_ℓ dimension", [line_dim],
                  lambda: sorted(set(grading_report(context, build(context)).line_dims.values()))),
        CheckSpec("subalgebra types", {"line": {line_type: 7}, "point": {point_type: 7}},
                  lambda: type_census(context, build(context))),
        CheckSpec("subalgebra roots", {"line": [line_roots], "point": [point_roots]},
                  lambda: _root_counts(build(context))),
    ]


# ==============================================================
# e7
# ==============================================================

def _coefficients_over_theta() -> list:
    """Distinct lists of passing coefficients across the 16 θ tables."""
    return sorted({tuple(str(c) for c in passing) for passing in coefficient_survey().values()})


def _jacobi_without_inner_brackets(context: SuiteContext) -> bool:
    shape = e7_shape()
    control = assemble_algebra(shape, octonion_cross_sign(shape, sign_table(context.theta_index)), Fraction(0))
    return verify_jacobi(control, threads=context.threads, chunk_size=context.chunk_size).ok


def e7_model_suite(context: SuiteContext) -> List[CheckSpec]:
    def module_weights_match() -> bool:
        module = v56_module(context)
        ours = inner_product_histogram(module.weights(), model_inner)
        return ours == lattice_histogram(minuscule_weights_e7().weights)

    def line_pairs() -> dict:
        module = v56_module(context)
        factors = range(len(e7_model(context).shape.factors))
        return {
            "moved_pairs": sorted({len(factor_line_pairs(module, q)) for q in factors}),
            "killed_lines": sorted({len(killed_line(module, q)) for q in factors}),
        }

    return model_checks(context, e7_model, 133, 37, 69, "D4xA1xA1xA1", "D6xA1", 30, 62) + [
        CheckSpec("roots match E7", True, lambda: matches_root_system(e7_model(context), parent_system("E7").roots)),
        CheckSpec("V56 module axiom", True, lambda: module_axiom_failure(v56_module(context)) is None),
        CheckSpec("V56 invariant symplectic form", True, lambda: bool(v56_module(context).form_signs)),
        CheckSpec("V56 weights match the minuscule orbit", True, module_weights_match),
        CheckSpec("factor action on the seven lines", {"killed_lines": [1], "moved_pairs": [3]}, line_pairs),
        CheckSpec("within-factor coefficient for every θ", [("1/2",)], _coefficients_over_theta),
        CheckSpec("Jacobi with c = 0", False, lambda: _jacobi_without_inner_brackets(context)),
    ]


# ==============================================================
# e8
# ==============================================================

def _sign_system(model: OGradedModel) -> dict:
    return {
        "interacting_pairs": model.provenance["interacting_pairs"],
        "antipodal_pairs": model.provenance["antipodal_pairs"],
        "solved": model.algebra.is_antisymmetric(),
    }


def _e8_passing_coefficients() -> List[str]:
    shape = e8_shape()
    solution = solve_inner_coefficient(shape, unknown_cross_sign(shape), exhaustive=True)
    return [str(c) for c in solution.passing]


def e8_model_suite(context: SuiteContext) -> List[CheckSpec]:
    return [
        CheckSpec("sign system solvable", {"interacting_pairs": 84, "antipodal_pairs": 7, "solved": True},
                  lambda: _sign_system(e8_model(context))),
        CheckSpec("within-factor coefficient is unique", ["1/2"], _e8_passing_coefficients),
    ] + model_checks(context, e8_model, 248, 56, 120, "D4xD4", "D8", 48, 112) + [
        CheckSpec("antipodal factors commute", True, lambda: antipodal_factors_commute(e8_model(context))),
        CheckSpec("(14_6, 28_3) configuration", True, lambda: doubled_fano_report()["ok"]),
        CheckSpec("8×8 array is XOR", True, array_matches_xor),
        CheckSpec("pair partitions match the printed list", True, partitions_match_printed),
        CheckSpec("tetrad sign tables present", True, lambda: printed_table_present(tetrad_sign_tables())),
        CheckSpec("weights match the Chevalley oracle", True,
                  lambda: matches_root_system(e8_model(context), oracle_roots(parent_system("E8")))),
    ]


# ==============================================================
# MOD
# ==============================================================

def mod_suite(context: SuiteContext) -> List[CheckSpec]:
    def decomposition():
        return context.cached("mod", lambda: multiplicative_od(e8_model(context)))

    return [
        CheckSpec("components", 31, lambda: len(decomposition().components)),
        CheckSpec("component dimensions", [8], lambda: sorted({c.dim for c in decomposition().components})),
        CheckSpec("total dimension", 248, lambda: decomposition().total_dim),
        CheckSpec("direct sum", True, lambda: decomposition().direct_sum),
        CheckSpec("abelian", True, lambda: all(decomposition().abelian.values())),
        CheckSpec("multiplicative", True, lambda: not decomposition().failures),
        CheckSpec("per-quadruple reading abelian", False, lambda: literal_reading_abelian(e8_model(context))),
    ]


SUITES = {
    "e7-model": e7_model_suite,
    "e8-model": e8_model_suite,
    "mod": mod_suite,
}


def run_algebra_job(threads: int = 1) -> bool:
    from orchestrator.orchestrator import VerificationOrchestrator

    reports = VerificationOrchestrator(SuiteContext(threads=threads)).run(ALGEBRA_SUITES)
    return all(r.ok for r in reports)


if __name__ == "__main__":
    try:
        ok = run_algebra_job()
    except Exception:
        import traceback
        traceback.print_exc()
        exit(2)
    exit(0 if ok else 1)
