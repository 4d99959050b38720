import logging
import time
from typing import Callable, Dict, Iterable, List

from jobs import algebra_job, fano_job, groups_job, lines_job
from models.models import CheckResult, CheckSpec, SuiteContext, VerificationReport

logger = logging.getLogger(__name__)

SuiteBuilder = Callable[[SuiteContext], List[CheckSpec]]

# Canonical order: "all" runs the suites in this order.
SUITES: Dict[str, SuiteBuilder] = {
    **lines_job.SUITES,
    **fano_job.SUITES,
    **algebra_job.SUITES,
    **groups_job.SUITES,
}

ALL = "all"


def suite_names() -> List[str]:
    return list(SUITES) + [ALL]


def expand(names: Iterable[str]) -> List[str]:
    out: List[str] = []
    for name in names:
        if name == ALL:
            targets = list(SUITES)
        elif name in SUITES:
            targets = [name]
        else:
            raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(suite_names())}")
        out.extend(t for t in targets if t not in out)
    return out


class VerificationOrchestrator:
    """
    Runs verification suites and collects one report per suite.

    EXECUTION STRATEGY:
    ────────────────────────────────────────────────────────────────────────
    Every suite is a list of CheckSpec built from the shared SuiteContext.
    Checks run in list order. The costly objects (O-graded models, V56,
    Jacobi reports) live in the context cache, so a model is built once
    per run no matter how many suites ask for it.

    A check that raises is recorded as failed with the exception text; the
    remaining checks still run. A build that raised is cached as that
    exception, so every dependent check fails with the same message.
    ────────────────────────────────────────────────────────────────────────
    """

    def __init__(self, context: SuiteContext | None = None):
        self.context = context or SuiteContext()

    # ================================================================== #
    #  SINGLE CHECK                                                        #
    # ================================================================== #

    def run_check(self, spec: CheckSpec) -> CheckResult:
        start = time.perf_counter()
        try:
            actual = spec.compute()
            error = None
        except Exception as e:
            actual, error = None, f"{type(e).__name__}: {e}"
        seconds = time.perf_counter() - start

        passed = error is None and actual == spec.expected
        if passed:
            logger.info(f"  ✓ {spec.check_id} = {actual} ({seconds:.2f}s)")
        elif error:
            logger.error(f"  ✗ {spec.check_id}: {error}")
        else:
            logger.warning(f"  ✗ {spec.check_id}: expected {spec.expected}, got {actual}")
        return CheckResult(spec.check_id, spec.expected, actual, passed, seconds, error)

    # ================================================================== #
    #  SUITES                                                              #
    # ================================================================== #

    def run_suite(self, name: str) -> VerificationReport:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(suite_names())}")

        logger.info("=" * 60)
        logger.info(f"SUITE: {name}")
        logger.info("=" * 60)

        report = VerificationReport(name)
        for spec in SUITES[name](self.context):
            report.checks.append(self.run_check(spec))

        if report.ok:
            logger.info(f"✓ {name}: {len(report.checks)} checks passed in {report.seconds:.1f}s")
        else:
            logger.warning(f"⚠ {name}: {len(report.failed)}/{len(report.checks)} checks failed")
        return report

    def run(self, names: Iterable[str]) -> List[VerificationReport]:
        return [self.run_suite(name) for name in expand(names)]
