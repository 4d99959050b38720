import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from liealg.ograded import build_e7, build_e8
from models.models import SuiteContext


@pytest.fixture(scope="session")
def e7():
    return build_e7(verify=False)


@pytest.fixture(scope="session")
def e8():
    return build_e8(verify=False)


@pytest.fixture
def context():
    return SuiteContext(threads=1, progress=False, composition_samples=50)
