import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from crossmod import algebra as alg  # noqa: E402
from crossmod import catalog  # noqa: E402

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture(scope="session")
def F2():
    return catalog.algebra("F2")


@pytest.fixture(scope="session")
def A():
    return catalog.algebra("A")


@pytest.fixture(scope="session")
def u(F2, A):
    return alg.mk_morphism(F2, A, [[1], [0]])


@pytest.fixture(scope="session")
def pi(A, F2):
    return alg.mk_morphism(A, F2, [[1, 0]])


@pytest.fixture(scope="session")
def x_ideal(A):
    return alg.mk_ideal(A, np.array([[0, 1]]))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
