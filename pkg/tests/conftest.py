import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from autcodes.gf2linalg import rref  # noqa: E402
from autcodes.instances import golay24, golay_order3_automorphism, hamming8  # noqa: E402
from autcodes.permaction import Permutation  # noqa: E402


@pytest.fixture(scope="session")
def h8():
    return hamming8()


@pytest.fixture(scope="session")
def golay():
    return golay24(), golay_order3_automorphism()


@pytest.fixture(scope="session")
def c63():
    """span{110000,001100,000011} with an order-6 automorphism."""
    return rref(["110000", "001100", "000011"], 6), Permutation.parse("(1,4,5,2,3,6)", 6)


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(acceptance_log.LINES, key=lambda k: (int(k.split("-")[0]), k)):
            terminalreporter.write_line(acceptance_log.LINES[key])
