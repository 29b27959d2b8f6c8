from pathlib import Path

import pytest

from pignistic import Frame, MassFunction

DATA_DIR = Path(__file__).parent / "data"

COMBAT_ASSIGNMENTS = [
    (["F"], 0.16),
    (["N"], 0.14),
    (["U"], 0.01),
    (["H"], 0.02),
    (["F", "N"], 0.20),
    (["F", "U"], 0.09),
    (["F", "H"], 0.04),
    (["N", "U"], 0.04),
    (["N", "H"], 0.02),
    (["U", "H"], 0.01),
    (["F", "N", "U"], 0.10),
    (["F", "N", "H"], 0.03),
    (["F", "U", "H"], 0.03),
    (["N", "U", "H"], 0.03),
    (["F", "N", "U", "H"], 0.08),
]


@pytest.fixture(scope="session")
def combat_frame():
    return Frame(["F", "N", "U", "H"])


@pytest.fixture(scope="session")
def combat_bba(combat_frame):
    """The four-hypothesis combat-identification mass function."""
    return MassFunction.from_labels(combat_frame, COMBAT_ASSIGNMENTS)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
