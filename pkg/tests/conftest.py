import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from glcohom import grpcore  # noqa: E402

ACCEPTANCE: dict = {}

ZOO = {
    "C2": grpcore.cyclic(2),
    "C4": grpcore.cyclic(4),
    "C8": grpcore.cyclic(8),
    "V4": grpcore.elementary_abelian(4),
    "C2xC4": grpcore.direct_product_cyclic(2, 4),
    "D8": grpcore.dihedral(8),
    "Q8": grpcore.quaternion8(),
    "C2^3": grpcore.elementary_abelian(8),
}


@pytest.fixture(scope="session")
def zoo_tables():
    return {name: grpcore.close_generators(g, label=name) for name, g in ZOO.items()}


@pytest.fixture
def rng():
    return np.random.default_rng(20161)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
