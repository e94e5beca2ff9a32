import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sternseq import stern_table


@pytest.fixture(scope="session")
def table16():
    """s(0), ..., s(2^16) as exact integers, shared across modules."""
    return stern_table(1 << 16)


@pytest.fixture(scope="session")
def table16_mod3():
    return stern_table(1 << 16, mod=3)
