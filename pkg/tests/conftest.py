import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zetalab.ntheory import build_sieve
from zetalab.zeros import first_zeros


@pytest.fixture(scope="session")
def sieve_small():
    return build_sieve(20_000)


@pytest.fixture(scope="session")
def sieve_big():
    return build_sieve(1_000_000)


@pytest.fixture(scope="session")
def zeros3():
    return first_zeros(3, 1e-9)


@pytest.fixture(scope="session")
def rho1(zeros3):
    return zeros3[0]
