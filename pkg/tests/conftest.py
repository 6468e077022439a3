from pathlib import Path

import pytest

from orthomodular_py.catalog import (
    even_subsets,
    example2,
    hexagon,
    mo,
    orthomodular_catalog,
)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def mo2():
    return mo(2)


@pytest.fixture
def es6():
    return even_subsets(6)


@pytest.fixture
def hexagon_poset():
    return hexagon()


@pytest.fixture(
    params=orthomodular_catalog(), ids=lambda P: P.name
)
def omp(request):
    return request.param
