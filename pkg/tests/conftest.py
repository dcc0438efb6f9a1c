import pytest

from shiftlab.config import config_context
from shiftlab.formats import example_complex, example_ideal, parse_ideal
from shiftlab.shifting import ShiftCache

import worked_examples


@pytest.fixture(autouse=True)
def default_config():
    """Every test runs under the default session configuration."""
    with config_context(prime=32003, rational=False, base_seed=0xC0FFEE, attempts=3, degree_bound=None):
        yield


@pytest.fixture(scope="session")
def ex_complex():
    return example_complex()


@pytest.fixture(scope="session")
def ex2_input():
    return example_ideal()


@pytest.fixture(scope="session")
def ex2_from_text():
    return parse_ideal(worked_examples.EX2_TEXT)


@pytest.fixture(scope="session")
def shift_cache():
    return ShiftCache()
