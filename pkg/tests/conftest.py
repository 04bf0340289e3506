import pytest

from summa.arithmetic import build_tables
from summa.fixtures import load_value_grid
from summa.fractional import get_test_function


@pytest.fixture(scope="session")
def gaussian():
    return get_test_function("gaussian")


@pytest.fixture(scope="session")
def sech_square():
    return get_test_function("sech_square")


@pytest.fixture(scope="session")
def bump():
    return get_test_function("bump")


@pytest.fixture(scope="session")
def tables():
    return build_tables(300_000)


@pytest.fixture(scope="session")
def oracle_sums():
    """Oracle fixture rows keyed by (label, rounded parameter)."""
    rows = load_value_grid("oracle_sums.tsv")
    return {(label, round(s.real, 12)): val.real for label, s, val in rows}


@pytest.fixture(scope="session")
def zeros_table():
    from summa.rh import load_zeros

    return load_zeros()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running verification")


def oracle(sums, label, y=0.0):
    try:
        return sums[(label, round(y, 12))]
    except KeyError:
        pytest.fail(f"oracle fixture missing: {label} at {y}")
