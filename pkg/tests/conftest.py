import pytest

from pntverify import tables


@pytest.fixture(scope="session")
def tables_1m():
    return tables.build_tables(10**6)


@pytest.fixture(scope="session")
def tables_small():
    return tables.build_tables(10**4)
