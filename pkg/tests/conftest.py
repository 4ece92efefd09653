import pytest

from tqftrep import tqftrep_config

# Keep the results store away from any real database before the ORM is imported
tqftrep_config.results_database = 'sqlite://'

from tqftrep.orm import sessionfactory
from tqftrep.orm.createtables import create_tables, drop_tables
from tqftrep.scalar import TheoryCtx


@pytest.fixture(scope='session')
def ctx20():
    'A = zeta_20, the level-5 context of the golden matrices'
    return TheoryCtx(20)


@pytest.fixture(scope='session')
def ctx40():
    'A = zeta_40, level 10'
    return TheoryCtx(40)


@pytest.fixture(scope='session')
def session(request):
    'Creates a fresh in-memory database, with empty tables'
    s = sessionfactory()
    create_tables(s)

    yield s

    drop_tables(s)
    s.close()


@pytest.fixture
def rollback(request, session):
    '''Make sure that a database failure won't interfere with other tests,
       and that unintended changes don't get passed on'''
    yield session
    session.rollback()


# Slow test handling
#
# This section sets up behavior to avoid slow tests by default.

def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        skip_slow = pytest.mark.skip(reason="need --runslow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)

# End Slow test handling
