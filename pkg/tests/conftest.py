import pytest

from src.orekit.config import use_settings
from src.orekit.counterexample.instance import build_instance


@pytest.fixture(scope='session')
def instance2():
    return build_instance(2)


@pytest.fixture(scope='session')
def instance3():
    return build_instance(3)


@pytest.fixture(autouse=True)
def fresh_settings():
    use_settings(None)
    yield
    use_settings(None)
