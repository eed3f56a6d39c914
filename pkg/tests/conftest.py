import pytest

from signedhom.targets import build_catalog


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def star_catalog():
    return build_catalog(with_star=True)


@pytest.fixture(scope="session")
def sp9(catalog):
    return catalog.sp9
