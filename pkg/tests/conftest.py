import pytest

from curvelab.surface import build_standard_surface


@pytest.fixture(scope="session")
def torus():
    return build_standard_surface(1)


@pytest.fixture(scope="session")
def genus2():
    return build_standard_surface(2)


@pytest.fixture(scope="session")
def genus3():
    return build_standard_surface(3)
