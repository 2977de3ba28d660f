import pytest

from orthologic import catalog

OML_CATALOG = ("B2", "B4", "B8", "MO2", "MO3", "MO2xB2")


@pytest.fixture(params=OML_CATALOG)
def oml(request):
    return catalog(request.param)


@pytest.fixture
def mo2():
    return catalog("MO2")


@pytest.fixture
def o6():
    return catalog("O6")


@pytest.fixture
def b8():
    return catalog("B8")
