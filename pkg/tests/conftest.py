import pytest

from quandles import alexander_quandle, build, conj_quandle, parse_ideal, symmetric_group


@pytest.fixture(scope="session")
def six_cubic():
    """The order-36 quandle of (6; t^2+t+1), shared across test modules."""
    return alexander_quandle(build(parse_ideal("6; t^2+t+1")))


@pytest.fixture(scope="session")
def conj_s3():
    return conj_quandle(symmetric_group(3))


@pytest.fixture(scope="session")
def conj_s4():
    return conj_quandle(symmetric_group(4))


@pytest.fixture(scope="session")
def tetrahedral():
    """The connected 4-element quandle of (2; t^2+t+1)."""
    return alexander_quandle(build(parse_ideal("2; t^2+t+1")))
