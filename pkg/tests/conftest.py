import pytest

from fatpoints.config import DistinctSpec, PointConfiguration, neg_from_nodal
from fatpoints.lattice import E


CASE_COLLINEAR = {
    "i": ((1, 2, 3),),
    "ii": ((1, 2, 3), (1, 4, 5)),
    "iii": ((1, 2, 3), (1, 4, 5), (3, 5, 6)),
    "iv": ((1, 2, 3), (1, 4, 5), (3, 5, 6), (2, 4, 6)),
}


def distinct_case(name):
    if name == "general":
        return PointConfiguration.from_distinct(DistinctSpec())
    if name == "conic":
        return PointConfiguration.from_distinct(DistinctSpec(six_on_conic=True))
    return PointConfiguration.from_distinct(
        DistinctSpec(collinear=CASE_COLLINEAR[name]))


@pytest.fixture(scope="session")
def case_iv():
    return distinct_case("iv")


@pytest.fixture(scope="session")
def general():
    return distinct_case("general")


@pytest.fixture(scope="session")
def a1_vertical_neg():
    return neg_from_nodal((E[1] - E[2],))
