import pytest

from su3kahler import WeightSystem, cone_data, enumerate_admissible_systems


@pytest.fixture(scope="session")
def orbifold_data():
    """The worked orbifold configuration: A_1 = A_2 = (1,0), A_3 = (2,-1),
    B_1 = B_2 = (0,1), B_3 = (-1,2), C = (1,1)."""
    return cone_data([(1, 0), (1, 0), (2, -1)], [(0, 1), (0, 1), (-1, 2)])


@pytest.fixture(scope="session")
def orbifold_ws():
    """Integer weight system deriving to three times the example data."""
    return WeightSystem(
        ((-1, 1), (-1, 1), (2, -2)),
        ((-4, 1), (5, -5), (-1, 4)),
    )


@pytest.fixture(scope="session")
def standard_ws():
    """Trivial left side, right side an isomorphism: the free flag case."""
    return WeightSystem(((0, 0),) * 3, ((1, 0), (0, 1), (-1, -1)))


@pytest.fixture(scope="session")
def round_ws():
    """The weight system whose derived data is the round normalization."""
    return WeightSystem(((0, 0),) * 3, ((-1, 0), (1, -1), (0, 1)))


@pytest.fixture(scope="session")
def bound1_systems():
    return list(enumerate_admissible_systems(1))


@pytest.fixture(scope="session")
def bound2_systems():
    return list(enumerate_admissible_systems(2))
