import pytest

from k4cut.generators import (
    blowup,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    petersen_graph,
)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k222():
    return complete_multipartite([2, 2, 2])


@pytest.fixture
def k333():
    return complete_multipartite([3, 3, 3])


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def blowup_c5_2():
    return blowup(cycle_graph(5), 2)
