import pytest

from boxicity.corpus import all_graphs, connected_graphs


@pytest.fixture(scope="session")
def graphs_by_n():
    """Exhaustive corpora: one representative per isomorphism class."""
    return {n: all_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def connected_by_n():
    return {n: connected_graphs(n) for n in range(1, 8)}
