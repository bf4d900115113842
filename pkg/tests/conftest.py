import pytest

from mwb import catalog
from mwb.core import from_facets

CSASZAR_TRIANGLES = [
    (1, 2, 3), (1, 2, 4), (1, 3, 7), (1, 4, 5), (1, 5, 6), (1, 6, 7),
    (2, 3, 6), (2, 4, 7), (2, 5, 6), (2, 5, 7), (3, 4, 5), (3, 4, 6),
    (3, 5, 7), (4, 6, 7),
]

# the unique 6-vertex real projective plane
RP2_TRIANGLES = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


@pytest.fixture(scope="session")
def csaszar():
    return from_facets(CSASZAR_TRIANGLES)


@pytest.fixture(scope="session")
def rp2_6():
    return from_facets(RP2_TRIANGLES)


@pytest.fixture(scope="session")
def entries():
    return {e.name: e for e in catalog.catalog()}


@pytest.fixture(scope="session")
def complexes(entries):
    return {name: e.load() for name, e in entries.items()}
