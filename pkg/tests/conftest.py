import pytest

from grothpoly import poly


@pytest.fixture(scope="session")
def tables():
    """Schubert/Grothendieck tables keyed by (n, flavor), built once."""
    built = {}
    for n in (3, 4, 5, 6):
        for flavor in ("S", "G"):
            built[(n, flavor)] = poly.build_table(n, flavor)
    return built
