import pytest

from weylchars.so5 import OrthogonalGeometry


@pytest.fixture(scope="session")
def geo3():
    """SO_5(F_3) with the identity form; the enumeration is cached."""
    geometry = OrthogonalGeometry(q=3)
    geometry.enumerate_group()
    return geometry
