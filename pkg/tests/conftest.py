import pytest

from hopfq.grouptables import cochain_build


@pytest.fixture(scope="session")
def tables():
    return {n: cochain_build(n) for n in range(6)}
