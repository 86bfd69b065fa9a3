import pytest

from fqsim.field import make_field


@pytest.fixture
def F2():
    return make_field(2)


@pytest.fixture
def F3():
    return make_field(3)
