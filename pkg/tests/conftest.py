import pytest

from tridesign import quadcode as qc
from tridesign.gf3m import field_new


@pytest.fixture(scope="session")
def f3():
    return field_new(3)


@pytest.fixture(scope="session")
def code3(f3):
    return qc.build_code(f3)


@pytest.fixture(scope="session")
def design3(f3):
    return qc.min_weight_design(f3)


@pytest.fixture(scope="session")
def design_code3(f3):
    return qc.design_code(f3)


@pytest.fixture(scope="session")
def design_code4():
    return qc.design_code(field_new(4))
