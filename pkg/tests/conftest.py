from pathlib import Path

import pytest

from pbw.presentation import parse_presentation

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def load_fixture(name):
    return parse_presentation((FIXTURES / f"{name}.lie").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def abelian():
    return load_fixture("abelian3")


@pytest.fixture(scope="session")
def heisenberg():
    return load_fixture("heisenberg")


@pytest.fixture(scope="session")
def sl2():
    return load_fixture("sl2")


@pytest.fixture(scope="session")
def f32():
    return load_fixture("f32")


@pytest.fixture(scope="session")
def f42():
    return load_fixture("f42")


@pytest.fixture(scope="session")
def bad():
    return load_fixture("bad")
