import sys
from pathlib import Path

import pytest

from weakham import generators
from weakham.io import parse_planar_code

DATA = Path(__file__).parent / "data"


def load_corpus():
    return parse_planar_code((DATA / "cubic_corpus.planar_code").read_bytes())


def generator_maps():
    maps = [("tetrahedron", generators.tetrahedron()), ("theta", generators.theta())]
    maps += [(f"prism {n}", generators.prism(n)) for n in range(3, 8)]
    return maps


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [m for m in corpus if m.num_vertices <= 10]


@pytest.fixture
def k4():
    return generators.tetrahedron()


@pytest.fixture
def prism3():
    return generators.prism(3)


@pytest.fixture
def prism4():
    return generators.prism(4)


@pytest.fixture
def prism5():
    return generators.prism(5)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
