import pytest

from cat0kit.complex import build_complex
from cat0kit.fixtures import fixture


def ids(K, *names):
    """Vertex ids for names; a single string of space-separated names also works."""
    if len(names) == 1 and " " in names[0]:
        names = tuple(names[0].split())
    return tuple(K.vertex(n) for n in names)


@pytest.fixture
def tet():
    return fixture("tetrahedron").complex


@pytest.fixture
def hexd():
    return fixture("hex_disk").complex


@pytest.fixture
def octa():
    return fixture("octahedron").complex


@pytest.fixture
def hollow():
    return build_complex([["a", "b"], ["b", "c"], ["c", "a"]])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
