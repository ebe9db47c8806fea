from pathlib import Path

import pytest

from vpg0.core import Graph, Ordering, parse_graph, parse_poset
from vpg0.minor import decomposition_from_groups, label_branch_sets

DATA = Path(__file__).resolve().parent.parent / "data"

SAMPLE_EDGES = "ab ac cd bd ce ef ed eg gh fh ig if ij gj hj ih df cf".split()
SAMPLE_SIGMA = tuple("bacdfegihj")
# a second valid reduced decomposition of the sample, built by hand
REFERENCE_GROUPS = [["b"], ["a"], ["c", "e"], ["d", "f"], ["i", "h"], ["g", "j"]]

# acceptance lines collected during the run and printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def cycle(labels: str) -> Graph:
    return Graph(list(labels), [(labels[k], labels[(k + 1) % len(labels)])
                                for k in range(len(labels))])


def complete(labels: str) -> Graph:
    return Graph(list(labels), [(a, b) for k, a in enumerate(labels) for b in labels[k + 1:]])


def prism() -> Graph:
    """Two triangles abc and xyz joined by the matching ax, by, cz."""
    return Graph(list("abcxyz"), [("a", "b"), ("b", "c"), ("a", "c"), ("x", "y"), ("y", "z"),
                                  ("x", "z"), ("a", "x"), ("b", "y"), ("c", "z")])


def wheel4() -> Graph:
    """The 4-cycle abcd with a universal vertex u."""
    g = cycle("abcd")
    return Graph(list("abcdu"), g.edges() + [(v, "u") for v in "abcd"])


@pytest.fixture(scope="session")
def sample_graph() -> Graph:
    return parse_graph((DATA / "sample.graph").read_text())


@pytest.fixture(scope="session")
def sample_poset():
    return parse_poset((DATA / "sample.poset").read_text())


@pytest.fixture(scope="session")
def sample_sigma() -> Ordering:
    return Ordering(SAMPLE_SIGMA)


@pytest.fixture(scope="session")
def reference_decomposition(sample_graph, sample_sigma):
    bd = decomposition_from_groups(sample_graph, REFERENCE_GROUPS, sample_sigma)
    return label_branch_sets(bd, sample_sigma)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
