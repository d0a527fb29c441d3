import sys
from pathlib import Path

import pytest

from cyclicec import generators as gen
from cyclicec.graph import from_edge_list

sys.path.insert(0, str(Path(__file__).parent))


def two_triangles_bridge():
    return from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])


def two_k4_bridge():
    left = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    right = [(u + 4, v + 4) for u, v in left]
    return from_edge_list(8, left + right + [(3, 4)])


def bowtie():
    return from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def two_disjoint_triangles():
    return from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])


def octahedron():
    return from_edge_list(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])


def wagner():
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return from_edge_list(8, edges)


def small_corpus():
    """Named graphs with n <= 12 used by the oracle-equivalence suites."""
    return {
        "K4": gen.complete(4),
        "K5": gen.complete(5),
        "K6": gen.complete(6),
        "K3,3": gen.complete_bipartite(3, 3),
        "K3,4": gen.complete_bipartite(3, 4),
        "K3,5": gen.complete_bipartite(3, 5),
        "K4,4": gen.complete_bipartite(4, 4),
        "petersen": gen.petersen(),
        "Q3": gen.hypercube(3),
        "prism3": gen.prism(3),
        "prism5": gen.prism(5),
        "prism6": gen.prism(6),
        "wheel6": gen.wheel(6),
        "wheel7": gen.wheel(7),
        "C6": gen.cycle(6),
        "path5": gen.path(5),
        "k3t_plus(3,{01})": gen.k3t_plus(3, [(0, 1)]),
        "two_triangles_bridge": two_triangles_bridge(),
        "two_k4_bridge": two_k4_bridge(),
        "bowtie": bowtie(),
        "two_disjoint_triangles": two_disjoint_triangles(),
        "octahedron": octahedron(),
        "wagner": wagner(),
        "rr(10,3,s1)": gen.random_regular(10, 3, seed=1),
        "rr(12,3,s2)": gen.random_regular(12, 3, seed=2),
        "rr(12,3,g4,s3)": gen.random_regular(12, 3, girth_min=4, seed=3),
    }


CORPUS = small_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
