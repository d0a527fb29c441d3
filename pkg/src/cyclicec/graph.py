"""Simple undirected graphs on dense integer ids and their structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidPair, InvalidVertex, LoopRejected


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Build
    instances with :func:`from_edge_list` rather than directly.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, for subset arithmetic."""
        out = []
        for nbrs in self.adjacency:
            mk = 0
            for u in nbrs:
                mk |= 1 << u
            out.append(mk)
        return tuple(out)

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the isomorphic graph with vertex ``v`` renamed ``perm[v]``."""
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def validate(self) -> None:
        """Assert the simplicity and symmetry invariants."""
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            assert list(nbrs) == sorted(set(nbrs)), f"adjacency of {v} not sorted/unique"
            for u in nbrs:
                assert u != v, f"self-loop at {v}"
                assert 0 <= u < self.n, f"neighbour {u} of {v} out of range"
                assert v in self._neighbor_sets[u], f"asymmetric edge {v}-{u}"
            total += len(nbrs)
        assert total % 2 == 0 and total // 2 == self.m


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    is_regular: bool
    d: int | None = None


@dataclass
class CycleCheck:
    """Outcome of :func:`every_component_has_cycle`.

    ``acyclic`` lists the vertex sets of components that are trees.
    """

    ok: bool
    acyclic: list[list[int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise InvalidVertex(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise InvalidVertex(f"vertex {w} not in [0, {n})")
        if u == v:
            raise LoopRejected(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree_profile(G: Graph) -> DegreeProfile:
    if G.n == 0:
        return DegreeProfile(0, 0, True, 0)
    degs = [len(a) for a in G.adjacency]
    lo, hi = min(degs), max(degs)
    return DegreeProfile(lo, hi, lo == hi, lo if lo == hi else None)


def shortest_cycle(G: Graph) -> list[int] | None:
    """A shortest cycle as a vertex sequence, or None for forests.

    Runs a breadth-first search from every root.  A non-tree edge ``(u, w)``
    found from root ``s`` closes a closed walk of length
    ``dist[u] + dist[w] + 1`` through ``s``; the minimum over all roots is the
    girth, and at the minimum the walk is a simple cycle.
    """
    best_len = None
    best: tuple[int, int, list[int], list[int]] | None = None
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best_len is not None and 2 * dist[u] + 1 >= best_len:
                break
            for w in G.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best_len is None or length < best_len:
                        best_len = length
                        best = (u, w, parent[:], dist[:])
    if best is None:
        return None
    u, w, parent, _ = best

    def path_to_root(x: int) -> list[int]:
        out = [x]
        while parent[out[-1]] >= 0:
            out.append(parent[out[-1]])
        return out

    pu, pw = path_to_root(u), path_to_root(w)
    # Trim the shared tail (the walk is a simple cycle at the minimum length).
    while len(pu) > 1 and len(pw) > 1 and pu[-2] == pw[-2]:
        pu.pop()
        pw.pop()
    cycle = pu + pw[-2::-1]
    assert len(cycle) == best_len
    return cycle


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle; ``None`` marks an acyclic graph."""
    c = shortest_cycle(G)
    return None if c is None else len(c)


def components(G: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted vertex lists) of ``G`` or of ``G[within]``."""
    allowed = set(range(G.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in G.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def induced_edge_count(G: Graph, X: Iterable[int]) -> int:
    xs = set(X)
    return sum(1 for u in xs for w in G.adjacency[u] if w in xs) // 2


def every_component_has_cycle(G: Graph, X: Iterable[int]) -> CycleCheck:
    """Does each component of ``G[X]`` contain a cycle?

    A connected graph has a cycle iff its edge count reaches its vertex count.
    """
    acyclic = [c for c in components(G, X) if induced_edge_count(G, c) < len(c)]
    return CycleCheck(not acyclic, acyclic)


def two_coloring(G: Graph) -> list[int] | None:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_complete_bipartite_with_side_3(G: Graph) -> bool:
    """True iff ``G`` is ``K_{3,t}`` for some ``t >= 1``."""
    if not is_connected(G):
        return False
    color = two_coloring(G)
    if color is None:
        return False
    a = color.count(0)
    b = G.n - a
    return 3 in (a, b) and G.m == a * b


def common_neighbors(G: Graph, u: int, v: int) -> list[int]:
    if u == v:
        raise InvalidPair(f"common neighbours need distinct vertices, got {u} twice")
    return sorted(G._neighbor_sets[u] & G._neighbor_sets[v])
