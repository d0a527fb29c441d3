"""Cyclic edge cuts: validation, exact small-graph oracles, and constructive witnesses.

A set ``S`` of edges is a *cyclic cut* when ``G - S`` is disconnected and
every component of ``G - S`` contains a cycle.  The cyclic edge-connectivity
(CEC) is the minimum size of a cyclic cut; it is undefined when none exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AcyclicInput,
    ConnectivityRequired,
    ExcludedK3t,
    GirthTooSmall,
    InvalidParameter,
    LemmaViolationSuspected,
    MinDegreeTooSmall,
    TooLarge,
    TwoEdgeConnectivityRequired,
    UnknownEdge,
)
from .graph import (
    Graph,
    components,
    degree_profile,
    every_component_has_cycle,
    from_edge_list,
    girth,
    induced_edge_count,
    is_complete_bipartite_with_side_3,
    is_connected,
    shortest_cycle,
)

DEFAULT_MAX_N = 20


@dataclass
class EdgeCut:
    X: list[int]
    crossing: list[tuple[int, int]]
    size: int
    side_components: list[dict]

    def as_dict(self) -> dict:
        return {
            "X": self.X,
            "size": self.size,
            "crossing": [list(e) for e in self.crossing],
            "components": self.side_components,
        }


def edge_cut(G: Graph, X: Iterable[int]) -> EdgeCut:
    """The cut ``E(X, V - X)`` with per-side component summaries."""
    xs = sorted(set(X))
    if not 0 < len(xs) < G.n:
        raise InvalidParameter(f"cut side must be a proper non-empty subset (|X|={len(xs)})")
    inside = set(xs)
    crossing = sorted((min(u, v), max(u, v)) for u in xs for v in G.adjacency[u]
                      if v not in inside)
    rest = [v for v in range(G.n) if v not in inside]
    summaries = []
    for side, verts in (("X", xs), ("Xbar", rest)):
        for comp in components(G, verts):
            e = induced_edge_count(G, comp)
            summaries.append({"side": side, "size": len(comp), "edges": e,
                              "has_cycle": e >= len(comp)})
    return EdgeCut(xs, crossing, len(crossing), summaries)


@dataclass
class CutValidation:
    valid: bool
    size: int
    components: list[dict] = field(default_factory=list)


def validate_cyclic_cut(G: Graph, S: Iterable[Sequence[int]]) -> CutValidation:
    removed = set()
    for e in S:
        u, v = int(e[0]), int(e[1])
        if not G.has_edge(u, v):
            raise UnknownEdge(f"{u}-{v} is not an edge of the graph")
        removed.add((min(u, v), max(u, v)))
    remaining = [e for e in G.edges() if e not in removed]
    H = from_edge_list(G.n, remaining)
    comps = []
    for comp in components(H):
        e = induced_edge_count(H, comp)
        comps.append({"size": len(comp), "edges": e, "has_cycle": e >= len(comp),
                      "vertices": comp})
    valid = len(comps) >= 2 and all(c["has_cycle"] for c in comps)
    return CutValidation(valid, len(removed), comps)


# ---------------------------------------------------------------------------
# Exhaustive bipartition oracles
# ---------------------------------------------------------------------------

def _mask_components(masks: Sequence[int], S: int) -> Iterator[int]:
    rem = S
    while rem:
        comp = frontier = rem & -rem
        while frontier:
            v = frontier.bit_length() - 1
            frontier ^= 1 << v
            new = masks[v] & S & ~comp
            comp |= new
            frontier |= new
        rem &= ~comp
        yield comp


def _mask_edges(masks: Sequence[int], S: int) -> int:
    total = 0
    rem = S
    while rem:
        v = rem.bit_length() - 1
        rem ^= 1 << v
        total += (masks[v] & S).bit_count()
    return total // 2


def _all_cyclic(masks: Sequence[int], S: int) -> bool:
    return all(_mask_edges(masks, c) >= c.bit_count() for c in _mask_components(masks, S))


def _all_at_least(k: int):
    def check(masks: Sequence[int], S: int) -> bool:
        return all(c.bit_count() >= k for c in _mask_components(masks, S))
    return check


def _bipartition_tables(G: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Size, induced edge count and cut size of every ``X`` avoiding vertex ``n-1``.

    Index ``s`` of each array is the bitmask of ``X``.  Pinning the highest
    vertex to the complement enumerates each unordered bipartition once.
    """
    n = G.n
    half = 1 << (n - 1)
    size = np.zeros(half, dtype=np.int64)
    inner = np.zeros(half, dtype=np.int64)
    degsum = np.zeros(half, dtype=np.int64)
    for v in range(n - 1):
        block = 1 << v
        below = G.masks[v] & (block - 1)
        lo = np.arange(block, dtype=np.int64)
        size[block:2 * block] = size[:block] + 1
        inner[block:2 * block] = inner[:block] + np.bitwise_count(lo & below)
        degsum[block:2 * block] = degsum[:block] + G.degree(v)
    cut = degsum - 2 * inner
    return size, inner, cut


@dataclass
class OracleResult:
    status: str  # "Value" or "Undefined"
    value: int | None
    witness: EdgeCut | None
    explored: int
    checked: int

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "witness": self.witness.as_dict() if self.witness else None,
            "explored": self.explored,
            "checked": self.checked,
        }


def _search(G: Graph, prune: np.ndarray, cut: np.ndarray, side_ok, all_minimum: bool):
    masks = G.masks
    full = (1 << G.n) - 1
    idx = np.flatnonzero(prune)
    order = idx[np.lexsort((idx, cut[idx]))]
    best = None
    found = []
    checked = 0
    for s in order.tolist():
        c = int(cut[s])
        if best is not None and c > best:
            break
        checked += 1
        if side_ok(masks, s) and side_ok(masks, full ^ s):
            best = c
            found.append(s)
            if not all_minimum:
                break
    return best, found, checked


def _gate(G: Graph, max_n: int) -> None:
    if G.n > max_n:
        raise TooLarge(f"exhaustive search over {G.n} vertices exceeds max_n={max_n}")


def _mask_to_list(s: int) -> list[int]:
    return [v for v in range(s.bit_length()) if s >> v & 1]


def cec_oracle(G: Graph, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """Exact CEC by enumerating all bipartitions ``(X, V - X)``.

    Every cyclic cut contains the crossing set of the bipartition formed by one
    component of ``G - S`` against the rest, and that crossing set is itself a
    cyclic cut, so the minimum over bipartitions whose sides have only cyclic
    components is the CEC.  Ties go to the smallest ``X`` bitmask.
    """
    _gate(G, max_n)
    if G.n < 2:
        return OracleResult("Undefined", None, None, 0, 0)
    size, inner, cut = _bipartition_tables(G)
    inner_comp = G.m - inner - cut
    prune = (size > 0) & (inner >= size) & (inner_comp >= G.n - size)
    best, found, checked = _search(G, prune, cut, _all_cyclic, all_minimum=False)
    explored = len(size) - 1
    if best is None:
        return OracleResult("Undefined", None, None, explored, checked)
    return OracleResult("Value", best, edge_cut(G, _mask_to_list(found[0])), explored, checked)


def minimum_cyclic_cuts(G: Graph, max_n: int = DEFAULT_MAX_N) -> list[EdgeCut]:
    """Every bipartition achieving the CEC (each unordered pair once)."""
    _gate(G, max_n)
    if G.n < 2:
        return []
    size, inner, cut = _bipartition_tables(G)
    inner_comp = G.m - inner - cut
    prune = (size > 0) & (inner >= size) & (inner_comp >= G.n - size)
    _, found, _ = _search(G, prune, cut, _all_cyclic, all_minimum=True)
    return [edge_cut(G, _mask_to_list(s)) for s in found]


def size_cut_oracle(G: Graph, k: int, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """Smallest cut whose two sides only have components of at least ``k`` vertices."""
    if k < 1:
        raise InvalidParameter(f"k must be >= 1, got {k}")
    _gate(G, max_n)
    if G.n < 2:
        return OracleResult("Undefined", None, None, 0, 0)
    size, _, cut = _bipartition_tables(G)
    prune = (size >= k) & (G.n - size >= k)
    best, found, checked = _search(G, prune, cut, _all_at_least(k), all_minimum=False)
    explored = len(size) - 1
    if best is None:
        return OracleResult("Undefined", None, None, explored, checked)
    return OracleResult("Value", best, edge_cut(G, _mask_to_list(found[0])), explored, checked)


# ---------------------------------------------------------------------------
# Girth cycles and the separating-cycle finder
# ---------------------------------------------------------------------------

def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle to start at its minimum, smaller neighbour second."""
    k = len(seq)
    i = min(range(k), key=seq.__getitem__)
    fwd = [seq[(i + j) % k] for j in range(k)]
    if fwd[1] > fwd[-1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


def _four_cycles(G: Graph) -> Iterator[tuple[int, ...]]:
    # Each 4-cycle x-z-y-z' is an antipodal pair (x, y) with two common neighbours.
    for x in range(G.n):
        counts: dict[int, list[int]] = {}
        for z in G.adjacency[x]:
            for y in G.adjacency[z]:
                if y > x:
                    counts.setdefault(y, []).append(z)
        for y in sorted(counts):
            zs = sorted(counts[y])
            for i in range(len(zs)):
                for j in range(i + 1, len(zs)):
                    yield canonical_cycle((x, zs[i], y, zs[j]))


def _cycles_of_length(G: Graph, g: int) -> Iterator[tuple[int, ...]]:
    # Cycles whose minimum vertex is the root, walked towards the smaller neighbour.
    for root in range(G.n):
        dist = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w > root and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        path = [root]
        on_path = {root}

        def extend() -> Iterator[tuple[int, ...]]:
            u = path[-1]
            left = g - len(path)  # edges still to walk after reaching u, minus the closing one
            if left == 0:
                if root in G.adjacency[u] and path[1] < u:
                    yield tuple(path)
                return
            for w in G.adjacency[u]:
                if w <= root or w in on_path or dist.get(w, g) > left:
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.discard(w)

        yield from extend()


def iter_girth_cycles(G: Graph) -> Iterator[tuple[int, ...]]:
    """Lazily yield each girth-length cycle once, in canonical form."""
    g = girth(G)
    if g is None:
        raise AcyclicInput("graph has no cycles")
    if g == 4:
        seen = set()
        for c in _four_cycles(G):
            if c not in seen:
                seen.add(c)
                yield c
    else:
        yield from _cycles_of_length(G, g)


def enumerate_girth_cycles(G: Graph, limit: int = 10_000) -> list[list[int]]:
    out = []
    for c in iter_girth_cycles(G):
        if len(out) >= limit:
            break
        out.append(list(c))
    return out


@dataclass
class SeparatingCycle:
    cycle: list[int]
    cut: EdgeCut
    candidates_tried: int


def find_separating_girth_cycle(G: Graph) -> SeparatingCycle:
    """A girth cycle ``C`` whose boundary ``E(C, V - C)`` is a cyclic cut.

    Needs a connected graph with minimum degree >= 3 and girth >= 4 that is
    not ``K_{3,t}``; such a cycle then always exists.  Girth cycles are
    induced, so the side ``C`` is itself a cycle and only the rest needs
    checking.  For girth >= 5 every girth cycle works, so only the first
    candidate is tried.
    """
    if not is_connected(G):
        raise ConnectivityRequired("separating cycle search needs a connected graph")
    prof = degree_profile(G)
    if prof.min_degree < 3:
        raise MinDegreeTooSmall(f"minimum degree {prof.min_degree} < 3")
    g = girth(G)
    if g < 4:
        raise GirthTooSmall(f"girth {g} < 4")
    if is_complete_bipartite_with_side_3(G):
        raise ExcludedK3t(f"graph is K_{{3,{G.n - 3}}}")
    tried = 0
    for c in iter_girth_cycles(G):
        tried += 1
        on_cycle = set(c)
        rest = [v for v in range(G.n) if v not in on_cycle]
        if rest and every_component_has_cycle(G, rest):
            return SeparatingCycle(list(c), edge_cut(G, c), tried)
        if g >= 5:
            break
    raise LemmaViolationSuspected(
        f"no separating girth cycle after {tried} candidates (girth {g})")


# ---------------------------------------------------------------------------
# Bridges and ear decompositions
# ---------------------------------------------------------------------------

def bridges(G: Graph) -> list[tuple[int, int]]:
    """Bridges via iterative depth-first lowpoints, as sorted ``(u, v)`` with ``u < v``."""
    disc = [-1] * G.n
    low = [0] * G.n
    out = []
    clock = 0
    for s in range(G.n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = clock
        clock += 1
        stack = [(s, -1, iter(G.adjacency[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, u, iter(G.adjacency[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    out.append((min(u, parent), max(u, parent)))
    return sorted(out)


def is_two_edge_connected(G: Graph) -> bool:
    return G.n >= 2 and is_connected(G) and not bridges(G)


@dataclass
class EarDecomposition:
    """A base cycle followed by ears.

    Each ear is a vertex sequence whose two ends were already attached and
    whose interior vertices are new.  The two ends coincide (a closed ear)
    only where the graph has a cut vertex.
    """

    base_cycle: list[int]
    ears: list[list[int]]


def ear_decomposition(G: Graph) -> EarDecomposition:
    if not is_two_edge_connected(G):
        raise TwoEdgeConnectivityRequired("ear decomposition needs a 2-edge-connected graph")
    base = shortest_cycle(G)
    attached = list(base)
    in_h = set(base)
    used = {frozenset((base[i], base[(i + 1) % len(base)])) for i in range(len(base))}
    ears = []
    pos = 0
    while len(used) < G.m:
        u = attached[pos]
        w = next((w for w in G.adjacency[u] if frozenset((u, w)) not in used), None)
        if w is None:
            pos += 1
            continue
        if w in in_h:
            ear = [u, w]
        else:
            ear = _shortest_ear(G, u, w, in_h)
        ears.append(ear)
        for a, b in zip(ear, ear[1:]):
            used.add(frozenset((a, b)))
        for v in ear[1:-1]:
            in_h.add(v)
            attached.append(v)
    return EarDecomposition(list(base), ears)


def _shortest_ear(G: Graph, u: int, w: int, in_h: set[int]) -> list[int]:
    # BFS from w through unattached vertices; first attached vertex other than u wins.
    parent = {w: None}
    queue = deque([w])
    closed_end = None
    while queue:
        x = queue.popleft()
        for y in G.adjacency[x]:
            if y in in_h:
                if x == w and y == u:
                    continue
                if y != u:
                    return _unwind(parent, x, u, y)
                if closed_end is None:
                    closed_end = x
            elif y not in parent:
                parent[y] = x
                queue.append(y)
    assert closed_end is not None, "edge to outside vertex is a bridge"
    return _unwind(parent, closed_end, u, u)


def _unwind(parent: dict, x: int, start: int, end: int) -> list[int]:
    seq = [x]
    while parent[seq[-1]] is not None:
        seq.append(parent[seq[-1]])
    return [start] + seq[::-1] + [end]
