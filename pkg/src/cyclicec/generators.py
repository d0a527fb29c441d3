"""Deterministic constructors for the graph families used as evidence.

Vertex labelling per family:

* ``cycle(n)``: ``0..n-1`` in cyclic order.
* ``complete_bipartite(s, t)``: first side ``0..s-1``, second ``s..s+t-1``.
* ``wheel(n)``: rim ``0..n-2`` in cyclic order, hub ``n-1``.
* ``k3t_plus(t, inner)``: three-side ``0, 1, 2``; the other side ``3..t+2``.
* ``hypercube(k)``: binary labels, neighbours differ in one bit.
* ``petersen()``: outer 5-cycle ``0..4``, inner pentagram ``5..9``, spokes ``i - i+5``.
* ``heawood()``: 14-cycle plus chords ``{i, i+5 mod 14}`` for even ``i``.
* ``example48()``: see :class:`Example48Labels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ConstructionInvariantViolated, GenerationFailed, InvalidParameter
from .graph import Graph, degree_profile, from_edge_list, girth

RANDOM_REGULAR_ALGORITHM = "configuration-model/restart-on-reject/numpy-PCG64"


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise InvalidParameter(f"complete_bipartite needs s, t >= 1, got {s}, {t}")
    return from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def wheel(n: int) -> Graph:
    # Four vertices is the smallest wheel (K4); n = 3 would need a 2-cycle rim.
    if n < 4:
        raise InvalidParameter(f"wheel needs n >= 4, got {n}")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return from_edge_list(n, edges)


def k3t_plus(t: int, inner_edges: Iterable[Sequence[int]] = ()) -> Graph:
    """``K_{3,t}`` plus the given edges inside the three-vertex side."""
    if t < 3:
        raise InvalidParameter(f"k3t_plus needs t >= 3, got {t}")
    inner = [tuple(e) for e in inner_edges]
    for u, v in inner:
        if not (0 <= u <= 2 and 0 <= v <= 2 and u != v):
            raise InvalidParameter(f"inner edge {u}-{v} must join two of 0, 1, 2")
    edges = [(i, 3 + j) for i in range(3) for j in range(t)]
    return from_edge_list(3 + t, edges + inner)


def hypercube(k: int) -> Graph:
    if k < 1:
        raise InvalidParameter(f"hypercube needs k >= 1, got {k}")
    size = 1 << k
    return from_edge_list(size, [(v, v ^ (1 << b)) for v in range(size) for b in range(k)
                                 if v < v ^ (1 << b)])


def prism(k: int) -> Graph:
    """Circular ladder ``C_k x K_2``: outer ``0..k-1``, inner ``k..2k-1``."""
    if k < 3:
        raise InvalidParameter(f"prism needs k >= 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return from_edge_list(2 * k, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges)


def heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return from_edge_list(14, edges)


@dataclass(frozen=True)
class Example48Labels:
    """Vertex ids of the named vertex groups in :func:`example48`.

    ``a`` and ``d`` are the two 16-vertex hypercubes, ``b`` and ``c`` the
    connector 8-cycles.  Ids are ``a = 0..15``, ``b = 16..23``,
    ``c = 24..31``, ``d = 32..47``, so the matching ``b_i c_i`` separates
    ``0..23`` from ``24..47``.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def matching_cut(self) -> list[tuple[int, int]]:
        return [(bi, ci) for bi, ci in zip(self.b, self.c)]

    def as_dict(self) -> dict[str, list[int]]:
        return {"a": list(self.a), "b": list(self.b), "c": list(self.c), "d": list(self.d)}


def example48() -> tuple[Graph, Example48Labels]:
    """Two hypercubes joined through two 8-cycles and an 8-edge matching.

    The result is 5-regular on 48 vertices with girth 4, and the matching
    between the connector cycles is a cyclic edge cut of size 8.
    """
    labels = Example48Labels(a=tuple(range(0, 16)), b=tuple(range(16, 24)),
                             c=tuple(range(24, 32)), d=tuple(range(32, 48)))
    a, b, c, d = labels.a, labels.b, labels.c, labels.d
    edges = []
    for cube in (a, d):
        edges += [(cube[v], cube[v ^ (1 << bit)]) for v in range(16) for bit in range(4)
                  if v < v ^ (1 << bit)]
    # The c side mirrors the b side exactly (c_7 - d_8, never d_16).
    for conn, cube in ((b, a), (c, d)):
        edges += [(conn[i], cube[i]) for i in range(8)]
        edges += [(conn[i], cube[i + 9]) for i in range(7)]
        edges.append((conn[7], cube[8]))
        edges += [(conn[i], conn[(i + 1) % 8]) for i in range(8)]
    edges += labels.matching_cut()
    G = from_edge_list(48, edges)

    prof = degree_profile(G)
    if not (G.n == 48 and G.m == 120 and prof.is_regular and prof.d == 5 and girth(G) == 4):
        raise ConstructionInvariantViolated(
            f"example48 self-check failed: n={G.n} m={G.m} profile={prof} girth={girth(G)}")
    return G, labels


def random_regular(n: int, d: int, girth_min: int = 3, seed: int = 0,
                   max_tries: int = 10_000) -> Graph:
    """Sample a ``d``-regular simple graph with girth at least ``girth_min``.

    Configuration model: shuffle the ``n*d`` stubs, pair them off in order,
    and start over from scratch on any loop, repeated pair, or short cycle.
    The stream comes from ``numpy.random.default_rng(seed)`` so a given
    ``(n, d, girth_min, seed)`` always yields the same graph.
    """
    if d < 3 or n <= d:
        raise InvalidParameter(f"random_regular needs 3 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise InvalidParameter(f"n*d must be even, got {n}*{d}")
    if girth_min < 3:
        raise InvalidParameter(f"girth_min must be >= 3, got {girth_min}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        seen = set()
        ok = True
        for u, v in pairs.tolist():
            key = (u, v) if u < v else (v, u)
            if u == v or key in seen:
                ok = False
                break
            seen.add(key)
        if not ok:
            continue
        G = from_edge_list(n, seen)
        if girth_min > 3 and girth(G) < girth_min:
            continue
        return G
    raise GenerationFailed(
        f"no simple {d}-regular graph on {n} vertices with girth >= {girth_min} "
        f"in {max_tries} tries (seed {seed})")


FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete-bipartite": complete_bipartite,
    "wheel": wheel,
    "k3t-plus": k3t_plus,
    "hypercube": hypercube,
    "prism": prism,
    "petersen": petersen,
    "heawood": heawood,
    "example48": example48,
    "random-regular": random_regular,
}
