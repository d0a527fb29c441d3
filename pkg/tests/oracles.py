"""Independent reference computations used only by the tests.

None of these share code paths with the package beyond the Graph container.
"""

from itertools import combinations

import networkx as nx
import numpy as np


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def jacobi_eigenvalues(A, tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi rotations on a dense symmetric matrix; returns sorted descending."""
    A = np.array(A, dtype=float)
    n = len(A)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum((A - np.diag(np.diag(A))) ** 2))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) < 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * A[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta ** 2 + 1)) if theta else 1.0
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                J = np.eye(n)
                J[p, p] = J[q, q] = c
                J[p, q], J[q, p] = s, -s
                A = J.T @ A @ J
    return sorted(np.diag(A), reverse=True)


def is_cyclic_cut(n, edges, removed):
    """Union-find over the surviving edges: >= 2 components, each with edges >= vertices."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = [e for e in edges if e not in removed]
    for u, v in kept:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    verts, edge_count = {}, {}
    for v in range(n):
        r = find(v)
        verts[r] = verts.get(r, 0) + 1
    for u, _ in kept:
        r = find(u)
        edge_count[r] = edge_count.get(r, 0) + 1
    if len(verts) < 2:
        return False
    return all(edge_count.get(r, 0) >= c for r, c in verts.items())


def edge_subset_cec(G, max_size=None):
    """Smallest edge set whose removal leaves >= 2 components, all with a cycle.

    Enumerates edge subsets by increasing size; returns ``None`` when no subset
    up to ``max_size`` (default: all edges) qualifies.
    """
    edges = G.edges()
    top = len(edges) if max_size is None else max_size
    for k in range(top + 1):
        for S in combinations(edges, k):
            if is_cyclic_cut(G.n, edges, set(S)):
                return k
    return None


def bisect_root(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2
