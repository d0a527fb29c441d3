"""Edge-list text format.

::

    # any comment
    # generator {"family": "petersen", "params": [], "seed": null}
    p 10 15
    0 1
    0 4
    ...

Comment lines start with ``#``.  The optional ``p N M`` header fixes the
vertex count (otherwise it is one more than the largest id seen).  A comment
of the form ``# generator <json>`` carries provenance and is preserved by a
write/read round trip.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, TextIO

from .errors import InvalidParameter
from .graph import Graph, from_edge_list

_PROVENANCE_TAG = "generator"


def parse_edge_list(text: str) -> tuple[Graph, dict[str, Any] | None]:
    n = None
    declared_m = None
    edges = []
    provenance = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith(_PROVENANCE_TAG + " "):
                provenance = json.loads(body[len(_PROVENANCE_TAG) + 1:])
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 3 or edges:
                raise InvalidParameter(f"line {lineno}: malformed header {line!r}")
            n, declared_m = int(parts[1]), int(parts[2])
            continue
        if len(parts) != 2:
            raise InvalidParameter(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    G = from_edge_list(n, edges)
    if declared_m is not None and declared_m != G.m:
        raise InvalidParameter(f"header declares {declared_m} edges, found {G.m}")
    return G, provenance


def format_edge_list(G: Graph, provenance: dict[str, Any] | None = None) -> str:
    lines = []
    if provenance is not None:
        lines.append(f"# {_PROVENANCE_TAG} {json.dumps(provenance, sort_keys=True)}")
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> tuple[Graph, dict[str, Any] | None]:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(G: Graph, dest: str | Path | TextIO,
                    provenance: dict[str, Any] | None = None) -> None:
    text = format_edge_list(G, provenance)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
