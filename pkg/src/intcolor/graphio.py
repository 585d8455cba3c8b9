"""Text and JSON serialization for graphs, colorings, and decompositions."""
from __future__ import annotations

import json
from typing import Any

from .multigraph import Decomposition, EdgeColoring, GraphError, Multigraph, build_graph


def graph_to_text(g: Multigraph) -> str:
    """First line ``V E``, then one ``u v`` line per edge in id order."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Multigraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("expected header line 'V E'")
    n, m = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(rows) - 1}")
    return build_graph(n, [(int(r[0]), int(r[1])) for r in rows[1:]])


def graph_to_json(g: Multigraph) -> dict[str, Any]:
    return {
        "vertex_count": g.vertex_count,
        "edges": [{"id": eid, "u": u, "v": v} for eid, (u, v) in enumerate(g.edges)],
        "allows_loops": g.allows_loops,
    }


def graph_from_json(obj: dict[str, Any]) -> Multigraph:
    raw = obj["edges"]
    pairs: list[tuple[int, int]] = []
    for i, e in enumerate(raw):
        if isinstance(e, dict):
            if e.get("id", i) != i:
                raise GraphError("edge ids must be dense and in order")
            pairs.append((e["u"], e["v"]))
        else:
            pairs.append((e[0], e[1]))
    return build_graph(obj["vertex_count"], pairs, allows_loops=obj.get("allows_loops", False))


def coloring_to_json(c: EdgeColoring) -> list[int]:
    """JSON list, color per edge id."""
    return list(c.colors)


def coloring_from_json(obj: Any, g: Multigraph) -> EdgeColoring:
    if not isinstance(obj, list):
        raise GraphError("coloring JSON must be a list of colors")
    return EdgeColoring(g, tuple(int(x) for x in obj))


def decomposition_to_json(d: Decomposition) -> dict[str, Any]:
    certs: list[list[int] | None] = []
    for i in range(d.part_count):
        cert = d.certificates[i] if d.certificates else None
        certs.append(list(cert.colors) if cert is not None else None)
    return {"part": list(d.parts), "certificates": certs}


def decomposition_from_json(obj: dict[str, Any], g: Multigraph) -> Decomposition:
    parts = tuple(int(p) for p in obj["part"])
    d = Decomposition(g, parts)
    certs: list[EdgeColoring | None] = []
    for i, raw in enumerate(obj.get("certificates", [])):
        if raw is None:
            certs.append(None)
        else:
            sub, _ = g.subgraph([eid for eid, p in enumerate(parts) if p == i])
            certs.append(EdgeColoring(sub, tuple(int(x) for x in raw)))
    return Decomposition(g, parts, tuple(certs))


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
