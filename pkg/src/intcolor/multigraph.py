"""Multigraphs, edge colorings, decompositions, and the checkers behind everything else.

Edge identity is positional: edge ids are dense 0..|E|-1 in construction order,
so parallel edges are first class.  All values are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or a violated operation precondition."""


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    allows_loops: bool = False

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {eid} endpoint out of range: ({u}, {v})")
            if u == v and not self.allows_loops:
                raise GraphError(f"edge {eid} is a loop ({u},{v}) but loops are disallowed")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in edge-id order (loops listed once)."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        # a loop contributes 2 to the degree
        d = 0
        for eid in self.incidence[v]:
            a, b = self.edges[eid]
            d += 2 if a == b else 1
        return d

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.vertex_count))

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if u == v else u

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                return False
            seen.add(key)
        return True

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components (isolated vertices included)."""
        seen = [False] * self.vertex_count
        out: list[list[int]] = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for eid in self.incidence[v]:
                    w = self.other_end(eid, v)
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(comp)
        return out

    def subgraph(self, edge_ids: Iterable[int]) -> tuple["Multigraph", tuple[int, ...]]:
        """Canonical subgraph on a subset of edges.

        Keeps the full vertex set; edges are relabelled densely in ascending
        host-edge-id order.  Returns the subgraph and the host ids in that order.
        """
        ids = tuple(sorted(set(edge_ids)))
        for eid in ids:
            if not 0 <= eid < self.edge_count:
                raise GraphError(f"unknown edge id {eid}")
        sub = Multigraph(self.vertex_count, tuple(self.edges[eid] for eid in ids),
                         allows_loops=self.allows_loops)
        return sub, ids


def build_graph(vertex_count: int, edge_pairs: Sequence[tuple[int, int]],
                allows_loops: bool = False) -> Multigraph:
    """Multigraph with dense edge ids in input order."""
    return Multigraph(vertex_count, tuple((int(u), int(v)) for u, v in edge_pairs),
                      allows_loops=allows_loops)


@dataclass(frozen=True)
class BipartitionCert:
    """Per-vertex side labels (0 = X, 1 = Y); every edge must join X to Y."""
    sides: tuple[int, ...]

    def side_vertices(self, side: int) -> list[int]:
        return [v for v, s in enumerate(self.sides) if s == side]

    def validate(self, g: Multigraph) -> None:
        if len(self.sides) != g.vertex_count:
            raise GraphError("bipartition certificate does not match graph")
        if any(s not in (0, 1) for s in self.sides):
            raise GraphError("bipartition sides must be 0 or 1")
        for eid, (u, v) in enumerate(g.edges):
            if self.sides[u] == self.sides[v]:
                raise GraphError(f"edge {eid} joins two vertices on the same side")


def bipartition(g: Multigraph) -> BipartitionCert | None:
    """2-color the vertices if possible; None when some cycle is odd (or a loop exists)."""
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for eid in g.incidence[v]:
                w = g.other_end(eid, v)
                if w == v:
                    return None
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return BipartitionCert(tuple(side))


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of integer colors to the edges of a graph."""
    graph: Multigraph
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.edge_count:
            raise GraphError("coloring must assign a color to every edge")

    def palette(self, v: int) -> list[int]:
        """Colors on edges incident to v (loops contribute their color twice)."""
        out = []
        for eid in self.graph.incidence[v]:
            u, w = self.graph.edges[eid]
            out.append(self.colors[eid])
            if u == w:
                out.append(self.colors[eid])
        return out

    def colors_used(self) -> int:
        return len(set(self.colors))

    def max_color(self) -> int:
        return max(self.colors, default=0)


def normalize(c: EdgeColoring) -> EdgeColoring:
    """Shift colors so the minimum used color is 1 (no-op on empty colorings)."""
    if not c.colors:
        return c
    shift = 1 - min(c.colors)
    if shift == 0:
        return c
    return EdgeColoring(c.graph, tuple(x + shift for x in c.colors))


def _is_consecutive(sorted_vals: list[int]) -> bool:
    return all(b == a + 1 for a, b in zip(sorted_vals, sorted_vals[1:]))


def _is_cyclically_consecutive(vals: set[int], t: int) -> bool:
    # a set is a cyclic interval mod t iff at most one cyclic gap exceeds 1
    if len(vals) <= 1 or len(vals) == t:
        return True
    s = sorted(vals)
    gaps = [b - a for a, b in zip(s, s[1:])]
    gaps.append(s[0] + t - s[-1])
    return sum(1 for gap in gaps if gap > 1) <= 1


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    interval: bool
    cyclic_interval: bool | None
    offending_vertices: tuple[int, ...]
    offending_edges: tuple[int, ...]

    def passed(self, mode: str = "interval") -> bool:
        if mode == "proper":
            return self.proper
        if mode == "interval":
            return self.interval
        if mode == "cyclic":
            return bool(self.cyclic_interval)
        raise ValueError(f"unknown mode {mode!r}")


def verify(g: Multigraph, c: EdgeColoring, mode: str = "interval",
           t: int | None = None) -> VerifyReport:
    """Check a coloring: 'proper', 'interval', or 'cyclic' (consecutive mod t).

    The offending lists name every vertex violating the requested mode and
    every edge involved in a color clash.
    """
    if c.graph is not g and c.graph != g:
        raise GraphError("coloring belongs to a different graph")
    if mode not in ("proper", "interval", "cyclic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "cyclic":
        if t is None or t < 1:
            raise ValueError("cyclic mode requires a period t >= 1")
        for eid, col in enumerate(c.colors):
            if not 1 <= col <= t:
                raise ValueError(f"cyclic mode: edge {eid} colored {col} outside [1, {t}]")

    proper = True
    interval = True
    cyclic: bool | None = True if mode == "cyclic" else None
    bad_vertices: list[int] = []
    bad_edges: set[int] = set()

    for v in range(g.vertex_count):
        pal = c.palette(v)
        if not pal:
            continue
        spal = sorted(pal)
        v_proper = len(set(spal)) == len(spal)
        v_interval = v_proper and _is_consecutive(spal)
        v_cyclic = v_proper and _is_cyclically_consecutive(set(spal), t) if mode == "cyclic" else None
        proper &= v_proper
        interval &= v_interval
        if mode == "cyclic":
            cyclic = bool(cyclic) and bool(v_cyclic)
        if not v_proper:
            by_color: dict[int, list[int]] = {}
            for eid in g.incidence[v]:
                by_color.setdefault(c.colors[eid], []).append(eid)
            for eids in by_color.values():
                if len(eids) > 1:
                    bad_edges.update(eids)
        failed = {"proper": not v_proper, "interval": not v_interval,
                  "cyclic": not bool(v_cyclic) if v_cyclic is not None else False}[mode]
        if failed:
            bad_vertices.append(v)

    return VerifyReport(proper=proper, interval=interval, cyclic_interval=cyclic,
                        offending_vertices=tuple(bad_vertices),
                        offending_edges=tuple(sorted(bad_edges)))


@dataclass(frozen=True)
class Decomposition:
    """Partition of a graph's edges into parts, each with an interval-coloring certificate.

    ``parts[eid]`` is the part index of that edge; ``certificates[i]`` colors part i's
    canonical subgraph (see Multigraph.subgraph) and may be None until certified.
    """
    graph: Multigraph
    parts: tuple[int, ...]
    certificates: tuple[EdgeColoring | None, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.parts) != self.graph.edge_count:
            raise GraphError("decomposition must assign a part to every edge")
        if any(p < 0 for p in self.parts):
            raise GraphError("part indices must lie in [0, k)")
        if self.certificates and len(self.certificates) != self.part_count:
            raise GraphError("expected one certificate slot per part")

    @property
    def part_count(self) -> int:
        return max(self.parts) + 1 if self.parts else 0

    def part_edges(self, i: int) -> list[int]:
        return [eid for eid, p in enumerate(self.parts) if p == i]

    def part_subgraph(self, i: int) -> tuple[Multigraph, tuple[int, ...]]:
        return self.graph.subgraph(self.part_edges(i))

    def color_of(self, eid: int) -> tuple[int, int]:
        """(part, certificate color) of a host edge."""
        p = self.parts[eid]
        cert = self.certificates[p] if self.certificates else None
        if cert is None:
            raise GraphError(f"part {p} has no certificate")
        _, ids = self.part_subgraph(p)
        return p, cert.colors[ids.index(eid)]


def verify_decomposition(g: Multigraph, d: Decomposition) -> VerifyReport:
    """True iff the parts partition E(g) and every certificate is interval on its part."""
    if d.graph is not g and d.graph != g:
        raise GraphError("decomposition belongs to a different graph")
    ok = True
    bad_vertices: set[int] = set()
    bad_edges: set[int] = set()
    for i in range(d.part_count):
        sub, ids = d.part_subgraph(i)
        if not ids:
            continue
        cert = d.certificates[i] if d.certificates else None
        if cert is None:
            raise GraphError(f"nonempty part {i} is missing its certificate")
        if cert.graph.edge_count != sub.edge_count or cert.graph.edges != sub.edges:
            raise GraphError(f"certificate of part {i} does not match the part subgraph")
        rep = verify(sub, cert, mode="interval")
        if not rep.interval:
            ok = False
            bad_vertices.update(rep.offending_vertices)
            bad_edges.update(ids[e] for e in rep.offending_edges)
    return VerifyReport(proper=ok, interval=ok, cyclic_interval=None,
                        offending_vertices=tuple(sorted(bad_vertices)),
                        offending_edges=tuple(sorted(bad_edges)))
