"""Requirement matrices, the bipartite lecture graph, and no-wait weekly timetables.

A requirement matrix B gives lecture counts b_ij between class i and teacher j.
A weekly timetable for k days places every lecture so that within any single
day no class and no teacher has an idle period between two busy ones; such a
timetable exists iff the lecture multigraph decomposes into k interval
colorable subgraphs, and the two directions of that equivalence are
implemented here as translations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .multigraph import (BipartitionCert, Decomposition, GraphError, Multigraph,
                         VerifyReport, build_graph, verify_decomposition)
from .thickness import _assemble, decompose_bipartite, dispatch_theta_upper, BoundTrace


@dataclass(frozen=True)
class RequirementMatrix:
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.b or not self.b[0]:
            raise GraphError("requirement matrix must have at least one row and column")
        width = len(self.b[0])
        for row in self.b:
            if len(row) != width:
                raise GraphError("ragged requirement matrix")
            if any(x < 0 for x in row):
                raise GraphError("lecture counts must be nonnegative")

    @property
    def n_classes(self) -> int:
        return len(self.b)

    @property
    def m_teachers(self) -> int:
        return len(self.b[0])

    @staticmethod
    def from_rows(rows: list[list[int]]) -> "RequirementMatrix":
        return RequirementMatrix(tuple(tuple(int(x) for x in row) for row in rows))

    @staticmethod
    def from_csv(text: str) -> "RequirementMatrix":
        rows = [[int(x) for x in line.split(",")]
                for line in text.splitlines() if line.strip()]
        return RequirementMatrix.from_rows(rows)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self.b) + "\n"


@dataclass(frozen=True)
class Timetable:
    """k daily grids; days[l][i][h] is the teacher index class i meets in period
    h+1 of day l+1, or None when the class is free."""
    days: tuple[tuple[tuple[int | None, ...], ...], ...]

    @property
    def day_count(self) -> int:
        return len(self.days)

    def to_json(self) -> list:
        return [[list(row) for row in day] for day in self.days]

    @staticmethod
    def from_json(obj: list) -> "Timetable":
        return Timetable(tuple(tuple(tuple(x if x is None else int(x) for x in row)
                                     for row in day) for day in obj))


def build_requirement_graph(B: RequirementMatrix) -> tuple[Multigraph, BipartitionCert]:
    """Bipartite multigraph: class i and teacher j joined by b_ij parallel edges."""
    n, m = B.n_classes, B.m_teachers
    edges = [(i, n + j) for i in range(n) for j in range(m) for _ in range(B.b[i][j])]
    g = build_graph(n + m, edges)
    return g, BipartitionCert(tuple([0] * n + [1] * m))


def decomposition_to_timetable(B: RequirementMatrix, d: Decomposition) -> Timetable:
    """Day l, period h, class i meets teacher j iff part l colors an (i,j) edge h."""
    g, _ = build_requirement_graph(B)
    if d.graph != g:
        raise GraphError("decomposition does not belong to this requirement graph")
    if not verify_decomposition(g, d).interval:
        raise GraphError("decomposition is not certified")
    n = B.n_classes
    days = []
    for part in range(d.part_count):
        _, ids = d.part_subgraph(part)
        cert = d.certificates[part]
        periods = cert.max_color() if cert.colors else 0
        grid: list[list[int | None]] = [[None] * periods for _ in range(n)]
        for pos, eid in enumerate(ids):
            u, v = g.edges[eid]
            i, j = (u, v - n) if u < n else (v, u - n)
            h = cert.colors[pos]
            if grid[i][h - 1] is not None:
                raise AssertionError("two lectures in one period for one class")
            grid[i][h - 1] = j
        days.append(tuple(tuple(row) for row in grid))
    return Timetable(tuple(days))


def timetable_to_decomposition(B: RequirementMatrix, S: Timetable) -> Decomposition:
    """Inverse translation; parallel (i,j) lectures consume edge ids in order."""
    g, _ = build_requirement_graph(B)
    n = B.n_classes
    pool: dict[tuple[int, int], list[int]] = {}
    for eid, (u, v) in enumerate(g.edges):
        pool.setdefault((u, v - n), []).append(eid)
    queues = {key: list(reversed(ids)) for key, ids in pool.items()}
    part_dicts: list[dict[int, int]] = []
    for day in S.days:
        colors: dict[int, int] = {}
        for i, row in enumerate(day):
            for h, j in enumerate(row, start=1):
                if j is None:
                    continue
                if not queues.get((i, j)):
                    raise GraphError(f"timetable schedules more ({i},{j}) lectures than required")
                colors[queues[(i, j)].pop()] = h
        part_dicts.append(colors)
    if any(queues[k] for k in queues):
        raise GraphError("timetable misses some required lectures")
    return _assemble(g, part_dicts)


def _busy_interruptions(busy: list[int]) -> bool:
    return bool(busy) and (max(busy) - min(busy) + 1 != len(busy))


def verify_timetable(B: RequirementMatrix, S: Timetable) -> VerifyReport:
    """Totals, per-period distinctness, and the two-sided no-interruption condition.

    In the report, 'proper' covers the totals and distinctness conditions and
    'interval' additionally requires no interruptions; offending parties are
    listed as vertices of the requirement graph (classes then teachers).
    """
    n, m = B.n_classes, B.m_teachers
    ok_counts = True
    ok_gapless = True
    offenders: set[int] = set()

    counts = [[0] * m for _ in range(n)]
    for day in S.days:
        if len(day) != n:
            raise GraphError("day grid must have one row per class")
        for i, row in enumerate(day):
            for j in row:
                if j is None:
                    continue
                if not 0 <= j < m:
                    raise GraphError(f"unknown teacher index {j}")
                counts[i][j] += 1
        for h in range(max((len(row) for row in day), default=0)):
            seen: set[int] = set()
            for i, row in enumerate(day):
                j = row[h] if h < len(row) else None
                if j is None:
                    continue
                if j in seen:
                    ok_counts = False
                    offenders.add(n + j)
                seen.add(j)
        for i, row in enumerate(day):
            busy = [h for h, j in enumerate(row) if j is not None]
            if _busy_interruptions(busy):
                ok_gapless = False
                offenders.add(i)
        teacher_busy: dict[int, set[int]] = {}
        for row in day:
            for h, j in enumerate(row):
                if j is not None:
                    teacher_busy.setdefault(j, set()).add(h)
        for j, periods in teacher_busy.items():
            if _busy_interruptions(sorted(periods)):
                ok_gapless = False
                offenders.add(n + j)
    for i in range(n):
        for j in range(m):
            if counts[i][j] != B.b[i][j]:
                ok_counts = False
                offenders.update((i, n + j))

    return VerifyReport(proper=ok_counts, interval=ok_counts and ok_gapless,
                        cyclic_interval=None,
                        offending_vertices=tuple(sorted(offenders)),
                        offending_edges=())


def make_weekly_timetable(B: RequirementMatrix, mode: str = "fewest_days",
                          ) -> tuple[Timetable, BoundTrace]:
    """No-wait weekly timetable: dispatcher-chosen day count, or the even spread
    with ceil(Delta/3) days and daily loads within one of each other."""
    g, cert = build_requirement_graph(B)
    if mode == "fewest_days":
        d, trace = dispatch_theta_upper(g)
    elif mode == "even_spread":
        d = decompose_bipartite(g, cert)
        delta = g.max_degree
        trace = BoundTrace("even-spread", f"ceil({delta}/3) = {max(1, -(-delta // 3))}",
                           max(1, -(-delta // 3)), d.part_count, True)
    else:
        raise GraphError(f"unknown mode {mode!r}")
    S = decomposition_to_timetable(B, d)
    rep = verify_timetable(B, S)
    if not rep.interval:
        raise AssertionError("constructed timetable failed verification")
    return S, trace


def daily_loads(S: Timetable, n_classes: int, m_teachers: int) -> tuple[list[list[int]], list[list[int]]]:
    """Per-day lesson counts: (class_loads[i][day], teacher_loads[j][day])."""
    cl = [[0] * S.day_count for _ in range(n_classes)]
    tl = [[0] * S.day_count for _ in range(m_teachers)]
    for l, day in enumerate(S.days):
        for i, row in enumerate(day):
            for j in row:
                if j is not None:
                    cl[i][l] += 1
                    tl[j][l] += 1
    return cl, tl


def render_timetable(S: Timetable) -> str:
    """Human-readable grid, one block per day."""
    if not S.days:
        return "(empty timetable)\n"
    out = []
    for l, day in enumerate(S.days, start=1):
        periods = max((len(row) for row in day), default=0)
        out.append(f"Day {l}")
        header = "      " + " ".join(f"p{h+1:<3d}" for h in range(periods))
        out.append(header)
        for i, row in enumerate(day):
            cells = " ".join(f"P{j+1:<3d}" if j is not None else ".   " for j in row)
            out.append(f"J{i+1:<4d} {cells}")
    return "\n".join(out) + "\n"
