"""Upper-bound decompositions into interval colorable subgraphs, plus a dispatcher.

Every decomposer assembles a fully certified Decomposition: each part carries an
interval coloring of its subgraph and the whole object is re-checked before it
is returned.
"""
from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass

from .edge_coloring import (BudgetExceeded, equalized_bipartite_color, euler_split,
                            exact_chromatic_index, konig_color,
                            petersen_two_factorization, shannon_color, vizing_color)
from .generators import (InfeasibleSpec, complete_graph, complete_multipartite_graph,
                         multipartite_parts)
from .kernels import (IncrementalHost, balanced_multipartite_colors, color_cactus,
                      color_forest, color_low_even_bipartite, latin_bipartite_colors,
                      round_robin_rounds, staircase_bipartite_colors,
                      two_factor_pair_colors, walk_degree_two)
from .multigraph import (BipartitionCert, Decomposition, EdgeColoring, GraphError,
                         Multigraph, bipartition, normalize, verify,
                         verify_decomposition)
from .subcubic import color_subcubic


@dataclass(frozen=True)
class BoundTrace:
    """Audit record tying a decomposition to the bound it instantiates."""
    method: str
    bound_formula: str
    bound_value: int
    parts: int
    certified: bool

    def to_json(self) -> dict:
        return {"method": self.method, "bound_formula": self.bound_formula,
                "bound_value": self.bound_value, "parts": self.parts,
                "certified": self.certified}


def _assemble(g: Multigraph, part_color_dicts: list[dict[int, int]]) -> Decomposition:
    """Build a certified Decomposition from per-part host-edge color maps."""
    nonempty = [d for d in part_color_dicts if d]
    owner: dict[int, int] = {}
    for i, d in enumerate(nonempty):
        for eid in d:
            if eid in owner:
                raise AssertionError(f"edge {eid} assigned to two parts")
            owner[eid] = i
    if len(owner) != g.edge_count:
        raise AssertionError("parts do not cover every edge")
    parts = tuple(owner[e] for e in range(g.edge_count))
    certs = []
    for i, d in enumerate(nonempty):
        sub, ids = g.subgraph(d.keys())
        certs.append(normalize(EdgeColoring(sub, tuple(d[e] for e in ids))))
    decomp = Decomposition(g, parts, tuple(certs))
    rep = verify_decomposition(g, decomp)
    if not rep.interval:
        raise AssertionError(f"decomposition failed certification at vertices {rep.offending_vertices}")
    return decomp


def _coloring_as_dict(col: EdgeColoring, ids: tuple[int, ...] | None = None) -> dict[int, int]:
    if ids is None:
        ids = tuple(range(col.graph.edge_count))
    return {eid: col.colors[pos] for pos, eid in enumerate(ids)}


def _edge_components(g: Multigraph, eids: list[int]) -> list[list[int]]:
    """Connected components of an edge subset, as edge-id lists."""
    inc: dict[int, list[int]] = defaultdict(list)
    for e in eids:
        u, v = g.edges[e]
        inc[u].append(e)
        inc[v].append(e)
    seen_e: set[int] = set()
    out: list[list[int]] = []
    for e0 in eids:
        if e0 in seen_e:
            continue
        comp = [e0]
        seen_e.add(e0)
        frontier = list(g.edges[e0])
        seen_v = set(frontier)
        while frontier:
            v = frontier.pop()
            for e in inc[v]:
                if e not in seen_e:
                    seen_e.add(e)
                    comp.append(e)
                w = g.other_end(e, v)
                if w not in seen_v:
                    seen_v.add(w)
                    frontier.append(w)
        out.append(sorted(comp))
    return out


# ---------------------------------------------------------------------------
# General bound via 5-class groups.

class _AbsorbStuck(Exception):
    pass


def _degrees_within(g: Multigraph, eids: list[int]) -> dict[int, int]:
    deg: dict[int, int] = defaultdict(int)
    for e in eids:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def _odd_cycle_components(g: Multigraph, eids: list[int]) -> tuple[list[list[int]], list[int]]:
    """Split an edge set into its odd-cycle components and the rest."""
    odd: list[list[int]] = []
    rest: list[int] = []
    for comp in _edge_components(g, eids):
        deg = _degrees_within(g, comp)
        if all(d == 2 for d in deg.values()) and len(comp) % 2:
            odd.append(comp)
        else:
            rest.extend(comp)
    return odd, sorted(rest)


def _rotate_cycle_walk(g: Multigraph, cycle_edges: list[int], anchor: int) -> list[int]:
    (vseq, eseq, is_cycle), = walk_degree_two(g, cycle_edges)
    if not is_cycle:
        raise AssertionError("expected a cycle")
    i = vseq.index(anchor)
    return eseq[i:] + eseq[:i]


def _split_component(g: Multigraph, comp_edges: list[int], coloring: EdgeColoring,
                     h_classes: set[int], f_classes: set[int]) -> tuple[dict[int, int], dict[int, int]]:
    """One group component into two interval-colorable sides.

    Side A holds the subcubic 3-class subgraph with its odd cycles absorbed
    through paths borrowed from the 2-class side B; raises _AbsorbStuck when an
    odd cycle cannot be reached so the caller can try another class split.
    """
    h_edges = [e for e in comp_edges if coloring.colors[e] in h_classes]
    f_edges = [e for e in comp_edges if coloring.colors[e] in f_classes]
    odd_cycles, f0 = _odd_cycle_components(g, f_edges)

    host = IncrementalHost(g)
    if f0:
        sub, ids = g.subgraph(f0)
        c3 = EdgeColoring(sub, tuple(coloring.colors[e] for e in ids))
        colored = color_subcubic(sub, c3)
        for pos, eid in enumerate(ids):
            host.add_colored(eid, colored.colors[pos])

    h_avail = set(h_edges)
    h_inc: dict[int, list[int]] = defaultdict(list)
    for e in h_edges:
        u, v = g.edges[e]
        h_inc[u].append(e)
        h_inc[v].append(e)

    unabsorbed = list(odd_cycles)
    b_colors: dict[int, int] = {}

    def cycle_vertices(cyc: list[int]) -> set[int]:
        return {w for e in cyc for w in g.edges[e]}

    while unabsorbed:
        on_cycle: dict[int, int] = {}
        for ci, cyc in enumerate(unabsorbed):
            for w in cycle_vertices(cyc):
                on_cycle[w] = ci

        # a cycle already touching the host does so at a leaf: attach directly
        direct = next(((v, ci) for v, ci in sorted(on_cycle.items())
                       if len(host.palette(v)) == 1), None)
        if direct is not None:
            v, ci = direct
            host.add_cycle(v, _rotate_cycle_walk(g, unabsorbed[ci], v))
            unabsorbed.pop(ci)
            continue

        # shortest borrowed path from the host to any unabsorbed cycle
        sources = sorted(v for v in range(g.vertex_count) if host.palette(v))
        parent: dict[int, tuple[int, int]] = {}
        found: tuple[int, int] | None = None
        queue = deque(sources)
        visited = set(sources)
        while queue and found is None:
            v = queue.popleft()
            for e in h_inc[v]:
                if e not in h_avail:
                    continue
                w = g.other_end(e, v)
                if w in visited:
                    continue
                if w in on_cycle:
                    parent[w] = (v, e)
                    found = (w, on_cycle[w])
                    break
                visited.add(w)
                parent[w] = (v, e)
                queue.append(w)
        if found is not None:
            target, ci = found
            path: list[tuple[int, int]] = []
            cur = target
            while cur in parent:
                prev, e = parent[cur]
                path.append((prev, e))
                cur = prev
            for frm, e in reversed(path):
                host.add_pendant(e, frm)
                h_avail.discard(e)
            host.add_cycle(target, _rotate_cycle_walk(g, unabsorbed[ci], target))
            unabsorbed.pop(ci)
            continue

        # island: hang the cycle off one borrowed edge of its own
        island = None
        for ci, cyc in enumerate(unabsorbed):
            verts = cycle_vertices(cyc)
            for v in sorted(verts):
                for e in sorted(h_inc[v]):
                    if e in h_avail and g.other_end(e, v) not in verts:
                        island = (ci, v, e)
                        break
                if island:
                    break
            if island:
                break
        if island is not None:
            ci, v, e = island
            host.add_colored(e, 1)
            h_avail.discard(e)
            host.add_cycle(v, _rotate_cycle_walk(g, unabsorbed[ci], v))
            unabsorbed.pop(ci)
            continue

        # a bare odd cycle component: path on side A, one edge on side B
        ci, cyc = 0, unabsorbed[0]
        comp_of_cycle = _edge_components(g, comp_edges)
        containing = next(c for c in comp_of_cycle if cyc[0] in c)
        if sorted(containing) != sorted(cyc):
            raise _AbsorbStuck
        walk = _rotate_cycle_walk(g, cyc, min(cycle_vertices(cyc)))
        b_colors[walk[0]] = 1
        for i, e in enumerate(walk[1:]):
            host.add_colored(e, 1 + (i % 2))
        unabsorbed.pop(ci)

    for _, eseq, is_cycle in walk_degree_two(g, sorted(h_avail)):
        if is_cycle and len(eseq) % 2:
            raise _AbsorbStuck
        for i, e in enumerate(eseq):
            b_colors[e] = 1 + (i % 2)
    return dict(host.color), b_colors


def _class_splits(classes: list[int]) -> list[tuple[set[int], set[int]]]:
    """Candidate (2-class, 3-class) splits; the canonical first-two/last-three first."""
    out = [(set(classes[:2]), set(classes[2:]))]
    for size_h in range(min(2, len(classes)), -1, -1):
        if len(classes) - size_h > 3:
            continue
        for combo in itertools.combinations(classes, size_h):
            cand = (set(combo), set(classes) - set(combo))
            if cand not in out:
                out.append(cand)
    return out


def decompose_general(g: Multigraph, coloring: EdgeColoring) -> Decomposition:
    """At most 2*ceil(t/5) certified parts from a proper t-coloring.

    Classes are taken five at a time; within each group the last three classes
    form a subcubic side whose odd cycles are absorbed with paths from the
    2-class side, and what remains of the 2-class side is the second part.
    """
    if not verify(g, coloring, "proper").proper:
        raise GraphError("decompose_general needs a proper coloring")
    classes = sorted(set(coloring.colors))
    part_dicts: list[dict[int, int]] = []
    for gi in range(0, len(classes), 5):
        group = classes[gi:gi + 5]
        group_edges = [e for e in range(g.edge_count) if coloring.colors[e] in set(group)]
        if not group_edges:
            continue
        a_side: dict[int, int] = {}
        b_side: dict[int, int] = {}
        for comp in _edge_components(g, group_edges):
            present = sorted({coloring.colors[e] for e in comp})
            for h_cls, f_cls in _class_splits(present):
                try:
                    ca, cb = _split_component(g, comp, coloring, h_cls, f_cls)
                except _AbsorbStuck:
                    continue
                a_side.update(ca)
                b_side.update(cb)
                break
            else:
                raise GraphError("no class split absorbed every odd cycle of a component")
        part_dicts.extend([a_side, b_side])
    return _assemble(g, part_dicts)


# ---------------------------------------------------------------------------
# Bipartite decompositions.

def _require_cert(g: Multigraph, cert: BipartitionCert | None) -> BipartitionCert:
    if cert is None:
        cert = bipartition(g)
        if cert is None:
            raise GraphError("graph is not bipartite")
    cert.validate(g)
    return cert


def _subcubic_bipartite_colors(g: Multigraph, eids: list[int]) -> dict[int, int]:
    sub, ids = g.subgraph(eids)
    col = color_subcubic(sub, konig_color(sub))
    return {eid: col.colors[pos] for pos, eid in enumerate(ids)}


def decompose_bipartite(g: Multigraph, cert: BipartitionCert | None = None) -> Decomposition:
    """ceil(Delta/3) certified parts with per-vertex part degrees within one.

    The equalized k-coloring provides the parts; each part is bipartite with
    maximum degree 3, hence interval colorable.
    """
    cert = _require_cert(g, cert)
    if g.edge_count == 0:
        return _assemble(g, [])
    delta = g.max_degree
    if delta <= 3:
        return _assemble(g, [_subcubic_bipartite_colors(g, list(range(g.edge_count)))])
    k = -(-delta // 3)
    classes = equalized_bipartite_color(g, cert, k)
    parts = []
    for c in range(1, k + 1):
        eids = [e for e in range(g.edge_count) if classes.colors[e] == c]
        parts.append(_subcubic_bipartite_colors(g, eids) if eids else {})
    return _assemble(g, parts)


def decompose_eulerian_bipartite(g: Multigraph, cert: BipartitionCert | None = None) -> Decomposition:
    """ceil(Delta/4) certified parts for an even-degree bipartite multigraph.

    Loops regularize the graph, Petersen 2-factors come back as even-cycle
    collections once loops are dropped, and consecutive pairs of factors are
    colored with four consecutive colors."""
    cert = _require_cert(g, cert)
    for v in range(g.vertex_count):
        if g.degree(v) % 2:
            raise GraphError(f"vertex {v} has odd degree")
    if g.edge_count == 0:
        return _assemble(g, [])
    delta = g.max_degree
    extra: list[tuple[int, int]] = []
    for v in range(g.vertex_count):
        extra.extend((v, v) for _ in range((delta - g.degree(v)) // 2))
    gstar = Multigraph(g.vertex_count, g.edges + tuple(extra), allows_loops=True)
    factors = [[e for e in f if e < g.edge_count]
               for f in petersen_two_factorization(gstar).factors]
    parts = []
    for i in range(0, len(factors), 2):
        fa = factors[i]
        fb = factors[i + 1] if i + 1 < len(factors) else []
        parts.append(two_factor_pair_colors(g, fa, fb))
    return _assemble(g, parts)


def _side_degrees(g: Multigraph, cert: BipartitionCert) -> tuple[list[int], list[int], int, int]:
    xs = [v for v in cert.side_vertices(0) if g.degree(v) > 0]
    ys = [v for v in cert.side_vertices(1) if g.degree(v) > 0]
    dx = {g.degree(v) for v in xs}
    dy = {g.degree(v) for v in ys}
    if len(dx) > 1 or len(dy) > 1:
        raise GraphError("sides are not regular")
    return xs, ys, (dx.pop() if dx else 0), (dy.pop() if dy else 0)


def _star_matching(g: Multigraph, eids: list[int], xs: list[int], ys: list[int],
                   k: int, r: int) -> list[int]:
    """One edge per X-vertex so every Y-vertex keeps degree r: a star forest.

    Splits each Y-vertex into r degree-k copies (edges chunked in id order) and
    lifts the color-1 class of a Konig coloring of the k-regular split graph."""
    x_index = {v: i for i, v in enumerate(xs)}
    n_h = len(xs)
    copy_base: dict[int, int] = {}
    for y in ys:
        copy_base[y] = n_h
        n_h += r
    seen: dict[int, int] = defaultdict(int)
    h_edges: list[tuple[int, int]] = []
    for e in sorted(eids):
        u, v = g.edges[e]
        x, y = (u, v) if u in x_index else (v, u)
        h_edges.append((x_index[x], copy_base[y] + seen[y] // k))
        seen[y] += 1
    sides = tuple([0] * len(xs) + [1] * (n_h - len(xs)))
    h = Multigraph(n_h, tuple(h_edges))
    col = konig_color(h, BipartitionCert(sides))
    ordered = sorted(eids)
    return [ordered[i] for i in range(len(ordered)) if col.colors[i] == 1]


def decompose_biregular(g: Multigraph, cert: BipartitionCert | None = None) -> Decomposition:
    """(k,kr)-biregular (k >= 3, r >= 2): max(2, k-2) certified parts.

    k=3 peels a star forest leaving a (2,2r)-biregular graph; k=4 Euler-splits
    into two (2,2r)-biregular halves; k>=5 peels star forests down to k=4."""
    cert = _require_cert(g, cert)
    xs, ys, d0, d1 = _side_degrees(g, cert)
    if d0 > d1:
        xs, ys, d0, d1 = ys, xs, d1, d0
    k, big = d0, d1
    if k < 3 or big % k or big // k < 2:
        raise GraphError(f"degrees ({d0},{d1}) are not of (k,kr) shape with k>=3, r>=2")
    r = big // k

    def low_even_colors(eids: list[int]) -> dict[int, int]:
        sub, ids = g.subgraph(eids)
        col = color_low_even_bipartite(sub)
        return {eid: col.colors[pos] for pos, eid in enumerate(ids)}

    def forest_colors(eids: list[int]) -> dict[int, int]:
        sub, ids = g.subgraph(eids)
        col = color_forest(sub)
        return {eid: col.colors[pos] for pos, eid in enumerate(ids)}

    parts: list[dict[int, int]] = []
    eids = list(range(g.edge_count))
    k_cur = k
    while k_cur >= 5:
        star = _star_matching(g, eids, xs, ys, k_cur, r)
        parts.append(forest_colors(star))
        eids = sorted(set(eids) - set(star))
        k_cur -= 1
    if k_cur == 4:
        sub, ids = g.subgraph(eids)
        es = euler_split(sub)
        if es.imbalanced_vertices:
            raise AssertionError("biregular component trails must have even length")
        parts.append(low_even_colors([ids[e] for e in es.left]))
        parts.append(low_even_colors([ids[e] for e in es.right]))
    else:
        star = _star_matching(g, eids, xs, ys, 3, r)
        parts.append(forest_colors(star))
        parts.append(low_even_colors(sorted(set(eids) - set(star))))
    return _assemble(g, parts)


def decompose_star_peel(g: Multigraph, cert: BipartitionCert | None = None) -> Decomposition:
    """min(max degree of X, max degree of Y) star-forest parts."""
    cert = _require_cert(g, cert)
    if g.edge_count == 0:
        return _assemble(g, [])
    d_side = [max((g.degree(v) for v in cert.side_vertices(s)), default=0) for s in (0, 1)]
    side = 0 if d_side[0] <= d_side[1] else 1
    xs = cert.side_vertices(side)

    remaining = set(range(g.edge_count))
    deg = {v: len(g.incidence[v]) for v in xs}
    parts = []
    while remaining:
        dmax = max(deg.values())
        if dmax == 0:
            break
        star: list[int] = []
        for v in sorted(xs):
            if deg[v] != dmax:
                continue
            e = min(e for e in g.incidence[v] if e in remaining)
            star.append(e)
        for e in star:
            remaining.discard(e)
            u, w = g.edges[e]
            for z in (u, w):
                if z in deg:
                    deg[z] -= 1
        sub, ids = g.subgraph(star)
        col = color_forest(sub)
        parts.append({eid: col.colors[pos] for pos, eid in enumerate(ids)})
    return _assemble(g, parts)


# ---------------------------------------------------------------------------
# Complete multipartite families.

def multipartite_part_count(r: int) -> int:
    """T(2)=1, T(r)=T(ceil(r/2))+1."""
    if r < 2:
        return 0
    return 1 if r == 2 else multipartite_part_count(-(-r // 2)) + 1


def _multipartite_dicts(g: Multigraph, parts: list[list[int]]) -> list[dict[int, int]]:
    level_sets: list[list[int]] = [list(range(len(parts)))]
    out: list[dict[int, int]] = []
    while any(len(s) >= 2 for s in level_sets):
        level_colors: dict[int, int] = {}
        nxt: list[list[int]] = []
        for s in level_sets:
            if len(s) < 2:
                continue
            half = -(-len(s) // 2)
            left, right = s[:half], s[half:]
            xs = [v for pi in left for v in parts[pi]]
            ys = [v for pi in right for v in parts[pi]]
            level_colors.update(staircase_bipartite_colors(g, xs, ys))
            nxt.extend([left, right])
        out.append(level_colors)
        level_sets = nxt
    return out


def decompose_complete_multipartite(sizes: list[int]) -> Decomposition:
    """Exactly T(r) parts, each a disjoint union of complete bipartite graphs."""
    g = complete_multipartite_graph(list(sizes))
    return _assemble(g, _multipartite_dicts(g, multipartite_parts(list(sizes))))


def decompose_balanced_family(n: int, r: int, variant: str = "balanced") -> Decomposition:
    """Balanced-family bounds: K_{n*r} in 1 or 2 parts, K_{n*r,nr} in 1 or 3,
    odd complete graphs in 2."""
    if variant == "balanced":
        if r < 2 or n < 1:
            raise GraphError("need r >= 2 parts of positive size")
        g = complete_multipartite_graph([n] * r)
        parts = multipartite_parts([n] * r)
        if (n * r) % 2 == 0:
            return _assemble(g, [balanced_multipartite_colors(g, n, r)])
        inner = [e for e, (u, v) in enumerate(g.edges) if u < n * (r - 1) and v < n * (r - 1)]
        sub, ids = g.subgraph(inner)
        inner_colors = balanced_multipartite_colors(sub, n, r - 1)
        first = {eid: inner_colors[pos] for pos, eid in enumerate(ids)}
        second = staircase_bipartite_colors(g, list(range(n * (r - 1))), parts[r - 1])
        return _assemble(g, [first, second])

    if variant == "semiregular":
        if r < 2 or n < 1:
            raise GraphError("need r >= 2 small parts of positive size")
        g = complete_multipartite_graph([n] * r + [n * r])
        a_vertices = list(range(n * r))
        b_vertices = list(range(n * r, 2 * n * r))
        cross = latin_bipartite_colors(g, a_vertices, b_vertices, base=(r - 1) * n)
        if (n * r) % 2 == 0:
            sub, ids = _within_subgraph(g, n, r)
            within = balanced_multipartite_colors(sub, n, r)
            merged = dict(cross)
            merged.update({eid: within[pos] for pos, eid in enumerate(ids)})
            return _assemble(g, [merged])
        sub, ids = g.subgraph([e for e, (u, v) in enumerate(g.edges)
                               if u < n * (r - 1) and v < n * (r - 1)])
        first = {eid: balanced_multipartite_colors(sub, n, r - 1)[pos]
                 for pos, eid in enumerate(ids)}
        second = staircase_bipartite_colors(g, list(range(n * (r - 1))),
                                            list(range(n * (r - 1), n * r)))
        third = {e: c - (r - 1) * n for e, c in cross.items()}
        return _assemble(g, [first, second, third])

    if variant == "odd_complete":
        if n < 1:
            raise GraphError("need n >= 1 for an odd complete graph")
        g = complete_graph(2 * n + 1)
        eid_of = {(u, v): e for e, (u, v) in enumerate(g.edges)}
        inner: dict[int, int] = {}
        for ridx, rnd in enumerate(round_robin_rounds(2 * n)):
            for a, b in rnd:
                inner[eid_of[(a, b)]] = ridx + 1
        star = {eid_of[(v, 2 * n)]: v + 1 for v in range(2 * n)}
        return _assemble(g, [inner, star])

    raise GraphError(f"unknown variant {variant!r}")


def _within_subgraph(g: Multigraph, n: int, r: int) -> tuple[Multigraph, tuple[int, ...]]:
    return g.subgraph([e for e, (u, v) in enumerate(g.edges) if u < n * r and v < n * r])


def decompose_forest_peel(g: Multigraph) -> Decomposition:
    """Repeatedly remove a DFS spanning forest; parts bound the thickness but
    are not guaranteed to reach the arboricity."""
    remaining = set(range(g.edge_count))
    parts: list[dict[int, int]] = []
    while remaining:
        forest: list[int] = []
        seen = [False] * g.vertex_count
        for s in range(g.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            stack = [(s, 0)]
            while stack:
                v, ptr = stack[-1]
                moved = False
                while ptr < len(g.incidence[v]):
                    e = g.incidence[v][ptr]
                    ptr += 1
                    if e not in remaining or e in forest:
                        continue
                    w = g.other_end(e, v)
                    if seen[w]:
                        continue
                    seen[w] = True
                    forest.append(e)
                    stack[-1] = (v, ptr)
                    stack.append((w, 0))
                    moved = True
                    break
                if not moved:
                    stack.pop()
        remaining -= set(forest)
        sub, ids = g.subgraph(forest)
        col = color_forest(sub)
        parts.append({eid: col.colors[pos] for pos, eid in enumerate(ids)})
    return _assemble(g, parts)


# ---------------------------------------------------------------------------
# Cyclic interval split.

def split_cyclic(g: Multigraph, c: EdgeColoring, t: int) -> Decomposition:
    """Two certified parts from a cyclic interval t-coloring with t >= 2*Delta-2."""
    rep = verify(g, c, "cyclic", t=t)
    if not rep.cyclic_interval:
        raise GraphError("coloring is not a cyclic interval coloring")
    if t < 2 * g.max_degree - 2:
        raise GraphError(f"need t >= 2*Delta-2 = {2 * g.max_degree - 2}, got {t}")
    if rep.interval:
        return _assemble(g, [_coloring_as_dict(c)])
    k_star = l_star = 0
    for v in range(g.vertex_count):
        pal = set(c.palette(v))
        if not pal:
            continue
        spal = sorted(pal)
        if all(b == a + 1 for a, b in zip(spal, spal[1:])):
            continue
        k_v = 0
        while k_v + 1 in pal:
            k_v += 1
        l_v = 0
        while t - l_v in pal:
            l_v += 1
        k_star = max(k_star, k_v)
        l_star = max(l_star, l_v)
    if not k_star < t - l_star + 1:
        raise AssertionError("wrap palettes overlap; cyclic precondition violated")
    cut = t - l_star
    low = {e: c.colors[e] for e in range(g.edge_count) if c.colors[e] <= cut}
    high = {e: c.colors[e] - cut for e in range(g.edge_count) if c.colors[e] > cut}
    return _assemble(g, [low, high])

# ---------------------------------------------------------------------------
# Dispatcher.

def detect_complete_multipartite(g: Multigraph) -> list[list[int]] | None:
    """Vertex parts when g is a simple complete multipartite graph, else None."""
    if g.edge_count == 0 or not g.is_simple():
        return None
    adj: list[set[int]] = [set() for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    assigned = [-1] * g.vertex_count
    parts: list[list[int]] = []
    for v in range(g.vertex_count):
        if assigned[v] != -1:
            continue
        part = [v] + [w for w in range(v + 1, g.vertex_count)
                      if assigned[w] == -1 and w not in adj[v]]
        for w in part:
            assigned[w] = len(parts)
        parts.append(part)
    if len(parts) < 2:
        return None
    for u in range(g.vertex_count):
        for w in range(u + 1, g.vertex_count):
            if (assigned[u] == assigned[w]) == (w in adj[u]):
                return None
    return parts


def _remap_parts(host: Multigraph, canon: Decomposition, vmap: list[int]) -> list[dict[int, int]]:
    """Pull a decomposition of an isomorphic canonical graph back onto host edges."""
    host_eid = {(min(u, v), max(u, v)): e for e, (u, v) in enumerate(host.edges)}
    out: list[dict[int, int]] = []
    for p in range(canon.part_count):
        cert = canon.certificates[p]
        _, ids = canon.part_subgraph(p)
        d: dict[int, int] = {}
        for pos, ce in enumerate(ids):
            a, b = canon.graph.edges[ce]
            ha, hb = vmap[a], vmap[b]
            d[host_eid[(min(ha, hb), max(ha, hb))]] = cert.colors[pos]
        out.append(d)
    return out


def _general_coloring(g: Multigraph, cert: BipartitionCert | None) -> EdgeColoring:
    if cert is not None:
        return konig_color(g, cert)
    if g.edge_count <= 20:
        return exact_chromatic_index(g)[1]
    if g.is_simple():
        return vizing_color(g)
    return shannon_color(g)


def _dispatch_componentwise(g: Multigraph, comps: list[list[int]]) -> tuple[Decomposition, BoundTrace]:
    merged: list[dict[int, int]] = []
    worst: BoundTrace | None = None
    for comp in comps:
        sub, ids = g.subgraph(comp)
        d_sub, t_sub = dispatch_theta_upper(sub)
        for p in range(d_sub.part_count):
            cert = d_sub.certificates[p]
            _, sids = d_sub.part_subgraph(p)
            colors = {ids[e]: cert.colors[pos] for pos, e in enumerate(sids)}
            if p < len(merged):
                merged[p].update(colors)
            else:
                merged.append(colors)
        if worst is None or t_sub.parts > worst.parts:
            worst = t_sub
    decomp = _assemble(g, merged)
    assert worst is not None
    trace = BoundTrace("componentwise",
                       f"max over {len(comps)} components: {worst.method} [{worst.bound_formula}]",
                       worst.bound_value, decomp.part_count, True)
    return decomp, trace


def dispatch_theta_upper(g: Multigraph) -> tuple[Decomposition, BoundTrace]:
    """Try every applicable bound in priority order; return the smallest certified
    decomposition with its trace.

    Disconnected graphs are dispatched one component at a time and the parts are
    merged, since interval colorability is decided component by component."""
    if g.edge_count == 0:
        return _assemble(g, []), BoundTrace("empty", "no edges", 0, 0, True)

    comps = _edge_components(g, list(range(g.edge_count)))
    if len(comps) > 1:
        return _dispatch_componentwise(g, comps)

    cert = bipartition(g)
    delta = g.max_degree
    candidates: list[tuple[int, int, Decomposition, BoundTrace]] = []

    def consider(priority: int, method: str, runner) -> None:
        try:
            got = runner()
        except (GraphError, BudgetExceeded, InfeasibleSpec, AssertionError, RecursionError):
            return
        if got is None:
            return
        decomp, bound, formula = got
        if decomp.part_count > bound:
            return
        candidates.append((decomp.part_count, priority,
                           decomp, BoundTrace(method, formula, bound, decomp.part_count, True)))

    def run_forest():
        col = color_forest(g)
        return _assemble(g, [_coloring_as_dict(col)]), 1, "forest: 1"

    def run_subcubic():
        if delta > 3:
            return None
        if cert is not None:
            c3 = konig_color(g, cert)
        elif g.edge_count <= 20:
            chi, c3 = exact_chromatic_index(g)
            if chi > 3:
                return None
        else:
            return None
        col = color_subcubic(g, c3)
        return _assemble(g, [_coloring_as_dict(col)]), 1, "3-colorable subcubic: 1"

    def run_cactus():
        col = color_cactus(g)
        return _assemble(g, [_coloring_as_dict(col)]), 1, "cactus: 1"

    def run_oracle_witness():
        from .oracles import INTERVAL_BUDGET, exact_interval_colorable
        if g.edge_count > INTERVAL_BUDGET:
            return None
        witness = exact_interval_colorable(g)
        if witness is None:
            return None
        return _assemble(g, [_coloring_as_dict(witness)]), 1, "interval witness (exact search): 1"

    def run_low_even():
        if cert is None or delta < 2 or delta % 2:
            return None
        col = color_low_even_bipartite(g)
        return _assemble(g, [_coloring_as_dict(col)]), 1, "degrees {1,2,2r} bipartite: 1"

    def run_eulerian():
        if cert is None or any(g.degree(v) % 2 for v in range(g.vertex_count)):
            return None
        bound = -(-delta // 4)
        return decompose_eulerian_bipartite(g, cert), bound, f"ceil({delta}/4) = {bound}"

    def run_biregular():
        if cert is None:
            return None
        _, _, d0, d1 = _side_degrees(g, cert)
        k = min(d0, d1)
        bound = max(2, k - 2)
        return decompose_biregular(g, cert), bound, f"max(2, {k}-2) = {bound}"

    def run_bipartite():
        if cert is None:
            return None
        bound = max(1, -(-delta // 3))
        return decompose_bipartite(g, cert), bound, f"ceil({delta}/3) = {bound}"

    def run_star_peel():
        if cert is None:
            return None
        bound = min(max((g.degree(v) for v in cert.side_vertices(s)), default=0)
                    for s in (0, 1))
        return decompose_star_peel(g, cert), max(1, bound), f"min-side max degree = {bound}"

    def run_general():
        coloring = _general_coloring(g, cert)
        t = coloring.colors_used()
        bound = 2 * -(-t // 5)
        return decompose_general(g, coloring), bound, f"2*ceil({t}/5) = {bound}"

    def run_forest_peel():
        decomp = decompose_forest_peel(g)
        note = f"forests peeled: {decomp.part_count}"
        if g.vertex_count <= 14 and not g.has_loop():
            from .oracles import nash_williams_arboricity
            gamma = nash_williams_arboricity(g)
            note += f"; exact arboricity {gamma} (gap {decomp.part_count - gamma})"
        return decomp, decomp.part_count, note

    consider(1, "forest", run_forest)
    consider(2, "subcubic", run_subcubic)
    consider(3, "cactus", run_cactus)
    consider(3, "low-even-bipartite", run_low_even)
    consider(3, "interval-oracle", run_oracle_witness)

    parts = detect_complete_multipartite(g)
    if parts is not None:
        sizes = sorted(len(p) for p in parts)
        r = len(parts)

        def run_balanced():
            if len(set(sizes)) != 1:
                return None
            n = sizes[0]
            vmap = [v for part in parts for v in part]
            if n == 1 and r % 2:
                canon = decompose_balanced_family((r - 1) // 2, 0, "odd_complete")
                return (_assemble(g, _remap_parts(g, canon, vmap)), 2,
                        f"odd complete K_{r}: 2")
            if n * r % 2 == 0 and r % 2 and complete_multipartite_graph([n] * r).edge_count > 20:
                return None
            canon = decompose_balanced_family(n, r, "balanced")
            bound = 1 if (n * r) % 2 == 0 else 2
            return (_assemble(g, _remap_parts(g, canon, vmap)), bound,
                    f"balanced K_{{{n}*{r}}}: {'1 (nr even)' if bound == 1 else '2 (nr odd)'}")

        def run_semiregular():
            if r < 3 or len(set(sizes[:-1])) != 1 or sizes[-1] != sizes[0] * (r - 1):
                return None
            n, rr = sizes[0], r - 1
            if n * rr % 2 == 0 and rr % 2 and complete_multipartite_graph([n] * rr).edge_count > 20:
                return None
            canon = decompose_balanced_family(n, rr, "semiregular")
            ordered = sorted(parts, key=len)
            vmap = [v for part in ordered for v in part]
            bound = 1 if (n * rr) % 2 == 0 else 3
            return (_assemble(g, _remap_parts(g, canon, vmap)), bound,
                    f"K_{{{n}*{rr},{n * rr}}}: {bound}")

        def run_multipartite():
            bound = multipartite_part_count(r)
            return (_assemble(g, _multipartite_dicts(g, parts)), bound,
                    f"T({r}) = {bound}")

        consider(4, "balanced-multipartite", run_balanced)
        consider(4, "semiregular-multipartite", run_semiregular)
        consider(5, "complete-multipartite", run_multipartite)

    consider(6, "biregular", run_biregular)
    consider(7, "eulerian-bipartite", run_eulerian)
    consider(8, "bipartite-thirds", run_bipartite)
    consider(9, "star-peel", run_star_peel)
    consider(10, "five-class-general", run_general)
    consider(11, "forest-peel", run_forest_peel)

    if not candidates:
        raise AssertionError("no decomposition method certified")
    best = min(candidates, key=lambda c: (c[0], c[1]))
    return best[2], best[3]


METHOD_RUNNERS = {
    "auto": None,
    "bipartite": decompose_bipartite,
    "eulerian": decompose_eulerian_bipartite,
    "biregular": decompose_biregular,
    "star_peel": decompose_star_peel,
    "forest_peel": decompose_forest_peel,
}


def run_named_method(g: Multigraph, method: str) -> tuple[Decomposition, BoundTrace]:
    """CLI entry: a named decomposer or the automatic dispatcher."""
    if method == "auto":
        return dispatch_theta_upper(g)
    if method == "general":
        coloring = _general_coloring(g, bipartition(g))
        d = decompose_general(g, coloring)
        t = coloring.colors_used()
        return d, BoundTrace("five-class-general", f"2*ceil({t}/5) = {2 * -(-t // 5)}",
                             2 * -(-t // 5), d.part_count, True)
    if method not in METHOD_RUNNERS or METHOD_RUNNERS[method] is None:
        raise GraphError(f"unknown method {method!r}; have {sorted(METHOD_RUNNERS)} and 'general'")
    d = METHOD_RUNNERS[method](g)
    return d, BoundTrace(method, f"parts = {d.part_count}", d.part_count, d.part_count, True)
