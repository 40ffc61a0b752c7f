"""Minimum cycles separating two faces, found as shortest paths after
cutting the host open along a face-to-face path.

A minimum-weight cycle separating faces f and g must cross any shortest
path X between the two face boundaries, and with lexicographic weights the
crossing is unique.  Cutting the host open along X (each path vertex split
into a side-0 and a side-1 copy) turns every once-crossing cycle through a
path vertex x into a simple path from (x, 0) to (x, 1).  The minimum over
all crossing vertices is the wanted cycle.

Two engines share this machinery.  The safe engine searches the full edge
set of a region and is quadratic per call.  The fast engine searches one
subdivision piece plus precomputed distance-table arcs for everything
outside it; arcs whose hidden path touches X are expanded into their real
edges so that crossings inside them stay visible.  Both return the same
cycle in canonical dart form.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .ddg import entry_hop, hop_interior
from .errors import InternalAssertion, NoPath
from .planar_core import PlanarEmbedding
from .region_tree import (SRC_CYCLE, SRC_EXT, SRC_GRAPH, SRC_INT,
                          CompactCycle, RegionTree, SuperEdge,
                          region_subpiece)
from .weights import Hop, PathChain, compare_chains, dart_hop, lex_dijkstra


class FallbackNeeded(Exception):
    """The table-backed engine cannot serve this request; the caller should
    redo it with the whole-region engine."""


def new_stats() -> dict:
    return {"dijkstras": 0, "candidates": 0, "expanded_arcs": 0,
            "compact_arcs": 0, "external_candidates": 0}


# ---------------------------------------------------------------------------
# cutting open along a path


def _corner_position(g: PlanarEmbedding, v: int, face: int) -> float:
    """Fractional rotation slot of the corner of `face` at vertex `v`.

    The corner between out-darts rot[p] and rot[p + 1] belongs to the face
    left of rot[p], so it sits at position p + 0.5.
    """
    rot = g.out[v]
    for p, d in enumerate(rot):
        if g.face_of[d ^ 1] == face:
            return p + 0.5
    raise InternalAssertion(f"face {face} has no corner at vertex {v}")


class XCut:
    """A simple face-to-face path with every vertex split into two sides.

    Side 0 of a path vertex is the clockwise interval of its rotation from
    the exit dart to the entry dart.  At the two path endpoints the entry
    and exit positions are the corners of the separated faces, placed at
    fractional slots, so cycles passing through an endpoint are still split
    on the correct side.  A zero-length path (the faces share a vertex) is
    allowed and yields a single split vertex.
    """

    __slots__ = ("g", "darts", "edges", "order", "vset", "_pos")

    def __init__(self, g: PlanarEmbedding, darts, start: int,
                 face_a: int, face_b: int):
        self.g = g
        self.darts = list(darts)
        self.edges = frozenset(d >> 1 for d in self.darts)
        order = [start]
        for d in self.darts:
            if g.head[d ^ 1] != order[-1]:
                raise InternalAssertion("cut path darts do not chain")
            order.append(g.head[d])
        if len(set(order)) != len(order):
            raise InternalAssertion("cut path revisits a vertex")
        self.order = order
        self.vset = frozenset(order)
        last = len(order) - 1
        pos = {}
        for i, v in enumerate(order):
            if i == 0:
                q_in = _corner_position(g, v, face_a)
            else:
                q_in = float(g.slot_of[self.darts[i - 1] ^ 1])
            if i == last:
                q_out = _corner_position(g, v, face_b)
            else:
                q_out = float(g.slot_of[self.darts[i]])
            if q_in == q_out:
                raise InternalAssertion("degenerate cut corner")
            pos[v] = (q_in, q_out)
        self._pos = pos

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def side_of(self, v: int, d: int) -> int:
        """Side of dart `d` leaving path vertex `v` (0 for the clockwise
        interval from the exit dart to the entry dart)."""
        q_in, q_out = self._pos[v]
        s = self.g.slot_of[d]
        if s == q_in or s == q_out:
            raise InternalAssertion("side query for a cut path dart")
        if q_out < q_in:
            return 0 if q_out < s < q_in else 1
        return 0 if (s > q_out or s < q_in) else 1


def _cut_node(xcut: XCut, v: int, d: int):
    """Universe node for vertex `v` entered or left through dart `d`
    (with tail(d) == v)."""
    if v in xcut:
        return (v, xcut.side_of(v, d))
    return v


def _node_index(node) -> int:
    return node[0] if type(node) is tuple else node


class CutUniverse:
    """Adjacency oracle over the cut-open search graph.

    Nodes are host vertices, except cut path vertices which appear as
    (v, side) copies.  Real edges are traversed dart by dart; darts leaving
    a copy must lie on its side, and cut path edges connect equal-side
    copies.  Compact table arcs attach to the copies matching their end
    darts and are expanded only during tie-breaking and final readout.
    """

    __slots__ = ("g", "xcut", "real", "arcs", "_adj")

    def __init__(self, g: PlanarEmbedding, xcut: XCut, real_edges):
        self.g = g
        self.xcut = xcut
        self.real = set(real_edges)
        self.arcs = {}
        self._adj = {}

    def add_real(self, edges) -> None:
        self.real.update(edges)
        self._adj.clear()

    def add_arc(self, entry) -> None:
        src = _cut_node(self.xcut, entry.src, entry.first_dart)
        dst = _cut_node(self.xcut, entry.dst, entry.last_dart ^ 1)
        hop = Hop(dst, entry.weight, entry.nedges, entry.interior_min,
                  entry.first_dart, entry.last_dart,
                  expander=_expand_entry, payload=entry)
        self.arcs.setdefault(src, []).append(hop)
        self._adj.pop(src, None)

    def has_vertex(self, v: int) -> bool:
        for d in self.g.out[v]:
            if (d >> 1) in self.real:
                return True
        for node in ((v, 0), (v, 1), v):
            if node in self.arcs:
                return True
        return False

    def adjacency(self, node):
        rows = self._adj.get(node)
        if rows is None:
            rows = self._build(node)
            self._adj[node] = rows
        return rows

    def _build(self, node) -> list:
        g = self.g
        x = self.xcut
        if type(node) is tuple:
            v, side = node
        else:
            v, side = node, None
        rows = []
        for d in g.out[v]:
            e = d >> 1
            if e not in self.real:
                continue
            w = g.head[d]
            if e in x.edges:
                # an edge of the cut path survives once per side
                if side is None:
                    raise InternalAssertion("plain node incident to cut path")
                rows.append(dart_hop((w, side), d, g.weights[e]))
                continue
            if side is not None and x.side_of(v, d) != side:
                continue
            rows.append(dart_hop(_cut_node(x, w, d ^ 1), d, g.weights[e]))
        rows.extend(self.arcs.get(node, ()))
        return rows


def _expand_entry(hop: Hop):
    return hop.payload.darts()


# ---------------------------------------------------------------------------
# candidate cycles and their total order


class _Candidate:
    __slots__ = ("weight", "nedges", "darts", "vset", "eset", "_canon")

    def __init__(self, g: PlanarEmbedding, weight, darts):
        self.weight = weight
        self.nedges = len(darts)
        self.darts = list(darts)
        self.vset = frozenset(g.head[d] for d in darts)
        self.eset = frozenset(d >> 1 for d in darts)
        self._canon = None

    def canon(self) -> tuple:
        """Smallest dart tuple over both orientations and all rotations."""
        if self._canon is None:
            best = None
            for seq in (self.darts,
                        [d ^ 1 for d in reversed(self.darts)]):
                lo = min(seq)
                for i, d in enumerate(seq):
                    if d != lo:
                        continue
                    rot = tuple(seq[i:]) + tuple(seq[:i])
                    if best is None or rot < best:
                        best = rot
            self._canon = best
        return self._canon


def _candidate_beats(a: _Candidate, b: _Candidate) -> bool:
    """Same tie-break ladder as path comparison: weight, edge count, then
    the smaller uncommon vertex index, the smaller uncommon edge id, and
    finally the canonical dart tuple."""
    if a.weight != b.weight:
        return a.weight < b.weight
    if a.nedges != b.nedges:
        return a.nedges < b.nedges
    if a.vset != b.vset:
        return min(a.vset ^ b.vset) in a.vset
    if a.eset != b.eset:
        return min(a.eset ^ b.eset) in a.eset
    return a.canon() < b.canon()


def _consider(g, best: _Candidate | None, chain: PathChain,
              extra_weight=None, extra_darts=()) -> _Candidate | None:
    darts = list(chain.darts()) + list(extra_darts)
    weight = chain.weight if extra_weight is None else chain.weight + extra_weight
    cand = _Candidate(g, weight, darts)
    # a closed walk that reuses an edge decomposes into the simple winner
    # plus nonnegative slack, so it can be dropped outright
    if len(cand.eset) != cand.nedges:
        return best
    heads = [g.head[d] for d in darts]
    if len(set(heads)) != len(heads):
        return best
    if best is None or _candidate_beats(cand, best):
        return cand
    return best


def _crossing_sweep(universe: CutUniverse, xverts, stats: dict,
                    best: _Candidate | None = None) -> _Candidate | None:
    """One shortest-path run per crossing vertex, from its side-0 copy to
    its side-1 copy.  Returns the best simple cycle found."""
    g = universe.g
    for x in xverts:
        res = lex_dijkstra(universe.adjacency, [(x, 0)], _node_index,
                           hop_interior, targets=[(x, 1)])
        stats["dijkstras"] += 1
        chain = res.get((x, 1))
        if chain is None or chain.nedges == 0:
            continue
        stats["candidates"] += 1
        best = _consider(g, best, chain)
    return best


# ---------------------------------------------------------------------------
# shared path search helpers


def _face_seed_vertices(g: PlanarEmbedding, face: int, edges) -> list:
    seeds = set()
    for d in g.faces[face]:
        if (d >> 1) in edges:
            seeds.add(g.head[d])
            seeds.add(g.head[d ^ 1])
    return sorted(seeds)


def _best_target_chain(res: dict, targets) -> PathChain | None:
    best = None
    for t in targets:
        chain = res.get(t)
        if chain is None:
            continue
        if best is None or compare_chains(chain, best, _node_index,
                                          hop_interior) < 0:
            best = chain
    return best


def _compact_from_darts(g: PlanarEmbedding, darts,
                        classify: Callable[[int], str]) -> CompactCycle:
    """Group a dart cycle into maximal same-origin runs of super edges."""
    runs = []
    for d in darts:
        tag = classify(d >> 1)
        if runs and runs[-1][0] == tag:
            runs[-1][1].append(d)
        else:
            runs.append((tag, [d]))
    # the seam stays split even when both ends share a tag, so the dart
    # order of the canonical rotation is preserved
    edges = []
    for tag, run in runs:
        weight = g.weights[run[0] >> 1]
        for d in run[1:]:
            weight = weight + g.weights[d >> 1]
        interior = [g.head[d] for d in run[:-1]]
        edges.append(SuperEdge(g.head[run[0] ^ 1], g.head[run[-1]], weight,
                               len(run), run[0], run[-1],
                               min(interior) if interior else None, tag, run))
    return CompactCycle(edges)


# ---------------------------------------------------------------------------
# safe engine: search the whole region


def min_separating_cycle_safe(g: PlanarEmbedding, tree: RegionTree,
                              region: int, face_a: int, face_b: int,
                              stats: dict | None = None) -> CompactCycle:
    """Minimum cycle separating two faces of one region, searching every
    region edge.  Independent of the subdivision and distance tables."""
    if stats is None:
        stats = new_stats()
    edges = {e for e in range(g.m) if tree.edge_in_region(e, region)}

    adj: dict = {}
    for e in sorted(edges):
        for d in (2 * e, 2 * e + 1):
            adj.setdefault(g.head[d ^ 1], []).append(
                dart_hop(g.head[d], d, g.weights[e]))
    seeds = _face_seed_vertices(g, face_a, edges)
    targets = _face_seed_vertices(g, face_b, edges)
    if not seeds or not targets:
        raise InternalAssertion("separated faces have no region edges")

    res = lex_dijkstra(lambda v: adj.get(v, ()), seeds, targets=targets)
    stats["dijkstras"] += 1
    chain = _best_target_chain(res, targets)
    if chain is None:
        raise NoPath(f"faces {face_a} and {face_b} not connected in region")

    xcut = XCut(g, chain.darts(), chain.nodes()[0], face_a, face_b)
    universe = CutUniverse(g, xcut, edges)
    best = _crossing_sweep(universe, xcut.order, stats)
    if best is None:
        raise NoPath(f"no cycle separates faces {face_a} and {face_b}")

    cyc = tree.cycle_edge_sets.get(region) or frozenset()
    return _compact_from_darts(
        g, best.canon(),
        lambda e: SRC_CYCLE if e in cyc else SRC_GRAPH)


# ---------------------------------------------------------------------------
# fast engine: one piece of the subdivision plus distance-table arcs


class PieceContext:
    """Search context for separating-pair queries against one edge group of
    one subdivision piece.

    The group is the union of the piece children currently being merged (or
    the piece's own edges at the leaf level).  Siblings are the children
    outside the group; their interiors are represented by their internal
    distance tables, and everything outside the piece by the piece's
    external table.
    """

    def __init__(self, g: PlanarEmbedding, tree: RegionTree, sd, ddgs,
                 piece_id: int, group_edges, sibling_ids=()):
        self.g = g
        self.tree = tree
        self.piece_id = piece_id
        self.group_edges = frozenset(group_edges)
        self.sibling_ids = list(sibling_ids)
        self.sib_edges = [frozenset(sd.pieces[c].edges)
                          for c in self.sibling_ids]
        self.sib_tables = [ddgs.int_tables[c] for c in self.sibling_ids]
        self.ext_table = ddgs.ext_tables[piece_id]
        self.edge_sibling = {}
        for i, edges in enumerate(self.sib_edges):
            for e in edges:
                self.edge_sibling.setdefault(e, i)


def _arc_touches_cut(entry, xcut: XCut) -> bool:
    """True when the arc's hidden path shares an edge end or an interior
    vertex with the cut path, so side bookkeeping inside it matters."""
    if (entry.first_dart >> 1) in xcut.edges:
        return True
    if (entry.last_dart >> 1) in xcut.edges:
        return True
    return not xcut.vset.isdisjoint(entry.interior_vertices())


def _group_path_adjacency(ctx: PieceContext, real_edges) -> dict:
    """Plain-vertex adjacency for the X search: the group's real darts plus
    compact arcs over the sibling interiors and the piece exterior."""
    g = ctx.g
    adj: dict = {}
    for e in sorted(real_edges):
        for d in (2 * e, 2 * e + 1):
            adj.setdefault(g.head[d ^ 1], []).append(
                dart_hop(g.head[d], d, g.weights[e]))
    for table in list(ctx.sib_tables) + [ctx.ext_table]:
        for entry in table.values():
            adj.setdefault(entry.src, []).append(entry_hop(entry))
    return adj


def min_separating_cycle_fast(ctx: PieceContext, region: int,
                              face_a: int, face_b: int,
                              external_route: bool = False,
                              stats: dict | None = None) -> CompactCycle:
    """Minimum cycle separating two faces of `region`, searching the
    region's subpiece directly and everything else through table arcs.

    With `external_route` the arcs leaving the piece are never expanded:
    arcs whose endpoints fall in different pockets of the cut complement
    become cycle closers instead.  Both routes return the same cycle.
    """
    g = ctx.g
    tree = ctx.tree
    if stats is None:
        stats = new_stats()

    internal, runs = region_subpiece(tree, region, ctx.group_edges)
    real = set(internal)
    cyc_edges = set()
    for run in runs:
        for d in run:
            real.add(d >> 1)
            cyc_edges.add(d >> 1)

    seeds = _face_seed_vertices(g, face_a, real)
    targets = _face_seed_vertices(g, face_b, real)
    if not seeds or not targets:
        raise FallbackNeeded("pair faces have no edges in the group")
    adj = _group_path_adjacency(ctx, real)
    res = lex_dijkstra(lambda v: adj.get(v, ()), seeds,
                       expand_interior=hop_interior, targets=targets)
    stats["dijkstras"] += 1
    chain = _best_target_chain(res, targets)
    if chain is None:
        raise FallbackNeeded("face boundaries not connected through tables")

    xdarts = list(chain.darts())
    xcut = XCut(g, xdarts, chain.nodes()[0], face_a, face_b)
    universe = CutUniverse(g, xcut, real)

    # sibling pieces entered by X contribute their real edges; their tables
    # would hide the crossings
    touched = {ctx.edge_sibling[d >> 1] for d in xdarts
               if (d >> 1) in ctx.edge_sibling}
    for i in touched:
        universe.add_real(ctx.sib_edges[i])
    for i, table in enumerate(ctx.sib_tables):
        if i in touched:
            continue
        for entry in table.values():
            if _arc_touches_cut(entry, xcut):
                universe.add_real(d >> 1 for d in entry.darts())
                stats["expanded_arcs"] += 1
            else:
                universe.add_arc(entry)
                stats["compact_arcs"] += 1

    closers = []
    labels = None
    if external_route:
        labels = parenthesis_labels(g, xcut, _piece_edge_set(ctx))
    for entry in ctx.ext_table.values():
        if external_route:
            src = _cut_node(xcut, entry.src, entry.first_dart)
            dst = _cut_node(xcut, entry.dst, entry.last_dart ^ 1)
            if labels.get(src) != labels.get(dst):
                closers.append((entry, src, dst))
                continue
            if _arc_touches_cut(entry, xcut):
                universe.add_real(d >> 1 for d in entry.darts())
                stats["expanded_arcs"] += 1
            else:
                universe.add_arc(entry)
                stats["compact_arcs"] += 1
        elif _arc_touches_cut(entry, xcut):
            universe.add_real(d >> 1 for d in entry.darts())
            stats["expanded_arcs"] += 1
        else:
            universe.add_arc(entry)
            stats["compact_arcs"] += 1

    xverts = [v for v in xcut.order if universe.has_vertex(v)]
    best = _crossing_sweep(universe, xverts, stats)

    for entry, src, dst in closers:
        # close the arc with the best non-crossing path inside the universe
        res = lex_dijkstra(universe.adjacency, [dst], _node_index,
                           hop_interior, targets=[src])
        stats["dijkstras"] += 1
        stats["external_candidates"] += 1
        back = res.get(src)
        if back is None:
            continue
        best = _consider(g, best, back, entry.weight, entry.darts())

    if best is None:
        raise FallbackNeeded("no separating cycle in the table universe")

    def classify(e: int) -> str:
        if e in cyc_edges:
            return SRC_CYCLE
        if e in real or e in ctx.group_edges:
            return SRC_GRAPH
        if e in ctx.edge_sibling:
            return SRC_INT
        return SRC_EXT

    return _compact_from_darts(g, best.canon(), classify)


def _piece_edge_set(ctx: PieceContext) -> frozenset:
    inside = set(ctx.group_edges)
    for edges in ctx.sib_edges:
        inside.update(edges)
    return frozenset(inside)


# ---------------------------------------------------------------------------
# pockets of the cut complement


def parenthesis_labels(g: PlanarEmbedding, xcut: XCut,
                       inside_edges) -> dict:
    """Connectivity labels of the piece complement after cutting along X.

    Two cut-world nodes share a label exactly when a path over edges
    outside `inside_edges` connects them without crossing the cut path.
    An arc between different labels must cross X, one with equal labels
    cannot; this is what classifies external arcs into universe arcs and
    cycle closers.
    """
    outside = [e for e in range(g.m) if e not in inside_edges]
    universe = CutUniverse(g, xcut, outside)
    nodes = set()
    for e in outside:
        if e in xcut.edges:
            u, v = g.head[2 * e + 1], g.head[2 * e]
            for side in (0, 1):
                nodes.add((u, side))
                nodes.add((v, side))
            continue
        for d in (2 * e, 2 * e + 1):
            nodes.add(_cut_node(xcut, g.head[d ^ 1], d))
    labels: dict = {}
    for start in sorted(nodes, key=lambda n: (_node_index(n),
                                              n[1] if type(n) is tuple else -1)):
        if start in labels:
            continue
        tag = len(labels)
        stack = [start]
        labels[start] = tag
        while stack:
            node = stack.pop()
            for hop in universe.adjacency(node):
                if hop.head not in labels:
                    labels[hop.head] = tag
                    stack.append(hop.head)
    return labels
