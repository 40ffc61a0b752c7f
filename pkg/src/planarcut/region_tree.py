"""Nesting tree of basis cycles over the faces of an embedded graph.

Nodes are the graph's faces plus one node per inserted cycle (a region).
Initially the tree is a star: a root region holding every face.  Each
insertion replaces one region by two, partitioning its children between the
inside and the outside of the new cycle.  The partition is discovered by two
breadth-first searches seeded on the two sides of the cycle and run in
lockstep, so only the smaller side's area is traversed and relocated; which
side is the enclosed one is settled by a crossing-parity walk on a static
dual spanning tree.

Ancestry queries (lca, jump, descendant tests) run on a link-cut forest and
drive the edge classification rules: an edge's home region is the lca of its
two adjacent faces, and an edge lies on a region's bounding cycle exactly when
that region separates the edge's faces.
"""

from __future__ import annotations

from collections import deque

from .dynamic_tree import DynamicTree
from .errors import (InductionViolated, InternalAssertion, NotSeparating,
                     UnknownEdge)
from .planar_core import PlanarEmbedding
from .weights import TieBreakWeight

SRC_GRAPH = "graph-edge"
SRC_CYCLE = "cycle-edge"
SRC_INT = "int-ddg"
SRC_EXT = "ext-ddg"


class SuperEdge:
    """A path compressed to one arc: endpoints, weight and end darts."""

    __slots__ = ("u", "v", "weight", "nedges", "first_dart", "last_dart",
                 "min_interior", "source", "_darts")

    def __init__(self, u, v, weight, nedges, first_dart, last_dart,
                 min_interior, source, darts):
        self.u = u
        self.v = v
        self.weight = weight
        self.nedges = nedges
        self.first_dart = first_dart
        self.last_dart = last_dart
        self.min_interior = min_interior
        self.source = source
        self._darts = tuple(darts)

    def darts(self) -> tuple:
        return self._darts

    @classmethod
    def of_dart(cls, g: PlanarEmbedding, d: int, source=SRC_GRAPH) -> "SuperEdge":
        return cls(g.tail(d), g.head[d], g.weights[d >> 1], 1, d, d,
                   None, source, (d,))


class CompactCycle:
    """Closed chain of super edges; expands to an explicit dart sequence."""

    __slots__ = ("edges", "weight", "nedges", "_darts", "_edge_ids")

    def __init__(self, edges: list[SuperEdge]):
        if not edges:
            raise InternalAssertion("empty cycle")
        w = TieBreakWeight.zero()
        n = 0
        prev = edges[-1].v
        for se in edges:
            if se.u != prev:
                raise InternalAssertion("cycle super edges do not chain")
            prev = se.v
            w = w + se.weight
            n += se.nedges
        self.edges = edges
        self.weight = w
        self.nedges = n
        self._darts = None
        self._edge_ids = None

    @classmethod
    def from_darts(cls, g: PlanarEmbedding, darts, source=SRC_GRAPH) -> "CompactCycle":
        return cls([SuperEdge.of_dart(g, d, source) for d in darts])

    def darts(self) -> tuple:
        if self._darts is None:
            out = []
            for se in self.edges:
                out.extend(se.darts())
            self._darts = tuple(out)
        return self._darts

    def edge_ids(self) -> frozenset:
        if self._edge_ids is None:
            self._edge_ids = frozenset(d >> 1 for d in self.darts())
        return self._edge_ids

    def vertices(self, g: PlanarEmbedding) -> list:
        return [g.head[d] for d in self.darts()]

    def __len__(self) -> int:
        return self.nedges


class RegionTree:
    """Region nesting forest over the faces of `g`."""

    def __init__(self, g: PlanarEmbedding):
        self.g = g
        self.n_faces = len(g.faces)
        self.root = self.n_faces
        self._next_region = self.n_faces + 1
        self.dt = DynamicTree()
        self.children: dict[int, set[int]] = {self.root: set()}
        self.face_child_count: dict[int, int] = {self.root: self.n_faces}
        self.cycles: dict[int, CompactCycle | None] = {}
        self.cycle_edge_sets: dict[int, frozenset] = {}
        self.stats = {"inserts": 0, "relocations": 0, "search_edges": 0}

        self.dt.add_node(self.root)
        for f in range(self.n_faces):
            self.dt.add_node(f)
            self.dt.link(f, self.root)
            self.children[self.root].add(f)

        root_cycle = None
        ring = g.meta.get("bounding_cycle_edges")
        if ring:
            darts = _orient_edge_cycle(g, ring)
            root_cycle = CompactCycle.from_darts(g, darts, SRC_CYCLE)
        self.cycles[self.root] = root_cycle
        self.cycle_edge_sets[self.root] = (root_cycle.edge_ids()
                                           if root_cycle else frozenset())

        # static dual spanning tree for enclosure parity walks
        par_face = [-2] * self.n_faces
        par_edge = [-1] * self.n_faces
        par_face[g.infinite_face] = -1
        q = deque([g.infinite_face])
        while q:
            fid = q.popleft()
            for d in g.faces[fid]:
                nf = g.face_of[d ^ 1]
                if par_face[nf] == -2:
                    par_face[nf] = fid
                    par_edge[nf] = d >> 1
                    q.append(nf)
        if any(p == -2 for p in par_face):
            raise InternalAssertion("dual graph is not connected")
        self._dual_parent = par_face
        self._dual_edge = par_edge

    # -- queries ----------------------------------------------------------------

    def is_region(self, node: int) -> bool:
        return node >= self.n_faces

    def parent(self, node: int):
        return self.dt.parent_of(node)

    def lca(self, a: int, b: int) -> int:
        return self.dt.lca(a, b)

    def jump_child(self, region: int, node: int) -> int:
        """Child of `region` on the path toward descendant `node`."""
        return self.dt.jump(region, node, 1)

    def is_descendant(self, anc: int, node: int) -> bool:
        return self.dt.is_descendant(anc, node)

    def edge_home_region(self, e: int) -> int:
        if not 0 <= e < self.g.m:
            raise UnknownEdge(f"edge {e}")
        f1 = self.g.face_of[2 * e]
        f2 = self.g.face_of[2 * e + 1]
        if f1 == f2:
            return self.parent(f1)
        return self.lca(f1, f2)

    def is_boundary_edge(self, e: int, region: int) -> bool:
        f1 = self.g.face_of[2 * e]
        f2 = self.g.face_of[2 * e + 1]
        home = self.lca(f1, f2) if f1 != f2 else self.parent(f1)
        if home == region or not self.is_descendant(home, region):
            return False
        return self.is_descendant(region, f1) != self.is_descendant(region, f2)

    def enclosed_parity(self, face: int, cycle_edges: frozenset) -> bool:
        """True iff `face` is enclosed by the cycle with the given edge set."""
        parity = False
        f = face
        while self._dual_parent[f] >= 0:
            if self._dual_edge[f] in cycle_edges:
                parity = not parity
            f = self._dual_parent[f]
        return parity

    def unseparated_faces(self, region: int) -> list[int]:
        return [c for c in self.children[region] if not self.is_region(c)]

    def complete(self) -> bool:
        return all(self.face_child_count[r] == 1 for r in self.children)

    # -- edge usability inside a region ------------------------------------------

    def edge_in_region(self, e: int, region: int) -> bool:
        """Whether e belongs to the region's closed graph (interior edges,
        child bounding cycles, or the region's own bounding cycle)."""
        f1 = self.g.face_of[2 * e]
        f2 = self.g.face_of[2 * e + 1]
        d1 = self.is_descendant(region, f1)
        d2 = self.is_descendant(region, f2)
        if d1 != d2:
            return True
        if not d1:
            return False
        return (self.lca(f1, f2) if f1 != f2 else self.parent(f1)) == region

    # -- insertion ----------------------------------------------------------------

    def insert_cycle(self, cycle: CompactCycle, region: int,
                     pair: tuple[int, int]) -> tuple[int, int]:
        """Split `region` along `cycle`, which must separate the face pair.

        Returns (inside region id, outside region id).  The smaller child set
        is relocated; the region node itself stays for the larger side.
        """
        g = self.g
        darts = cycle.darts()
        edges_c = cycle.edge_ids()
        f, gface = pair
        if not (self.is_descendant(region, f) and self.is_descendant(region, gface)):
            raise NotSeparating("pair does not live under the region")

        side_darts = self._side_third_darts(darts)
        got = self._lockstep_search(region, edges_c, side_darts)
        small_side, members, witness_faces = got

        if witness_faces:
            inside = self.enclosed_parity(witness_faces[0], edges_c)
        else:
            # no witnesses can only happen when a side saw no usable edges at
            # all; classify by a face adjacent to the cycle on that side
            flank = self._cycle_flank_faces(darts, small_side)
            if not flank:
                raise InternalAssertion("cycle side has no adjacent faces")
            inside = self.enclosed_parity(flank[0], edges_c)
            members = {self.jump_child(region, x) for x in flank
                       if self.is_descendant(region, x)}

        # move `members` under a fresh region node
        new_region = self._next_region
        self._next_region += 1
        self.dt.add_node(new_region)
        self.children[new_region] = set()
        self.face_child_count[new_region] = 0

        moved_faces = 0
        for node in members:
            self.dt.cut(node)
            self.children[region].discard(node)
            self.dt.link(node, new_region)
            self.children[new_region].add(node)
            if not self.is_region(node):
                moved_faces += 1
        self.face_child_count[region] -= moved_faces
        self.face_child_count[new_region] = moved_faces
        self.stats["relocations"] += len(members)
        self.stats["inserts"] += 1

        if inside:
            # relocated members are enclosed by the cycle: new region gets C,
            # hangs under the old one
            self.dt.link(new_region, region)
            self.children[region].add(new_region)
            self.cycles[new_region] = cycle
            self.cycle_edge_sets[new_region] = edges_c
            r_in, r_out = new_region, region
        else:
            # relocated members are outside: the new region takes the old
            # bounding cycle and the old node shrinks to the inside of C
            parent = self.parent(region)
            if parent is not None:
                self.dt.cut(region)
                self.children[parent].discard(region)
                self.dt.link(new_region, parent)
                self.children[parent].add(new_region)
            self.dt.link(region, new_region)
            self.children[new_region].add(region)
            self.cycles[new_region] = self.cycles[region]
            self.cycle_edge_sets[new_region] = self.cycle_edge_sets[region]
            if region == self.root:
                self.root = new_region
            self.cycles[region] = cycle
            self.cycle_edge_sets[region] = edges_c
            r_in, r_out = region, new_region

        if self.is_descendant(r_in, f) == self.is_descendant(r_in, gface):
            raise NotSeparating("inserted cycle did not separate the pair")
        if not self.children[r_in] or not self.children[r_out]:
            raise InternalAssertion("cycle insertion emptied a region")
        return r_in, r_out

    # -- internals ----------------------------------------------------------------

    def _side_third_darts(self, darts) -> tuple[list[int], list[int]]:
        """Non-cycle darts leaving cycle vertices, split by geometric side.

        Side 0 holds the darts swept clockwise from the outgoing cycle dart
        up to the incoming one; with clockwise rotations that is the side
        whose flank faces are face_of[d ^ 1] (see _cycle_flank_faces).
        """
        g = self.g
        side_a: list[int] = []
        side_b: list[int] = []
        k = len(darts)
        for i in range(k):
            d_in = darts[i]
            d_out = darts[(i + 1) % k]
            v = g.head[d_in]
            rot = g.out[v]
            deg = len(rot)
            p_out = g.slot_of[d_out]
            p_in = g.slot_of[d_in ^ 1]
            j = (p_out + 1) % deg
            side = side_a
            while j != p_out:
                d = rot[j]
                if j == p_in:
                    side = side_b
                elif d != d_out and d != (d_in ^ 1):
                    side.append(d)
                j = (j + 1) % deg
        return side_a, side_b

    def _lockstep_search(self, region: int, edges_c: frozenset,
                         side_darts) -> tuple[int, set, list]:
        g = self.g
        fronts = [deque(side_darts[0]), deque(side_darts[1])]
        seen: list[set] = [set(), set()]
        witness: list[list] = [[], []]
        members: list[set] = [set(), set()]
        active = [True, True]
        small = None
        while small is None:
            for s in (0, 1):
                if not active[s]:
                    continue
                advanced = False
                while fronts[s]:
                    d = fronts[s].popleft()
                    e = d >> 1
                    if e in seen[s] or e in edges_c:
                        continue
                    if e in seen[1 - s]:
                        raise InternalAssertion("cycle sides leaked into each other")
                    if not self.edge_in_region(e, region):
                        continue
                    seen[s].add(e)
                    self.stats["search_edges"] += 1
                    for fid in (g.face_of[2 * e], g.face_of[2 * e + 1]):
                        if self.is_descendant(region, fid):
                            if len(witness[s]) < 4:
                                witness[s].append(fid)
                            members[s].add(self.jump_child(region, fid))
                    for x in g.endpoints(e):
                        fronts[s].extend(g.out[x])
                    advanced = True
                    break
                if not advanced:
                    active[s] = False
                    small = s
                    break
        return small, members[small], witness[small]

    def _cycle_flank_faces(self, darts, side: int) -> list[int]:
        """Faces adjacent to the cycle on one side (0: right of darts).

        With clockwise rotations the face corner immediately clockwise of an
        outgoing dart belongs to the face of its reversal, so the right flank
        of dart d is face_of[d ^ 1].
        """
        g = self.g
        out = []
        for d in darts:
            fid = g.face_of[d ^ 1] if side == 0 else g.face_of[d]
            out.append(fid)
        # dedupe, keep deterministic order
        seen = set()
        uniq = []
        for fid in out:
            if fid not in seen:
                seen.add(fid)
                uniq.append(fid)
        return uniq


def _orient_edge_cycle(g: PlanarEmbedding, edge_ids) -> list[int]:
    """Chain a set of edges forming a simple cycle into a dart sequence."""
    edges = list(edge_ids)
    incident: dict[int, list[int]] = {}
    for e in edges:
        u, v = g.endpoints(e)
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)
    if any(len(v) != 2 for v in incident.values()):
        raise InternalAssertion("edge set is not a simple cycle")
    e0 = edges[0]
    darts = [2 * e0]
    used = {e0}
    cur = g.head[2 * e0]
    while len(used) < len(edges):
        nxt = None
        for e in incident[cur]:
            if e not in used:
                nxt = e
                break
        if nxt is None:
            raise InternalAssertion("edge set is not a simple cycle")
        d = 2 * nxt if g.tail(2 * nxt) == cur else 2 * nxt + 1
        if g.tail(d) != cur:
            raise InternalAssertion("edge set is not a simple cycle")
        darts.append(d)
        used.add(nxt)
        cur = g.head[d]
    if cur != g.tail(darts[0]):
        raise InternalAssertion("edge set does not close into a cycle")
    return darts


# -- piece-level helpers -------------------------------------------------------

def regions_with_unseparated_pair(tree: RegionTree,
                                  side_edges: tuple) -> dict[int, tuple[int, int]]:
    """Regions holding an unseparated face pair touching both edge groups.

    `side_edges` is a pair of edge-id iterables (the two halves of the group
    being merged).  A face touches a side when one of that side's edges
    borders it.  Each region may hold at most one face per side; more is an
    induction failure.
    """
    g = tree.g
    touch: dict[int, dict[int, int]] = {}
    for side, edges in enumerate(side_edges):
        for e in edges:
            for fid in (g.face_of[2 * e], g.face_of[2 * e + 1]):
                r = tree.parent(fid)
                per = touch.setdefault(r, {})
                mask = per.get(fid, 0)
                per[fid] = mask | (1 << side)
    out: dict[int, tuple[int, int]] = {}
    for r, per in sorted(touch.items()):
        if len(per) < 2:
            continue
        if len(per) > 2:
            raise InductionViolated(
                f"region {r} holds {len(per)} unseparated faces in one group")
        (fa, ma), (fb, mb) = sorted(per.items())
        if (ma | mb) != 3:
            raise InductionViolated(
                f"region {r} pair does not straddle the group halves")
        out[r] = (fa, fb)
    return out


def region_subpiece(tree: RegionTree, region: int,
                    group_edges: set) -> tuple[set, list]:
    """Edges of the region subpiece: interior edges of the region inside the
    group plus the group's runs of the region's bounding cycle."""
    internal = set()
    for e in sorted(group_edges):
        if tree.edge_home_region(e) == region:
            internal.add(e)
    cyc = tree.cycles.get(region)
    runs: list[list[int]] = []
    if cyc is not None:
        darts = cyc.darts()
        run: list[int] = []
        for d in darts:
            if (d >> 1) in group_edges:
                run.append(d)
            elif run:
                runs.append(run)
                run = []
        if run:
            if runs and darts[0] >> 1 in group_edges and runs[0][0] == darts[0]:
                runs[0] = run + runs[0]
            else:
                runs.append(run)
    return internal, runs
