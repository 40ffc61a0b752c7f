"""End-to-end min-cut oracle: preprocess a planar graph into a complete
region tree, extract the Gomory-Hu tree, and answer queries.

Cut mode works on the dual (cycles separating dual faces are cuts of the
input); mcb mode runs the same machinery on the graph itself and returns
the minimum cycle basis.  The pipeline is

    input -> [dual] -> subdivide-to-simple -> triangulate finite faces ->
    bounding cycle -> degree-3 expansion = host

followed by the recursive subdivision, dense distance tables, and the
level loop that inserts one separating cycle per unseparated face pair,
deepest pieces first.  The complete region tree contracts to the Gomory-Hu
tree; a path-minimum index answers weight queries in constant time, and
cut edge sets are reported through the succinct cycle representation on
the pre-expansion host so reported work is proportional to cut size.
"""

from __future__ import annotations

import struct
from array import array

from .ddg import build_ddgs
from .errors import (InputError, InternalAssertion, SameVertex, TooSmall,
                     UnknownVertex)
from .planar_core import (PlanarEmbedding, add_bounding_cycle, dual,
                          degree_three_transform, subdivide_to_simple,
                          triangulate)
from .region_tree import RegionTree, regions_with_unseparated_pair
from .sep_cycle import (FallbackNeeded, PieceContext,
                        min_separating_cycle_fast, min_separating_cycle_safe,
                        new_stats)
from .subdivision import recursive_subdivide

MAGIC = b"PCO1"


def new_build_stats() -> dict:
    s = new_stats()
    s.update({"inserts": 0, "relocations": 0, "fallbacks": 0,
              "cross_checks": 0, "pieces": 0, "levels": 0,
              "host_vertices": 0, "host_edges": 0, "host_faces": 0})
    return s


# ---------------------------------------------------------------------------
# transform pipeline


class HostChain:
    """The transformed host plus everything needed to map results back."""

    __slots__ = ("g0", "host", "h1", "face_group", "input_edge_of_h1_dart",
                 "h1_dart_of_host", "host_face_of_h1_face", "group_count")

    def __init__(self, g0: PlanarEmbedding, dualize: bool):
        self.g0 = g0
        base = dual(g0) if dualize else g0
        g1, t1 = subdivide_to_simple(base)
        finite = [f for f in range(len(g1.faces)) if f != g1.infinite_face]
        g2, t2 = triangulate(g1, finite)
        g3, t3 = add_bounding_cycle(g2)
        g4, t4 = degree_three_transform(g3)
        g4.meta["bounding_cycle_edges"] = sorted(
            {d >> 1 for d in g4.faces[g4.infinite_face]})
        self.host = g4
        self.h1 = g3

        # the degree-3 pass keeps faces; invert its cover to go back up
        self.host_face_of_h1_face = [-1] * len(g3.faces)
        for f4, f3 in enumerate(t4.face_cover):
            if self.host_face_of_h1_face[f3] != -1:
                raise InternalAssertion("degree-3 pass split a face")
            self.host_face_of_h1_face[f3] = f4

        # host face -> input vertex (cut mode) or input face (mcb mode)
        to_vertex = base.meta.get("face_to_primal_vertex") if dualize else None
        groups = []
        for f4 in range(len(g4.faces)):
            f0 = t1.face_cover[t2.face_cover[t3.face_cover[t4.face_cover[f4]]]]
            groups.append(to_vertex[f0] if dualize else f0)
        self.face_group = groups
        self.group_count = len(set(groups))

        # pre-expansion dart -> input edge (-1 for added structure)
        back = []
        for d3 in range(2 * g3.m):
            d = t3.dart_origin[d3]
            if d != -1:
                d = t2.dart_origin[d]
            if d != -1:
                d = t1.dart_origin[d]
            back.append(d >> 1 if d != -1 else -1)
        self.input_edge_of_h1_dart = back
        self.h1_dart_of_host = list(t4.dart_origin)


# ---------------------------------------------------------------------------
# level loop


class _Builder:
    def __init__(self, chain: HostChain, safe_cycles: bool,
                 cross_check: bool, stats: dict, insert_hook=None):
        self.chain = chain
        self.g = chain.host
        self.safe_cycles = safe_cycles
        self.cross_check = cross_check
        self.stats = stats
        self.insert_hook = insert_hook
        self.sd = recursive_subdivide(self.g)
        self.ddgs = build_ddgs(self.sd)
        self.tree = RegionTree(self.g)
        stats["pieces"] = len(self.sd.pieces)
        stats["levels"] = len(self.sd.levels())
        stats["host_vertices"] = self.g.n
        stats["host_edges"] = self.g.m
        stats["host_faces"] = len(self.g.faces)

    def run(self) -> RegionTree:
        for level in reversed(self.sd.levels()):
            for pid in level:
                self._process_piece(pid)
        if not self.tree.complete():
            raise InternalAssertion("region tree incomplete after root piece")
        self.stats["inserts"] = self.tree.stats["inserts"]
        self.stats["relocations"] = self.tree.stats["relocations"]
        return self.tree

    def _process_piece(self, pid: int) -> None:
        piece = self.sd.pieces[pid]
        if piece.is_leaf:
            self._separate_all(pid, piece.edges, piece.edges, ())
            return
        groups = [([c], list(self.sd.pieces[c].edges))
                  for c in piece.children]
        while len(groups) > 1:
            nxt = []
            for i in range(0, len(groups) - 1, 2):
                ids_a, edges_a = groups[i]
                ids_b, edges_b = groups[i + 1]
                merged = ids_a + ids_b
                taken = set(merged)
                sibs = [c for c in piece.children if c not in taken]
                self._separate_all(pid, edges_a, edges_b, sibs)
                nxt.append((merged, edges_a + edges_b))
            if len(groups) % 2:
                nxt.append(groups[-1])
            groups = nxt

    def _separate_all(self, pid, side_a, side_b, sibling_ids) -> None:
        group = set(side_a) | set(side_b)
        ctx = None
        if not self.safe_cycles:
            ctx = PieceContext(self.g, self.tree, self.sd, self.ddgs, pid,
                               group, sibling_ids)
        while True:
            found = regions_with_unseparated_pair(self.tree,
                                                  (side_a, side_b))
            if not found:
                return
            progressed = False
            for region in sorted(found):
                fa, fb = found[region]
                # an insert earlier in this round may have moved the pair
                if (self.tree.parent(fa) != region
                        or self.tree.parent(fb) != region):
                    continue
                cyc = self._cycle(ctx, region, fa, fb)
                self.tree.insert_cycle(cyc, region, (fa, fb))
                if self.insert_hook is not None:
                    self.insert_hook(self.tree, cyc, region)
                progressed = True
            if not progressed:
                raise InternalAssertion("pair scan made no progress")

    def _cycle(self, ctx, region, fa, fb):
        if ctx is None:
            return min_separating_cycle_safe(self.g, self.tree, region,
                                             fa, fb, self.stats)
        try:
            fast = min_separating_cycle_fast(ctx, region, fa, fb,
                                             stats=self.stats)
        except FallbackNeeded:
            self.stats["fallbacks"] += 1
            return min_separating_cycle_safe(self.g, self.tree, region,
                                             fa, fb, self.stats)
        if self.cross_check:
            safe = min_separating_cycle_safe(self.g, self.tree, region,
                                             fa, fb, self.stats)
            if fast.darts() != safe.darts():
                raise InternalAssertion(
                    f"engines disagree for faces {fa},{fb} in region {region}")
            self.stats["cross_checks"] += 1
        return fast


# ---------------------------------------------------------------------------
# path-minimum index (Kruskal merge tree + Euler tour sparse table)


class PathMinIndex:
    """Constant-time minimum-edge queries on tree paths.

    Edges are merged heaviest first, so the merge-tree LCA of two leaves
    carries exactly the lightest edge on their tree path.
    """

    def __init__(self, n: int, edges):
        # edges: (weight, payload, u, v) with tuple weights
        self.n = n
        total = n + len(edges)
        self.parent = [-1] * total
        self.label = [None] * total
        order = sorted(range(len(edges)),
                       key=lambda i: tuple(-c for c in edges[i][0]) + (i,))
        root_of = list(range(n))
        nxt = n
        for i in order:
            w, payload, u, v = edges[i]
            ru, rv = self._find(root_of, u), self._find(root_of, v)
            if ru == rv:
                raise InternalAssertion("cycle in path-min edge set")
            self.parent[ru] = nxt
            self.parent[rv] = nxt
            root_of[ru] = nxt
            root_of[rv] = nxt
            self.label[nxt] = (w, payload)
            root_of.append(nxt)
            nxt += 1
        self._build_euler(total)

    @staticmethod
    def _find(root_of, x):
        while root_of[x] != x:
            root_of[x] = root_of[root_of[x]]
            x = root_of[x]
        return x

    def _build_euler(self, total: int) -> None:
        children: list[list[int]] = [[] for _ in range(total)]
        roots = []
        for x in range(total):
            p = self.parent[x]
            if p == -1:
                roots.append(x)
            else:
                children[p].append(x)
        encoded: list[int] = []
        first = [-1] * total
        for root in roots:
            stack = [(root, 0)]
            while stack:
                node, d = stack.pop()
                if first[node] == -1:
                    first[node] = len(encoded)
                    for c in reversed(children[node]):
                        stack.append((node, d))
                        stack.append((c, d + 1))
                # depth in the high bits, node in the low: the range
                # minimum over any tour window is its LCA
                encoded.append((d << 32) | node)
        self.first = array("q", first)
        k = len(encoded)
        # sparse table rows are flat machine-int arrays; boxed-int rows cost
        # a detour through scattered heap objects on every probe
        table = [array("q", encoded)]
        j = 1
        while (1 << j) <= k:
            prev = table[j - 1]
            half = 1 << (j - 1)
            row = array("q", (min(prev[i], prev[i + half])
                              for i in range(k - (1 << j) + 1)))
            table.append(row)
            j += 1
        self.table = table

    def query(self, u: int, v: int):
        """(weight, payload) of the minimum edge on the u-v tree path."""
        a, b = self.first[u], self.first[v]
        if a > b:
            a, b = b, a
        j = (b - a + 1).bit_length() - 1
        row = self.table[j]
        x = row[a]
        y = row[b - (1 << j) + 1]
        node = (x if x <= y else y) & 0xFFFFFFFF
        if self.label[node] is None:
            raise InternalAssertion("path-min lca has no edge label")
        return self.label[node]


# ---------------------------------------------------------------------------
# succinct cycle representation and the reporting walk


class CutReportTables:
    """Per-cycle path decomposition on the pre-expansion host.

    Every basis cycle is stored as P(C), the darts it does not share with
    any ancestor cycle, plus the darts d1/d2 of the cycle just before and
    after P(C).  A cycle is reassembled by walking P-paths: shared
    stretches ride along ancestors' P-paths, chained by d2 when a path
    runs out and rerouted wherever the emitted dart is the d1 of a deeper
    ancestor.  The work stays proportional to the cycle length.
    """

    __slots__ = ("p_darts", "d1", "d2", "owner", "index_of_region",
                 "tin", "tout", "depth", "descend", "budget")

    def __init__(self):
        self.p_darts: list[list[int]] = []
        self.d1: list[int] = []
        self.d2: list[int] = []
        self.owner: dict[int, tuple[int, int]] = {}
        self.index_of_region: dict[int, int] = {}
        self.tin: list[int] = []
        self.tout: list[int] = []
        self.depth: list[int] = []
        self.descend: dict[int, list[int]] = {}
        self.budget = 64

    def add_cycle(self, region: int, darts: list[int],
                  owned: list[bool]) -> None:
        idx = len(self.p_darts)
        self.index_of_region[region] = idx
        k = len(darts)
        if all(owned):
            self.p_darts.append(list(darts))
            self.d1.append(-1)
            self.d2.append(-1)
            for i, d in enumerate(darts):
                self.owner[d] = (idx, i)
            return
        if not any(owned):
            raise InternalAssertion("cycle owns none of its darts")
        start = next(i for i in range(k)
                     if owned[i] and not owned[i - 1])
        path = []
        for i in range(k):
            j = (start + i) % k
            if not owned[j]:
                break
            path.append(darts[j])
        if len(path) != sum(owned):
            raise InternalAssertion("owned darts of a cycle are not a path")
        self.p_darts.append(path)
        self.d1.append(darts[start - 1])
        self.d2.append(darts[(start + len(path)) % k])
        for i, d in enumerate(path):
            self.owner[d] = (idx, i)

    def finalize(self) -> None:
        """Index the d1 darts by owning cycle, deepest first, for reroute
        lookups during expansion."""
        self.descend = {}
        for x, d in enumerate(self.d1):
            if d != -1:
                self.descend.setdefault(d, []).append(x)
        for lst in self.descend.values():
            lst.sort(key=lambda x: self.depth[x], reverse=True)
        self.budget = 2 * sum(len(p) for p in self.p_darts) + 64

    def _reroute(self, dart: int, idx: int) -> int:
        """Deepest cycle at or above idx whose d1 is this dart, or -1."""
        t = self.tin[idx]
        for x in self.descend.get(dart, ()):
            if self.tin[x] <= t <= self.tout[x]:
                return x
        return -1

    def expand_index(self, idx: int) -> tuple[list[int], int]:
        """Reassemble a stored cycle; returns (darts, touched counter)."""
        path = self.p_darts[idx]
        out = list(path)
        touched = len(path)
        if self.d1[idx] == -1:
            return out, touched
        budget = self.budget
        d = self.d2[idx]
        while True:
            cur, pos = self.owner[d]
            p = self.p_darts[cur]
            touched += 1
            while True:
                dart = p[pos]
                out.append(dart)
                touched += 1
                if touched > budget:
                    raise InternalAssertion("cycle reassembly never closed")
                hop = self._reroute(dart, idx)
                if hop == idx:
                    return out, touched
                if hop != -1:
                    d = self.p_darts[hop][0]
                    break
                pos += 1
                if pos == len(p):
                    d = self.d2[cur]
                    if d == -1:
                        pos = 0
                        continue
                    break


def build_cut_report_tables(tree: RegionTree,
                            chain: HostChain) -> CutReportTables:
    """P(C), d1, d2 per region cycle and the owning cycle per dart, on the
    pre-expansion host."""
    h1 = chain.h1
    to_host_face = chain.host_face_of_h1_face
    tables = CutReportTables()

    def owner_region(d: int) -> int:
        fr = to_host_face[h1.face_of[d ^ 1]]
        fl = to_host_face[h1.face_of[d]]
        if fl == fr:
            raise InternalAssertion("cycle dart with equal flank faces")
        return tree.jump_child(tree.lca(fl, fr), fr)

    # regions ordered deepest first so the counterclockwise probe can
    # discard darts once they sink into ancestor interiors
    regions = [r for r in tree.children
               if r != tree.root and tree.cycles.get(r) is not None]
    regions.sort(key=tree.dt.depth, reverse=True)
    consumed: set[int] = set()

    for region in regions:
        darts = _h1_cycle_darts(tree, chain, region, tree.cycles[region])
        owned = [owner_region(d) == region for d in darts]
        tables.add_cycle(region, darts, owned)
        idx = tables.index_of_region[region]
        if tables.d1[idx] != -1:
            probe = _ccw_probe(h1, tree, region,
                               tables.p_darts[idx][-1], consumed)
            if probe != tables.d2[idx]:
                raise InternalAssertion("succinct d2 probe disagrees")

    root_cycle = tree.cycles.get(tree.root)
    if root_cycle is not None:
        darts = _h1_cycle_darts(tree, chain, tree.root, root_cycle)
        tables.add_cycle(tree.root, darts, [True] * len(darts))

    # preorder intervals over the region tree give constant-time ancestor
    # tests during expansion, with no tree needed after deserialization
    n_cycles = len(tables.p_darts)
    tables.tin = [0] * n_cycles
    tables.tout = [0] * n_cycles
    tables.depth = [0] * n_cycles
    clock = 0
    stack = [(tree.root, 0, False)]
    while stack:
        region, dep, done = stack.pop()
        idx = tables.index_of_region.get(region)
        if idx is None:
            raise InternalAssertion("region without a stored cycle")
        if done:
            tables.tout[idx] = clock - 1
            continue
        tables.tin[idx] = clock
        tables.depth[idx] = dep
        clock += 1
        stack.append((region, dep, True))
        for child in tree.children[region]:
            if tree.is_region(child):
                stack.append((child, dep + 1, False))
    tables.finalize()

    for region, idx in tables.index_of_region.items():
        got, _ = tables.expand_index(idx)
        want = _h1_cycle_darts(tree, chain, region, tree.cycles[region])
        if not _same_cycle(got, want):
            raise InternalAssertion(
                "stored tables do not reproduce the cycle of region "
                f"{region}")
    return tables


def _same_cycle(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b) or not a:
        return a == b
    try:
        shift = b.index(a[0])
    except ValueError:
        return False
    return all(a[i] == b[(shift + i) % len(b)] for i in range(len(a)))


def _h1_cycle_darts(tree: RegionTree, chain: HostChain, region: int,
                    cyc) -> list[int]:
    """Cycle darts mapped to the pre-expansion host, oriented with the
    region's interior on the right."""
    host = chain.host
    back = chain.h1_dart_of_host
    host_darts = cyc.darts()
    darts = [back[d] for d in host_darts if back[d] != -1]
    if not darts:
        raise InternalAssertion("cycle vanished in the pre-expansion host")
    probe = next(d for d in host_darts if back[d] != -1)
    if not tree.is_descendant(region, host.face_of[probe ^ 1]):
        darts = [d ^ 1 for d in reversed(darts)]
    return darts


def _ccw_probe(h1: PlanarEmbedding, tree: RegionTree, region: int,
               last_dart: int, consumed: set) -> int:
    """First dart of the cycle after P(C): scan darts leaving P(C)'s end
    counterclockwise from the reverse of its last dart, discarding misses
    for good (they are interior to every ancestor cycle)."""
    v = h1.head[last_dart]
    rot = h1.out[v]
    k = len(rot)
    start = h1.slot_of[last_dart ^ 1]
    for step in range(1, k + 1):
        d = rot[(start - step) % k]
        if d in consumed:
            continue
        if tree.is_boundary_edge(d >> 1, region):
            return d
        consumed.add(d)
    raise InternalAssertion("no boundary dart follows P(C)")


# ---------------------------------------------------------------------------
# the oracle


class MinCutOracle:
    """Immutable query structure: constant-time min-cut weights, cut edge
    sets in output-sensitive time, explicit minimum cycle basis."""

    def __init__(self, mode: str, n_nodes: int, scale: int,
                 gh_edges: list, pmi, tables: CutReportTables,
                 edge_of_dart: list, stats: dict):
        self.mode = mode
        self.n_nodes = n_nodes
        self.scale = scale
        self.gh_edges = gh_edges          # (u, v, base, eps, table index)
        self._pmi = pmi
        self._tables = tables
        self._edge_of_dart = edge_of_dart
        self.stats = stats
        self.last_report_counter = 0

    # -- queries --------------------------------------------------------

    def _check_pair(self, s: int, t: int) -> None:
        if self.mode != "cut":
            raise InputError("weight queries need a cut-mode oracle")
        for v in (s, t):
            if not 0 <= v < self.n_nodes:
                raise UnknownVertex(f"vertex {v}")
        if s == t:
            raise SameVertex(f"{s}")

    def query_weight(self, s: int, t: int) -> int:
        """Minimum st-cut weight as a scaled integer."""
        self._check_pair(s, t)
        (base, eps), _ = self._pmi.query(s, t)
        return base

    def query_weight_parts(self, s: int, t: int) -> tuple[int, int]:
        """(base, epsilon count) of the minimum st-cut weight."""
        self._check_pair(s, t)
        (base, eps), _ = self._pmi.query(s, t)
        return base, eps

    def report_cut(self, s: int, t: int) -> list[int]:
        """Edge ids of a minimum st-cut; touched work is recorded in
        last_report_counter and stays proportional to the cut size."""
        self._check_pair(s, t)
        _, idx = self._pmi.query(s, t)
        return self._expand_to_edges(idx)

    def _expand_to_edges(self, idx: int) -> list[int]:
        darts, touched = self._tables.expand_index(idx)
        self.last_report_counter = touched
        edges = set()
        for d in darts:
            e = self._edge_of_dart[d]
            if e == -1:
                raise InternalAssertion(
                    "added structure inside a reported cycle")
            edges.add(e)
        return sorted(edges)

    def ghtree(self) -> list[tuple[int, int, int]]:
        """Gomory-Hu tree edges as (u, v, scaled weight)."""
        if self.mode != "cut":
            raise InputError("Gomory-Hu tree needs a cut-mode oracle")
        return [(u, v, base) for u, v, base, eps, idx in self.gh_edges]

    def mcb(self) -> list[tuple[list[int], int]]:
        """Minimum cycle basis as (edge ids, scaled weight) per cycle."""
        if self.mode != "mcb":
            raise InputError("cycle basis needs an mcb-mode oracle")
        return [(self._expand_to_edges(idx), base)
                for u, v, base, eps, idx in self.gh_edges]

    # -- serialization ----------------------------------------------------

    def save(self, path: str) -> None:
        with open(path, "wb") as fh:
            fh.write(MAGIC)
            fh.write(struct.pack("<HH", 1, 0 if self.mode == "cut" else 1))
            fh.write(struct.pack("<qqq", self.n_nodes, self.scale,
                                 len(self.gh_edges)))
            for rec in self.gh_edges:
                fh.write(struct.pack("<qqqqq", *rec))
            t = self._tables
            fh.write(struct.pack("<q", len(t.p_darts)))
            for idx in range(len(t.p_darts)):
                p = t.p_darts[idx]
                fh.write(struct.pack("<qqqqqq", len(p), t.d1[idx],
                                     t.d2[idx], t.tin[idx], t.tout[idx],
                                     t.depth[idx]))
                fh.write(struct.pack(f"<{len(p)}q", *p))
            fh.write(struct.pack("<q", len(self._edge_of_dart)))
            fh.write(struct.pack(f"<{len(self._edge_of_dart)}q",
                                 *self._edge_of_dart))

    @classmethod
    def load(cls, path: str) -> "MinCutOracle":
        with open(path, "rb") as fh:
            if fh.read(4) != MAGIC:
                raise InputError("not an oracle file")
            version, mode_flag = struct.unpack("<HH", fh.read(4))
            if version != 1:
                raise InputError(f"unsupported oracle version {version}")
            n_nodes, scale, n_edges = struct.unpack("<qqq", fh.read(24))
            gh_edges = []
            for _ in range(n_edges):
                gh_edges.append(struct.unpack("<qqqqq", fh.read(40)))
            tables = CutReportTables()
            (n_cycles,) = struct.unpack("<q", fh.read(8))
            for idx in range(n_cycles):
                rec = struct.unpack("<qqqqqq", fh.read(48))
                k, d1, d2, tin, tout, depth = rec
                p = list(struct.unpack(f"<{k}q", fh.read(8 * k)))
                tables.p_darts.append(p)
                tables.d1.append(d1)
                tables.d2.append(d2)
                tables.tin.append(tin)
                tables.tout.append(tout)
                tables.depth.append(depth)
                for i, d in enumerate(p):
                    tables.owner[d] = (idx, i)
            tables.finalize()
            (nd,) = struct.unpack("<q", fh.read(8))
            edge_of_dart = list(struct.unpack(f"<{nd}q", fh.read(8 * nd)))
        mode = "cut" if mode_flag == 0 else "mcb"
        pmi = None
        if mode == "cut":
            pmi = PathMinIndex(n_nodes,
                               [((base, eps), idx, u, v)
                                for u, v, base, eps, idx in gh_edges])
        return cls(mode, n_nodes, scale, gh_edges, pmi, tables,
                   edge_of_dart, {})


def build_oracle(g0: PlanarEmbedding, mode: str = "cut",
                 safe_cycles: bool = False,
                 cross_check: bool = False,
                 observer=None, insert_hook=None) -> MinCutOracle:
    """Preprocess `g0` for min-cut queries (mode "cut") or its minimum
    cycle basis (mode "mcb").  `observer`, if given, is called with the
    finished builder before the intermediate structures are dropped;
    `insert_hook(tree, cycle, region)` fires after every insertion."""
    if mode not in ("cut", "mcb"):
        raise InputError(f"unknown oracle mode {mode!r}")
    if g0.n < 2:
        raise TooSmall("need at least two vertices")
    stats = new_build_stats()

    chain = HostChain(g0, dualize=(mode == "cut"))
    n_nodes = g0.n if mode == "cut" else len(g0.faces)
    if chain.group_count != n_nodes:
        raise InternalAssertion(
            f"host covers {chain.group_count} groups, expected {n_nodes}")

    builder = _Builder(chain, safe_cycles, cross_check, stats, insert_hook)
    tree = builder.run()
    if observer is not None:
        observer(builder)

    tables = build_cut_report_tables(tree, chain)
    gh_edges = _contract_tree(tree, chain, tables)

    pmi = None
    if mode == "cut":
        pmi = PathMinIndex(n_nodes,
                           [((base, eps), idx, u, v)
                            for u, v, base, eps, idx in gh_edges])
    return MinCutOracle(mode, n_nodes, g0.scale, gh_edges, pmi, tables,
                        chain.input_edge_of_h1_dart, stats)


def _contract_tree(tree: RegionTree, chain: HostChain,
                   tables: CutReportTables) -> list:
    """Quotient the region tree by face groups: every region links its
    unique face child to its parent's; edges inside one group contract."""
    groups = chain.face_group
    n_faces = len(chain.host.faces)

    face_child: dict[int, int] = {}
    for f in range(n_faces):
        face_child[tree.parent(f)] = f

    out = []
    for region in sorted(tree.children):
        if region == tree.root:
            continue
        ga = groups[face_child[region]]
        gb = groups[face_child[tree.parent(region)]]
        if ga == gb:
            continue
        w = tree.cycles[region].weight
        if w.inf_count:
            raise InternalAssertion(
                f"infinite weight between groups {ga} and {gb}")
        out.append((ga, gb, w.base, w.eps_count,
                    tables.index_of_region[region]))
    expect = chain.group_count - 1
    if len(out) != expect:
        raise InternalAssertion(
            f"contracted tree has {len(out)} edges, expected {expect}")
    return out
