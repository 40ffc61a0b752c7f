"""Recursive balanced subdivision of an embedded planar graph into pieces.

A piece is a connected edge subset of the host graph; children partition their
parent's edges.  Every split tries a fundamental-cycle separator first: a BFS
tree from an approximate center is interdigitated with the dual spanning tree
over the piece's faces, so each non-tree edge's enclosed face weight is a
subtree sum available in O(1).  The best few candidates are re-scored exactly
by an edge partition and the most balanced one wins; degenerate pieces fall
back to a plain connected edge bipartition, which keeps the construction
correct (DDG assembly relies only on the partition property and on boundaries,
never on balance).

Boundary vertices are always recomputed from global incidence: a vertex is
boundary for a piece exactly when some edge outside the piece touches it.
Balance targets alternate by depth between edge count and boundary-vertex
count, which keeps boundaries from concentrating in one child.
"""

from __future__ import annotations

from collections import deque

from .errors import Disconnected, InternalAssertion
from .planar_core import PlanarEmbedding

_EXACT_CANDIDATES = 8


class Piece:
    __slots__ = ("id", "parent", "children", "edges", "vertices", "boundary",
                 "depth", "split_kind")

    def __init__(self, pid: int, parent: int, edges: list[int], depth: int):
        self.id = pid
        self.parent = parent
        self.children: list[int] = []
        self.edges = edges                  # sorted host edge ids
        self.vertices: list[int] = []       # sorted host vertex ids
        self.boundary: list[int] = []       # sorted host vertex ids
        self.depth = depth
        self.split_kind = "leaf"

    @property
    def is_leaf(self) -> bool:
        return not self.children


class SubPiece:
    """Embedded subgraph of the host induced by a piece's edges."""

    __slots__ = ("sub", "v_host", "e_host", "v_sub", "e_sub", "hole_faces")

    def __init__(self, sub: PlanarEmbedding, v_host: list[int],
                 e_host: list[int], hole_faces: int):
        self.sub = sub
        self.v_host = v_host
        self.e_host = e_host
        self.v_sub = {h: i for i, h in enumerate(v_host)}
        self.e_sub = {h: i for i, h in enumerate(e_host)}
        self.hole_faces = hole_faces


class Subdivision:
    def __init__(self, g: PlanarEmbedding):
        self.g = g
        self.pieces: list[Piece] = []
        self.root = 0
        self.edge_leaf: list[int] = [-1] * g.m
        self.stats: dict = {"fallback_splits": 0, "separator_splits": 0}
        self._subcache: dict[int, SubPiece] = {}

    def levels(self) -> list[list[int]]:
        depth = max((p.depth for p in self.pieces), default=0)
        out: list[list[int]] = [[] for _ in range(depth + 1)]
        for p in self.pieces:
            out[p.depth].append(p.id)
        return out

    def subpiece(self, pid: int) -> SubPiece:
        if pid not in self._subcache:
            self._subcache[pid] = _build_subpiece(self.g, self.pieces[pid])
        return self._subcache[pid]


def _edge_vertices(g: PlanarEmbedding, edges: list[int]) -> list[int]:
    vs = set()
    for e in edges:
        u, v = g.endpoints(e)
        vs.add(u)
        vs.add(v)
    return sorted(vs)


def _build_subpiece(g: PlanarEmbedding, piece: Piece) -> SubPiece:
    v_host = piece.vertices
    v_sub = {h: i for i, h in enumerate(v_host)}
    e_host = piece.edges
    e_sub = {h: i for i, h in enumerate(e_host)}
    out: list[list[int]] = []
    for hv in v_host:
        row = []
        for d in g.out[hv]:
            se = e_sub.get(d >> 1)
            if se is not None:
                row.append(2 * se + (d & 1))
        out.append(row)
    head = [0] * (2 * len(e_host))
    for se, he in enumerate(e_host):
        head[2 * se] = v_sub[g.head[2 * he]]
        head[2 * se + 1] = v_sub[g.head[2 * he + 1]]
    sub = PlanarEmbedding(len(v_host), head, out,
                          [g.weights[e] for e in e_host], g.scale)
    bset = set(piece.boundary)
    hole_faces = sum(1 for orbit in sub.faces
                     if any(v_host[sub.head[d]] in bset for d in orbit))
    return SubPiece(sub, v_host, e_host, hole_faces)


# -- separator ------------------------------------------------------------------

def _bfs_farthest(sub: PlanarEmbedding, start: int) -> tuple[int, list[int]]:
    dist = [-1] * sub.n
    dist[start] = 0
    q = deque([start])
    last = start
    while q:
        u = q.popleft()
        last = u
        for d in sub.out[u]:
            v = sub.head[d]
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return last, dist


def _bfs_tree_from_center(sub: PlanarEmbedding) -> list[int]:
    """parent_dart[v]: dart entering v from its BFS parent, -1 at the root."""
    a, _ = _bfs_farthest(sub, 0)
    b, dist_a = _bfs_farthest(sub, a)
    # walk the a..b shortest path halfway back from b
    path = [b]
    cur = b
    while cur != a:
        for d in sub.out[cur]:
            v = sub.head[d]
            if dist_a[v] == dist_a[cur] - 1:
                cur = v
                path.append(cur)
                break
        else:
            raise InternalAssertion("BFS distance field inconsistent")
    center = path[len(path) // 2]
    parent_dart = [-1] * sub.n
    seen = [False] * sub.n
    seen[center] = True
    q = deque([center])
    while q:
        u = q.popleft()
        for d in sub.out[u]:
            v = sub.head[d]
            if not seen[v]:
                seen[v] = True
                parent_dart[v] = d
                q.append(v)
    if not all(seen):
        raise Disconnected("piece subgraph is not connected")
    return parent_dart


def cycle_separator(sub: PlanarEmbedding,
                    face_weights: list[int]) -> tuple[set[int], set[int]] | None:
    """Best fundamental-cycle separator of an embedded connected graph.

    Returns (cycle edge ids, faces enclosed against the root face) maximising
    the smaller side of `face_weights`, or None when the graph is a tree or no
    candidate separates anything.  The top estimated candidates are re-scored
    exactly before choosing.
    """
    if sub.m < 3 or sub.m - sub.n + 1 <= 0:
        return None
    parent_dart = _bfs_tree_from_center(sub)
    tree_edges = set()
    for v in range(sub.n):
        d = parent_dart[v]
        if d >= 0:
            tree_edges.add(d >> 1)
    nontree = [e for e in range(sub.m) if e not in tree_edges]
    if not nontree:
        return None

    root_face = sub.infinite_face
    # dual spanning tree over faces through non-tree edges
    dual_adj: list[list[tuple[int, int]]] = [[] for _ in range(len(sub.faces))]
    for e in nontree:
        f1 = sub.face_of[2 * e]
        f2 = sub.face_of[2 * e + 1]
        dual_adj[f1].append((f2, e))
        dual_adj[f2].append((f1, e))
    dual_parent = [-2] * len(sub.faces)
    dual_parent_edge = [-1] * len(sub.faces)
    order = []
    dual_parent[root_face] = -1
    q = deque([root_face])
    while q:
        f = q.popleft()
        order.append(f)
        for f2, e in dual_adj[f]:
            if dual_parent[f2] == -2:
                dual_parent[f2] = f
                dual_parent_edge[f2] = e
                q.append(f2)
    if len(order) != len(sub.faces):
        raise InternalAssertion("dual spanning tree did not reach every face")
    subtree = list(face_weights)
    for f in reversed(order):
        if dual_parent[f] >= 0:
            subtree[dual_parent[f]] += subtree[f]
    total = subtree[root_face]

    # enclosed weight of the fundamental cycle of non-tree edge e is the dual
    # subtree hanging under e
    child_face = {}
    for f in range(len(sub.faces)):
        e = dual_parent_edge[f]
        if e >= 0:
            child_face[e] = f
    scored = []
    for e in nontree:
        f = child_face.get(e)
        if f is None:
            # non-tree edge whose dual edge is also not in the dual tree:
            # impossible by interdigitation
            raise InternalAssertion("non-tree edge missing from dual tree")
        inside = subtree[f]
        scored.append((min(inside, total - inside), e))
    scored.sort(reverse=True)

    best = None
    for est, e in scored[:_EXACT_CANDIDATES]:
        cyc = _fundamental_cycle(sub, parent_dart, e)
        inside = _enclosed_faces(sub, cyc, root_face)
        if not inside or len(inside) == len(sub.faces):
            continue
        w_in = sum(face_weights[f] for f in inside)
        score = min(w_in, total - w_in)
        if best is None or score > best[0]:
            best = (score, cyc, inside)
    if best is None:
        return None
    return best[1], best[2]


def _fundamental_cycle(sub: PlanarEmbedding, parent_dart: list[int],
                       e: int) -> set[int]:
    cyc = {e}
    u, v = sub.endpoints(e)
    # climb both endpoints to the root, then trim the common prefix
    pu = []
    x = u
    while parent_dart[x] >= 0:
        pu.append(parent_dart[x] >> 1)
        x = sub.head[parent_dart[x] ^ 1]
    pv = []
    x = v
    while parent_dart[x] >= 0:
        pv.append(parent_dart[x] >> 1)
        x = sub.head[parent_dart[x] ^ 1]
    su, sv = set(pu), set(pv)
    cyc.update(eu for eu in pu if eu not in sv)
    cyc.update(ev for ev in pv if ev not in su)
    return cyc


def _enclosed_faces(sub: PlanarEmbedding, cyc: set[int], root_face: int) -> set[int]:
    comp = set()
    seed = sub.face_of[2 * next(iter(cyc))]
    stack = [seed]
    comp.add(seed)
    while stack:
        f = stack.pop()
        for d in sub.faces[f]:
            if (d >> 1) in cyc:
                continue
            f2 = sub.face_of[d ^ 1]
            if f2 not in comp:
                comp.add(f2)
                stack.append(f2)
    if root_face in comp:
        return {f for f in range(len(sub.faces)) if f not in comp}
    return comp


# -- recursive construction ------------------------------------------------------

def recursive_subdivide(g: PlanarEmbedding) -> Subdivision:
    """Piece tree over g down to single-edge leaves."""
    sd = Subdivision(g)
    root = Piece(0, -1, sorted(range(g.m)), 0)
    root.vertices = _edge_vertices(g, root.edges)
    sd.pieces.append(root)
    _set_boundary(sd, root)

    queue = deque([0])
    while queue:
        pid = queue.popleft()
        piece = sd.pieces[pid]
        if len(piece.edges) <= 1:
            piece.split_kind = "leaf"
            if piece.edges:
                sd.edge_leaf[piece.edges[0]] = pid
            continue
        groups = None
        if len(piece.edges) > 3:
            groups = _separator_split(sd, piece)
        if groups is None:
            groups = _fallback_split(sd, piece)
            piece.split_kind = "fallback"
            sd.stats["fallback_splits"] += 1
        else:
            piece.split_kind = "separator"
            sd.stats["separator_splits"] += 1
        for part in groups:
            child = Piece(len(sd.pieces), pid, sorted(part), piece.depth + 1)
            child.vertices = _edge_vertices(g, child.edges)
            sd.pieces.append(child)
            piece.children.append(child.id)
            _set_boundary(sd, child)
            queue.append(child.id)
    _check_partition(sd)
    depths = [p.depth for p in sd.pieces]
    sd.stats["pieces"] = len(sd.pieces)
    sd.stats["depth"] = max(depths)
    sd.stats["max_boundary"] = max(len(p.boundary) for p in sd.pieces)
    return sd


def _set_boundary(sd: Subdivision, piece: Piece) -> None:
    g = sd.g
    edge_set = set(piece.edges)
    boundary = []
    for v in piece.vertices:
        if any((d >> 1) not in edge_set for d in g.out[v]):
            boundary.append(v)
    piece.boundary = boundary


def _connected_edge_groups(g: PlanarEmbedding, edges: set[int]) -> list[set[int]]:
    remaining = set(edges)
    groups = []
    while remaining:
        seed = next(iter(remaining))
        comp = {seed}
        remaining.discard(seed)
        stack = [seed]
        while stack:
            e = stack.pop()
            for x in g.endpoints(e):
                for d in g.out[x]:
                    e2 = d >> 1
                    if e2 in remaining:
                        remaining.discard(e2)
                        comp.add(e2)
                        stack.append(e2)
        groups.append(comp)
    return groups


def _separator_split(sd: Subdivision, piece: Piece) -> list[set[int]] | None:
    sp = sd.subpiece(piece.id)
    sub = sp.sub
    if piece.depth % 2 == 0 or not piece.boundary:
        face_weights = _face_weights_edges(sub)
    else:
        face_weights = _face_weights_boundary(sub, sp, set(piece.boundary))
        if sum(face_weights) == 0:
            face_weights = _face_weights_edges(sub)
    got = cycle_separator(sub, face_weights)
    if got is None:
        return None
    cyc, inside = got
    side_in = set()
    side_out = set()
    for se in range(sub.m):
        if se in cyc:
            side_in.add(sp.e_host[se])
        elif sub.face_of[2 * se] in inside:
            side_in.add(sp.e_host[se])
        else:
            side_out.add(sp.e_host[se])
    if not side_in or not side_out:
        return None
    groups = []
    for part in (side_in, side_out):
        groups.extend(_connected_edge_groups(sd.g, part))
    if len(groups) < 2:
        return None
    # a lopsided separator loses to the plain halving fallback
    if max(len(p) for p in groups) > max(2, (len(piece.edges) * 17) // 20):
        return None
    return groups


def _face_weights_edges(sub: PlanarEmbedding) -> list[int]:
    w = [0] * len(sub.faces)
    for e in range(sub.m):
        w[sub.face_of[2 * e]] += 1
    return w


def _face_weights_boundary(sub: PlanarEmbedding, sp: SubPiece,
                           bset: set[int]) -> list[int]:
    w = [0] * len(sub.faces)
    for v in range(sub.n):
        if sp.v_host[v] in bset and sub.out[v]:
            w[sub.face_of[sub.out[v][0]]] += 1
    return w


def _fallback_split(sd: Subdivision, piece: Piece) -> list[set[int]]:
    """Connected halves by a BFS edge order; always makes progress."""
    g = sd.g
    edge_set = set(piece.edges)
    order = []
    seen = set()
    start = piece.edges[0]
    q = deque([start])
    seen.add(start)
    while q:
        e = q.popleft()
        order.append(e)
        for x in g.endpoints(e):
            for d in g.out[x]:
                e2 = d >> 1
                if e2 in edge_set and e2 not in seen:
                    seen.add(e2)
                    q.append(e2)
    half = len(order) // 2
    first, second = set(order[:half]), set(order[half:])
    groups = []
    for part in (first, second):
        groups.extend(_connected_edge_groups(g, part))
    assert all(len(p) < len(piece.edges) for p in groups)
    return groups


def _check_partition(sd: Subdivision) -> None:
    for piece in sd.pieces:
        if piece.is_leaf:
            continue
        combined: list[int] = []
        for c in piece.children:
            combined.extend(sd.pieces[c].edges)
        if sorted(combined) != piece.edges:
            raise InternalAssertion(f"children of piece {piece.id} do not partition it")
    if any(l < 0 for l in sd.edge_leaf):
        raise InternalAssertion("some edge has no leaf piece")
