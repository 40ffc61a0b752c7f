"""Planar combinatorial embeddings, duality and the structural transforms.

A graph is stored as a rotation system over darts.  Edge e owns darts 2e and
2e+1, `rev` is the xor-1 involution, and each vertex keeps the clockwise cyclic
order of its outgoing darts.  Faces are the orbits of the permutation
d -> out[head(d)][slot(rev(d)) + 1]; a rotation system is accepted exactly when
Euler's formula V - E + F = 2 holds, so parallel edges and self-loops are
representable natively.

The dual shares dart ids with the primal: the dual head of d is the primal
face containing d, and the dual rotation at a face is the face orbit itself.
Applying the construction twice returns the original embedding, and dual faces
correspond one-to-one to primal vertices.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (Disconnected, InputError, InternalAssertion,
                     NegativeWeight, NonPlanarEmbedding, UnknownEdge,
                     UnknownVertex)
from .weights import TieBreakWeight

TAG_SUBDIVISION = "subdivision-zero"
TAG_TRIANGULATION = "triangulation-infinite"
TAG_EPSILON = "dual-triangulation-epsilon"
TAG_BOUNDING = "bounding-zero"


class PlanarEmbedding:
    """Immutable planar multigraph with a fixed combinatorial embedding."""

    __slots__ = ("n", "m", "head", "out", "slot_of", "weights", "scale",
                 "fnext", "face_of", "faces", "infinite_face", "_between",
                 "dual_of", "meta")

    def __init__(self, n: int, head: list[int], out: list[list[int]],
                 weights: list[TieBreakWeight], scale: int = 1,
                 infinite_face: int | None = None, _skip_checks: bool = False):
        self.n = n
        self.m = len(weights)
        self.head = head
        self.out = out
        self.weights = weights
        self.scale = scale
        self.dual_of = None
        self.meta = {}
        self._between = None

        if len(head) != 2 * self.m:
            raise InputError("dart table size must be twice the edge count")
        for w in weights:
            if w.inf_count < 0 or w.base < 0 or w.eps_count < 0:
                raise NegativeWeight(f"negative weight component {w}")

        slot_of = [-1] * (2 * self.m)
        for v, rot in enumerate(out):
            for i, d in enumerate(rot):
                if d < 0 or d >= 2 * self.m or slot_of[d] != -1:
                    raise NonPlanarEmbedding("rotation system is not a dart partition")
                if head[d ^ 1] != v:
                    raise NonPlanarEmbedding(f"dart {d} listed at vertex {v}, tail is {head[d ^ 1]}")
                slot_of[d] = i
        if not _skip_checks and any(s == -1 for s in slot_of):
            raise NonPlanarEmbedding("rotation system misses some darts")
        self.slot_of = slot_of

        fnext = [0] * (2 * self.m)
        for d in range(2 * self.m):
            rot = out[head[d]]
            fnext[d] = rot[(slot_of[d ^ 1] + 1) % len(rot)]
        self.fnext = fnext

        face_of = [-1] * (2 * self.m)
        faces: list[list[int]] = []
        for d0 in range(2 * self.m):
            if face_of[d0] != -1:
                continue
            orbit = []
            d = d0
            while face_of[d] == -1:
                face_of[d] = len(faces)
                orbit.append(d)
                d = fnext[d]
            if d != d0:
                raise NonPlanarEmbedding("face permutation orbit broke")
            faces.append(orbit)
        self.face_of = face_of
        self.faces = faces

        if not _skip_checks:
            self._check_connected()
            if n - self.m + len(faces) != 2:
                raise NonPlanarEmbedding(
                    f"Euler check failed: V={n} E={self.m} F={len(faces)}")

        if infinite_face is None:
            infinite_face = 0 if faces else -1
        if faces and not (0 <= infinite_face < len(faces)):
            raise InputError(f"infinite face {infinite_face} out of range")
        self.infinite_face = infinite_face

    # -- dart primitives ---------------------------------------------------

    @staticmethod
    def rev(d: int) -> int:
        return d ^ 1

    def tail(self, d: int) -> int:
        return self.head[d ^ 1]

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    def darts_of(self, e: int) -> tuple[int, int]:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge {e}")
        return 2 * e, 2 * e + 1

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.head[2 * e + 1], self.head[2 * e]

    def edge_weight(self, e: int) -> TieBreakWeight:
        if not 0 <= e < self.m:
            raise UnknownEdge(f"edge {e}")
        return self.weights[e]

    def dart_weight(self, d: int) -> TieBreakWeight:
        return self.weights[d >> 1]

    def next_around_vertex(self, d: int) -> int:
        """Next dart with the same head, clockwise around it."""
        rot = self.out[self.head[d]]
        return rot[(self.slot_of[d ^ 1] + 1) % len(rot)] ^ 1

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex {v}")
        return len(self.out[v])

    def out_darts(self, v: int) -> list[int]:
        return self.out[v]

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def face_vertices(self, f: int) -> list[int]:
        return [self.head[d] for d in self.faces[f]]

    def edges_between(self, u: int, v: int) -> list[int]:
        self._build_between()
        return self._between.get((u, v) if u <= v else (v, u), [])

    def cheapest_edge_between(self, u: int, v: int) -> int:
        cands = self.edges_between(u, v)
        if not cands:
            raise UnknownEdge(f"no edge between {u} and {v}")
        return min(cands, key=lambda e: (self.weights[e], e))

    def _build_between(self) -> None:
        if self._between is not None:
            return
        between: dict[tuple[int, int], list[int]] = {}
        for e in range(self.m):
            u, v = self.endpoints(e)
            key = (u, v) if u <= v else (v, u)
            between.setdefault(key, []).append(e)
        self._between = between

    def _check_connected(self) -> None:
        if self.n == 0:
            return
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for d in self.out[v]:
                w = self.head[d]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != self.n:
            raise Disconnected(f"{self.n - count} vertices unreachable from 0")

    def total_weight(self) -> TieBreakWeight:
        t = TieBreakWeight.zero()
        for w in self.weights:
            t = t + w
        return t

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.n}, m={self.m}, f={len(self.faces)})"


def build_embedding(n: int, edges: list[tuple[int, int]],
                    weights: list[TieBreakWeight],
                    rotations: list[list[int]],
                    scale: int = 1,
                    infinite_face: int | None = None) -> PlanarEmbedding:
    """Construct an embedding from per-vertex clockwise edge-id rotations.

    A self-loop's edge id appears twice in its vertex's rotation; the first
    occurrence stands for dart 2e and the second for dart 2e+1.
    """
    m = len(edges)
    if len(weights) != m:
        raise InputError("weights and edges disagree in length")
    head = [0] * (2 * m)
    for e, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise UnknownVertex(f"edge {e} endpoints {(u, v)}")
        head[2 * e] = v
        head[2 * e + 1] = u
    seen_once: set[int] = set()
    out: list[list[int]] = []
    for v, rot in enumerate(rotations):
        row = []
        for e in rot:
            if not 0 <= e < m:
                raise UnknownEdge(f"rotation of vertex {v} names edge {e}")
            u, w = edges[e]
            if u == w:
                if u != v:
                    raise NonPlanarEmbedding(f"loop {e} listed at foreign vertex {v}")
                if e in seen_once:
                    row.append(2 * e + 1)
                else:
                    seen_once.add(e)
                    row.append(2 * e)
            elif v == u:
                row.append(2 * e)
            elif v == w:
                row.append(2 * e + 1)
            else:
                raise NonPlanarEmbedding(f"edge {e} listed at foreign vertex {v}")
        out.append(row)
    return PlanarEmbedding(n, head, out, weights, scale, infinite_face)


# -- duality ----------------------------------------------------------------

def dual(g: PlanarEmbedding) -> PlanarEmbedding:
    """Dual embedding sharing dart ids with g.

    head*(d) = face_of(d); the rotation at a face vertex is the face orbit.
    Faces of the dual correspond to primal vertices; the correspondence is
    recorded in result.meta["face_to_primal_vertex"].
    """
    head = [g.face_of[d] for d in range(2 * g.m)]
    out = [[d ^ 1 for d in orbit] for orbit in g.faces]
    dg = PlanarEmbedding(len(g.faces), head, out, list(g.weights), g.scale,
                         infinite_face=None, _skip_checks=False)
    dg.dual_of = g
    face_to_vertex = {}
    for f, orbit in enumerate(dg.faces):
        prim = {g.head[d] for d in orbit}
        if len(prim) != 1:
            raise InternalAssertion("dual face does not collapse to one primal vertex")
        face_to_vertex[f] = prim.pop()
    dg.meta["face_to_primal_vertex"] = face_to_vertex
    dg.meta["vertex_to_dual_face"] = {v: f for f, v in face_to_vertex.items()}
    return dg


def cut_cycle_duality_check(g: PlanarEmbedding, edge_set: set[int]) -> tuple[bool, bool]:
    """(edge set is a simple cycle of g, edge set is a bond of dual(g)).

    The two answers must agree for any edge set of a planar embedding; callers
    assert that.
    """
    is_cycle = is_simple_cycle(g, edge_set)
    dg = g.dual_of if g.dual_of is not None else dual(g)
    is_bond = _is_bond(dg, edge_set)
    return is_cycle, is_bond


def is_simple_cycle(g: PlanarEmbedding, edge_set: set[int]) -> bool:
    if not edge_set:
        return False
    deg: dict[int, int] = {}
    for e in edge_set:
        if not 0 <= e < g.m:
            raise UnknownEdge(f"edge {e}")
        u, v = g.endpoints(e)
        if u == v:
            # a self-loop alone is a cycle; mixed with others it is not simple
            return len(edge_set) == 1
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity over the chosen edges
    verts = list(deg)
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for e in edge_set:
        u, v = g.endpoints(e)
        adj[u].append(v)
        adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def _is_bond(dg: PlanarEmbedding, edge_set: set[int]) -> bool:
    """True when removing edge_set splits dg into exactly two components and
    every removed edge runs between the components."""
    if not edge_set:
        return False
    comp = [-1] * dg.n
    ncomp = 0
    for s in range(dg.n):
        if comp[s] != -1:
            continue
        comp[s] = ncomp
        stack = [s]
        while stack:
            x = stack.pop()
            for d in dg.out[x]:
                if (d >> 1) in edge_set:
                    continue
                y = dg.head[d]
                if comp[y] == -1:
                    comp[y] = ncomp
                    stack.append(y)
        ncomp += 1
    if ncomp != 2:
        return False
    for e in edge_set:
        u, v = dg.endpoints(e)
        if comp[u] == comp[v]:
            return False
    return True


# -- transform plumbing ------------------------------------------------------


class TransformTrace:
    """How one structural transform rewrote the embedding.

    dart_origin[d]   -> dart of the previous graph (-1 for added structure)
    vertex_origin[v] -> vertex of the previous graph (-1 for new vertices)
    face_cover[f]    -> previous face geometrically containing face f
    face_map         -> previous face -> representative new face
    added_edges      -> tag -> list of new edge ids
    vertex_tree_map  -> expanded vertex -> its copies (degree-3 pass only)
    """

    __slots__ = ("kind", "dart_origin", "vertex_origin", "face_cover",
                 "face_map", "added_edges", "vertex_tree_map")

    def __init__(self, kind: str, dart_origin: list[int],
                 vertex_origin: list[int], face_cover: list[int],
                 face_map: dict[int, int], added_edges: dict[str, list[int]],
                 vertex_tree_map: dict[int, list[int]] | None = None):
        self.kind = kind
        self.dart_origin = dart_origin
        self.vertex_origin = vertex_origin
        self.face_cover = face_cover
        self.face_map = face_map
        self.added_edges = added_edges
        self.vertex_tree_map = vertex_tree_map or {}


class _Mutable:
    """Half-edge builder used by the transforms.

    Rotations are circular doubly linked lists over out-darts keyed by dart id,
    so chord/spoke insertion at a known position is O(1).  freeze() re-derives
    faces and validates Euler.
    """

    def __init__(self, g: PlanarEmbedding):
        self.src = g
        self.n = g.n
        self.head = list(g.head)
        self.weights = list(g.weights)
        self.tags: list[str | None] = [None] * g.m
        self.dart_origin = list(range(2 * g.m))
        self.vertex_origin = list(range(g.n))
        size = 2 * g.m
        self.rot_next = [0] * size
        self.rot_prev = [0] * size
        self.anchor: list[int] = [-1] * g.n
        for v, rot in enumerate(g.out):
            if not rot:
                continue
            self.anchor[v] = rot[0]
            for i, d in enumerate(rot):
                nd = rot[(i + 1) % len(rot)]
                self.rot_next[d] = nd
                self.rot_prev[nd] = d

    # rotations -------------------------------------------------------------

    def new_vertex(self, origin: int = -1) -> int:
        v = self.n
        self.n += 1
        self.anchor.append(-1)
        self.vertex_origin.append(origin)
        return v

    def _grow_darts(self) -> int:
        base = len(self.head)
        self.head.extend((0, 0))
        self.rot_next.extend((0, 0))
        self.rot_prev.extend((0, 0))
        self.dart_origin.extend((-1, -1))
        return base

    def _attach(self, d: int, v: int, after: int | None) -> None:
        """Insert out-dart d at vertex v, clockwise-after `after`."""
        if after is None:
            if self.anchor[v] == -1:
                self.anchor[v] = d
                self.rot_next[d] = d
                self.rot_prev[d] = d
                return
            after = self.anchor[v]
        nxt = self.rot_next[after]
        self.rot_next[after] = d
        self.rot_prev[d] = after
        self.rot_next[d] = nxt
        self.rot_prev[nxt] = d

    def _detach(self, d: int, v: int) -> None:
        if self.rot_next[d] == d:
            self.anchor[v] = -1
            return
        p, nx = self.rot_prev[d], self.rot_next[d]
        self.rot_next[p] = nx
        self.rot_prev[nx] = p
        if self.anchor[v] == d:
            self.anchor[v] = nx

    def add_edge(self, u: int, v: int, weight: TieBreakWeight,
                 tag: str | None, after_u: int | None,
                 after_v: int | None) -> int:
        """New edge u-v; its out-dart at u goes clockwise-after after_u."""
        e = len(self.weights)
        self.weights.append(weight)
        self.tags.append(tag)
        d = self._grow_darts()
        self.head[d] = v
        self.head[d + 1] = u
        self._attach(d, u, after_u)
        self._attach(d + 1, v, after_v)
        return e

    def freeze(self, infinite_face_prev: int | None = None,
               kind: str = "transform") -> tuple[PlanarEmbedding, TransformTrace]:
        out: list[list[int]] = []
        for v in range(self.n):
            row = []
            a = self.anchor[v]
            if a != -1:
                d = a
                while True:
                    row.append(d)
                    d = self.rot_next[d]
                    if d == a:
                        break
            out.append(row)
        g2 = PlanarEmbedding(self.n, self.head, out, self.weights,
                             self.src.scale, infinite_face=0)
        face_cover = self._face_cover(g2)
        face_map: dict[int, int] = {}
        for f2, f1 in enumerate(face_cover):
            if f1 not in face_map:
                face_map[f1] = f2
        added: dict[str, list[int]] = {}
        for e, tag in enumerate(self.tags):
            if tag is not None:
                added.setdefault(tag, []).append(e)
        trace = TransformTrace(kind, self.dart_origin, self.vertex_origin,
                               face_cover, face_map, added)
        if infinite_face_prev is not None:
            g2.infinite_face = face_map[infinite_face_prev]
        return g2, trace

    def _face_cover(self, g2: PlanarEmbedding) -> list[int]:
        prev = self.src
        cover = [-1] * len(g2.faces)
        pending = []
        for f, orbit in enumerate(g2.faces):
            for d in orbit:
                od = self.dart_origin[d]
                if od != -1:
                    cover[f] = prev.face_of[od]
                    break
            else:
                pending.append(f)
        # faces bounded purely by added edges inherit across those edges
        while pending:
            rest = []
            for f in pending:
                for d in g2.faces[f]:
                    nb = cover[g2.face_of[d ^ 1]]
                    if nb != -1:
                        cover[f] = nb
                        break
                else:
                    rest.append(f)
            if len(rest) == len(pending):
                raise InternalAssertion("face cover propagation stalled")
            pending = rest
        return cover


# -- transforms ---------------------------------------------------------------

def subdivide_to_simple(g: PlanarEmbedding) -> tuple[PlanarEmbedding, TransformTrace]:
    """Subdivide edges until the embedding is simple and all faces have at
    least three darts.  Weight goes entirely to the first half of each split,
    the other halves weigh exactly zero, so cycle and cut weights are
    untouched.  Needed before triangulation because duals of graphs with
    bridges or shared-boundary faces carry self-loops and parallel edges."""
    mut = _Mutable(g)

    loops = [e for e in range(g.m) if g.head[2 * e] == g.head[2 * e + 1]]
    seen_pairs: set[tuple[int, int]] = set()
    parallels = []
    for e in range(g.m):
        u, v = g.endpoints(e)
        if u == v:
            continue
        key = (u, v) if u <= v else (v, u)
        if key in seen_pairs:
            parallels.append(e)
        else:
            seen_pairs.add(key)

    for e in loops:
        _subdivide_edge(mut, e)
        _subdivide_edge(mut, e)
    for e in parallels:
        _subdivide_edge(mut, e)

    # a lone edge (or any residual short walk) still yields a face of size < 3
    while True:
        g2, trace = mut.freeze(g.infinite_face, kind="subdivide_to_simple")
        short = [f for f in range(len(g2.faces)) if len(g2.faces[f]) < 3]
        if not short:
            return g2, trace
        d = g2.faces[short[0]][0]
        _subdivide_edge(mut, d >> 1)


def _subdivide_edge(mut: _Mutable, e: int) -> int:
    """Split edge e at a fresh vertex; e keeps its id and weight as the first
    half, the second half weighs zero and is tagged."""
    d_forward = 2 * e
    d_back = 2 * e + 1
    v = mut.head[d_forward]
    x = mut.new_vertex()
    e2 = len(mut.weights)
    mut.weights.append(TieBreakWeight.zero())
    mut.tags.append(TAG_SUBDIVISION)
    nd = mut._grow_darts()        # nd: x -> v, nd+1: v -> x
    mut.head[nd] = v
    mut.head[nd + 1] = x
    mut.dart_origin[nd] = mut.dart_origin[d_forward]
    mut.dart_origin[nd + 1] = mut.dart_origin[d_back]
    # v's slot of the old back dart is taken over by the new back dart
    prev_d = mut.rot_prev[d_back]
    if prev_d == d_back:
        mut.anchor[v] = nd + 1
        mut.rot_next[nd + 1] = nd + 1
        mut.rot_prev[nd + 1] = nd + 1
    else:
        nxt = mut.rot_next[d_back]
        mut.rot_next[prev_d] = nd + 1
        mut.rot_prev[nd + 1] = prev_d
        mut.rot_next[nd + 1] = nxt
        mut.rot_prev[nxt] = nd + 1
        if mut.anchor[v] == d_back:
            mut.anchor[v] = nd + 1
    # x carries both halves; rotation order is immaterial for degree 2
    mut.head[d_forward] = x
    mut.anchor[x] = -1
    mut._attach(d_back, x, None)
    mut._attach(nd, x, d_back)
    return e2


def triangulate(g: PlanarEmbedding,
                faces: list[int] | None = None) -> tuple[PlanarEmbedding, TransformTrace]:
    """Chord faces down to triangles with infinite-weight edges.

    By default every face is chorded; pass `faces` to restrict (the oracle
    pipeline leaves the infinite face to the bounding-cycle step).  Ear
    positions with coincident endpoints (faces that visit a vertex twice) are
    skipped, which always leaves a valid ear on simple-face walks."""
    mut = _Mutable(g)
    inf_w = TieBreakWeight.infinite()
    chosen = g.faces if faces is None else [g.faces[f] for f in faces]
    for orbit in chosen:
        walk = list(orbit)
        while len(walk) > 3:
            k = len(walk)
            pos = -1
            for i in range(k):
                x = walk[i]
                y = walk[(i + 1) % k]
                if mut.head[y] != mut.head[x ^ 1]:
                    pos = i
                    break
            if pos == -1:
                raise InternalAssertion("no valid ear on face walk; input face not simple")
            x = walk[pos]
            y = walk[(pos + 1) % k]
            tv = mut.head[x ^ 1]
            hv = mut.head[y]
            # chord tv->hv: out-dart at tv goes just before x (cw), the back
            # dart at hv just after rev(y), closing triangle [x, y, back]
            e = mut.add_edge(tv, hv, inf_w, TAG_TRIANGULATION,
                             after_u=mut.rot_prev[x], after_v=y ^ 1)
            c_fwd = 2 * e
            walk[pos:pos + 2] = [c_fwd]
            if pos + 2 > k:   # wrapped pair: y was walk[0]
                walk.pop(0)
    return mut.freeze(g.infinite_face, kind="triangulate")


def degree_three_transform(g: PlanarEmbedding) -> tuple[PlanarEmbedding, TransformTrace]:
    """Expand every vertex of degree above three into a path of copies joined
    by epsilon-weight edges (a tree of the dual triangulation).  Result has
    maximum degree three; vertices of degree three or less are untouched."""
    mut = _Mutable(g)
    eps = TieBreakWeight.epsilon()
    tree_map: dict[int, list[int]] = {}
    for v in range(g.n):
        rot = g.out[v]
        k = len(rot)
        if k <= 3:
            continue
        # v keeps rot[0], rot[1]; copy i takes rot[i+1]; the last copy takes
        # rot[k-2] and rot[k-1].  Consecutive rotation darts land on the same
        # or adjacent copies except across the wrap corner, whose face walk
        # runs along the whole copy path.
        copies = [v] + [mut.new_vertex(origin=v) for _ in range(k - 3)]
        for d in rot[2:]:
            mut._detach(d, v)
        prev = v
        attach_after = rot[1]
        for i in range(1, k - 2):
            c = copies[i]
            e = mut.add_edge(prev, c, eps, TAG_EPSILON,
                             after_u=attach_after, after_v=None)
            after = 2 * e + 1
            darts = [rot[i + 1]] if i < k - 3 else [rot[k - 2], rot[k - 1]]
            for d in darts:
                mut.head[d ^ 1] = c
                mut._attach(d, c, after)
                after = d
            prev = c
            attach_after = darts[-1]
        tree_map[v] = copies
    g2, trace = mut.freeze(g.infinite_face, kind="degree_three_transform")
    trace.vertex_tree_map = tree_map
    return g2, trace


def add_bounding_cycle(g: PlanarEmbedding) -> tuple[PlanarEmbedding, TransformTrace]:
    """Enclose the infinite face with a zero-weight triangle ("sky"), fanned to
    the old infinite walk with infinite-weight spokes so all new faces are
    triangles.  The new infinite face is the outside of the zero triangle.
    Any vertex whose degree rose above three afterwards is the caller's
    concern; the oracle pipeline runs the degree-3 pass after this one."""
    mut = _Mutable(g)
    inf_face = g.infinite_face
    walk = list(g.faces[inf_face])
    k = len(walk)
    if k < 3:
        raise InputError("bounding cycle needs an infinite face of size >= 3")

    s = [mut.new_vertex(), mut.new_vertex(), mut.new_vertex()]
    zero = TieBreakWeight.zero()
    inf_w = TieBreakWeight.infinite()

    # zero triangle s0-s1-s2; rotations fixed up after spokes are in
    ring = []
    for j in range(3):
        ring.append(mut.add_edge(s[j], s[(j + 1) % 3], zero, TAG_BOUNDING,
                                 after_u=None, after_v=None))

    target = [3 * i // k for i in range(k)]
    # at walk position i the infinite-face corner is the rotation gap
    # clockwise-after rev(walk[i]); spokes are planted in that gap
    spokes_at_sky: list[list[int]] = [[], [], []]
    for i in range(k):
        a_i = walk[i]
        w_i = g.head[a_i]
        t = target[i]
        e = mut.add_edge(w_i, s[t], inf_w, TAG_TRIANGULATION,
                         after_u=a_i ^ 1, after_v=None)
        spokes_at_sky[t].append(2 * e + 1)
        t_prev = target[i - 1]
        if t_prev != t and i > 0:
            # arc boundary: a second spoke back to the previous sky vertex,
            # placed between rev(a_i) and the first spoke
            e2 = mut.add_edge(w_i, s[t_prev], inf_w, TAG_TRIANGULATION,
                              after_u=a_i ^ 1, after_v=None)
            spokes_at_sky[t_prev].append(2 * e2 + 1)
    # the wraparound boundary at position 0 belongs at the tail of the last
    # arc's spoke list so each sky rotation stays in cyclic walk order
    e2 = mut.add_edge(g.head[walk[0]], s[target[-1]], inf_w, TAG_TRIANGULATION,
                      after_u=walk[0] ^ 1, after_v=None)
    spokes_at_sky[target[-1]].append(2 * e2 + 1)
    # order each sky vertex's rotation: [edge to next sky, spokes in reverse
    # walk order, edge to prev sky] keeps every ring face a triangle
    for j in range(3):
        to_next = 2 * ring[j]
        to_prev = 2 * ring[(j + 2) % 3] + 1
        seq = [to_next] + list(reversed(spokes_at_sky[j])) + [to_prev]
        for d in seq:
            mut._detach(d, s[j])
        mut.anchor[s[j]] = -1
        prev = None
        for d in seq:
            mut._attach(d, s[j], prev)
            prev = d
    g2, trace = mut.freeze(None, kind="add_bounding_cycle")
    # new infinite face: the orbit outside the zero triangle, i.e. the face of
    # the ring dart whose orbit has exactly the three sky vertices
    for f, orbit in enumerate(g2.faces):
        if len(orbit) == 3 and all(g2.head[d] in s for d in orbit):
            if all((d >> 1) in ring for d in orbit):
                g2.infinite_face = f
                break
    else:
        raise InternalAssertion("sky triangle face not found")
    trace.added_edges.setdefault(TAG_BOUNDING, [])
    g2.meta["bounding_cycle_edges"] = list(ring)
    g2.meta["sky_vertices"] = s
    return g2, trace
