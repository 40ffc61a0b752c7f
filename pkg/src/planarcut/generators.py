"""Embedded test-graph generators.

Everything here returns a PlanarEmbedding whose rotations come from actual
plane coordinates (counterclockwise angular order around each vertex is
reversed to get the clockwise convention), so the outer face is the true
geometric one and the embeddings are honest.
"""

from __future__ import annotations

import math
import random

from .errors import InputError
from .planar_core import PlanarEmbedding, build_embedding
from .weights import TieBreakWeight


def embedding_from_coordinates(points: list[tuple[float, float]],
                               edges: list[tuple[int, int]],
                               weights: list[int] | None = None,
                               scale: int = 1) -> PlanarEmbedding:
    """Build an embedding from straight-line drawn simple edges.

    The infinite face is detected as the orbit walking clockwise around the
    convex hull, found from the lowest-then-leftmost vertex.
    """
    n = len(points)
    if weights is None:
        weights = [1] * len(edges)
    rotations: list[list[tuple[float, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        if u == v:
            raise InputError("coordinate embedding needs loop-free edges")
        ang_uv = math.atan2(points[v][1] - points[u][1], points[v][0] - points[u][0])
        ang_vu = math.atan2(points[u][1] - points[v][1], points[u][0] - points[v][0])
        rotations[u].append((ang_uv, e))
        rotations[v].append((ang_vu, e))
    # descending angle = clockwise in standard orientation
    rot_ids = [[e for _, e in sorted(r, key=lambda t: (-t[0], t[1]))] for r in rotations]
    tw = [TieBreakWeight.of(w) for w in weights]
    g = build_embedding(n, edges, tw, rot_ids, scale=scale)
    g.infinite_face = _outer_face(g, points)
    return g


def _outer_face(g: PlanarEmbedding, points: list[tuple[float, float]]) -> int:
    start = min(range(g.n), key=lambda v: (points[v][1], points[v][0]))
    # at the bottom-most vertex, the outgoing hull dart with the smallest
    # angle above the horizon borders the outer face on its right
    best = None
    for d in g.out[start]:
        v = g.head[d]
        ang = math.atan2(points[v][1] - points[start][1], points[v][0] - points[start][0])
        if best is None or ang < best[0]:
            best = (ang, d)
    assert best is not None
    return g.face_of[best[1] ^ 1]


def triangle_graph(w1: int = 1, w2: int = 2, w3: int = 3) -> PlanarEmbedding:
    pts = [(0.0, 0.0), (2.0, 0.0), (1.0, 1.5)]
    return embedding_from_coordinates(pts, [(0, 1), (1, 2), (2, 0)], [w1, w2, w3])


def grid_graph(rows: int, cols: int,
               weights: list[int] | None = None,
               rng: random.Random | None = None,
               max_weight: int = 9) -> PlanarEmbedding:
    """rows x cols grid; horizontal edges first row by row, then verticals."""
    pts = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    vid = lambda r, c: r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols - 1):
            edges.append((vid(r, c), vid(r, c + 1)))
    for r in range(rows - 1):
        for c in range(cols):
            edges.append((vid(r, c), vid(r + 1, c)))
    if weights is None:
        if rng is None:
            weights = [1] * len(edges)
        else:
            weights = [rng.randint(1, max_weight) for _ in edges]
    return embedding_from_coordinates(pts, edges, weights)


def random_delaunay_graph(n: int, seed: int, max_weight: int = 20) -> PlanarEmbedding:
    """Delaunay triangulation of n random points with random integer weights."""
    import numpy as np
    from scipy.spatial import Delaunay

    rng = random.Random(seed)
    npr = np.random.default_rng(seed)
    pts = npr.random((n, 2))
    tri = Delaunay(pts)
    edge_set = set()
    for simplex in tri.simplices:
        a, b, c = int(simplex[0]), int(simplex[1]), int(simplex[2])
        for u, v in ((a, b), (b, c), (c, a)):
            edge_set.add((u, v) if u < v else (v, u))
    edges = sorted(edge_set)
    weights = [rng.randint(1, max_weight) for _ in edges]
    return embedding_from_coordinates([tuple(map(float, p)) for p in pts], edges, weights)


def random_grid_subgraph(rows: int, cols: int, seed: int,
                         keep: float = 0.85, max_weight: int = 9) -> PlanarEmbedding:
    """Connected random subgraph of a grid: each non-tree edge kept with
    probability `keep`, weights uniform integers."""
    rng = random.Random(seed)
    full = grid_graph(rows, cols)
    n = full.n
    # spanning tree via random-order BFS keeps connectivity
    order = list(range(full.m))
    rng.shuffle(order)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set()
    for e in order:
        u, v = full.endpoints(e)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(e)
    for e in range(full.m):
        if e not in chosen and rng.random() < keep:
            chosen.add(e)
    pts = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    edges = [full.endpoints(e) for e in sorted(chosen)]
    weights = [rng.randint(1, max_weight) for _ in edges]
    return embedding_from_coordinates(pts, edges, weights)


def theta_graph(w_outer: int = 1, w_mid: int = 2,
                w_inner: int | None = None) -> PlanarEmbedding:
    """Two degree-3 hubs joined by three internally disjoint paths.

    Path edge weights are w_outer, w_mid, and w_inner (defaulting to
    w_outer), top to bottom.
    """
    if w_inner is None:
        w_inner = w_outer
    pts = [(0.0, 0.0), (3.0, 0.0), (1.5, 1.2), (1.5, 0.0), (1.5, -1.2)]
    edges = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]
    weights = [w_outer, w_outer, w_mid, w_mid, w_inner, w_inner]
    return embedding_from_coordinates(pts, edges, weights)
