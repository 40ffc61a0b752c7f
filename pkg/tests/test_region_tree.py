import math
import random
from itertools import permutations

import pytest

from planarcut.errors import InductionViolated, NotSeparating
from planarcut.generators import grid_graph, random_delaunay_graph
from planarcut.region_tree import (CompactCycle, RegionTree, region_subpiece,
                                   regions_with_unseparated_pair)


def face_edges(g, fid):
    return sorted({d >> 1 for d in g.faces[fid]})


def finite_faces(g):
    return [f for f in range(len(g.faces)) if f != g.infinite_face]


def face_sibling(tree, f):
    r = tree.parent(f)
    for c in sorted(tree.children[r]):
        if c != f and not tree.is_region(c):
            return c
    raise AssertionError("no sibling face available")


def insert_face_boundary(tree, fid):
    g = tree.g
    cyc = CompactCycle.from_darts(g, orient(g, face_edges(g, fid)))
    tree.insert_cycle(cyc, tree.parent(fid), (fid, face_sibling(tree, fid)))


def orient(g, edge_ids):
    from planarcut.region_tree import _orient_edge_cycle
    return _orient_edge_cycle(g, edge_ids)


def check_boundary_classification(tree):
    """An edge lies on a region's stored cycle iff the ancestry tests say so."""
    g = tree.g
    for r, stored in tree.cycle_edge_sets.items():
        if tree.cycles.get(r) is None:
            continue
        for e in range(g.m):
            assert tree.is_boundary_edge(e, r) == (e in stored), (e, r)


def check_parity_matches_descendants(tree):
    """Faces enclosed by a region's cycle are exactly its face descendants."""
    for r, cyc in tree.cycles.items():
        if cyc is None or r == tree.root:
            continue
        enclosed = {f for f in range(tree.n_faces)
                    if tree.enclosed_parity(f, tree.cycle_edge_sets[r])}
        below = {f for f in range(tree.n_faces) if tree.is_descendant(r, f)}
        assert enclosed == below, r


def test_star_init(tri):
    tree = RegionTree(tri)
    assert tree.children[tree.root] == {0, 1}
    assert tree.face_child_count[tree.root] == 2
    assert not tree.complete()
    assert tree.lca(0, 1) == tree.root
    for e in range(tri.m):
        assert tree.edge_home_region(e) == tree.root
        assert not tree.is_boundary_edge(e, tree.root)


def test_triangle_single_insert(tri):
    tree = RegionTree(tri)
    inner = [f for f in range(2) if f != tri.infinite_face][0]
    insert_face_boundary(tree, inner)
    assert tree.complete()
    assert tree.stats["inserts"] == 1
    r_in = tree.parent(inner)
    assert r_in != tree.root
    assert tree.parent(tri.infinite_face) == tree.root
    for e in range(tri.m):
        assert tree.edge_home_region(e) == tree.root
        assert tree.is_boundary_edge(e, r_in)
    check_boundary_classification(tree)
    check_parity_matches_descendants(tree)


@pytest.mark.parametrize("order", list(permutations(range(4))))
def test_grid_square_insert_orders(grid3, order):
    g = grid3
    tree = RegionTree(g)
    squares = finite_faces(g)
    assert len(squares) == 4
    for i in order:
        insert_face_boundary(tree, squares[i])
    assert tree.complete()
    assert tree.parent(g.infinite_face) == tree.root
    check_boundary_classification(tree)
    check_parity_matches_descendants(tree)
    nodes = tree.n_faces + tree.stats["inserts"] + 1
    assert tree.stats["relocations"] <= nodes * math.ceil(math.log2(nodes))


def test_grid_ring_takes_exterior_branch(grid3):
    g = grid3
    tree = RegionTree(g)
    squares = finite_faces(g)
    ring = sorted({d >> 1 for d in g.faces[g.infinite_face]})
    assert len(ring) == 8

    insert_face_boundary(tree, squares[0])
    old_root = tree.root
    cyc = CompactCycle.from_darts(g, orient(g, ring))
    tree.insert_cycle(cyc, tree.root, (squares[1], g.infinite_face))
    assert tree.root != old_root, "outer-side relocation must rebuild the root"
    insert_face_boundary(tree, squares[1])
    insert_face_boundary(tree, squares[2])

    assert tree.complete()
    assert tree.parent(g.infinite_face) == tree.root
    r_ring = [c for c in tree.children[tree.root] if tree.is_region(c)]
    assert len(r_ring) == 1
    r_ring = r_ring[0]
    assert tree.cycle_edge_sets[r_ring] == frozenset(ring)
    # all four squares sit strictly inside the ring region
    for f in squares:
        assert tree.is_descendant(r_ring, f)
    assert tree.lca(squares[0], g.infinite_face) == tree.root
    check_boundary_classification(tree)
    check_parity_matches_descendants(tree)


@pytest.mark.parametrize("n,seed", [(8, 1), (8, 5), (12, 2), (12, 7), (16, 3)])
def test_delaunay_face_boundaries_random_order(n, seed):
    g = random_delaunay_graph(n, seed=seed)
    tree = RegionTree(g)
    faces = finite_faces(g)
    rng = random.Random(seed * 31 + 1)
    rng.shuffle(faces)
    for f in faces:
        insert_face_boundary(tree, f)
    assert tree.complete()
    assert tree.stats["inserts"] == len(g.faces) - 1
    check_boundary_classification(tree)
    check_parity_matches_descendants(tree)
    nodes = tree.n_faces + tree.stats["inserts"] + 1
    assert tree.stats["relocations"] <= nodes * math.ceil(math.log2(nodes))


def test_unseparated_scan_and_guard(grid3):
    g = grid3
    tree = RegionTree(g)
    squares = finite_faces(g)
    for f in squares[:3]:
        insert_face_boundary(tree, f)

    last = squares[3]
    shared = [e for e in face_edges(g, last)
              if g.face_of[2 * e] == g.infinite_face
              or g.face_of[2 * e + 1] == g.infinite_face]
    assert shared
    found = regions_with_unseparated_pair(tree, ([shared[0]], [shared[0]]))
    assert found == {tree.root: tuple(sorted((last, g.infinite_face)))}

    inner = [e for e in face_edges(g, squares[0])
             if e in set(face_edges(g, squares[1]))]
    if inner:
        assert regions_with_unseparated_pair(tree, ([inner[0]], [inner[0]])) == {}

    # three faces of one region touching a merged group is an induction bug
    fresh = RegionTree(g)
    side_a = face_edges(g, squares[0])
    side_b = face_edges(g, squares[3])
    with pytest.raises(InductionViolated):
        regions_with_unseparated_pair(fresh, (side_a, side_b))


def test_not_separating_rejected(grid3):
    g = grid3
    tree = RegionTree(g)
    squares = finite_faces(g)
    cyc = CompactCycle.from_darts(g, orient(g, face_edges(g, squares[0])))
    with pytest.raises(NotSeparating):
        tree.insert_cycle(cyc, tree.root, (squares[1], squares[2]))


def test_region_subpiece_runs(grid3):
    g = grid3
    tree = RegionTree(g)
    squares = finite_faces(g)
    ring = sorted({d >> 1 for d in g.faces[g.infinite_face]})
    insert_face_boundary(tree, squares[0])
    cyc = CompactCycle.from_darts(g, orient(g, ring))
    tree.insert_cycle(cyc, tree.root, (squares[1], g.infinite_face))
    r_ring = tree.parent(squares[1])
    assert tree.cycle_edge_sets[r_ring] == frozenset(ring)

    cross = [e for e in range(g.m) if e not in set(ring)
             and e not in set(face_edges(g, squares[0]))]
    darts = tree.cycles[r_ring].darts()
    run_edges = {darts[0] >> 1, darts[1] >> 1, darts[-1] >> 1}
    group = set(cross) | run_edges
    internal, runs = region_subpiece(tree, r_ring, group)
    assert internal == set(cross)
    assert len(runs) == 1, "wrap-around run must be stitched"
    assert [d >> 1 for d in runs[0]] == [darts[-1] >> 1, darts[0] >> 1,
                                         darts[1] >> 1]
