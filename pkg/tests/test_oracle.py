import random
from itertools import combinations

import pytest

from planarcut import baseline
from planarcut.errors import (InputError, SameVertex, TooSmall,
                              UnknownVertex)
from planarcut.generators import (grid_graph, random_delaunay_graph,
                                  theta_graph, triangle_graph)
from planarcut.oracle import MinCutOracle, PathMinIndex, build_oracle


@pytest.fixture(scope="module")
def delaunay12():
    return random_delaunay_graph(12, seed=0)


@pytest.fixture(scope="module")
def delaunay12_oracle(delaunay12):
    return build_oracle(delaunay12, mode="cut")


@pytest.fixture(scope="module")
def grid34_oracle():
    g = grid_graph(3, 4, rng=random.Random(7))
    return g, build_oracle(g, mode="cut")


def all_pairs_match(g, orc):
    for s, t in combinations(range(g.n), 2):
        assert orc.query_weight(s, t) == baseline.min_cut_value(g, s, t), \
            (s, t)


# -- weight queries ---------------------------------------------------------

def test_weights_triangle(tri):
    all_pairs_match(tri, build_oracle(tri))


def test_weights_theta(theta):
    all_pairs_match(theta, build_oracle(theta))


def test_weights_grid3(grid3):
    orc = build_oracle(grid3)
    all_pairs_match(grid3, orc)
    # unit 3x3 grid: every corner-center cut isolates the corner
    assert orc.query_weight(0, 4) == 2


def test_weights_delaunay(delaunay12, delaunay12_oracle):
    all_pairs_match(delaunay12, delaunay12_oracle)


def test_weights_weighted_grid(grid34_oracle):
    g, orc = grid34_oracle
    all_pairs_match(g, orc)


def test_gh_tree_shape(delaunay12, delaunay12_oracle):
    edges = delaunay12_oracle.ghtree()
    assert len(edges) == delaunay12.n - 1
    # tree path minima reproduce the query answers
    parent, fl = baseline.naive_gomory_hu(delaunay12)
    for s, t in combinations(range(delaunay12.n), 2):
        assert delaunay12_oracle.query_weight(s, t) == \
            baseline.gh_query(parent, fl, s, t)


def test_engines_agree_during_build(delaunay12):
    orc = build_oracle(delaunay12, cross_check=True)
    assert orc.stats["cross_checks"] == orc.stats["inserts"]
    assert orc.stats["inserts"] > 0


def test_safe_cycles_same_weights(grid3, theta):
    for g in (grid3, theta):
        fast = build_oracle(g)
        safe = build_oracle(g, safe_cycles=True)
        for s, t in combinations(range(g.n), 2):
            assert fast.query_weight(s, t) == safe.query_weight(s, t)


# -- cut reporting ------------------------------------------------------------

def removing_disconnects(g, cut, s, t):
    adj = [[] for _ in range(g.n)]
    for e in range(g.m):
        if e in cut:
            continue
        u, v = g.endpoints(e)
        adj[u].append(v)
        adj[v].append(u)
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return t not in seen


def check_cut_reports(g, orc):
    for s, t in combinations(range(g.n), 2):
        w = orc.query_weight(s, t)
        edges = orc.report_cut(s, t)
        assert sum(g.weights[e].base for e in edges) == w, (s, t)
        assert removing_disconnects(g, set(edges), s, t), (s, t)
        assert orc.last_report_counter <= 4 * len(edges) + 16, (s, t)


def test_report_cut_grid3(grid3):
    check_cut_reports(grid3, build_oracle(grid3))


def test_report_cut_delaunay(delaunay12, delaunay12_oracle):
    check_cut_reports(delaunay12, delaunay12_oracle)


def test_report_cut_weighted_grid(grid34_oracle):
    g, orc = grid34_oracle
    check_cut_reports(g, orc)


# -- minimum cycle basis ------------------------------------------------------

def gf2_rank(masks):
    basis = []
    for row in masks:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def check_mcb(g):
    ref_total, _ = baseline.brute_mcb(g)
    cycles = build_oracle(g, mode="mcb").mcb()
    dim = g.m - g.n + 1
    assert len(cycles) == dim
    masks = []
    for edges, w in cycles:
        assert w == sum(g.weights[e].base for e in edges)
        deg = {}
        mask = 0
        for e in edges:
            u, v = g.endpoints(e)
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            mask ^= 1 << e
        assert all(d % 2 == 0 for d in deg.values())
        masks.append(mask)
    assert gf2_rank(masks) == dim
    assert sum(w for _, w in cycles) == ref_total


def test_mcb_triangle(tri):
    check_mcb(tri)
    total = sum(w for _, w in build_oracle(tri, mode="mcb").mcb())
    assert total == 6


def test_mcb_theta_named_fixture():
    g = theta_graph(1, 2, 3)
    check_mcb(g)
    cycles = build_oracle(g, mode="mcb").mcb()
    assert len(cycles) == 2
    assert sum(w for _, w in cycles) == 14


def test_mcb_grid3(grid3):
    check_mcb(grid3)
    total = sum(w for _, w in build_oracle(grid3, mode="mcb").mcb())
    assert total == 16


def test_mcb_delaunay():
    check_mcb(random_delaunay_graph(10, seed=4))


# -- determinism --------------------------------------------------------------

def permuted_copy(g, seed):
    """Same graph with vertex labels and edge order shuffled."""
    from planarcut.planar_core import build_embedding

    rng = random.Random(seed)
    vmap = list(range(g.n))
    rng.shuffle(vmap)
    emap = list(range(g.m))
    rng.shuffle(emap)
    edges = []
    weights = []
    for e in emap:
        u, v = g.endpoints(e)
        edges.append((vmap[u], vmap[v]))
        weights.append(g.weights[e])
    back = [0] * g.m
    for new, old in enumerate(emap):
        back[old] = new
    rotations = [None] * g.n
    for v in range(g.n):
        rotations[vmap[v]] = [back[d >> 1] for d in g.out[v]]
    return build_embedding(g.n, edges, weights, rotations, scale=g.scale), \
        vmap


def test_permuted_input_same_answers(delaunay12, delaunay12_oracle):
    g2, vmap = permuted_copy(delaunay12, seed=3)
    orc2 = build_oracle(g2)
    for s, t in combinations(range(delaunay12.n), 2):
        assert delaunay12_oracle.query_weight(s, t) == \
            orc2.query_weight(vmap[s], vmap[t])
    w1 = sorted(w for _, _, w in delaunay12_oracle.ghtree())
    w2 = sorted(w for _, _, w in orc2.ghtree())
    assert w1 == w2


def test_permuted_input_same_mcb_total():
    g = random_delaunay_graph(11, seed=6)
    total = sum(w for _, w in build_oracle(g, mode="mcb").mcb())
    g2, _ = permuted_copy(g, seed=8)
    total2 = sum(w for _, w in build_oracle(g2, mode="mcb").mcb())
    assert total == total2


# -- path-minimum index --------------------------------------------------------

def test_path_min_index_random_trees():
    rng = random.Random(5)
    for trial in range(20):
        n = rng.randrange(2, 40)
        edges = []
        adj = [[] for _ in range(n)]
        for v in range(1, n):
            u = rng.randrange(v)
            w = (rng.randrange(1, 12), rng.randrange(3))
            adj[u].append((v, w))
            adj[v].append((u, w))
            edges.append((w, len(edges), u, v))
        pmi = PathMinIndex(n, edges)

        def naive(s, t):
            # min edge weight on the unique tree path
            stack = [(s, -1, None)]
            while stack:
                x, par, best = stack.pop()
                if x == t:
                    return best
                for y, w in adj[x]:
                    if y != par:
                        stack.append(
                            (y, x, w if best is None or w < best else best))
            raise AssertionError("disconnected tree")

        for _ in range(60):
            s, t = rng.sample(range(n), 2)
            (w, _payload) = pmi.query(s, t)
            assert w == naive(s, t), (trial, s, t)


def test_path_min_index_rejects_cycles():
    from planarcut.errors import InternalAssertion
    edges = [((1, 0), 0, 0, 1), ((1, 0), 1, 1, 2), ((1, 0), 2, 2, 0)]
    with pytest.raises(InternalAssertion):
        PathMinIndex(3, edges)


# -- serialization --------------------------------------------------------------

def test_roundtrip_cut(tmp_path, delaunay12, delaunay12_oracle):
    p = tmp_path / "d12.pco"
    delaunay12_oracle.save(str(p))
    back = MinCutOracle.load(str(p))
    for s, t in combinations(range(delaunay12.n), 2):
        assert back.query_weight(s, t) == \
            delaunay12_oracle.query_weight(s, t)
        assert back.report_cut(s, t) == delaunay12_oracle.report_cut(s, t)


def test_roundtrip_mcb(tmp_path, grid3):
    orc = build_oracle(grid3, mode="mcb")
    p = tmp_path / "g3.pco"
    orc.save(str(p))
    assert MinCutOracle.load(str(p)).mcb() == orc.mcb()


def test_load_rejects_other_files(tmp_path):
    p = tmp_path / "junk.pco"
    p.write_bytes(b"NOPE" + b"\0" * 64)
    with pytest.raises(InputError):
        MinCutOracle.load(str(p))


# -- input validation -------------------------------------------------------------

def test_query_validation(delaunay12, delaunay12_oracle):
    orc = delaunay12_oracle
    with pytest.raises(SameVertex):
        orc.query_weight(3, 3)
    with pytest.raises(UnknownVertex):
        orc.query_weight(0, delaunay12.n)
    with pytest.raises(UnknownVertex):
        orc.report_cut(-1, 2)


def test_mode_mismatch(tri):
    cut = build_oracle(tri, mode="cut")
    basis = build_oracle(tri, mode="mcb")
    with pytest.raises(InputError):
        cut.mcb()
    with pytest.raises(InputError):
        basis.query_weight(0, 1)
    with pytest.raises(InputError):
        basis.ghtree()
    with pytest.raises(InputError):
        build_oracle(tri, mode="flow")


def test_too_small():
    from planarcut.planar_core import build_embedding
    from planarcut.weights import TieBreakWeight
    g = build_embedding(1, [(0, 0)], [TieBreakWeight.of(4)], [[0, 0]])
    with pytest.raises(TooSmall):
        build_oracle(g)
