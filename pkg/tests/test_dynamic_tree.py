import random

import pytest

from planarcut.dynamic_tree import DynamicTree
from planarcut.errors import (AlreadyRoot, CycleWouldForm, DifferentTrees,
                              DOutOfRange, InputError)


class NaiveForest:
    def __init__(self):
        self.parent = {}
        self.value = {}

    def add_node(self, v, value=None):
        self.parent[v] = None
        self.value[v] = value

    def link(self, c, p):
        self.parent[c] = p

    def cut(self, c):
        self.parent[c] = None

    def path_to_root(self, v):
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def root_of(self, v):
        return self.path_to_root(v)[-1]

    def depth(self, v):
        return len(self.path_to_root(v)) - 1

    def lca(self, a, b):
        pa = set(self.path_to_root(a))
        for x in self.path_to_root(b):
            if x in pa:
                return x
        return None

    def is_descendant(self, anc, v):
        return anc in self.path_to_root(v)

    def ancestor_at_depth(self, v, k):
        path = self.path_to_root(v)[::-1]
        return path[k]

    def path_min(self, v):
        best, who = None, None
        for x in reversed(self.path_to_root(v)):
            val = self.value[x]
            if val is not None and (best is None or val < best):
                best, who = val, x
        return best, who


def test_basic_shape():
    t = DynamicTree()
    for v in range(5):
        t.add_node(v)
    t.link(1, 0)
    t.link(2, 0)
    t.link(3, 1)
    t.link(4, 3)
    assert t.root_of(4) == 0
    assert t.depth(4) == 3
    assert t.parent_of(4) == 3
    assert t.lca(4, 2) == 0
    assert t.lca(4, 1) == 1
    assert t.is_descendant(1, 4)
    assert not t.is_descendant(2, 4)
    assert t.ancestor_at_depth(4, 0) == 0
    assert t.ancestor_at_depth(4, 2) == 3
    assert t.jump(0, 4, 1) == 1
    assert t.jump(1, 4, 1) == 3
    t.cut(3)
    assert t.root_of(4) == 3
    assert t.depth(4) == 1
    with pytest.raises(DifferentTrees):
        t.lca(4, 0)


def test_error_conditions():
    t = DynamicTree()
    for v in range(3):
        t.add_node(v)
    t.link(1, 0)
    with pytest.raises(InputError):
        t.link(1, 2)
    with pytest.raises(CycleWouldForm):
        t.link(0, 1)
    with pytest.raises(AlreadyRoot):
        t.cut(0)
    with pytest.raises(DOutOfRange):
        t.ancestor_at_depth(1, 5)
    with pytest.raises(DOutOfRange):
        t.jump(1, 0, 1)
    with pytest.raises(InputError):
        t.add_node(1)


def test_path_min_tracks_values():
    t = DynamicTree()
    vals = {0: 5, 1: 3, 2: 9, 3: None, 4: 4}
    for v, x in vals.items():
        t.add_node(v, x)
    for c, p in ((1, 0), (2, 1), (3, 2), (4, 3)):
        t.link(c, p)
    assert t.path_min(4) == (3, 1)
    t.set_value(1, 10)
    assert t.path_min(4) == (4, 4)
    assert t.path_min(3) == (5, 0)
    t.set_value(3, 1)
    assert t.path_min(4) == (1, 3)


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_model_random_operations(seed):
    rng = random.Random(seed)
    N = 60
    t = DynamicTree()
    ref = NaiveForest()
    for v in range(N):
        val = rng.choice([None, rng.randint(0, 99)])
        t.add_node(v, val)
        ref.add_node(v, val)

    for step in range(600):
        op = rng.random()
        if op < 0.35:
            c = rng.randrange(N)
            p = rng.randrange(N)
            if ref.parent[c] is None and c != p and not ref.is_descendant(c, p):
                t.link(c, p)
                ref.link(c, p)
        elif op < 0.5:
            linked = [v for v in range(N) if ref.parent[v] is not None]
            if linked:
                c = rng.choice(linked)
                t.cut(c)
                ref.cut(c)
        elif op < 0.6:
            v = rng.randrange(N)
            val = rng.choice([None, rng.randint(0, 99)])
            t.set_value(v, val)
            ref.value[v] = val
        else:
            a, b = rng.randrange(N), rng.randrange(N)
            assert t.root_of(a) == ref.root_of(a)
            assert t.depth(a) == ref.depth(a)
            same = ref.root_of(a) == ref.root_of(b)
            if same:
                assert t.lca(a, b) == ref.lca(a, b)
            assert t.is_descendant(a, b) == ref.is_descendant(a, b)
            k = rng.randint(0, ref.depth(a))
            assert t.ancestor_at_depth(a, k) == ref.ancestor_at_depth(a, k)
            assert t.path_min(a) == ref.path_min(a)

    for v in range(N):
        assert t.depth(v) == ref.depth(v)
        assert t.path_min(v) == ref.path_min(v)


def test_operation_counter_moves():
    t = DynamicTree()
    for v in range(10):
        t.add_node(v)
    before = t.op_count
    for v in range(1, 10):
        t.link(v, v - 1)
    t.depth(9)
    assert t.op_count > before
