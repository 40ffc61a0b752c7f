"""Rooted dynamic forest with logarithmic link, cut and path queries.

Splay-based link-cut trees specialised to rooted forests: trees are never
re-rooted, so no reversal flags are needed.  Besides the usual link/cut/lca
the structure answers depth, ancestor-at-depth (hence "jump one step from an
ancestor toward a descendant"), descendant tests and a minimum over node
values on the root-to-node path.

Region maintenance uses these to pay O(log n) per relocation instead of
rebuilding parent chains.
"""

from __future__ import annotations

from typing import Hashable

from .errors import (AlreadyRoot, CycleWouldForm, DifferentTrees, DOutOfRange,
                     InputError, UnknownVertex)


class _Node:
    __slots__ = ("item", "par", "pp", "left", "right", "sz", "val", "mn",
                 "mn_node", "parent_item")

    def __init__(self, item, val):
        self.item = item
        self.par: "_Node | None" = None     # splay parent
        self.pp: "_Node | None" = None      # path parent
        self.left: "_Node | None" = None
        self.right: "_Node | None" = None
        self.sz = 1
        self.val = val
        self.mn = val
        self.mn_node: "_Node" = self
        self.parent_item = None             # represented-tree parent (item)


def _lt(a, b) -> bool:
    if a is None:
        return False
    if b is None:
        return True
    return a < b


class DynamicTree:
    """Forest of rooted trees over hashable items."""

    def __init__(self):
        self._nodes: dict[Hashable, _Node] = {}
        self.op_count = 0

    # -- bookkeeping ---------------------------------------------------------

    def add_node(self, item: Hashable, value=None) -> None:
        if item in self._nodes:
            raise InputError(f"node {item!r} exists")
        self._nodes[item] = _Node(item, value)

    def __contains__(self, item: Hashable) -> bool:
        return item in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def _get(self, item: Hashable) -> _Node:
        try:
            return self._nodes[item]
        except KeyError:
            raise UnknownVertex(f"{item!r}") from None

    # -- splay machinery -------------------------------------------------------

    @staticmethod
    def _update(x: _Node) -> None:
        x.sz = 1
        if x.left is not None:
            x.sz += x.left.sz
        if x.right is not None:
            x.sz += x.right.sz
        # in-order scan so ties resolve to the node nearest the root
        mn, mn_node = None, x
        if x.left is not None and x.left.mn is not None:
            mn, mn_node = x.left.mn, x.left.mn_node
        if x.val is not None and _lt(x.val, mn):
            mn, mn_node = x.val, x
        if x.right is not None and _lt(x.right.mn, mn):
            mn, mn_node = x.right.mn, x.right.mn_node
        x.mn = mn
        x.mn_node = mn_node

    @staticmethod
    def _is_splay_root(x: _Node) -> bool:
        return x.par is None

    def _rotate(self, x: _Node) -> None:
        p = x.par
        g = p.par
        if p.left is x:
            p.left = x.right
            if x.right is not None:
                x.right.par = p
            x.right = p
        else:
            p.right = x.left
            if x.left is not None:
                x.left.par = p
            x.left = p
        p.par = x
        x.par = g
        if g is not None:
            if g.left is p:
                g.left = x
            elif g.right is p:
                g.right = x
        x.pp = p.pp
        p.pp = None
        self._update(p)
        self._update(x)

    def _splay(self, x: _Node) -> None:
        while not self._is_splay_root(x):
            p = x.par
            g = p.par
            if g is not None:
                if (g.left is p) == (p.left is x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _expose(self, x: _Node) -> _Node:
        """Make the root-to-x path preferred; returns the last path-parent
        switch point, which is lca(previous exposed node, x)."""
        self.op_count += 1
        self._splay(x)
        if x.right is not None:
            x.right.par = None
            x.right.pp = x
            x.right = None
            self._update(x)
        last = x
        while x.pp is not None:
            w = x.pp
            last = w
            self._splay(w)
            if w.right is not None:
                w.right.par = None
                w.right.pp = w
                w.right = None
            w.right = x
            x.par = w
            x.pp = None
            self._update(w)
            self._splay(x)
        return last

    # -- forest operations -------------------------------------------------------

    def link(self, child: Hashable, parent: Hashable) -> None:
        c = self._get(child)
        p = self._get(parent)
        if c.parent_item is not None:
            raise InputError(f"{child!r} already has a parent")
        if self.root_of(parent) == child:
            raise CycleWouldForm(f"{parent!r} is below {child!r}")
        self._expose(c)
        self._expose(p)
        c.pp = p
        c.parent_item = parent

    def cut(self, child: Hashable) -> None:
        c = self._get(child)
        if c.parent_item is None:
            raise AlreadyRoot(f"{child!r}")
        self._expose(c)
        # after expose, everything above child hangs in its left subtree
        assert c.left is not None
        c.left.par = None
        c.left.pp = None
        c.left = None
        self._update(c)
        c.parent_item = None

    def parent_of(self, item: Hashable):
        return self._get(item).parent_item

    def root_of(self, item: Hashable):
        x = self._get(item)
        self._expose(x)
        while x.left is not None:
            x = x.left
        self._splay(x)
        return x.item

    def depth(self, item: Hashable) -> int:
        x = self._get(item)
        self._expose(x)
        return x.left.sz if x.left is not None else 0

    def same_tree(self, a: Hashable, b: Hashable) -> bool:
        return self.root_of(a) == self.root_of(b)

    def lca(self, a: Hashable, b: Hashable):
        if a == b:
            self._get(a)
            return a
        na, nb = self._get(a), self._get(b)
        if not self.same_tree(a, b):
            raise DifferentTrees(f"{a!r} and {b!r}")
        self._expose(na)
        return self._expose(nb).item

    def is_descendant(self, ancestor: Hashable, item: Hashable) -> bool:
        """True when `item` lies in the subtree of `ancestor` (inclusively)."""
        if ancestor == item:
            self._get(ancestor)
            return True
        if not self.same_tree(ancestor, item):
            return False
        return self.lca(ancestor, item) == ancestor

    def ancestor_at_depth(self, item: Hashable, k: int):
        x = self._get(item)
        self._expose(x)
        d = x.left.sz if x.left is not None else 0
        if not 0 <= k <= d:
            raise DOutOfRange(f"depth {k} not on the path to {item!r}")
        while True:
            lsz = x.left.sz if x.left is not None else 0
            if k < lsz:
                x = x.left
            elif k == lsz:
                break
            else:
                k -= lsz + 1
                x = x.right
        self._splay(x)
        return x.item

    def jump(self, ancestor: Hashable, item: Hashable, steps: int = 1):
        """Node `steps` below `ancestor` on the path toward descendant `item`."""
        if not self.is_descendant(ancestor, item):
            raise DOutOfRange(f"{ancestor!r} is not an ancestor of {item!r}")
        d = self.depth(ancestor)
        return self.ancestor_at_depth(item, d + steps)

    # -- values ---------------------------------------------------------------

    def set_value(self, item: Hashable, value) -> None:
        x = self._get(item)
        self._splay(x)
        x.val = value
        self._update(x)

    def get_value(self, item: Hashable):
        return self._get(item).val

    def path_min(self, item: Hashable):
        """(value, node item) minimising the value over the root..item path;
        nodes with value None do not compete."""
        x = self._get(item)
        self._expose(x)
        self._splay(x)
        if x.mn is None:
            return None, None
        return x.mn, x.mn_node.item
