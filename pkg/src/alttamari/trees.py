"""Planar rooted binary trees, rotations, combs, grafting and plugging.

A tree is either the leaf, represented by None, or a pair (left, right).
The size of a tree is its number of internal nodes; a size-n tree has
n + 1 leaves.  Trees serialize to balanced-parenthesis strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dyck import DOWN, UP, DyckPath
from .errors import (
    IndexOutOfRange,
    InvalidInterval,
    LeafOutOfRange,
    RootEdgeForbidden,
    SizeTooLarge,
)

Tree = None | tuple  # Leaf or (left, right)

LEAF: Tree = None
Y: Tree = (None, None)

MAX_TREE_N = 14


def size(t: Tree) -> int:
    if t is None:
        return 0
    return size(t[0]) + size(t[1]) + 1


def leaf_count(t: Tree) -> int:
    return size(t) + 1


@lru_cache(maxsize=32)
def _trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for left_size in range(n):
        for left in _trees(left_size):
            for right in _trees(n - 1 - left_size):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(n: int) -> list:
    """All trees of size n, deterministic order (left size ascending)."""
    if n < 0:
        raise IndexOutOfRange(f"negative size {n}")
    if n > MAX_TREE_N:
        raise SizeTooLarge(f"size {n} above cap")
    return list(_trees(n))


def left_rotation_covers(t: Tree) -> list:
    """All trees obtained from t by one left rotation (upper covers)."""
    out = []

    def rec(sub, rebuild):
        if sub is None:
            return
        left, right = sub
        if right is not None:
            b, c = right
            out.append(rebuild(((left, b), c)))
        rec(left, lambda x: rebuild((x, right)))
        rec(right, lambda x: rebuild((left, x)))

    rec(t, lambda x: x)
    return out


def right_comb(n: int) -> Tree:
    if n < 1:
        raise IndexOutOfRange("combs need size >= 1")
    t = Y
    for _ in range(n - 1):
        t = (None, t)
    return t


def left_comb(n: int) -> Tree:
    if n < 1:
        raise IndexOutOfRange("combs need size >= 1")
    t = Y
    for _ in range(n - 1):
        t = (t, None)
    return t


def mirror_tree(t: Tree) -> Tree:
    if t is None:
        return None
    return (mirror_tree(t[1]), mirror_tree(t[0]))


def graft(t: Tree, k: int, sub: Tree) -> Tree:
    """Replace the k-th leaf of t (0-based, left to right) by sub."""
    if not 0 <= k <= size(t):
        raise LeafOutOfRange(f"leaf {k} of a size-{size(t)} tree")

    count = [0]

    def rec(node):
        if node is None:
            here = count[0]
            count[0] += 1
            return sub if here == k else None
        return (rec(node[0]), rec(node[1]))

    return rec(t)


ROOT_EDGE = "root"


def plug(t: Tree, edge, sub: Tree) -> Tree:
    """Insert a new node on an edge of t and hang sub from it.

    An edge is (node_preorder_index, side) with side "left" or "right";
    it is the edge going out of that node on that side.  The edge between
    the root and the root node is not addressable and is rejected.
    """
    if edge == ROOT_EDGE:
        raise RootEdgeForbidden("cannot plug into the root edge")
    node_idx, side = edge
    if side not in ("left", "right"):
        raise IndexOutOfRange(f"bad side {side!r}")
    if not 0 <= node_idx < size(t):
        raise IndexOutOfRange(f"node {node_idx} of a size-{size(t)} tree")

    count = [0]

    def rec(node):
        if node is None:
            return None
        my_idx = count[0]
        count[0] += 1
        left, right = node
        if my_idx == node_idx:
            if side == "left":
                # new node on the left edge; sub becomes its right son
                return ((left, sub), right)
            return (left, (sub, right))
        new_left = rec(left)
        new_right = rec(right)
        return (new_left, new_right)

    return rec(t)


def edges(t: Tree) -> list:
    """All pluggable edges of t as (node_preorder_index, side) pairs."""
    return [(k, side) for k in range(size(t)) for side in ("left", "right")]


@dataclass(frozen=True)
class TreeInterval:
    bottom: Tree
    top: Tree

    def __post_init__(self):
        if size(self.bottom) != size(self.top):
            raise InvalidInterval("bottom and top sizes differ")


def build_R(n: int) -> TreeInterval:
    """Extremal right interval in the size-(n+1) Tamari lattice."""
    if n < 1:
        raise IndexOutOfRange("n >= 1 required")
    return TreeInterval(right_comb(n + 1), (right_comb(n), None))


def build_L(n: int) -> TreeInterval:
    """Mirror image of build_R: extremal left interval."""
    if n < 1:
        raise IndexOutOfRange("n >= 1 required")
    return TreeInterval((None, left_comb(n)), left_comb(n + 1))


def _leaf_spans(t: Tree) -> set:
    """Leaf ranges (start, end) covered by each internal node."""
    spans = set()

    def rec(node, offset):
        if node is None:
            return 1
        nl = rec(node[0], offset)
        nr = rec(node[1], offset + nl)
        spans.add((offset, offset + nl + nr))
        return nl + nr

    rec(t, 0)
    return spans


def is_new_interval(interval: TreeInterval) -> bool:
    """True iff bottom and top share no proper common leaf span.

    A shared proper span witnesses a grafting decomposition, so the
    interval factors and is not new.
    """
    n = size(interval.bottom)
    full = (0, n + 1)
    common = _leaf_spans(interval.bottom) & _leaf_spans(interval.top)
    return common <= {full}


def tree_to_path(t: Tree) -> DyckPath:
    """Recursive encoding: leaf -> empty, (L, R) -> R u L d.

    Under this encoding a left rotation of trees is exactly an upward
    cover of the Tamari lattice on Dyck paths (delta identically 1).
    """
    parts = []

    def rec(node):
        if node is None:
            return
        rec(node[1])
        parts.append(UP)
        rec(node[0])
        parts.append(DOWN)

    rec(t)
    return DyckPath("".join(parts))


def tree_to_paren(t: Tree) -> str:
    if t is None:
        return "."
    return f"({tree_to_paren(t[0])}{tree_to_paren(t[1])})"


def parse_paren(text: str) -> Tree:
    pos = [0]

    def rec():
        if pos[0] >= len(text):
            raise IndexOutOfRange("truncated tree text")
        c = text[pos[0]]
        pos[0] += 1
        if c == ".":
            return None
        if c != "(":
            raise IndexOutOfRange(f"bad character {c!r}")
        left = rec()
        right = rec()
        if pos[0] >= len(text) or text[pos[0]] != ")":
            raise IndexOutOfRange("missing closing parenthesis")
        pos[0] += 1
        return (left, right)

    t = rec()
    if pos[0] != len(text):
        raise IndexOutOfRange("trailing characters")
    return t
