"""Binary trees and Tamari machinery."""

import pytest

from alttamari import trees
from alttamari.dyck import catalan
from alttamari.errors import LeafOutOfRange, RootEdgeForbidden
from alttamari.trees import (
    LEAF,
    ROOT_EDGE,
    build_L,
    build_R,
    enumerate_trees,
    graft,
    is_new_interval,
    left_comb,
    left_rotation_covers,
    mirror_tree,
    plug,
    right_comb,
    tree_to_paren,
    tree_to_path,
)

Y = (None, None)


@pytest.mark.parametrize("n", range(7))
def test_enumeration_matches_catalan(n):
    ts = enumerate_trees(n)
    assert len(ts) == catalan(n)
    assert all(trees.size(t) == n for t in ts)
    assert all(trees.leaf_count(t) == n + 1 for t in ts)


def test_combs_and_encoding():
    assert tree_to_path(right_comb(2)).word == "udud"
    assert tree_to_path(left_comb(2)).word == "uudd"
    assert tree_to_path(LEAF).word == ""
    assert tree_to_paren(right_comb(2)) == "(.(..))"


def test_parse_paren_roundtrip():
    for t in enumerate_trees(5):
        assert trees.parse_paren(tree_to_paren(t)) == t


def test_left_rotations():
    # ((..)(..)) rotates only at the root: (A,(B,C)) with A=B=C=leaf inside
    t = (LEAF, Y)  # right comb of size 2
    assert left_rotation_covers(t) == [(Y, LEAF)]
    assert left_rotation_covers(left_comb(2)) == []


def test_rotation_count_over_all_trees():
    # one rotation per internal right edge; sum over Tam_4 = 21 covers
    total = sum(len(left_rotation_covers(t)) for t in enumerate_trees(4))
    assert total == 21


def test_mirror_tree_is_involution():
    for t in enumerate_trees(5):
        assert mirror_tree(mirror_tree(t)) == t
    assert mirror_tree(left_comb(3)) == right_comb(3)


def test_graft_replaces_leaf():
    assert graft(Y, 0, Y) == (Y, None)
    assert graft(Y, 1, Y) == (None, Y)
    assert trees.size(graft(left_comb(2), 2, right_comb(2))) == 4
    with pytest.raises(LeafOutOfRange):
        graft(Y, 2, Y)


def test_plug_adds_node():
    edges = trees.edges(Y)
    assert edges == [(0, "left"), (0, "right")]
    grown = plug(Y, (0, "left"), LEAF)
    assert trees.size(grown) == 2
    with pytest.raises(RootEdgeForbidden):
        plug(Y, ROOT_EDGE, LEAF)


def test_extremal_intervals_are_new():
    for n in range(2, 6):
        for iv in (build_L(n), build_R(n)):
            assert trees.size(iv.bottom) == n + 1
            assert trees.size(iv.top) == n + 1
            assert is_new_interval(iv)


def test_grafted_interval_is_not_new():
    # both faces share the subtree grafted onto the same leaf
    bot = graft(right_comb(2), 0, left_comb(2))
    top = graft(right_comb(2), 0, left_comb(2))
    iv = trees.TreeInterval(bot, top)
    assert not is_new_interval(iv)
