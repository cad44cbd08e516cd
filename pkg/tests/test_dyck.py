"""Dyck path core operations."""

import pytest
from hypothesis import given, strategies as st

from alttamari import dyck
from alttamari.dyck import DyckPath, Span, catalan, enumerate_paths, parse_dyck
from alttamari.errors import BadAlphabet, IndexOutOfRange, NonDyckWord


def test_parse_aliases():
    assert parse_dyck("UD10").word == "udud"
    assert parse_dyck("uudd") == DyckPath("uudd")


def test_parse_rejects_bad_alphabet():
    with pytest.raises(BadAlphabet):
        parse_dyck("uxdd")


@pytest.mark.parametrize("word", ["ud" * 3 + "d", "du", "uddu", "u"])
def test_non_dyck_words_rejected(word):
    with pytest.raises(NonDyckWord):
        DyckPath(word)


def test_heights():
    assert dyck.heights(parse_dyck("uududd")) == (0, 1, 2, 1, 2, 1)
    assert dyck.heights(parse_dyck("")) == ()


def test_match_up_and_excursion():
    p = parse_dyck("uududd")
    assert dyck.match_up(p, 1) == 5
    assert dyck.match_up(p, 2) == 2
    assert dyck.excursion(p, 2) == Span(1, 2)
    with pytest.raises(IndexOutOfRange):
        dyck.match_up(p, 4)


def test_valleys_and_peaks():
    p = parse_dyck("uududd")
    assert dyck.valleys(p) == [2]
    assert dyck.peaks(p) == [1, 3]
    assert dyck.valleys(parse_dyck("ududud")) == [1, 3]


def test_mirror_is_involution():
    assert dyck.mirror(parse_dyck("uuddud")) == parse_dyck("uduudd")
    for p in enumerate_paths(5):
        assert dyck.mirror(dyck.mirror(p)) == p


def test_includes_is_pointwise_height_order():
    low, high = parse_dyck("ududud"), parse_dyck("uuuddd")
    assert dyck.includes(low, high)
    assert not dyck.includes(high, low)
    assert dyck.includes(low, low)


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (3, 5), (5, 42), (7, 429)])
def test_enumeration_matches_catalan(n, count):
    paths = enumerate_paths(n)
    assert len(paths) == count == catalan(n)
    assert len(set(paths)) == count
    # lexicographic with u ordered before d
    key = lambda w: [0 if c == "u" else 1 for c in w]
    assert [p.word for p in paths] == sorted((p.word for p in paths), key=key)


@given(st.integers(min_value=0, max_value=7))
def test_up_positions_are_ups(n):
    for p in enumerate_paths(n):
        assert all(p.word[i] == "u" for i in p.up_positions)
        assert len(p.up_positions) == n
