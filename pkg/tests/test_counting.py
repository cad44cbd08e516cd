"""Linear-interval census, classification and closed forms."""

import json

import pytest

from alttamari.counting import (
    COVERING,
    LEFT,
    NOT_LINEAR,
    RIGHT,
    TRIVIAL,
    census,
    classify,
    closed_form,
    counts_to_csv,
    counts_to_json,
    left_right_split,
    total_closed_form,
)
from alttamari.delta import IncrementFunction, delta_test_set
from alttamari.dyck import parse_dyck

APPENDIX_ROWS = {
    1: {0: 1},
    2: {0: 2, 1: 1},
    3: {0: 5, 1: 5, 2: 2},
    4: {0: 14, 1: 21, 2: 12, 3: 2},
    5: {0: 42, 1: 84, 2: 56, 3: 14, 4: 2},
    6: {0: 132, 1: 330, 2: 240, 3: 72, 4: 16, 5: 2},
}
TOTALS = {1: 1, 2: 3, 3: 12, 4: 49, 5: 198, 6: 792, 7: 3146}


@pytest.mark.parametrize("n", range(1, 6))
def test_census_matches_appendix(n):
    for d in (IncrementFunction.ones(n), IncrementFunction.zeros(n)):
        table = census(d, n)
        got = {k: v for k, v in table.counts.items() if v}
        want = {k: v for k, v in APPENDIX_ROWS[n].items() if v}
        assert got == want
        assert table.total() == TOTALS[n]
        assert table.matches_closed_form()


def test_census_is_delta_independent():
    n = 5
    tables = [census(d, n).counts for d in delta_test_set(n)]
    assert all(t == tables[0] for t in tables)


def test_closed_form_values():
    assert closed_form(6, 2) == 240  # S_2 coefficient of t^6
    assert closed_form(4, 1) == 21
    assert closed_form(4, 0) == 14
    assert closed_form(3, 3) == 0  # k >= n
    assert closed_form(1, 1) == 0
    assert total_closed_form(4) == 49
    assert total_closed_form(7) == 3146


def test_classify_kinds():
    d = IncrementFunction.ones(3)
    same = parse_dyck("ududud")
    assert classify(d, same, same).kind == TRIVIAL
    cover = classify(d, parse_dyck("ududud"), parse_dyck("uuddud"))
    assert cover.kind == COVERING and cover.height == 1
    d4 = IncrementFunction.ones(4)
    left = classify(d4, parse_dyck("uuudddud"), parse_dyck("uuuudddd"))
    assert left.kind == LEFT and left.k == 3 and left.height == 3
    right = classify(d4, parse_dyck("udududud"), parse_dyck("uudududd"))
    assert right.kind == RIGHT and right.k == 3 and right.height == 3
    notlin = classify(d4, parse_dyck("udududud"), parse_dyck("uuuudddd"))
    assert notlin.kind == NOT_LINEAR and notlin.height is None


def test_left_right_split_sums_to_closed_form():
    for n in range(2, 6):
        for d in delta_test_set(n):
            for k in range(2, n):
                lo, hi = left_right_split(d, n, k)
                assert lo + hi == closed_form(n, k)


def test_serialization():
    table = census(IncrementFunction.ones(3), 3)
    data = json.loads(counts_to_json(table))
    csv_text = counts_to_csv(table)
    assert csv_text.splitlines()[0].startswith("n,delta,height")
    assert len(csv_text.splitlines()) >= 3
    assert data  # non-empty payload
