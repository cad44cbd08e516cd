"""Increment functions, delta-excursions, rotations and poset construction."""

import math

import pytest

from alttamari import delta as delta_mod
from alttamari.delta import (
    IncrementFunction,
    all_increment_functions,
    build_alt_tamari,
    delta_excursion,
    delta_rotation,
    delta_test_set,
    refines,
    step_stats,
    upper_covers,
)
from alttamari.dyck import Span, catalan, parse_dyck
from alttamari.errors import NotAValley, SizeMismatch


def test_from_string():
    assert IncrementFunction.from_string("tamari", 3) == IncrementFunction.ones(3)
    assert IncrementFunction.from_string("dyck", 3) == IncrementFunction.zeros(3)
    d = IncrementFunction.from_string("0110", 4)
    assert [d(i) for i in range(1, 5)] == [0, 1, 1, 0]
    with pytest.raises(SizeMismatch):
        IncrementFunction.from_string("01", 3)


def test_worked_example_statistics():
    # size-7 path from the worked example
    path = parse_dyck("uudduuduuddudd")
    d = IncrementFunction((0, 1, 1, 1, 0, 1, 0))
    stats = step_stats(d, path)
    assert stats.h == (1, 2, 5, 6, 8, 9, 12)
    assert stats.ell == (1, 2, 7, 2, 1, 2, 1)


def test_delta_excursion_is_prefix_of_excursion():
    from alttamari.dyck import excursion

    for n in range(1, 6):
        for d in delta_test_set(n):
            from alttamari.dyck import enumerate_paths

            for p in enumerate_paths(n):
                for i in range(1, n + 1):
                    span = delta_excursion(d, p, i)
                    full = excursion(p, i)
                    assert span.start == full.start
                    assert span.end <= full.end


def test_tamari_excursion_is_full_excursion():
    p = parse_dyck("uududd")
    d = IncrementFunction.ones(3)
    assert delta_excursion(d, p, 1) == Span(0, 5)
    d0 = IncrementFunction.zeros(3)
    # with delta(1) = 0 the up step alone already has delta-elevation 0
    assert delta_excursion(d0, p, 1) == Span(0, 0)


def test_delta_rotation():
    d = IncrementFunction.ones(3)
    assert delta_rotation(d, parse_dyck("ududud"), 2) == parse_dyck("uuddud")
    d0 = IncrementFunction.zeros(3)
    assert delta_rotation(d0, parse_dyck("ududud"), 2) == parse_dyck("uuddud")
    with pytest.raises(NotAValley):
        delta_rotation(d, parse_dyck("uududd"), 1)


def test_upper_covers_one_per_valley():
    d = IncrementFunction.ones(3)
    covers = upper_covers(d, parse_dyck("ududud"))
    assert len(covers) == 2
    assert {q.word for _, q in covers} == {"uuddud", "uduudd"}


@pytest.mark.parametrize("n", range(1, 6))
def test_poset_has_catalan_elements_and_binomial_covers(n):
    for d in delta_test_set(n):
        p = build_alt_tamari(d)
        assert len(p.elements) == catalan(n)
        want = math.comb(2 * n - 1, n - 2) if n >= 2 else 0
        assert len(p.covers) == want


def test_refinement_chain():
    n = 4
    zero, one = IncrementFunction.zeros(n), IncrementFunction.ones(n)
    mid = IncrementFunction((0, 1, 1, 0))
    assert refines(zero, mid, n) and refines(mid, one, n)
    assert refines(zero, one, n)
    assert not refines(one, zero, n)


def test_test_set_composition():
    small = delta_test_set(3)
    assert small[0] == IncrementFunction.ones(3)
    assert small[1] == IncrementFunction.zeros(3)
    assert len(small) == len(all_increment_functions(3)) == 8
    big = delta_test_set(7)
    assert len(big) == 10  # two constants + 8 seeded randoms
    assert big == delta_test_set(7)  # deterministic


def test_leq_is_pointwise():
    a = IncrementFunction((0, 1, 0))
    b = IncrementFunction((1, 1, 0))
    assert a.leq(b) and not b.leq(a)
