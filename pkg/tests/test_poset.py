"""Generic finite poset engine."""

import pytest

from alttamari.errors import CycleDetected, DuplicateElement, UnknownElement
from alttamari.poset import LinearPolynomial, Poset, build_poset, product


@pytest.fixture
def diamond():
    return build_poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


@pytest.fixture
def chain4():
    return build_poset("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


def test_leq(diamond):
    assert diamond.leq("a", "d")
    assert diamond.leq("b", "b")
    assert not diamond.leq("b", "c")


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        build_poset("ab", [("a", "b"), ("b", "a")])


def test_duplicate_rejected():
    with pytest.raises(DuplicateElement):
        build_poset("aa", [])


def test_unknown_element(diamond):
    with pytest.raises(UnknownElement):
        diamond.leq("a", "z")


def test_transitive_reduction_drops_redundant():
    p = build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.redundant_removed == 1
    assert len(p.covers) == 2
    assert p.leq("a", "c")


def test_interval_queries(diamond, chain4):
    assert sorted(diamond.interval_elements("a", "d")) == ["a", "b", "c", "d"]
    assert diamond.interval_height("a", "d") == 2
    assert not diamond.is_linear_interval("a", "d")
    assert chain4.is_linear_interval("a", "d")
    assert chain4.interval_height("a", "d") == 3
    assert diamond.count_maximal_chains("a", "d") == 2
    assert chain4.count_maximal_chains("a", "d") == 1


def test_linear_polynomial(diamond, chain4):
    # diamond: 4 trivial intervals, 4 covers, no taller linear interval
    assert diamond.linear_polynomial() == LinearPolynomial(4, 4)
    # chain: every one of the C(4,2)=6 nontrivial intervals is linear
    assert chain4.linear_polynomial() == LinearPolynomial(4, 6)


def test_linear_polynomial_product_law(diamond, chain4):
    big = product(diamond, chain4)
    assert big.linear_polynomial() == (
        diamond.linear_polynomial() * chain4.linear_polynomial()
    )


def test_epsilon_squared_is_zero():
    a = LinearPolynomial(2, 3)
    b = LinearPolynomial(5, 7)
    assert a * b == LinearPolynomial(10, 29)


def test_is_lattice(diamond, chain4):
    assert diamond.is_lattice()
    assert chain4.is_lattice()
    two_tops = build_poset("abc", [("a", "b"), ("a", "c")])
    assert not two_tops.is_lattice()


def test_product_order(diamond, chain4):
    big = product(diamond, chain4)
    assert len(big.elements) == 16
    assert big.leq(("a", "a"), ("d", "d"))
    assert not big.leq(("b", "a"), ("c", "d"))


def test_to_dot(diamond):
    dot = diamond.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 4
