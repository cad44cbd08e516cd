"""Finite posets from explicit cover relations.

Reachability is stored as one bitset (Python int) per element, which makes
leq O(1) and interval extraction a single AND.  Covers are kept transitively
reduced; redundant input covers are dropped with a count kept for callers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    CycleDetected,
    DuplicateElement,
    NotComparable,
    UnknownElement,
)


def iter_bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LinearPolynomial:
    """T + U*eps with eps^2 = 0: T trivial intervals, U nontrivial linear."""

    trivial: int
    linear: int

    def __mul__(self, other: "LinearPolynomial") -> "LinearPolynomial":
        return LinearPolynomial(
            self.trivial * other.trivial,
            self.trivial * other.linear + self.linear * other.trivial,
        )


class Poset:
    """Immutable poset over an indexed list of hashable element keys."""

    def __init__(self, elements, covers, _skip_reduction=False):
        self.elements = list(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise DuplicateElement("repeated element key")
        m = len(self.elements)
        for a, b in covers:
            if not (0 <= a < m and 0 <= b < m):
                raise UnknownElement(f"cover endpoint ({a},{b}) out of range")

        succ = [0] * m
        pred = [0] * m
        for a, b in covers:
            succ[a] |= 1 << b
            pred[b] |= 1 << a

        self._topo = self._topological_order(succ, pred)

        # up[i]/down[i]: reachability bitsets, reflexive.
        up = [0] * m
        down = [0] * m
        for i in reversed(self._topo):
            acc = 1 << i
            for j in iter_bits(succ[i]):
                acc |= up[j]
            up[i] = acc
        for i in self._topo:
            acc = 1 << i
            for j in iter_bits(pred[i]):
                acc |= down[j]
            down[i] = acc
        self.up = up
        self.down = down

        if _skip_reduction:
            reduced = sorted(set(covers))
            self.redundant_removed = 0
        else:
            reduced = []
            dropped = 0
            for a, b in sorted(set(covers)):
                if (up[a] & down[b]).bit_count() > 2:
                    dropped += 1
                else:
                    reduced.append((a, b))
            self.redundant_removed = dropped
        self.covers = reduced

    @staticmethod
    def _topological_order(succ, pred):
        m = len(succ)
        indeg = [p.bit_count() for p in pred]
        ready = [i for i in range(m) if indeg[i] == 0]
        order = []
        while ready:
            i = ready.pop()
            order.append(i)
            for j in iter_bits(succ[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if len(order) != m:
            raise CycleDetected("covers contain a directed cycle")
        return order

    # --- queries on element keys ---

    def _idx(self, e) -> int:
        try:
            return self.index[e]
        except KeyError:
            raise UnknownElement(repr(e)) from None

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a, b) -> bool:
        return bool(self.up[self._idx(a)] >> self._idx(b) & 1)

    def interval_mask(self, i: int, j: int) -> int:
        return self.up[i] & self.down[j]

    def interval_elements(self, a, b) -> set:
        i, j = self._idx(a), self._idx(b)
        if not self.up[i] >> j & 1:
            return set()
        return {self.elements[k] for k in iter_bits(self.interval_mask(i, j))}

    def interval_height(self, a, b) -> int:
        i, j = self._idx(a), self._idx(b)
        if not self.up[i] >> j & 1:
            raise NotComparable(f"{a!r} !<= {b!r}")
        return self._height(i, j)

    def _height(self, i: int, j: int) -> int:
        # Longest path from i to j by DP over the topological order,
        # restricted to the interval.
        inside = self.interval_mask(i, j)
        dist = {i: 0}
        for k in self._topo:
            if not inside >> k & 1 or k not in dist:
                continue
            dk = dist[k]
            for a, b in self._cover_succ(k):
                if inside >> b & 1 and dist.get(b, -1) < dk + 1:
                    dist[b] = dk + 1
        return dist[j]

    def _cover_succ(self, k):
        # Covers of the full poset leaving k.  Interval subposets inherit
        # covers of the ambient poset only partially; _height and chain
        # counting recompute what they need.
        if not hasattr(self, "_succ_list"):
            succ = {}
            for a, b in self.covers:
                succ.setdefault(a, []).append((a, b))
            self._succ_list = succ
        return self._succ_list.get(k, ())

    def is_chain_mask(self, mask: int) -> bool:
        """True iff the elements of mask are pairwise comparable."""
        bits = list(iter_bits(mask))
        for x in range(len(bits)):
            bx = bits[x]
            for y in range(x + 1, len(bits)):
                by = bits[y]
                if not (self.up[bx] >> by & 1 or self.up[by] >> bx & 1):
                    return False
        return True

    def is_linear_interval(self, a, b, method: str = "chain") -> bool:
        i, j = self._idx(a), self._idx(b)
        if not self.up[i] >> j & 1:
            raise NotComparable(f"{a!r} !<= {b!r}")
        if method == "chain":
            return self.is_chain_mask(self.interval_mask(i, j))
        if method == "unique-chain":
            return self.count_maximal_chains(a, b) == 1
        raise ValueError(f"unknown method {method!r}")

    def count_maximal_chains(self, a, b) -> int:
        """Number of maximal chains from a to b inside the interval."""
        i, j = self._idx(a), self._idx(b)
        if not self.up[i] >> j & 1:
            raise NotComparable(f"{a!r} !<= {b!r}")
        inside = self.interval_mask(i, j)
        members = list(iter_bits(inside))
        # Covers of the interval subposet: x < y with nothing in between.
        paths = {i: 1}
        for x in self._topo:
            if x not in paths or not inside >> x & 1:
                continue
            px = paths[x]
            for y in members:
                if x == y or not self.up[x] >> y & 1:
                    continue
                between = self.up[x] & self.down[y] & inside
                if between.bit_count() == 2:
                    paths[y] = paths.get(y, 0) + px
        return paths.get(j, 1 if i == j else 0)

    def comparable_pairs(self):
        """All ordered pairs (i, j) of indices with element i <= element j."""
        for i in range(len(self.elements)):
            for j in iter_bits(self.up[i]):
                yield i, j

    def linear_polynomial(self) -> LinearPolynomial:
        linear = 0
        for i, j in self.comparable_pairs():
            if i != j and self.is_chain_mask(self.interval_mask(i, j)):
                linear += 1
        return LinearPolynomial(len(self.elements), linear)

    def is_lattice(self) -> bool:
        """True iff every pair of elements has a join and a meet."""
        return self._lattice_scan()

    def _has_extremum(self, bound_set: int, least: bool) -> bool:
        table = self.up if least else self.down
        for k in iter_bits(bound_set):
            if bound_set & table[k] == bound_set:
                return True
        return False

    def _lattice_scan(self) -> bool:
        m = len(self.elements)
        for i in range(m):
            for j in range(i + 1, m):
                joins = self.up[i] & self.up[j]
                if not joins or not self._has_extremum(joins, least=True):
                    return False
                meets = self.down[i] & self.down[j]
                if not meets or not self._has_extremum(meets, least=False):
                    return False
        return True

    # --- exports ---

    def to_dot(self, label=str) -> str:
        lines = ["digraph hasse {"]
        for k, e in enumerate(self.elements):
            lines.append(f'  n{k} [label="{label(e)}"];')
        for a, b in self.covers:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines)

    def to_json(self, label=str) -> str:
        return json.dumps(
            {
                "elements": [label(e) for e in self.elements],
                "covers": [list(c) for c in self.covers],
            }
        )


def build_poset(elements, covers) -> Poset:
    """Build a poset from element keys and cover pairs (indices or keys)."""
    elements = list(elements)
    index = {e: k for k, e in enumerate(elements)}
    if len(index) != len(elements):
        raise DuplicateElement("repeated element key")
    pairs = []
    for a, b in covers:
        ia = a if isinstance(a, int) else index.get(a)
        ib = b if isinstance(b, int) else index.get(b)
        if ia is None or ib is None:
            raise UnknownElement(f"cover ({a!r},{b!r})")
        pairs.append((ia, ib))
    return Poset(elements, pairs)


def product(pa: Poset, pb: Poset) -> Poset:
    """Cartesian product, ordered componentwise."""
    elements = [(x, y) for x in pa.elements for y in pb.elements]
    nb = len(pb.elements)
    covers = []
    for a, b in pa.covers:
        for y in range(nb):
            covers.append((a * nb + y, b * nb + y))
    for x in range(len(pa.elements)):
        for a, b in pb.covers:
            covers.append((x * nb + a, x * nb + b))
    return Poset(elements, covers)
