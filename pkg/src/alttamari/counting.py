"""Linear-interval census, structural classification and count oracles.

classify() decides the shape of a pair of paths without building the poset:
trivial, covering, left (P = A d^k C B -> Q = A C d^k B with C a
delta-excursion) or right (P = A d C_1..C_k B -> Q = A C_1..C_k d B with
each C_j a delta-excursion).  census() tallies linear intervals of the
poset by height; closed_form() is the independent counting oracle.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .delta import IncrementFunction, build_alt_tamari, delta_excursion
from .dyck import DOWN, UP, DyckPath, catalan
from .errors import HeightOutOfRange, SizeMismatch, SizeTooLarge
from .poset import iter_bits

TRIVIAL = "trivial"
COVERING = "covering"
LEFT = "left"
RIGHT = "right"
NOT_LINEAR = "not_linear"


@dataclass(frozen=True)
class IntervalKind:
    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind in (LEFT, RIGHT) and self.k < 2:
            raise HeightOutOfRange("left/right intervals have k >= 2")

    @property
    def is_linear(self) -> bool:
        return self.kind != NOT_LINEAR

    @property
    def height(self) -> int | None:
        if self.kind == TRIVIAL:
            return 0
        if self.kind == COVERING:
            return 1
        if self.kind in (LEFT, RIGHT):
            return self.k
        return None

    def __str__(self) -> str:
        if self.kind in (LEFT, RIGHT):
            return f"{self.kind}({self.k})"
        return self.kind


KIND_TRIVIAL = IntervalKind(TRIVIAL)
KIND_COVERING = IntervalKind(COVERING)
KIND_NOT_LINEAR = IntervalKind(NOT_LINEAR)


def _common_prefix_len(a: str, b: str) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def classify(delta: IncrementFunction, low: DyckPath, high: DyckPath) -> IntervalKind:
    """Structural classification of the pair; no poset needed."""
    if low.n != high.n:
        raise SizeMismatch(f"sizes {low.n} and {high.n} differ")
    if delta.n != low.n:
        raise SizeMismatch(f"delta size {delta.n}, path size {low.n}")
    if low == high:
        return KIND_TRIVIAL
    w, v = low.word, high.word
    lcp = _common_prefix_len(w, v)
    if w[lcp] != DOWN or v[lcp] != UP:
        return KIND_NOT_LINEAR

    # Maximal down-run of w after the common prefix.
    run = lcp
    while run < len(w) and w[run] == DOWN:
        run += 1
    m = run - lcp
    # w cannot end in the middle of a down-run mismatch: run < len(w).
    i = low.up_number(run)
    span = delta_excursion(delta, low, i)
    segment = w[span.start : span.end + 1]
    tail = w[span.end + 1 :]
    if v == w[:lcp] + segment + DOWN * m + tail:
        return KIND_COVERING if m == 1 else IntervalKind(LEFT, m)
    if m >= 2:
        return KIND_NOT_LINEAR

    # Right pattern: strip the single down step, read consecutive
    # delta-excursions greedily (they are uniquely delimited).
    pos = lcp + 1
    count = 0
    while pos < len(w) and w[pos] == UP:
        i = low.up_number(pos)
        span = delta_excursion(delta, low, i)
        pos = span.end + 1
        count += 1
        if count >= 2 and v == w[:lcp] + w[lcp + 1 : pos] + DOWN + w[pos:]:
            return IntervalKind(RIGHT, count)
    return KIND_NOT_LINEAR


@dataclass
class CountsTable:
    n: int
    delta: IncrementFunction
    counts: dict[int, int] = field(default_factory=dict)

    def rows(self):
        """(height, count, closed_form, match) for all relevant heights."""
        heights = sorted(set(self.counts) | set(range(self.n)))
        for k in heights:
            got = self.counts.get(k, 0)
            want = closed_form(self.n, k)
            yield k, got, want, got == want

    def total(self) -> int:
        return sum(self.counts.values())

    def matches_closed_form(self) -> bool:
        return all(match for _, _, _, match in self.rows())


from functools import lru_cache


@lru_cache(maxsize=512)
def _census_counts(delta: IncrementFunction, n: int) -> tuple:
    poset = build_alt_tamari(delta)
    counts: dict[int, int] = {}
    up, down = poset.up, poset.down
    for a in range(len(poset.elements)):
        for b in iter_bits(up[a]):
            inter = up[a] & down[b]
            m = inter.bit_count()
            if m == 1:
                counts[0] = counts.get(0, 0) + 1
            elif m <= n and poset.is_chain_mask(inter):
                counts[m - 1] = counts.get(m - 1, 0) + 1
    return tuple(sorted(counts.items()))


def census(delta: IncrementFunction, n: int) -> CountsTable:
    """Tally linear intervals of Tam^delta_n by height.

    A linear interval has at most n elements, so larger intervals are
    skipped before the chain test.
    """
    if delta.n != n:
        raise SizeMismatch(f"delta size {delta.n}, n = {n}")
    return CountsTable(n, delta, dict(_census_counts(delta, n)))


def closed_form(n: int, k: int) -> int:
    """Number of linear intervals of height k in any Tam^delta_n."""
    if n < 1 or k < 0:
        raise HeightOutOfRange(f"bad (n, k) = ({n}, {k})")
    if k >= n:
        return 0
    if k == 0:
        return catalan(n)
    if k == 1:
        return math.comb(2 * n - 1, n - 2) if n >= 2 else 0
    return 2 * math.comb(2 * n - k, n - k - 1)


def total_closed_form(n: int) -> int:
    """Total linear-interval count; OEIS A344136."""
    if n < 1:
        raise HeightOutOfRange(f"bad n = {n}")
    total = catalan(n)
    if n >= 2:
        total += math.comb(2 * n - 1, n - 2)
    if n >= 3:
        total += 2 * math.comb(2 * n - 1, n + 2)
    return total


def left_right_split(delta: IncrementFunction, n: int, k: int) -> tuple[int, int]:
    """(left, right) counts of height-k linear intervals, k >= 2."""
    if not 2 <= k < n:
        raise HeightOutOfRange(f"need 2 <= k < n, got k={k}, n={n}")
    if delta.n != n:
        raise SizeMismatch(f"delta size {delta.n}, n = {n}")
    poset = build_alt_tamari(delta)
    paths = poset.elements
    left = right = 0
    for a in range(len(paths)):
        for b in iter_bits(poset.up[a]):
            inter = poset.up[a] & poset.down[b]
            if inter.bit_count() != k + 1 or not poset.is_chain_mask(inter):
                continue
            kind = classify(delta, paths[a], paths[b])
            if kind.kind == LEFT:
                left += 1
            elif kind.kind == RIGHT:
                right += 1
    return left, right


def counts_to_csv(table: CountsTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "delta", "height", "count", "closed_form", "match"])
    for k, got, want, match in table.rows():
        writer.writerow([table.n, str(table.delta), k, got, want, match])
    return buf.getvalue()


def counts_to_json(table: CountsTable) -> str:
    return json.dumps(
        {
            "n": table.n,
            "delta": str(table.delta),
            "rows": [
                {"height": k, "count": got, "closed_form": want, "match": match}
                for k, got, want, match in table.rows()
            ],
            "total": table.total(),
        }
    )
