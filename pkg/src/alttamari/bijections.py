"""Constructive bijections for linear intervals.

Covering relations decompose into a down-marked path and one path; left
(resp. right) intervals of height k decompose into an up-marked (resp.
down-marked) path and k paths.  Composing with a different increment
function transports a linear interval between alt-Tamari posets of the
same size, preserving the height and the kind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import (
    COVERING,
    LEFT,
    RIGHT,
    TRIVIAL,
    IntervalKind,
    classify,
)
from .delta import (
    IncrementFunction,
    delta_excursion,
    word_delta_prefix,
)
from .dyck import DOWN, UP, DyckPath, match_up
from .errors import (
    IndexOutOfRange,
    NotACovering,
    NotLeft,
    NotLinear,
    NotRight,
    SizeMismatch,
)


@dataclass(frozen=True)
class MarkedPath:
    path: DyckPath
    mark: int
    mark_kind: str  # "up" or "down"

    def __post_init__(self):
        if self.mark_kind not in ("up", "down"):
            raise IndexOutOfRange(f"bad mark kind {self.mark_kind!r}")
        word = self.path.word
        if not 0 <= self.mark < len(word):
            raise IndexOutOfRange(f"mark {self.mark} outside the path")
        expected = UP if self.mark_kind == "up" else DOWN
        if word[self.mark] != expected:
            raise IndexOutOfRange(
                f"marked step is {word[self.mark]!r}, expected {expected!r}"
            )

    def __str__(self) -> str:
        w = self.path.word
        return w[: self.mark + 1] + "*" + w[self.mark + 1 :]


def parse_marked(text: str) -> MarkedPath:
    """Parse a word with a '*' suffix on the marked step."""
    star = text.index("*")
    word = text.replace("*", "")
    kind = "up" if text[star - 1] in "uU1" else "down"
    return MarkedPath(DyckPath(word), star - 1, kind)


@dataclass(frozen=True)
class Decomposition:
    kind: IntervalKind
    marked: MarkedPath
    parts: tuple[DyckPath, ...]

    @property
    def total_size(self) -> int:
        """Size of the interval this decomposition composes to."""
        return self.marked.path.n + sum(p.n for p in self.parts) + len(self.parts)


def _lcp(a: str, b: str) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def decompose_covering(
    delta: IncrementFunction, low: DyckPath, high: DyckPath
) -> Decomposition:
    kind = classify(delta, low, high)
    if kind.kind != COVERING:
        raise NotACovering(f"[{low}, {high}] classifies as {kind}")
    w = low.word
    lcp = _lcp(w, high.word)
    i = low.up_number(lcp + 1)
    end = match_up(low, i)  # full excursion E = w[lcp+1 .. end]
    inner = w[lcp + 2 : end]  # E = u E' d
    marked = MarkedPath(DyckPath(w[:lcp] + DOWN + w[end + 1 :]), lcp, "down")
    return Decomposition(kind, marked, (DyckPath(inner),))


def compose_covering(
    delta: IncrementFunction, dec: Decomposition
) -> tuple[DyckPath, DyckPath]:
    if len(dec.parts) != 1 or dec.marked.mark_kind != "down":
        raise NotACovering("covering decompositions have one part, down mark")
    if delta.n != dec.total_size:
        raise SizeMismatch(f"delta size {delta.n}, interval size {dec.total_size}")
    w0 = dec.marked.path.word
    head, tail = w0[: dec.marked.mark], w0[dec.marked.mark + 1 :]
    i = head.count(UP) + 1
    low = DyckPath(head + DOWN + UP + dec.parts[0].word + DOWN + tail)
    span = delta_excursion(delta, low, i)
    w = low.word
    high = DyckPath(
        w[:span.start - 1] + w[span.start : span.end + 1] + DOWN + w[span.end + 1 :]
    )
    return low, high


def decompose_left(
    delta: IncrementFunction, low: DyckPath, high: DyckPath
) -> Decomposition:
    kind = classify(delta, low, high)
    if kind.kind != LEFT:
        raise NotLeft(f"[{low}, {high}] classifies as {kind}")
    k = kind.k
    w = low.word
    lcp = _lcp(w, high.word)
    # The k down steps after the common prefix match up steps inside it;
    # the j-th matched up step (left to right) pairs with the (k-j+1)-th
    # down step of the run.
    matches = sorted(
        _match_down(w, lcp + r) for r in range(k)
    )
    head = w[: matches[0]]
    parts = []
    for j in range(k):
        stop = matches[j + 1] if j + 1 < k else lcp
        parts.append(DyckPath(w[matches[j] + 1 : stop]))
    span = delta_excursion(delta, low, low.up_number(lcp + k))
    marked_word = head + w[span.start : span.end + 1] + w[span.end + 1 :]
    marked = MarkedPath(DyckPath(marked_word), len(head), "up")
    return Decomposition(kind, marked, tuple(parts))


def _match_down(word: str, index: int) -> int:
    """Index of the up step matching the down step at the given index."""
    depth = 0
    for k in range(index, -1, -1):
        depth += -1 if word[k] == UP else 1
        if depth == 0:
            return k
    raise IndexOutOfRange(f"unmatched down step at {index}")


def compose_left(
    delta: IncrementFunction, dec: Decomposition
) -> tuple[DyckPath, DyckPath]:
    k = len(dec.parts)
    if k < 2 or dec.marked.mark_kind != "up":
        raise NotLeft("left decompositions have k >= 2 parts, up mark")
    if delta.n != dec.total_size:
        raise SizeMismatch(f"delta size {delta.n}, interval size {dec.total_size}")
    w0 = dec.marked.path.word
    head, tail = w0[: dec.marked.mark], w0[dec.marked.mark + 1 :]
    prefix = head + "".join(UP + p.word for p in dec.parts)
    low = DyckPath(prefix + DOWN * k + UP + tail)
    i = prefix.count(UP) + 1
    span = delta_excursion(delta, low, i)
    w = low.word
    high = DyckPath(
        w[: len(prefix)]
        + w[span.start : span.end + 1]
        + DOWN * k
        + w[span.end + 1 :]
    )
    return low, high


def decompose_right(
    delta: IncrementFunction, low: DyckPath, high: DyckPath
) -> Decomposition:
    kind = classify(delta, low, high)
    if kind.kind != RIGHT:
        raise NotRight(f"[{low}, {high}] classifies as {kind}")
    k = kind.k
    w = low.word
    lcp = _lcp(w, high.word)
    # Read the k delta-excursions after the stripped down step.
    seg_spans = []
    pos = lcp + 1
    for _ in range(k):
        span = delta_excursion(delta, low, low.up_number(pos))
        seg_spans.append(span)
        pos = span.end + 1
    firsts = [low.up_number(s.start) for s in seg_spans]
    # Peel tail segments from the innermost excursion outwards.
    segments = [w[s.start : s.end + 1] for s in seg_spans]
    tails = [""] * k
    cursor = pos
    for j in range(k - 1, -1, -1):
        d_idx = match_up(low, firsts[j])
        if d_idx >= cursor:
            tails[j] = w[cursor : d_idx + 1]
            cursor = d_idx + 1
    rest = w[cursor:]
    reconstructed = (
        w[:lcp] + DOWN + "".join(segments) + "".join(reversed(tails)) + rest
    )
    assert reconstructed == w, "right-interval peeling failed to rebuild the path"
    marked = MarkedPath(DyckPath(w[:lcp] + DOWN + rest), lcp, "down")
    parts = tuple(
        DyckPath((segments[j] + tails[j])[1:-1]) for j in range(k)
    )
    return Decomposition(kind, marked, parts)


def compose_right(
    delta: IncrementFunction, dec: Decomposition
) -> tuple[DyckPath, DyckPath]:
    k = len(dec.parts)
    if k < 2 or dec.marked.mark_kind != "down":
        raise NotRight("right decompositions have k >= 2 parts, down mark")
    if delta.n != dec.total_size:
        raise SizeMismatch(f"delta size {delta.n}, interval size {dec.total_size}")
    w0 = dec.marked.path.word
    head, tail = w0[: dec.marked.mark], w0[dec.marked.mark + 1 :]
    segments = []
    tails = []
    next_up = head.count(UP) + 1
    for part in dec.parts:
        fragment = UP + part.word + DOWN
        cut = word_delta_prefix(delta, fragment, next_up)
        segments.append(fragment[:cut])
        tails.append(fragment[cut:])
        next_up += segments[-1].count(UP)
    low = DyckPath(
        head + DOWN + "".join(segments) + "".join(reversed(tails)) + tail
    )
    high = DyckPath(
        head + "".join(segments) + DOWN + "".join(reversed(tails)) + tail
    )
    return low, high


_DECOMPOSERS = {
    COVERING: decompose_covering,
    LEFT: decompose_left,
    RIGHT: decompose_right,
}
_COMPOSERS = {
    COVERING: compose_covering,
    LEFT: compose_left,
    RIGHT: compose_right,
}


def decompose(
    delta: IncrementFunction, low: DyckPath, high: DyckPath
) -> Decomposition:
    """Dispatch on the interval kind; trivial intervals have no decomposition."""
    kind = classify(delta, low, high)
    if kind.kind == TRIVIAL or not kind.is_linear:
        raise NotLinear(f"[{low}, {high}] classifies as {kind}")
    return _DECOMPOSERS[kind.kind](delta, low, high)


def compose(delta: IncrementFunction, dec: Decomposition) -> tuple[DyckPath, DyckPath]:
    return _COMPOSERS[dec.kind.kind](delta, dec)


def transport(
    delta: IncrementFunction,
    delta_to: IncrementFunction,
    low: DyckPath,
    high: DyckPath,
) -> tuple[DyckPath, DyckPath]:
    """Move a linear interval of Tam^delta to Tam^delta_to, same height."""
    if delta.n != delta_to.n:
        raise SizeMismatch("increment functions must have the same size")
    kind = classify(delta, low, high)
    if not kind.is_linear:
        raise NotLinear(f"[{low}, {high}] classifies as {kind}")
    if kind.kind == TRIVIAL:
        return low, high
    dec = _DECOMPOSERS[kind.kind](delta, low, high)
    return _COMPOSERS[kind.kind](delta_to, dec)
