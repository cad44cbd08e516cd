"""Dyck paths as words over {u, d}.

A Dyck path of size n is a word with n up steps and n down steps in which
every prefix contains at least as many u's as d's.  Step indices are 0-based
internally; up steps are numbered 1..n from left to right.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadAlphabet,
    IndexOutOfRange,
    NonDyckWord,
    SizeMismatch,
    SizeTooLarge,
)

UP = "u"
DOWN = "d"

_ALIASES = {"u": UP, "U": UP, "1": UP, "d": DOWN, "D": DOWN, "0": DOWN}

DEFAULT_MAX_N = 14


def max_size(default: int = DEFAULT_MAX_N) -> int:
    """Size cap for exhaustive generation; ALT_TAMARI_MAX_N overrides."""
    env = os.environ.get("ALT_TAMARI_MAX_N")
    return int(env) if env else default


@dataclass(frozen=True, order=True)
class DyckPath:
    """Immutable Dyck word.  Equality and ordering are on the word itself.

    Note that u < d is wanted for the canonical (lexicographic) order, and
    'u' > 'd' as strings, so ordering uses an explicit sort key where needed.
    """

    word: str

    def __post_init__(self):
        word = self.word
        for c in word:
            if c not in (UP, DOWN):
                raise BadAlphabet(f"bad letter {c!r} in {word!r}")
        h = 0
        for c in word:
            h += 1 if c == UP else -1
            if h < 0:
                raise NonDyckWord(f"prefix condition fails in {word!r}")
        if h != 0:
            raise NonDyckWord(f"unbalanced word {word!r}")

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def up_positions(self) -> tuple[int, ...]:
        """0-based indices of the up steps, left to right (u_1, ..., u_n)."""
        return tuple(k for k, c in enumerate(self.word) if c == UP)

    def up_number(self, index: int) -> int:
        """1-based number of the up step at a 0-based step index."""
        if not 0 <= index < len(self.word) or self.word[index] != UP:
            raise IndexOutOfRange(f"no up step at index {index}")
        return self.word.count(UP, 0, index) + 1

    def sort_key(self) -> tuple[int, ...]:
        """Key for the canonical order with u < d."""
        return tuple(0 if c == UP else 1 for c in self.word)


EMPTY = DyckPath("")


@dataclass(frozen=True)
class Span:
    """Contiguous subword, step indices inclusive on both ends."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.start > self.end:
            raise IndexOutOfRange(f"bad span {self.start}..{self.end}")

    def __len__(self) -> int:
        return self.end - self.start + 1


def parse_dyck(word: str) -> DyckPath:
    """Parse a word over {u,d} (aliases U/D and 1/0 accepted)."""
    try:
        canon = "".join(_ALIASES[c] for c in word)
    except KeyError as exc:
        raise BadAlphabet(f"bad letter {exc.args[0]!r} in {word!r}") from None
    return DyckPath(canon)


def heights(path: DyckPath) -> tuple[int, ...]:
    """Height of each step, i.e. #u - #d among the steps before it."""
    out = []
    h = 0
    for c in path.word:
        out.append(h)
        h += 1 if c == UP else -1
    return tuple(out)


def match_up(path: DyckPath, i: int) -> int:
    """0-based index of the down step matching the up step u_i."""
    ups = path.up_positions
    if not 1 <= i <= path.n:
        raise IndexOutOfRange(f"up step {i} of a size-{path.n} path")
    depth = 0
    for k in range(ups[i - 1], len(path.word)):
        depth += 1 if path.word[k] == UP else -1
        if depth == 0:
            return k
    raise AssertionError("unreachable: Dyck word always closes")


def excursion(path: DyckPath, i: int) -> Span:
    """Smallest Dyck subword starting at u_i; ends at its matching down step."""
    return Span(path.up_positions[i - 1], match_up(path, i))


def valleys(path: DyckPath) -> list[int]:
    """0-based indices of the down step of each du factor."""
    w = path.word
    return [k for k in range(len(w) - 1) if w[k] == DOWN and w[k + 1] == UP]


def peaks(path: DyckPath) -> list[int]:
    """0-based indices of the up step of each ud factor."""
    w = path.word
    return [k for k in range(len(w) - 1) if w[k] == UP and w[k + 1] == DOWN]


def mirror(path: DyckPath) -> DyckPath:
    """Reverse the word and swap up and down steps.  An involution."""
    return DyckPath(
        "".join(UP if c == DOWN else DOWN for c in reversed(path.word))
    )


def includes(low: DyckPath, high: DyckPath) -> bool:
    """True iff low stays weakly under high (pointwise height comparison)."""
    if low.n != high.n:
        raise SizeMismatch(f"sizes {low.n} and {high.n} differ")
    return all(a <= b for a, b in zip(heights(low), heights(high)))


@lru_cache(maxsize=32)
def _words(n: int) -> tuple[str, ...]:
    out: list[str] = []

    def rec(prefix: list[str], open_: int, ups_left: int):
        if ups_left == 0 and open_ == 0:
            out.append("".join(prefix))
            return
        if ups_left > 0:
            prefix.append(UP)
            rec(prefix, open_ + 1, ups_left - 1)
            prefix.pop()
        if open_ > 0:
            prefix.append(DOWN)
            rec(prefix, open_ - 1, ups_left)
            prefix.pop()

    rec([], 0, n)
    return tuple(out)


def enumerate_paths(n: int, cap: int | None = None) -> list[DyckPath]:
    """All Dyck paths of size n in lexicographic order with u < d."""
    if n < 0:
        raise IndexOutOfRange(f"negative size {n}")
    if n > (cap if cap is not None else max_size()):
        raise SizeTooLarge(f"size {n} above cap")
    return [DyckPath(w) for w in _words(n)]


def catalan(n: int) -> int:
    import math

    return math.comb(2 * n, n) // (n + 1)
