"""Increment functions, delta-excursions and delta-rotations.

An increment function assigns each up step u_i an altitude contribution
delta(i) in {0, 1}; down steps always contribute -1.  The alt-Tamari poset
of a given delta is the transitive closure of delta-rotations on the Dyck
paths of that size.  delta = all ones gives the Tamari lattice, delta =
all zeros the Dyck (Stanley) lattice.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache

from .dyck import DOWN, UP, DyckPath, Span, enumerate_paths, excursion
from .errors import (
    IndexOutOfRange,
    NotAValley,
    SizeMismatch,
    SizeTooLarge,
    SpanOutOfRange,
)
from .poset import Poset

DEFAULT_POSET_MAX_N = 9

# Seed tag for the pseudo-random delta sample (kept fixed for determinism).
DELTA_SEED = "0xA1t7"


def poset_max_n(default: int = DEFAULT_POSET_MAX_N) -> int:
    env = os.environ.get("ALT_TAMARI_MAX_N")
    return int(env) if env else default


@dataclass(frozen=True)
class IncrementFunction:
    """Vector delta(1..n) with entries in {0, 1}."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 1:
            raise IndexOutOfRange("size must be >= 1")
        if any(v not in (0, 1) for v in self.values):
            raise IndexOutOfRange("entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Contribution of the up step u_i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"up step {i} of size {self.n}")
        return self.values[i - 1]

    def __str__(self) -> str:
        return "".join(str(v) for v in self.values)

    @classmethod
    def ones(cls, n: int) -> "IncrementFunction":
        return cls((1,) * n)

    @classmethod
    def zeros(cls, n: int) -> "IncrementFunction":
        return cls((0,) * n)

    @classmethod
    def from_string(cls, text: str, n: int | None = None) -> "IncrementFunction":
        """Parse a bitstring like "0110", or the names "tamari" / "dyck"."""
        if text == "tamari":
            if n is None:
                raise SizeMismatch("named delta needs a size")
            return cls.ones(n)
        if text == "dyck":
            if n is None:
                raise SizeMismatch("named delta needs a size")
            return cls.zeros(n)
        if not text or any(c not in "01" for c in text):
            raise IndexOutOfRange(f"bad delta spec {text!r}")
        if n is not None and len(text) != n:
            raise SizeMismatch(f"delta {text!r} has size {len(text)}, not {n}")
        return cls(tuple(int(c) for c in text))

    def leq(self, other: "IncrementFunction") -> bool:
        if self.n != other.n:
            raise SizeMismatch("sizes differ")
        return all(a <= b for a, b in zip(self.values, other.values))


@dataclass(frozen=True)
class StepStats:
    """h: 1-based up-step positions; ell: delta-excursion lengths."""

    h: tuple[int, ...]
    ell: tuple[int, ...]


def _check_sizes(delta: IncrementFunction, path: DyckPath):
    if delta.n != path.n:
        raise SizeMismatch(f"delta size {delta.n}, path size {path.n}")


def delta_elevation(delta: IncrementFunction, path: DyckPath, span: Span) -> int:
    """Sum of per-step contributions over the span."""
    _check_sizes(delta, path)
    if span.end >= len(path.word):
        raise SpanOutOfRange(f"span {span} in a length-{len(path.word)} word")
    total = 0
    ups_before = path.word.count(UP, 0, span.start)
    u = ups_before
    for k in range(span.start, span.end + 1):
        if path.word[k] == UP:
            u += 1
            total += delta(u)
        else:
            total -= 1
    return total


def delta_excursion(delta: IncrementFunction, path: DyckPath, i: int) -> Span:
    """Smallest subword starting at u_i with delta-elevation zero."""
    _check_sizes(delta, path)
    if not 1 <= i <= path.n:
        raise IndexOutOfRange(f"up step {i} of size {path.n}")
    start = path.up_positions[i - 1]
    elev = 0
    u = i - 1
    for k in range(start, len(path.word)):
        if path.word[k] == UP:
            u += 1
            elev += delta(u)
        else:
            elev -= 1
        if elev == 0:
            return Span(start, k)
    raise AssertionError("unreachable: delta-excursion closes by Remark 4.1")


def word_delta_prefix(delta: IncrementFunction, word: str, first_up: int) -> int:
    """Length of the shortest prefix of word with delta-elevation zero.

    The word's up steps are numbered first_up, first_up + 1, ... with
    contributions taken from delta.  Used when a fragment is reassembled
    outside any full path (bijection composition).
    """
    elev = 0
    u = first_up - 1
    for k, c in enumerate(word):
        if c == UP:
            u += 1
            elev += delta(u)
        else:
            elev -= 1
        if elev == 0:
            return k + 1
    raise SpanOutOfRange("no zero-elevation prefix")


def delta_rotation(delta: IncrementFunction, path: DyckPath, i: int) -> DyckPath:
    """Exchange the down step preceding u_i with the delta-excursion of u_i."""
    _check_sizes(delta, path)
    if not 1 <= i <= path.n:
        raise IndexOutOfRange(f"up step {i} of size {path.n}")
    pos = path.up_positions[i - 1]
    if pos == 0 or path.word[pos - 1] != DOWN:
        raise NotAValley(f"u_{i} is not in a valley of {path.word}")
    span = delta_excursion(delta, path, i)
    w = path.word
    return DyckPath(
        w[: pos - 1] + w[span.start : span.end + 1] + DOWN + w[span.end + 1 :]
    )


def upper_covers(delta: IncrementFunction, path: DyckPath) -> list[tuple[int, DyckPath]]:
    """(i, Q) for every valley d u_i of the path; the covers in Tam^delta."""
    _check_sizes(delta, path)
    out = []
    w = path.word
    for k in range(1, len(w)):
        if w[k] == UP and w[k - 1] == DOWN:
            i = path.up_number(k)
            out.append((i, delta_rotation(delta, path, i)))
    return out


@lru_cache(maxsize=256)
def build_alt_tamari(delta: IncrementFunction, cap: int | None = None) -> Poset:
    """Poset of all size-n Dyck paths under delta-rotations.

    The rotation graph is the Hasse diagram (Prop on covering relations),
    so reducedness is asserted, not computed.
    """
    n = delta.n
    if n > (cap if cap is not None else poset_max_n()):
        raise SizeTooLarge(f"size {n} above poset cap")
    paths = enumerate_paths(n)
    index = {p: k for k, p in enumerate(paths)}
    covers = []
    for k, p in enumerate(paths):
        for _, q in upper_covers(delta, p):
            covers.append((k, index[q]))
    poset = Poset(paths, covers)
    if poset.redundant_removed != 0:
        raise AssertionError(
            "rotation graph is not transitively reduced; "
            "covering = rotation is violated"
        )
    return poset


def step_stats(delta: IncrementFunction, path: DyckPath) -> StepStats:
    _check_sizes(delta, path)
    h = tuple(p + 1 for p in path.up_positions)
    ell = tuple(
        len(delta_excursion(delta, path, i)) for i in range(1, path.n + 1)
    )
    return StepStats(h, ell)


def refines(delta: IncrementFunction, delta_hi: IncrementFunction, n: int) -> bool:
    """True iff every order relation of Tam^delta_hi holds in Tam^delta."""
    if delta.n != n or delta_hi.n != n:
        raise SizeMismatch("delta sizes must equal n")
    lo = build_alt_tamari(delta)
    hi = build_alt_tamari(delta_hi)
    return all(hi_up & ~lo_up == 0 for lo_up, hi_up in zip(lo.up, hi.up))


def all_increment_functions(n: int) -> list[IncrementFunction]:
    return [
        IncrementFunction(tuple(int(c) for c in format(m, f"0{n}b")))
        for m in range(2 ** n)
    ]


def delta_test_set(n: int) -> list[IncrementFunction]:
    """Deltas used by the exhaustive checks.

    Both constants, all functions for n <= 5, and 8 seeded pseudo-random
    functions for larger n.
    """
    if n <= 5:
        out = [IncrementFunction.ones(n), IncrementFunction.zeros(n)]
        out += [
            d for d in all_increment_functions(n)
            if d not in (out[0], out[1])
        ]
        return out
    rng = random.Random(f"{DELTA_SEED}:{n}")
    out = [IncrementFunction.ones(n), IncrementFunction.zeros(n)]
    seen = set(out)
    while len(out) < 10:
        d = IncrementFunction(tuple(rng.randrange(2) for _ in range(n)))
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out
