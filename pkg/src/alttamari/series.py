"""Exact truncated power series and the counting identities they verify.

All coefficients are Python ints, so arithmetic is exact at any size.
Series are truncated at a fixed order; operations stay closed under
truncation.  The tree series A solves A = 1 + t A^2, and the height-k
interval series are S_0 = A - 1, S_1 = t^2 A' A, S_k = 2 t^(k+1) A' A^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import OrderExceeded

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]  # index = degree

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise OrderExceeded(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    @classmethod
    def constant(cls, value: int, order: int) -> "TruncatedSeries":
        return cls((value,) + (0,) * order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        return cls((0, 1) + (0,) * (order - 1))

    def _coerce(self, other):
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        if other.order != self.order:
            raise OrderExceeded("mixed truncation orders")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n - i + 1]):
                out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        result = TruncatedSeries.constant(1, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        return TruncatedSeries(
            (0,) * k + self.coeffs[: self.order - k + 1]
        )

    def derivative(self) -> "TruncatedSeries":
        # Truncation keeps the order; the top coefficient becomes unknowable
        # and is zeroed, so request one extra order when it matters.
        d = tuple(k * a for k, a in enumerate(self.coeffs))[1:]
        return TruncatedSeries(d + (0,))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner); inner must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise OrderExceeded("composition needs zero constant term")
        result = TruncatedSeries.constant(0, self.order)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result


@lru_cache(maxsize=8)
def solve_tree_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Unique solution of A = 1 + t A^2 with A(0) = 1; Catalan coefficients."""
    a = TruncatedSeries.constant(1, order)
    t = TruncatedSeries.t(order)
    for _ in range(order + 1):
        a = 1 + t * a * a
    return a


def marked_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Series t A'(t) of trees with a marked node; coefficient n*C_n."""
    a = solve_tree_series(order + 1)
    return TruncatedSeries(a.derivative().coeffs[: order + 1]).shift(1)


@lru_cache(maxsize=64)
def _phi_of_b(k: int, order: int) -> TruncatedSeries:
    """phi_k(B) with phi_k(x) = (1+x)^(k+3) / (1-x), B = A - 1."""
    one = TruncatedSeries.constant(1, order)
    x = TruncatedSeries.t(order)
    geom = TruncatedSeries((1,) * (order + 1))
    phi = (one + x) ** (k + 3) * geom
    b = solve_tree_series(order) - 1
    return phi.compose(b)


def phi_coeff_series(k: int, n: int, order: int = DEFAULT_ORDER) -> int:
    """[t^n] phi_k(B) via series composition."""
    if n > order:
        raise OrderExceeded(f"n = {n} beyond order {order}")
    return _phi_of_b(k, order)[n]


def phi_coeff_binomial(k: int, n: int) -> int:
    """Closed form from Lagrange inversion: binom(k+2+2n, n)."""
    return math.comb(k + 2 + 2 * n, n)


def phi_coeff(k: int, n: int, order: int = DEFAULT_ORDER) -> int:
    """Coefficient computed both ways; raises if the routes disagree."""
    got = phi_coeff_series(k, n, order)
    want = phi_coeff_binomial(k, n)
    if got != want:
        raise AssertionError(
            f"Lagrange identity broken at (k={k}, n={n}): {got} != {want}"
        )
    return got


@lru_cache(maxsize=64)
def _s_series(k: int, order: int) -> TruncatedSeries:
    a = solve_tree_series(order + 1)
    if k == 0:
        return TruncatedSeries((a - 1).coeffs[: order + 1])
    da = TruncatedSeries(a.derivative().coeffs[: order + 1])
    a = TruncatedSeries(a.coeffs[: order + 1])
    if k == 1:
        return (da * a).shift(2)
    return (2 * da * a ** k).shift(k + 1)


def s_series(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The full height-k interval series up to the given order."""
    return _s_series(k, order)


def s_coeff(k: int, n: int, order: int = DEFAULT_ORDER) -> int:
    """[t^n] S_k: linear intervals of height k among size-n posets."""
    if n > order:
        raise OrderExceeded(f"n = {n} beyond order {order}")
    return _s_series(k, order)[n]
