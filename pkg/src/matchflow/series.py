"""Coefficient series: elements of the truncated polynomial ring Z[t]/(t^(k+1)).

Coefficient ``i`` of a matching series counts the ``i``-matchings.  Storage
is ascending in ``i``; the descending layout used for display (and by the
Toeplitz matrix picture) is produced only by :meth:`CoeffSeries.descending`.

Multiplying two series is a truncated convolution, which is exactly the
product of the two upper-triangular Toeplitz matrices having these series as
first rows.  :func:`toeplitz_matrix` materialises that matrix for checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # a and b have equal length; skip zero terms of the sparser operand
    n = len(a)
    nz_a = [(i, c) for i, c in enumerate(a) if c]
    nz_b = [(i, c) for i, c in enumerate(b) if c]
    if len(nz_a) > len(nz_b):
        nz_a, b = nz_b, a
    out = [0] * n
    for i, c in nz_a:
        if c == 1:
            out[i:] = [o + x for o, x in zip(out[i:], b)]
        else:
            out[i:] = [o + c * x for o, x in zip(out[i:], b)]
    return out


@dataclass(frozen=True, slots=True)
class CoeffSeries:
    """Length-``k+1`` tuple of non-negative integers, ascending in degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DimensionError("a series needs at least one coefficient")

    @classmethod
    def of(cls, values: Iterable[int], k: int | None = None) -> CoeffSeries:
        """Build from any iterable, padding with zeros or truncating to bound ``k``."""
        vals = [int(v) for v in values]
        if k is not None:
            vals = (vals + [0] * (k + 1))[: k + 1]
        if any(v < 0 for v in vals):
            raise ValueError(f"negative coefficient in {vals}")
        return cls(tuple(vals))

    @classmethod
    def zero(cls, k: int) -> CoeffSeries:
        return cls((0,) * (k + 1))

    @classmethod
    def one(cls, k: int) -> CoeffSeries:
        return cls((1,) + (0,) * k)

    @property
    def k(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def total(self) -> int:
        return sum(self.coeffs)

    def descending(self) -> list[int]:
        """Coefficients from degree ``k`` down to 0, the display order."""
        return list(reversed(self.coeffs))

    def _check(self, other: CoeffSeries) -> None:
        if len(other.coeffs) != len(self.coeffs):
            raise DimensionError(f"series bounds differ: k={self.k} vs k={other.k}")

    def __add__(self, other: CoeffSeries) -> CoeffSeries:
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        self._check(other)
        return CoeffSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return CoeffSeries(tuple(other * c for c in self.coeffs))
        if not isinstance(other, CoeffSeries):
            return NotImplemented
        return trunc_mul(self, other)

    __rmul__ = __mul__

    def shift(self, m: int) -> CoeffSeries:
        return shift(self, m)

    def __repr__(self) -> str:
        return f"CoeffSeries({list(self.coeffs)})"


def trunc_mul(p: CoeffSeries, q: CoeffSeries) -> CoeffSeries:
    """Product in the truncated ring: ``r[m] = sum p[i] q[m-i]`` for ``m <= k``."""
    if len(p.coeffs) != len(q.coeffs):
        raise DimensionError(f"series bounds differ: k={p.k} vs k={q.k}")
    return CoeffSeries(tuple(_mul(p.coeffs, q.coeffs)))


def shift(p: CoeffSeries, m: int) -> CoeffSeries:
    """Multiply by ``t**m``; coefficients pushed past degree ``k`` are dropped."""
    if m not in (1, 2):
        raise ValueError(f"shift is defined for m in (1, 2), got {m}")
    n = len(p.coeffs)
    return CoeffSeries(((0,) * m + p.coeffs)[:n])


def sum_series(items: Iterable[CoeffSeries], k: int) -> CoeffSeries:
    acc = [0] * (k + 1)
    for s in items:
        if s.k != k:
            raise DimensionError(f"series bounds differ: k={k} vs k={s.k}")
        acc = [a + b for a, b in zip(acc, s.coeffs)]
    return CoeffSeries(tuple(acc))


def toeplitz_matrix(c: CoeffSeries) -> list[list[int]]:
    """Dense upper-triangular Toeplitz matrix whose first row is ``c``."""
    n = len(c.coeffs)
    return [[c.coeffs[j - i] if j >= i else 0 for j in range(n)] for i in range(n)]
