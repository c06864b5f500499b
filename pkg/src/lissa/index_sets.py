"""Exponent index sets for the quadrature and interpolation spaces.

Both sets are total-degree triangles extended by a staircase of extra
anti-diagonals. Every membership test is done in exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .nodes import LissajousParams

__all__ = ["IndexKind", "IndexSet", "gamma_L", "gamma_Q", "in_gamma_L", "in_gamma_Q", "mask"]


class IndexKind(str, enum.Enum):
    QUADRATURE = "quadrature"
    INTERPOLATION = "interpolation"


def in_gamma_Q(params: LissajousParams, i: int, j: int) -> bool:
    """Membership of ``(i, j)`` in the quadrature index set."""
    n, p = params.n, params.p
    if i < 0 or j < 0:
        return False
    s = i + j
    if s <= 4 * n - 1:
        return True
    m = s - 4 * n
    return 0 <= m <= 4 * p - 1 and j * p < n * (4 * p - m)


def in_gamma_L(params: LissajousParams, i: int, j: int) -> bool:
    """Membership of ``(i, j)`` in the interpolation index set."""
    n, p = params.n, params.p
    if i < 0 or j < 0:
        return False
    s = i + j
    if s <= 2 * n:
        return True
    m = s - 2 * n
    return 1 <= m <= 2 * p - 1 and j * p < n * (2 * p - m)


def _staircase(full_degree: int, first_m: int, last_m: int, width: int, n: int, p: int):
    # all pairs with i + j <= full_degree, then on each anti-diagonal
    # i + j = offset + m the columns j < ceil(n (width - m) / p)
    offset = full_degree + 1 - first_m
    pairs = [(s - j, j) for s in range(full_degree + 1) for j in range(s + 1)]
    for m in range(first_m, last_m + 1):
        s = offset + m
        count = -(-n * (width - m) // p)
        pairs.extend((s - j, j) for j in range(min(s + 1, count)))
    return tuple(sorted(pairs))


@dataclass(frozen=True)
class IndexSet:
    """Enumerated exponent pairs ``(i, j)`` plus the matching predicate."""

    kind: IndexKind
    params: LissajousParams
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, ij) -> bool:
        i, j = ij
        return self.contains(i, j)

    def contains(self, i: int, j: int) -> bool:
        if self.kind is IndexKind.QUADRATURE:
            return in_gamma_Q(self.params, i, j)
        return in_gamma_L(self.params, i, j)

    @cached_property
    def i(self) -> np.ndarray:
        return np.array([ij[0] for ij in self.pairs], dtype=np.int64)

    @cached_property
    def j(self) -> np.ndarray:
        return np.array([ij[1] for ij in self.pairs], dtype=np.int64)


@lru_cache(maxsize=64)
def gamma_Q(params: LissajousParams) -> IndexSet:
    """Index set of the space on which the node quadrature rule is exact.

    ``{i + j <= 4n - 1}`` together with, for ``m = 0, ..., 4p - 1``, the
    pairs on the anti-diagonal ``i + j = 4n + m`` with ``j p < n (4p - m)``.
    """
    n, p = params.n, params.p
    pairs = _staircase(4 * n - 1, 0, 4 * p - 1, 4 * p, n, p)
    return IndexSet(IndexKind.QUADRATURE, params, pairs)


@lru_cache(maxsize=64)
def gamma_L(params: LissajousParams) -> IndexSet:
    """Index set of the interpolation space.

    ``{i + j <= 2n}`` together with, for ``m = 1, ..., 2p - 1``, the pairs on
    the anti-diagonal ``i + j = 2n + m`` with ``j p < n (2p - m)``.
    """
    n, p = params.n, params.p
    pairs = _staircase(2 * n, 1, 2 * p - 1, 2 * p, n, p)
    return IndexSet(IndexKind.INTERPOLATION, params, pairs)


@lru_cache(maxsize=64)
def _mask(params: LissajousParams) -> np.ndarray:
    n, p = params.n, params.p
    out = np.zeros((2 * (n + p), 2 * n + 1))
    gl = gamma_L(params)
    out[gl.i, gl.j] = 1.0
    out[0, 2 * n] = 0.5
    out.setflags(write=False)
    return out


def mask(params: LissajousParams) -> np.ndarray:
    """Coefficient mask of shape ``(2(n+p), 2n+1)``.

    Entries are 1 on the interpolation index set, 1/2 at ``(0, 2n)`` and 0
    elsewhere. The returned array is read-only and shared between calls.
    """
    return _mask(params)
