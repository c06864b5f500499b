"""Node points of non-degenerate Lissajous curves.

The curve ``t -> (sin(n t), sin((n + p) t))`` sampled at the ``4n(n+p)``
equidistant times ``t_k = 2 pi k / (4n(n+p))`` hits a finite set of points
that splits into two shifted Gauss-Lobatto grids ("black" and "white").
Interior points are self-intersections and are hit twice, boundary points
once.

Nodes are always built from the integer-indexed grid description; curve
sampling is only used to attach the sample indices to each node.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.spatial import cKDTree

__all__ = [
    "AmbiguousMatchError",
    "Color",
    "LissajousParams",
    "Location",
    "MATCH_TOLERANCE",
    "Node",
    "NodeSet",
    "NonOddPError",
    "NonPositiveError",
    "NotCoprimeError",
    "ParameterError",
    "build_node_set",
    "curve_point",
    "equivalence_classes",
    "gauss_lobatto",
    "padua_points",
    "sample_times",
    "validate_params",
    "xu_points_odd",
]

#: Absolute per-coordinate tolerance used to match sampled curve points to nodes.
MATCH_TOLERANCE = 1e-9


class ParameterError(ValueError):
    """Invalid curve parameters."""


class NonPositiveError(ParameterError):
    pass


class NonOddPError(ParameterError):
    pass


class NotCoprimeError(ParameterError):
    pass


class AmbiguousMatchError(RuntimeError):
    """A sampled curve point matched zero or several nodes."""


class Color(str, enum.Enum):
    BLACK = "black"
    WHITE = "white"


class Location(str, enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class LissajousParams:
    """Frequencies of a non-degenerate Lissajous curve.

    ``n`` is the x-frequency and ``n + p`` the y-frequency. Construction
    fails unless ``p`` is odd and ``gcd(n, n + p) == 1``.
    """

    n: int
    p: int

    def __post_init__(self):
        n, p = self.n, self.p
        if not (isinstance(n, (int, np.integer)) and isinstance(p, (int, np.integer))):
            raise ParameterError(f"n and p must be integers, got n={n!r}, p={p!r}")
        if n < 1 or p < 1:
            raise NonPositiveError(f"n and p must be positive, got n={n}, p={p}")
        if p % 2 == 0:
            raise NonOddPError(f"p must be odd (even p gives a degenerate curve), got p={p}")
        if math.gcd(n, n + p) != 1:
            raise NotCoprimeError(
                f"n and n+p must be relatively prime, got gcd({n}, {n + p}) = {math.gcd(n, n + p)}"
            )
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "p", int(p))

    @property
    def num_samples(self) -> int:
        """Number of sample times ``4n(n+p)``."""
        return 4 * self.n * (self.n + self.p)

    @property
    def num_nodes(self) -> int:
        return 2 * self.n * (self.n + self.p) + 2 * self.n + self.p


def validate_params(n: int, p: int) -> LissajousParams:
    """Return validated curve parameters or raise a :class:`ParameterError`."""
    return LissajousParams(n, p)


def gauss_lobatto(k, m: int):
    """Chebyshev-Gauss-Lobatto point ``cos(k pi / m)``.

    Works on integer scalars or arrays. ``k`` is reduced modulo ``2m`` in
    integers and the point is computed as ``sin((m - 2k) pi / (2m))``, which
    equals the cosine but is symmetric about zero. Indices congruent to 0
    and ``m`` give exactly ``1.0`` and ``-1.0``.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    k_arr = np.mod(np.asarray(k, dtype=np.int64), 2 * m)
    # fold into [0, m]: cos is even and 2m-periodic
    k_arr = np.where(k_arr > m, 2 * m - k_arr, k_arr)
    out = np.sin((m - 2 * k_arr) * (np.pi / (2 * m)))
    out = np.where(k_arr == 0, 1.0, out)
    out = np.where(k_arr == m, -1.0, out)
    if out.ndim == 0:
        return float(out)
    return out


def curve_point(params: LissajousParams, t):
    """Point ``(sin(n t), sin((n+p) t))`` on the curve; ``t`` may be an array."""
    t = np.asarray(t, dtype=float)
    x = np.sin(params.n * t)
    y = np.sin((params.n + params.p) * t)
    if t.ndim == 0:
        return float(x), float(y)
    return x, y


def sample_times(params: LissajousParams) -> np.ndarray:
    """Sample times ``t_k = 2 pi k / (4n(n+p))`` for ``k = 1, ..., 4n(n+p)``."""
    big_n = params.num_samples
    k = np.arange(1, big_n + 1)
    return 2.0 * np.pi * k / big_n


@dataclass(frozen=True)
class Node:
    """One node with its classification and quadrature weight.

    ``grid_index`` is ``(i', j')`` in the black or white Gauss-Lobatto grid;
    ``sample_indices`` lists the ``k`` in ``[1, 4n(n+p)]`` with
    ``gamma(t_k)`` equal to this node.
    """

    x: float
    y: float
    color: Color
    location: Location
    weight: float
    sample_indices: tuple[int, ...]
    grid_index: tuple[int, int] = field(default=(0, 0))

    @property
    def point(self) -> tuple[float, float]:
        return (self.x, self.y)

    @property
    def is_interior(self) -> bool:
        return self.location is Location.INTERIOR


@dataclass(frozen=True)
class _Grid:
    """Arrays describing the closed-form node set in canonical order."""

    x: np.ndarray
    y: np.ndarray
    black: np.ndarray
    boundary: np.ndarray
    gi: np.ndarray
    gj: np.ndarray


def _closed_form_grid(params: LissajousParams) -> _Grid:
    n, p = params.n, params.p
    mx, my = 2 * (n + p), 2 * n

    # black: (z^{2(n+p)}_{2i'+1}, z^{2n}_{2j'}), i' < n+p, j' <= n
    bi, bj = np.meshgrid(np.arange(n + p), np.arange(n + 1), indexing="ij")
    bi, bj = bi.ravel(), bj.ravel()
    # white: (z^{2(n+p)}_{2i'}, z^{2n}_{2j'+1}), i' <= n+p, j' < n
    wi, wj = np.meshgrid(np.arange(n + p + 1), np.arange(n), indexing="ij")
    wi, wj = wi.ravel(), wj.ravel()

    x = np.concatenate([gauss_lobatto(2 * bi + 1, mx), gauss_lobatto(2 * wi, mx)])
    y = np.concatenate([gauss_lobatto(2 * bj, my), gauss_lobatto(2 * wj + 1, my)])
    black = np.concatenate([np.ones(bi.size, bool), np.zeros(wi.size, bool)])
    boundary = np.concatenate([(bj == 0) | (bj == n), (wi == 0) | (wi == n + p)])
    return _Grid(
        x=x,
        y=y,
        black=black,
        boundary=boundary,
        gi=np.concatenate([bi, wi]),
        gj=np.concatenate([bj, wj]),
    )


def _match_samples(params: LissajousParams, grid: _Grid) -> np.ndarray:
    sx, sy = curve_point(params, sample_times(params))
    tree = cKDTree(np.column_stack([grid.x, grid.y]))
    # two nearest neighbours in the max-norm: the first must be within
    # tolerance and the second must not
    dist, idx = tree.query(np.column_stack([sx, sy]), k=2, p=np.inf)
    hit = dist[:, 0] <= MATCH_TOLERANCE
    if not hit.all():
        k = int(np.flatnonzero(~hit)[0]) + 1
        raise AmbiguousMatchError(f"sample k={k} matches no node (distance {dist[k - 1, 0]:.3e})")
    ambiguous = dist[:, 1] <= MATCH_TOLERANCE
    if ambiguous.any():
        k = int(np.flatnonzero(ambiguous)[0]) + 1
        raise AmbiguousMatchError(f"sample k={k} matches more than one node")
    return idx[:, 0]


def _classify(params: LissajousParams) -> tuple[_Grid, np.ndarray]:
    grid = _closed_form_grid(params)
    owner = _match_samples(params, grid)
    counts = np.bincount(owner, minlength=grid.x.size)
    expected = np.where(grid.boundary, 1, 2)
    if not np.array_equal(counts, expected):
        bad = int(np.flatnonzero(counts != expected)[0])
        raise AmbiguousMatchError(
            f"node {bad} has {counts[bad]} sample preimages, expected {expected[bad]}"
        )
    return grid, owner


def equivalence_classes(params: LissajousParams) -> np.ndarray:
    """Map each sample index to the node it lands on.

    Returns an integer array ``owner`` of length ``4n(n+p)`` where
    ``owner[k - 1]`` is the position of ``gamma(t_k)`` in the canonical node
    order. Raises :class:`AmbiguousMatchError` if a sample point matches
    zero or several nodes, or if the preimage counts contradict the
    interior/boundary split.
    """
    return _classify(params)[1]


@dataclass(frozen=True)
class NodeSet:
    """The full node set in canonical order: black block, then white block,
    each lexicographic in the grid index ``(i', j')``."""

    params: LissajousParams
    nodes: tuple[Node, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, item):
        return self.nodes[item]

    @cached_property
    def x(self) -> np.ndarray:
        return np.array([nd.x for nd in self.nodes])

    @cached_property
    def y(self) -> np.ndarray:
        return np.array([nd.y for nd in self.nodes])

    @cached_property
    def weights(self) -> np.ndarray:
        return np.array([nd.weight for nd in self.nodes])

    @cached_property
    def owner(self) -> np.ndarray:
        """``owner[k - 1]`` is the node index hit by sample ``k``."""
        out = np.empty(self.params.num_samples, dtype=np.int64)
        for a, nd in enumerate(self.nodes):
            for k in nd.sample_indices:
                out[k - 1] = a
        return out

    def counts(self) -> dict[str, int]:
        black = sum(nd.color is Color.BLACK for nd in self.nodes)
        interior = sum(nd.is_interior for nd in self.nodes)
        return {
            "total": len(self.nodes),
            "black": black,
            "white": len(self.nodes) - black,
            "interior": interior,
            "boundary": len(self.nodes) - interior,
        }


def build_node_set(params: LissajousParams) -> NodeSet:
    """Construct all nodes with colour, location, weight and sample indices."""
    grid, owner = _classify(params)
    preimages: list[list[int]] = [[] for _ in range(grid.x.size)]
    for k, a in enumerate(owner.tolist(), start=1):
        preimages[a].append(k)

    big_n = params.num_samples
    w_in, w_out = 2.0 / big_n, 1.0 / big_n
    nodes = [
        Node(
            x=x,
            y=y,
            color=Color.BLACK if black else Color.WHITE,
            location=Location.BOUNDARY if boundary else Location.INTERIOR,
            weight=w_out if boundary else w_in,
            sample_indices=tuple(ks),
            grid_index=(gi, gj),
        )
        for x, y, black, boundary, ks, gi, gj in zip(
            grid.x.tolist(),
            grid.y.tolist(),
            grid.black.tolist(),
            grid.boundary.tolist(),
            preimages,
            grid.gi.tolist(),
            grid.gj.tolist(),
        )
    ]
    return NodeSet(params=params, nodes=tuple(nodes))


def padua_points(n: int) -> np.ndarray:
    """Even Padua points of the second family, shape ``((n+1)(2n+1), 2)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bi, bj = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    wi, wj = np.meshgrid(np.arange(n + 1), np.arange(n), indexing="ij")
    black = np.column_stack([gauss_lobatto(2 * bi.ravel() + 1, 2 * n + 1), gauss_lobatto(2 * bj.ravel(), 2 * n)])
    white = np.column_stack([gauss_lobatto(2 * wi.ravel(), 2 * n + 1), gauss_lobatto(2 * wj.ravel() + 1, 2 * n)])
    return np.vstack([black, white])


def xu_points_odd(n: int) -> np.ndarray:
    """Odd Xu points ``XU_{2n+1}``, shape ``(2(n+1)^2, 2)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = 2 * n + 1
    i, j = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    i, j = i.ravel(), j.ravel()
    black = np.column_stack([gauss_lobatto(2 * i, m), gauss_lobatto(2 * j, m)])
    white = np.column_stack([gauss_lobatto(2 * i + 1, m), gauss_lobatto(2 * j + 1, m)])
    return np.vstack([black, white])
