"""Lebesgue constants and interpolation error experiments."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .chebyshev import cheb_matrix
from .franke import FRANKE_IDS, franke_function
from .index_sets import mask
from .interpolation import evaluate_grid, interpolate
from .nodes import LissajousParams, NodeSet, ParameterError, build_node_set

__all__ = [
    "ErrorTable",
    "GridSpec",
    "LebesgueRecord",
    "error_experiment",
    "error_table",
    "lebesgue_constant",
    "lebesgue_fit_padua",
    "lebesgue_fit_xu",
    "lebesgue_function_grid",
    "lebesgue_sweep",
]

log = logging.getLogger(__name__)

SQUARE = (-1.0, 1.0, -1.0, 1.0)
UNIT_SQUARE = (0.0, 1.0, 0.0, 1.0)

# floats held by one block of the Lebesgue scan (about 128 MB)
_BLOCK_FLOATS = 16_000_000


@dataclass(frozen=True)
class GridSpec:
    """Uniform ``nx x ny`` tensor grid over ``domain = (x0, x1, y0, y1)``, endpoints included."""

    nx: int
    ny: int
    domain: tuple[float, float, float, float] = SQUARE

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise ValueError(f"grid needs at least 2 points per axis, got {self.nx} x {self.ny}")

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        x0, x1, y0, y1 = self.domain
        return np.linspace(x0, x1, self.nx), np.linspace(y0, y1, self.ny)


@dataclass(frozen=True)
class LebesgueRecord:
    n: int
    p: int
    value: float
    argmax: tuple[float, float]
    grid: GridSpec


def lebesgue_function_grid(nodes: NodeSet, xs, ys) -> np.ndarray:
    """``sum_A |L_A(x, y)|`` on the tensor grid ``xs x ys``, shape ``(len(xs), len(ys))``.

    Nodes share few distinct x coordinates, so the x-part of every
    fundamental polynomial is formed once per distinct abscissa:

        L_A(x, y) = w_A sum_j Q_{x_A}(x, j) That_j(y_A) That_j(y),
        Q_u(x, j) = sum_i That_i(u) That_i(x) m_ij.

    Each block of nodes with the same abscissa is then one matrix product.
    """
    params = nodes.params
    n, p = params.n, params.p
    m = mask(params)
    tx_grid = cheb_matrix(2 * (n + p) - 1, xs)  # (2(n+p), nx)
    ty_grid = cheb_matrix(2 * n, ys)  # (2n+1, ny)
    nx, ny = tx_grid.shape[1], ty_grid.shape[1]

    ux, inverse = np.unique(nodes.x, return_inverse=True)
    tx_nodes = cheb_matrix(2 * (n + p) - 1, ux)
    ty_nodes = cheb_matrix(2 * n, nodes.y)
    w = nodes.weights

    chunk = max(1, _BLOCK_FLOATS // (nx * ny))
    total = np.zeros((nx, ny))
    for u in range(ux.size):
        q = (tx_grid.T * tx_nodes[:, u]) @ m  # (nx, 2n+1)
        members = np.flatnonzero(inverse == u)
        for start in range(0, members.size, chunk):
            block = members[start : start + chunk]
            # (g, nx, 2n+1) scaled by That_j(y_A) and w_A
            scaled = q[None, :, :] * (ty_nodes[:, block].T * w[block, None])[:, None, :]
            vals = scaled.reshape(-1, scaled.shape[-1]) @ ty_grid
            total += np.abs(vals).reshape(block.size, nx, ny).sum(axis=0)
    return total


def lebesgue_constant(
    params: LissajousParams, grid: GridSpec | None = None, nodes: NodeSet | None = None
) -> LebesgueRecord:
    """Maximum of the Lebesgue function over a uniform grid of ``[-1, 1]^2``.

    Defaults to a 500 x 500 grid. Ties go to the first maximiser in
    row-major ``(x, y)`` order.
    """
    grid = grid or GridSpec(500, 500)
    nodes = nodes or build_node_set(params)
    xs, ys = grid.axes()
    lam = lebesgue_function_grid(nodes, xs, ys)
    ix, iy = np.unravel_index(int(np.argmax(lam)), lam.shape)
    return LebesgueRecord(params.n, params.p, float(lam[ix, iy]), (float(xs[ix]), float(ys[iy])), grid)


def lebesgue_fit_padua(n: int) -> float:
    """Least-squares fit ``((2/pi) log(2n+1) + 1.1)^2`` of the Padua Lebesgue constant."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (2 / math.pi * math.log(2 * n + 1) + 1.1) ** 2


def lebesgue_fit_xu(n: int) -> float:
    """Least-squares fit ``((2/pi) log(2n+2))^2`` of the odd Xu Lebesgue constant."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (2 / math.pi * math.log(2 * n + 2)) ** 2


def lebesgue_sweep(
    ns: Iterable[int], ps: Iterable[int], grid: GridSpec | None = None
) -> tuple[list[LebesgueRecord], list[tuple[int, int]]]:
    """Lebesgue constants for every valid ``(n, p)``.

    Returns the records and the skipped ``(n, p)`` pairs (not coprime).
    """
    records, skipped = [], []
    for p in ps:
        for n in ns:
            try:
                params = LissajousParams(n, p)
            except ParameterError as exc:
                log.info("skipping n=%d p=%d: %s", n, p, exc)
                skipped.append((n, p))
                continue
            records.append(lebesgue_constant(params, grid))
            log.debug("n=%d p=%d lambda=%.6g", n, p, records[-1].value)
    return records, skipped


def error_experiment(
    params: LissajousParams, fid: int, grid: GridSpec | None = None, nodes: NodeSet | None = None
) -> float:
    """Maximum interpolation error of ``F_fid`` over a grid of ``[0, 1]^2``.

    Nodes are mapped to the unit square by ``u = (x + 1) / 2``, the test
    function is sampled there, and the interpolant is evaluated at the
    grid points mapped back to ``[-1, 1]^2``.
    """
    grid = grid or GridSpec(100, 100, UNIT_SQUARE)
    nodes = nodes or build_node_set(params)
    coeffs = interpolate(nodes, franke_function(fid, (nodes.x + 1) / 2, (nodes.y + 1) / 2))
    us, vs = grid.axes()
    approx = evaluate_grid(coeffs, 2 * us - 1, 2 * vs - 1)
    exact = franke_function(fid, *np.meshgrid(us, vs, indexing="ij"))
    return float(np.max(np.abs(approx - exact)))


@dataclass(frozen=True)
class ErrorTable:
    """Maximum errors ``errors[row][fid - 1]`` for each degree in ``ns``."""

    p: int
    ns: tuple[int, ...]
    node_counts: tuple[int, ...]
    errors: tuple[tuple[float, ...], ...]
    function_ids: tuple[int, ...] = field(default=FRANKE_IDS)

    def cell(self, n: int, fid: int) -> float:
        return self.errors[self.ns.index(n)][self.function_ids.index(fid)]


def error_table(
    ns: Sequence[int] = (5, 10, 20, 30), p: int = 1, grid: GridSpec | None = None
) -> ErrorTable:
    """Errors of all ten test functions for each ``n`` with ``p`` fixed."""
    counts, rows = [], []
    for n in ns:
        params = LissajousParams(n, p)
        nodes = build_node_set(params)
        counts.append(len(nodes))
        rows.append(tuple(error_experiment(params, fid, grid, nodes) for fid in FRANKE_IDS))
    return ErrorTable(p=p, ns=tuple(ns), node_counts=tuple(counts), errors=tuple(rows))
