"""Chebyshev polynomials of the first kind and the interpolation kernel.

``T_i`` is evaluated by the three-term recurrence. The normalised
polynomials ``That_0 = 1``, ``That_i = sqrt(2) T_i`` are orthonormal for the
product Chebyshev weight ``1 / (pi^2 sqrt(1 - x^2) sqrt(1 - y^2))``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .index_sets import gamma_L
from .nodes import LissajousParams

__all__ = [
    "DOMAIN_TOLERANCE",
    "DomainError",
    "cheb_T",
    "cheb_That",
    "cheb_matrix",
    "cheb_vector",
    "kernel_L",
]

DOMAIN_TOLERANCE = 1e-12
SQRT2 = np.sqrt(2.0)


class DomainError(ValueError):
    """Argument outside ``[-1, 1]`` beyond the clamping tolerance."""


def _check_domain(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(np.abs(x) > 1.0 + DOMAIN_TOLERANCE):
        bad = x[~(np.abs(x) <= 1.0 + DOMAIN_TOLERANCE)].ravel()[0]
        raise DomainError(f"argument {bad!r} outside [-1, 1]")
    return np.clip(x, -1.0, 1.0)


def cheb_matrix(degree: int, x, normalized: bool = True) -> np.ndarray:
    """Rows ``T_0(x), ..., T_degree(x)`` stacked into shape ``(degree + 1,) + x.shape``.

    With ``normalized=True`` rows ``1..degree`` are scaled by ``sqrt(2)``.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    x = _check_domain(x)
    out = np.empty((degree + 1,) + x.shape)
    out[0] = 1.0
    if degree >= 1:
        out[1] = x
    two_x = 2.0 * x
    for k in range(2, degree + 1):
        out[k] = two_x * out[k - 1] - out[k - 2]
    if normalized:
        out[1:] *= SQRT2
    return out


def cheb_T(i: int, x):
    """Chebyshev polynomial ``T_i(x) = cos(i arccos x)`` on ``[-1, 1]``."""
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    x = _check_domain(x)
    t_prev, t_cur = np.ones_like(x), x
    if i == 0:
        t_cur = t_prev
    for _ in range(1, i):
        t_prev, t_cur = t_cur, 2.0 * x * t_cur - t_prev
    return float(t_cur) if t_cur.ndim == 0 else t_cur


def cheb_That(i: int, x):
    """Normalised Chebyshev polynomial: 1 for ``i = 0``, else ``sqrt(2) T_i(x)``."""
    t = cheb_T(i, x)
    return t if i == 0 else SQRT2 * t


def cheb_vector(axis: str, params: LissajousParams, coordinate: float) -> np.ndarray:
    """Normalised Chebyshev values used by the coefficient scheme.

    ``axis="x"`` gives degrees ``0..2(n+p)-1``, ``axis="y"`` degrees ``0..2n``.
    """
    if axis == "x":
        degree = 2 * (params.n + params.p) - 1
    elif axis == "y":
        degree = 2 * params.n
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return cheb_matrix(degree, float(coordinate))


@lru_cache(maxsize=64)
def _indicator(params: LissajousParams) -> np.ndarray:
    n, p = params.n, params.p
    g = np.zeros((2 * (n + p), 2 * n + 1))
    gl = gamma_L(params)
    g[gl.i, gl.j] = 1.0
    g.setflags(write=False)
    return g


def kernel_L(params: LissajousParams, a, b) -> float:
    """Reproducing kernel of the interpolation space.

    Sum over the interpolation index set of
    ``That_i(x_a) That_i(x_b) That_j(y_a) That_j(y_b)``.
    """
    (xa, ya), (xb, yb) = a, b
    u = cheb_vector("x", params, xa) * cheb_vector("x", params, xb)
    v = cheb_vector("y", params, ya) * cheb_vector("y", params, yb)
    return float(u @ _indicator(params) @ v)
