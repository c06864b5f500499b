"""Product-Chebyshev quadrature on the Lissajous nodes.

Interior nodes carry weight ``2 / (4n(n+p))`` and boundary nodes
``1 / (4n(n+p))``. The node sum equals the trapezoidal rule along the curve
at the sample times, because every sample index lands on exactly one node
and interior nodes are hit twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .nodes import LissajousParams, NodeSet, build_node_set, curve_point, sample_times

__all__ = ["QuadratureRule", "curve_integral", "integrate", "quadrature_rule", "reference_integral"]

BivariateFunction = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureRule:
    params: LissajousParams
    nodes: NodeSet

    @property
    def weights(self) -> np.ndarray:
        return self.nodes.weights


def quadrature_rule(params: LissajousParams, nodes: NodeSet | None = None) -> QuadratureRule:
    return QuadratureRule(params, nodes if nodes is not None else build_node_set(params))


def integrate(rule: QuadratureRule, f: BivariateFunction) -> float:
    """Node quadrature ``sum_A w_A f(A)``.

    ``f`` is called once with the arrays of node x and y coordinates. The
    result approximates ``(1/pi^2) int int f / (sqrt(1-x^2) sqrt(1-y^2))``
    and is exact when ``f`` lies in the span of ``T_i(x) T_j(y)`` over the
    quadrature index set.
    """
    values = np.broadcast_to(np.asarray(f(rule.nodes.x, rule.nodes.y), dtype=float), rule.weights.shape)
    # np.sum reduces pairwise in a fixed order
    return float(np.sum(rule.weights * values))


def curve_integral(params: LissajousParams, f: BivariateFunction) -> float:
    """Trapezoidal rule for ``(1 / 2pi) int_0^{2pi} f(gamma(t)) dt`` at the ``t_k``."""
    x, y = curve_point(params, sample_times(params))
    values = np.broadcast_to(np.asarray(f(x, y), dtype=float), x.shape)
    return float(np.sum(values) / params.num_samples)


def reference_integral(i: int, j: int) -> float:
    """Exact normalised weighted integral of ``T_i(x) T_j(y)``."""
    if i < 0 or j < 0:
        raise ValueError(f"degrees must be non-negative, got ({i}, {j})")
    return 1.0 if (i, j) == (0, 0) else 0.0
