"""Polynomial interpolation on the Lissajous nodes.

The interpolant of node data ``f_A`` is

    L f(x, y) = sum_{(i,j)} c_ij That_i(x) That_j(y)

with ``C = (T_x D_f T_y^T) * M``: ``T_x`` and ``T_y`` hold normalised
Chebyshev values at the nodes, ``D_f = diag(w_A f_A)`` and ``M`` is the
0 / 1/2 / 1 mask of the interpolation index set. The fundamental Lagrange
polynomials are ``w_A (K(x, y; A) - That_2n(y) That_2n(y_A) / 2)``.

The trigonometric functions ``trig_basis_e`` and ``dirichlet_lagrange_l``
are the images of the Chebyshev basis and of the Lagrange basis along the
curve; they serve as independent checks of the bivariate formulas.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .chebyshev import SQRT2, _check_domain, cheb_matrix, cheb_That, kernel_L
from .index_sets import in_gamma_L, mask
from .nodes import LissajousParams, Node, NodeSet

__all__ = [
    "CURVE_SAMPLE_TOLERANCE",
    "CoefficientMatrix",
    "IndexNotInGammaLError",
    "InconsistentSamplesError",
    "LengthMismatchError",
    "InconsistentSamplesWarning",
    "dirichlet_lagrange_l",
    "evaluate",
    "evaluate_grid",
    "interpolate",
    "lagrange_basis",
    "lagrange_matrix",
    "nodal_matrices",
    "reduce_curve_samples",
    "trig_basis_e",
]

#: Two curve samples landing on the same node must agree this closely.
CURVE_SAMPLE_TOLERANCE = 1e-9


class LengthMismatchError(ValueError):
    pass


class InconsistentSamplesError(ValueError):
    """Curve samples at a self-intersection disagree beyond the allowed slack."""


class InconsistentSamplesWarning(UserWarning):
    pass


class IndexNotInGammaLError(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientMatrix:
    """Coefficients ``c_ij`` in the normalised Chebyshev basis.

    ``entries`` has shape ``(2(n+p), 2n+1)``: rows are x-degrees, columns
    y-degrees, zero outside the interpolation index set.
    """

    params: LissajousParams
    entries: np.ndarray

    def __post_init__(self):
        n, p = self.params.n, self.params.p
        shape = (2 * (n + p), 2 * n + 1)
        if self.entries.shape != shape:
            raise LengthMismatchError(f"coefficient matrix must have shape {shape}, got {self.entries.shape}")

    def plain_chebyshev(self) -> np.ndarray:
        """Coefficients with respect to the unnormalised ``T_i(x) T_j(y)``."""
        sx = np.full(self.entries.shape[0], SQRT2)
        sy = np.full(self.entries.shape[1], SQRT2)
        sx[0] = sy[0] = 1.0
        return self.entries * sx[:, None] * sy[None, :]


def nodal_matrices(nodes: NodeSet) -> tuple[np.ndarray, np.ndarray]:
    """``T_x`` of shape ``(2(n+p), N)`` and ``T_y`` of shape ``(2n+1, N)`` at the nodes."""
    n, p = nodes.params.n, nodes.params.p
    return cheb_matrix(2 * (n + p) - 1, nodes.x), cheb_matrix(2 * n, nodes.y)


def interpolate(nodes: NodeSet, samples) -> CoefficientMatrix:
    """Coefficient matrix of the interpolant of node data.

    Parameters
    ----------
    nodes : NodeSet
        Node set; ``samples`` follows its canonical order.
    samples : array_like
        One value per node.

    Returns
    -------
    CoefficientMatrix
    """
    f = np.asarray(samples, dtype=float)
    if f.shape != (len(nodes),):
        raise LengthMismatchError(f"expected {len(nodes)} node values, got shape {f.shape}")
    tx, ty = nodal_matrices(nodes)
    wf = nodes.weights * f
    m = mask(nodes.params)
    entries = np.where(m != 0, (tx @ (wf[:, None] * ty.T)) * m, 0.0)
    return CoefficientMatrix(nodes.params, entries)


def evaluate(coeffs: CoefficientMatrix, x, y):
    """Evaluate the interpolant at points ``(x, y)`` (broadcast together).

    Uses Clenshaw summation along x and then along y.
    """
    x, y = np.broadcast_arrays(_check_domain(x), _check_domain(y))
    out = npcheb.chebval2d(x, y, coeffs.plain_chebyshev())
    return float(out) if np.ndim(out) == 0 else out


def evaluate_grid(coeffs: CoefficientMatrix, xs, ys) -> np.ndarray:
    """Interpolant on the tensor grid ``xs x ys``; result has shape ``(len(xs), len(ys))``."""
    xs = _check_domain(xs)
    ys = _check_domain(ys)
    return npcheb.chebgrid2d(xs, ys, coeffs.plain_chebyshev())


def lagrange_basis(params: LissajousParams, a: Node, b) -> float:
    """Fundamental polynomial of node ``a`` evaluated at the point ``b``."""
    xb, yb = b
    two_n = 2 * params.n
    k = kernel_L(params, (xb, yb), a.point)
    return a.weight * (k - 0.5 * cheb_That(two_n, yb) * cheb_That(two_n, a.y))


def lagrange_matrix(nodes: NodeSet, x, y) -> np.ndarray:
    """All fundamental polynomials at the points ``(x[b], y[b])``.

    Returns shape ``(len(x), len(nodes))`` with entry ``[b, a] = L_a(B_b)``.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    n, p = nodes.params.n, nodes.params.p
    m = mask(nodes.params)
    i, j = np.nonzero(m)
    tx_b, ty_b = cheb_matrix(2 * (n + p) - 1, x), cheb_matrix(2 * n, y)
    tx_a, ty_a = nodal_matrices(nodes)
    # L[b, a] = w_a sum_{(i,j)} m_ij That_i(x_b) That_j(y_b) That_i(x_a) That_j(y_a)
    basis_b = (tx_b[i] * ty_b[j]).T * m[i, j]
    basis_a = tx_a[i] * ty_a[j]
    return (basis_b @ basis_a) * nodes.weights[None, :]


def reduce_curve_samples(nodes: NodeSet, curve_values, slack: float = CURVE_SAMPLE_TOLERANCE) -> np.ndarray:
    """Turn data given at the ``4n(n+p)`` sample times into node data.

    The two values at a self-intersection are averaged. A spread above
    ``CURVE_SAMPLE_TOLERANCE`` but within ``slack`` triggers an
    :class:`InconsistentSamplesWarning`; a larger spread raises
    :class:`InconsistentSamplesError`.
    """
    g = np.asarray(curve_values, dtype=float)
    big_n = nodes.params.num_samples
    if g.shape != (big_n,):
        raise LengthMismatchError(f"expected {big_n} curve samples, got shape {g.shape}")
    owner = nodes.owner
    count = np.bincount(owner, minlength=len(nodes))
    total = np.bincount(owner, weights=g, minlength=len(nodes))
    lo = np.full(len(nodes), np.inf)
    hi = np.full(len(nodes), -np.inf)
    np.minimum.at(lo, owner, g)
    np.maximum.at(hi, owner, g)
    spread = hi - lo
    worst = int(np.argmax(spread))
    limit = max(slack, CURVE_SAMPLE_TOLERANCE)
    if spread[worst] > limit:
        raise InconsistentSamplesError(
            f"samples {nodes[worst].sample_indices} at node {worst} differ by {spread[worst]:.3e} (slack {limit:.1e})"
        )
    if spread[worst] > CURVE_SAMPLE_TOLERANCE:
        warnings.warn(
            f"curve samples differ by up to {spread[worst]:.3e} at a self-intersection; averaging",
            InconsistentSamplesWarning,
            stacklevel=2,
        )
    return total / count


def trig_basis_e(params: LissajousParams, i: int, j: int, t):
    """Normalised Chebyshev product ``That_i(x) That_j(y)`` along the curve.

    Closed trigonometric form, defined for ``(i, j)`` in the interpolation
    index set.
    """
    if not in_gamma_L(params, i, j):
        raise IndexNotInGammaLError(f"({i}, {j}) is not in the interpolation index set")
    n, p = params.n, params.p
    t = np.asarray(t, dtype=float)
    cx = np.cos(i * n * t - i * np.pi / 2)
    cy = np.cos(j * (n + p) * t - j * np.pi / 2)
    if i == 0 and j == 0:
        out = np.ones_like(t)
    elif j == 0:
        out = SQRT2 * cx
    elif i == 0:
        out = SQRT2 * cy
    else:
        out = 2.0 * cx * cy
    return float(out) if out.ndim == 0 else out


def _dirichlet(params: LissajousParams, s: np.ndarray) -> np.ndarray:
    big_m = 2 * params.n * (params.n + params.p)
    # reduce to (-pi, pi]; the kernel is 2pi-periodic
    s = np.mod(s + np.pi, 2 * np.pi) - np.pi
    near = np.abs(s) < 1e-12
    safe = np.where(near, 1.0, s)
    val = np.sin(big_m * safe) * np.cos(safe / 2) / (2 * big_m * np.sin(safe / 2))
    return np.where(near, 1.0, val)


def dirichlet_lagrange_l(params: LissajousParams, a: Node, t):
    """Trigonometric Lagrange function of node ``a``.

    Sum of Dirichlet kernels ``D(t - t_k)`` over the sample indices ``k`` of
    ``a``. It equals 1 at those ``t_k`` and 0 at every other sample time.
    """
    t = np.asarray(t, dtype=float)
    big_n = params.num_samples
    out = np.zeros_like(t)
    for k in a.sample_indices:
        out = out + _dirichlet(params, t - 2 * np.pi * k / big_n)
    return float(out) if out.ndim == 0 else out
