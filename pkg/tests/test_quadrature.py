import math

import numpy as np
import pytest
from numpy.polynomial import chebyshev as npcheb

from lissa import LissajousParams, curve_integral, gamma_Q, integrate, quadrature_rule, reference_integral
from lissa.chebyshev import cheb_matrix

from conftest import nodes_for

SWEEP = [(2, 1), (3, 1), (5, 1), (10, 1), (2, 3), (4, 3), (3, 5), (5, 3)]


def rule_for(n, p):
    return quadrature_rule(LissajousParams(n, p), nodes_for(n, p))


def product_T(i, j):
    ci, cj = np.eye(i + 1)[i], np.eye(j + 1)[j]
    return lambda x, y: npcheb.chebval(x, ci) * npcheb.chebval(y, cj)


def test_constant():
    assert integrate(rule_for(2, 1), lambda x, y: np.ones_like(x)) == pytest.approx(1.0, abs=1e-15)


def test_scalar_function_is_broadcast():
    assert integrate(rule_for(2, 3), lambda x, y: 1.0) == pytest.approx(1.0, abs=1e-15)


def test_weights_sum():
    assert math.fsum(rule_for(4, 3).weights) == pytest.approx(1.0, abs=1e-14)


def test_odd_product_vanishes():
    assert integrate(rule_for(2, 1), product_T(1, 2)) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("n,p", SWEEP)
def test_exact_on_gamma_Q(n, p):
    params = LissajousParams(n, p)
    nodes = nodes_for(n, p)
    gq = gamma_Q(params)
    tx = cheb_matrix(int(gq.i.max()), nodes.x, normalized=False)
    ty = cheb_matrix(int(gq.j.max()), nodes.y, normalized=False)
    got = np.sum(tx[gq.i] * ty[gq.j] * nodes.weights, axis=1)
    expected = np.array([reference_integral(i, j) for i, j in gq])
    assert np.max(np.abs(got - expected)) < 1e-11


@pytest.mark.parametrize("n,p", SWEEP)
def test_first_excluded_index_is_not_exact(n, p):
    # T_{2(n+p)}(x) T_{2n}(y) aliases to a constant along the curve: the rule gives -1, not 0
    f = product_T(2 * (n + p), 2 * n)
    params = LissajousParams(n, p)
    assert (2 * (n + p), 2 * n) not in gamma_Q(params)
    value = integrate(rule_for(n, p), f)
    assert value == pytest.approx(-1.0, abs=1e-11)
    assert value == pytest.approx(curve_integral(params, f), abs=1e-12)


@pytest.mark.parametrize("n,p", [(2, 1), (5, 1), (4, 3), (3, 5)])
def test_equals_curve_trapezoid(n, p, rng):
    params = LissajousParams(n, p)
    rule = rule_for(n, p)
    for _ in range(50):
        c = rng.standard_normal((6, 6))
        f = lambda x, y: npcheb.chebval2d(x, y, c)  # noqa: E731
        assert integrate(rule, f) == pytest.approx(curve_integral(params, f), abs=1e-11)
    g = lambda x, y: np.exp(x) * np.cos(3 * y)  # noqa: E731
    assert integrate(rule, g) == pytest.approx(curve_integral(params, g), abs=1e-12)


@pytest.mark.parametrize("n,p", [(3, 1), (2, 3)])
def test_random_polynomials_in_gamma_Q(n, p, rng):
    params = LissajousParams(n, p)
    gq = gamma_Q(params)
    nodes = nodes_for(n, p)
    tx = cheb_matrix(int(gq.i.max()), nodes.x, normalized=False)
    ty = cheb_matrix(int(gq.j.max()), nodes.y, normalized=False)
    basis = tx[gq.i] * ty[gq.j]
    for _ in range(20):
        c = rng.standard_normal(len(gq))
        c00 = c[list(gq.pairs).index((0, 0))]
        assert np.sum(nodes.weights * (c @ basis)) == pytest.approx(c00, abs=1e-11)


def test_curve_integral_simple():
    params = LissajousParams(2, 1)
    assert curve_integral(params, product_T(2, 0)) == pytest.approx(0.0, abs=1e-15)
    assert curve_integral(params, lambda x, y: np.ones_like(x)) == 1.0


def test_reference_integral():
    assert reference_integral(0, 0) == 1.0
    assert reference_integral(3, 0) == 0.0
    assert reference_integral(0, 4) == 0.0
    with pytest.raises(ValueError):
        reference_integral(-1, 0)
