import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lissa import (
    Color,
    LissajousParams,
    Location,
    NonOddPError,
    NonPositiveError,
    NotCoprimeError,
    ParameterError,
    build_node_set,
    curve_point,
    equivalence_classes,
    gauss_lobatto,
    padua_points,
    sample_times,
    validate_params,
    xu_points_odd,
)

from conftest import nodes_for


def valid_params(max_n=30, ps=(1, 3, 5, 7)):
    return [(n, p) for p in ps for n in range(1, max_n + 1) if math.gcd(n, n + p) == 1]


@st.composite
def params_strategy(draw, max_n=30):
    p = draw(st.sampled_from([1, 3, 5, 7]))
    n = draw(st.integers(1, max_n).filter(lambda n: math.gcd(n, n + p) == 1))
    return LissajousParams(n, p)


class TestValidateParams:
    @pytest.mark.parametrize("n,p", [(2, 1), (2, 3)])
    def test_valid(self, n, p):
        params = validate_params(n, p)
        assert (params.n, params.p) == (n, p)

    def test_even_p_reported_first(self):
        # (2, 2) violates both rules; the odd-p message wins
        with pytest.raises(NonOddPError, match="p must be odd"):
            validate_params(2, 2)

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            validate_params(3, 3)

    @pytest.mark.parametrize("n,p", [(0, 1), (-1, 1), (2, 0), (2, -1)])
    def test_non_positive(self, n, p):
        with pytest.raises(NonPositiveError):
            validate_params(n, p)

    def test_errors_share_a_base(self):
        assert issubclass(NotCoprimeError, ParameterError)
        assert issubclass(ParameterError, ValueError)

    def test_non_integer(self):
        with pytest.raises(ParameterError):
            validate_params(2.0, 1)


class TestGaussLobatto:
    def test_examples(self):
        assert gauss_lobatto(0, 4) == 1.0
        assert gauss_lobatto(4, 4) == -1.0
        assert abs(gauss_lobatto(2, 4)) < 1e-15

    @given(st.integers(-1000, 1000), st.integers(1, 300))
    def test_matches_cosine(self, k, m):
        with mpmath.workdps(40):
            exact = float(mpmath.cospi(mpmath.mpf(k) / m))
        assert gauss_lobatto(k, m) == pytest.approx(exact, abs=1e-15)

    @given(st.integers(0, 300), st.integers(1, 300))
    def test_symmetric(self, k, m):
        assert gauss_lobatto(k, m) == -gauss_lobatto(m - k, m)

    def test_endpoints_exact_for_any_congruent_index(self):
        assert gauss_lobatto(np.array([0, 16, -16, 32]), 8).tolist() == [1.0, 1.0, 1.0, 1.0]
        assert gauss_lobatto(np.array([8, 24, -8]), 8).tolist() == [-1.0, -1.0, -1.0]


class TestCurve:
    def test_origin(self):
        assert curve_point(LissajousParams(2, 1), 0.0) == (0.0, 0.0)

    def test_quarter_period(self):
        x, y = curve_point(LissajousParams(2, 1), math.pi / 4)
        assert x == pytest.approx(1.0, abs=1e-15)
        assert y == pytest.approx(math.sqrt(2) / 2, abs=1e-15)

    @given(params_strategy(), st.floats(-10, 10))
    def test_periodic(self, params, t):
        a = curve_point(params, t)
        b = curve_point(params, t + 2 * math.pi)
        assert a == pytest.approx(b, abs=1e-12)

    def test_sample_times(self):
        t = sample_times(LissajousParams(2, 1))
        assert t.size == 24
        assert t[-1] == pytest.approx(2 * math.pi, abs=0)
        assert t[0] == 2 * math.pi / 24
        assert np.all(np.diff(t) > 0)
        assert sample_times(LissajousParams(2, 3)).size == 40


class TestNodeSet:
    @pytest.mark.parametrize("n,p,total", [(2, 1, 17), (2, 3, 27), (5, 1, 71)])
    def test_cardinality(self, n, p, total):
        assert len(nodes_for(n, p)) == total

    def test_split_2_1(self):
        c = nodes_for(2, 1).counts()
        assert c["interior"] == 7 and c["boundary"] == 10

    @pytest.mark.parametrize("n,p", valid_params())
    def test_table1(self, n, p):
        c = nodes_for(n, p).counts()
        assert c["total"] == 2 * n * (n + p) + 2 * n + p
        assert c["black"] == (n + 1) * (n + p)
        assert c["white"] == n * (n + p + 1)
        assert c["interior"] == 2 * n * (n + p) - 2 * n - p
        assert c["boundary"] == 4 * n + 2 * p
        assert 2 * c["interior"] + c["boundary"] == 4 * n * (n + p)

    @settings(max_examples=40, deadline=None)
    @given(params_strategy())
    def test_sample_indices_partition(self, params):
        nodes = build_node_set(params)
        ks = sorted(k for nd in nodes for k in nd.sample_indices)
        assert ks == list(range(1, params.num_samples + 1))

    @settings(max_examples=40, deadline=None)
    @given(params_strategy())
    def test_node_invariants(self, params):
        nodes = build_node_set(params)
        big_n = params.num_samples
        for nd in nodes:
            on_edge = abs(nd.x) == 1.0 or abs(nd.y) == 1.0
            if nd.location is Location.INTERIOR:
                assert len(nd.sample_indices) == 2
                assert nd.weight == 2 / big_n
                assert not on_edge
            else:
                assert len(nd.sample_indices) == 1
                assert nd.weight == 1 / big_n
                assert on_edge
        assert math.fsum(nd.weight for nd in nodes) == pytest.approx(1.0, abs=1e-13)

    @settings(max_examples=40, deadline=None)
    @given(params_strategy())
    def test_sampled_set_equals_closed_form(self, params):
        nodes = build_node_set(params)
        x, y = curve_point(params, sample_times(params))
        # every sample lies on its node, and every node is reached
        owner = nodes.owner
        assert np.max(np.abs(x - nodes.x[owner])) < 1e-9
        assert np.max(np.abs(y - nodes.y[owner])) < 1e-9
        assert set(owner.tolist()) == set(range(len(nodes)))

    @settings(max_examples=30, deadline=None)
    @given(params_strategy())
    def test_distinct_and_colors_disjoint(self, params):
        nodes = build_node_set(params)
        pts = {nd.point for nd in nodes}
        assert len(pts) == len(nodes)
        black = {nd.point for nd in nodes if nd.color is Color.BLACK}
        white = {nd.point for nd in nodes if nd.color is Color.WHITE}
        assert not black & white

    def test_canonical_order(self):
        nodes = nodes_for(3, 1)
        colors = [nd.color for nd in nodes]
        n_black = colors.count(Color.BLACK)
        assert all(c is Color.BLACK for c in colors[:n_black])
        black_idx = [nd.grid_index for nd in nodes[:n_black]]
        white_idx = [nd.grid_index for nd in nodes[n_black:]]
        assert black_idx == sorted(black_idx) and white_idx == sorted(white_idx)

    def test_black_white_sample_parity(self):
        # black nodes collect the odd sample indices, white nodes the even ones
        for nd in nodes_for(5, 3):
            parities = {k % 2 for k in nd.sample_indices}
            assert parities == ({1} if nd.color is Color.BLACK else {0})


class TestEquivalenceClasses:
    @pytest.mark.parametrize("n,p,interior,boundary", [(2, 1, 7, 10), (2, 3, 13, 14)])
    def test_counts(self, n, p, interior, boundary):
        owner = equivalence_classes(LissajousParams(n, p))
        counts = np.bincount(owner)
        assert owner.size == 2 * interior + boundary
        assert (counts == 2).sum() == interior
        assert (counts == 1).sum() == boundary

    def test_boundary_single_preimage(self):
        nodes = nodes_for(4, 3)
        owner = equivalence_classes(LissajousParams(4, 3))
        counts = np.bincount(owner)
        for a, nd in enumerate(nodes):
            assert counts[a] == (1 if nd.location is Location.BOUNDARY else 2)

    def test_large_n_still_unambiguous(self):
        owner = equivalence_classes(LissajousParams(100, 1))
        assert np.bincount(owner).max() == 2


class TestComparisonPoints:
    @pytest.mark.parametrize("n,count", [(1, 6), (5, 66), (10, 231)])
    def test_padua_count(self, n, count):
        assert len(padua_points(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 8), (5, 72), (10, 242)])
    def test_xu_count(self, n, count):
        assert len(xu_points_odd(n)) == count

    @pytest.mark.parametrize("n", range(1, 31))
    def test_formulas_and_distinct(self, n):
        pd = padua_points(n)
        xu = xu_points_odd(n)
        assert len(pd) == (n + 1) * (2 * n + 1)
        assert len(xu) == 2 * (n + 1) ** 2
        assert len({tuple(r) for r in pd.tolist()}) == len(pd)
        assert len({tuple(r) for r in xu.tolist()}) == len(xu)

    def test_padua_n1_by_hand(self):
        # z^3_{1}, z^3_{3} against z^2_{0}, z^2_{2}; z^3_{0}, z^3_{2} against z^2_{1}
        c = math.cos(math.pi / 3)
        expected = {(c, 1.0), (c, -1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, 0.0), (-c, 0.0)}
        got = {(round(x, 12), round(y, 12)) for x, y in padua_points(1).tolist()}
        assert got == {(round(x, 12), round(y, 12)) for x, y in expected}
