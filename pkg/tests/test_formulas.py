import json

import pytest
from hypothesis import given, settings

from strongcut.formulas import (
    FactorStats,
    FormulaBreakdown,
    corollary_predicate,
    edge_isolating_witness_cut,
    factor_side_witness_cut,
    fiber_witness_cut,
    lambda_prime_complete_formula,
    lambda_prime_cycle_formula,
    lambda_prime_formula,
    lambda_prime_path_formula,
    lambda_strong_formula,
    product_xi_term,
    witness_cuts,
    xi_strong_formula,
)
from strongcut.graph import Graph, GraphError, is_restricted_cut, min_edge_degree
from strongcut.invariants import (
    classify,
    edge_connectivity,
    restricted_edge_connectivity_flow,
    restricted_edge_connectivity_oracle,
)
from strongcut.products import family_factor, make_complete, make_cycle, make_path, strong_product

from .conftest import connected_graphs

K2, K3, K4, P3, C4 = make_complete(2), make_complete(3), make_complete(4), make_path(3), make_cycle(4)


def stats(g):
    return FactorStats.of(g)


def test_factor_stats():
    s = stats(P3)
    assert (s.order, s.size, s.min_degree, s.min_edge_degree, s.edge_connectivity) == (3, 2, 1, 1, 1)
    with pytest.raises(GraphError):
        stats(Graph(1))
    with pytest.raises(GraphError):
        stats(Graph(3, [(0, 1)]))


def test_breakdown_argmin_keeps_ties():
    b = FormulaBreakdown({"a": 4, "b": 4, "c": 6})
    assert b.value == 4 and b.argmin == ("a", "b")
    doc = json.loads(json.dumps(b.to_dict()))
    assert doc == {"terms": {"a": 4, "b": 4, "c": 6}, "value": 4, "argmin": ["a", "b"]}
    assert FormulaBreakdown.from_dict(doc) == b


@pytest.mark.parametrize(
    "g, h, terms, value",
    [(K2, K2, [4, 4, 3], 3), (K2, P3, [7, 4, 3], 3), (K3, K3, [18, 18, 8], 8)],
)
def test_lambda_strong(g, h, terms, value):
    b = lambda_strong_formula(stats(g), stats(h))
    assert list(b.terms.values()) == terms and b.value == value
    assert edge_connectivity(strong_product(g, h)) == value


@pytest.mark.parametrize(
    "g, h, terms, value",
    [(K2, K2, [4, 4], 4), (K2, P3, [4, 6], 4), (C4, C4, [14, 14], 14)],
)
def test_xi_strong(g, h, terms, value):
    b = xi_strong_formula(stats(g), stats(h))
    assert list(b.terms.values()) == terms and b.value == value
    assert min_edge_degree(strong_product(g, h)) == value


@pytest.mark.parametrize(
    "family, g, n, terms, value",
    [
        ("path", K2, 2, [4, 4, 4, 6], 4),
        ("path", P3, 2, [4, 7, 6, 6], 4),
        ("path", P3, 3, [7, 7, 6, 6], 6),
        ("cycle", K2, 3, [9, 8, 8], 8),
        ("cycle", P3, 3, [9, 14, 8], 8),
        # 2(m + 2e) = 2(4 + 12) = 32 for K4
        ("cycle", K4, 3, [27, 32, 20], 20),
        ("complete", K2, 4, [16, 12, 12], 12),
        ("complete", K3, 4, [32, 27, 20], 20),
        ("complete", P3, 4, [16, 21, 12], 12),
    ],
)
def test_lambda_prime_examples(family, g, n, terms, value):
    b = lambda_prime_formula(family, stats(g), n)
    assert list(b.terms.values()) == terms
    assert b.value == value
    p = strong_product(g, family_factor(family, n))
    assert restricted_edge_connectivity_flow(p).value == value
    if p.order <= 12:
        assert restricted_edge_connectivity_oracle(p).value == value


def test_argmin_ties_for_k2_path():
    assert lambda_prime_path_formula(stats(K2), 2).argmin == ("(3n-2)lambda", "m+2e", "2xi+4")


@pytest.mark.parametrize(
    "fn, n",
    [(lambda_prime_path_formula, 1), (lambda_prime_cycle_formula, 2), (lambda_prime_complete_formula, 3)],
)
def test_n_range_errors(fn, n):
    with pytest.raises(GraphError):
        fn(stats(K2), n)


class TestCorollaries:
    def test_path_k2_n2(self):
        assert corollary_predicate("path", stats(K2), 2, "maximal")
        assert not corollary_predicate("path", stats(K2), 2, "super")
        # sufficiency only: K4 is super anyway
        assert classify(K4).super_restricted

    def test_cycle_k3_n3_super(self):
        assert corollary_predicate("cycle", stats(K3), 3, "super")
        assert classify(strong_product(K3, make_cycle(3))).super_restricted

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            corollary_predicate("path", stats(K2), 2, "sometimes")

    def test_family_n_mismatch(self):
        with pytest.raises(GraphError):
            corollary_predicate("complete", stats(K2), 3, "maximal")

    @settings(max_examples=25, deadline=None)
    @given(connected_graphs(min_order=2, max_order=4))
    def test_soundness_on_random_factors(self, g):
        for family, n in (("path", 2), ("path", 3), ("cycle", 3), ("complete", 4)):
            p = strong_product(g, family_factor(family, n))
            r = classify(p)
            if corollary_predicate(family, stats(g), n, "maximal"):
                assert r.maximally_restricted
            if corollary_predicate(family, stats(g), n, "super"):
                assert r.super_restricted


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_order=2, max_order=5))
def test_product_xi_specialisations(g):
    for family, n in (("path", 3), ("path", 4), ("cycle", 3), ("cycle", 4), ("complete", 4)):
        p = strong_product(g, family_factor(family, n))
        assert min_edge_degree(p) == product_xi_term(family, stats(g), n)


class TestWitnessCuts:
    @pytest.mark.parametrize("h, size", [(make_path(2), 4), (make_cycle(3), 9)])
    def test_factor_side_p3(self, h, size):
        c = factor_side_witness_cut(P3, {0}, h)
        assert c.size == size

    def test_factor_side_k2_k4(self):
        assert factor_side_witness_cut(K2, {0}, K4).size == 16

    def test_factor_side_empty(self):
        with pytest.raises(GraphError):
            factor_side_witness_cut(P3, set(), K2)

    @pytest.mark.parametrize("g, h, size", [(P3, make_path(2), 7), (P3, make_cycle(3), 14), (K2, K4, 12)])
    def test_fiber(self, g, h, size):
        c = fiber_witness_cut(g, h, 0)
        assert c.size == size
        assert is_restricted_cut(strong_product(g, h), c.side_x)

    def test_fiber_interior_path_vertex(self):
        with pytest.raises(GraphError):
            fiber_witness_cut(P3, make_path(3), 1)

    def test_edge_isolating(self):
        assert edge_isolating_witness_cut(K4, (0, 1)).size == 4
        assert edge_isolating_witness_cut(make_cycle(6), (2, 3)).size == 2
        p = strong_product(K2, P3)
        c = edge_isolating_witness_cut(p)
        assert c.size == 4 == min_edge_degree(p)
        assert edge_isolating_witness_cut(make_path(4), (1, 2)) is None

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(min_order=2, max_order=5))
    def test_every_term_is_dominated_by_a_valid_cut(self, g):
        for family, n in (("path", 2), ("path", 3), ("cycle", 3), ("cycle", 4), ("complete", 4)):
            b = lambda_prime_formula(family, stats(g), n)
            p = strong_product(g, family_factor(family, n))
            cuts = witness_cuts(g, family, n)
            assert list(cuts) == list(b.terms)
            for label, cut in cuts.items():
                assert cut is not None
                assert is_restricted_cut(p, cut.side_x)
                assert cut.size <= b.terms[label]
            # first two terms are met exactly
            labels = list(b.terms)
            assert cuts[labels[0]].size == b.terms[labels[0]]
            assert cuts[labels[1]].size == b.terms[labels[1]]
