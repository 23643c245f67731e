"""Exit criteria. Each test appends one PASS/FAIL line to the terminal summary."""

import time

import pytest

from strongcut.formulas import FactorStats, lambda_strong_formula, xi_strong_formula
from strongcut.graph import Graph, is_star, min_edge_degree
from strongcut.invariants import (
    classify,
    edge_connectivity,
    edge_connectivity_oracle,
    is_super_restricted,
    restricted_edge_connectivity_flow,
    restricted_edge_connectivity_oracle,
)
from strongcut.products import make_complete, make_cycle, make_path, make_star, strong_product
from strongcut.verify import (
    check_strong_lemmas,
    generate_corpus,
    k2_odot_cut_bound_violations,
    subset_degree_bound_violations,
    sweep,
)

SWEEP_FAMILIES = ("path", "cycle", "complete", "star", "tree", "near_regular", "atlas")
N_RANGES = {"path": (2, 3, 4), "cycle": (3, 4, 5), "complete": (4, 5)}
PRODUCT_CAP = 20
ORACLE_CROSS_CHECK = 16
SEED = 7


@pytest.fixture(scope="module")
def small_corpus():
    corpus = generate_corpus(SWEEP_FAMILIES, max_order=6, random_count=5, seed=SEED)
    assert all(2 <= g.order <= 6 for g in corpus)
    return corpus


@pytest.fixture(scope="module")
def wide_corpus():
    return generate_corpus(SWEEP_FAMILIES, max_order=10, random_count=25, seed=SEED)


@pytest.fixture(scope="module")
def theorem_sweep(small_corpus):
    start = time.perf_counter()
    res = sweep(small_corpus, ["path", "cycle", "complete"], N_RANGES, method="both", max_order=PRODUCT_CAP)
    return res, time.perf_counter() - start


def _family_records(theorem_sweep, family):
    res, _ = theorem_sweep
    return [r for r in res.records if r.family == family]


def _check_family(theorem_sweep, small_corpus, family):
    records = _family_records(theorem_sweep, family)
    expected = sum(1 for g in small_corpus for n in N_RANGES[family] if g.order * n <= PRODUCT_CAP)
    in_range = [r for r in records if not r.skipped]
    problems = []
    if len(in_range) != expected:
        problems.append(f"{len(in_range)} checked, expected {expected}")
    for r in in_range:
        order = Graph.from_id(r.factor_id).order * r.n
        if r.exact_value != r.formula_value:
            problems.append(f"{r.factor_id} n={r.n}: exact {r.exact_value} != formula {r.formula_value}")
        if order <= ORACLE_CROSS_CHECK and not (r.exact_method == "both" and r.methods_agree):
            problems.append(f"{r.factor_id} n={r.n}: oracle cross-check missing or disagreeing")
    return in_range, problems


@pytest.mark.parametrize(
    "criterion, family",
    [
        ("1 path family sweep", "path"),
        ("2 cycle family sweep", "cycle"),
        ("3 complete family sweep", "complete"),
    ],
)
def test_family_sweep(criterion, family, theorem_sweep, small_corpus, acceptance_report):
    in_range, problems = _check_family(theorem_sweep, small_corpus, family)
    elapsed = theorem_sweep[1]
    ok = not problems and elapsed < 300
    acceptance_report(
        criterion, ok, f"{len(in_range)} instances, {len(problems)} problems, sweep {elapsed:.1f}s"
    )
    assert not problems, problems[:5]
    assert elapsed < 300


def test_strong_product_lemmas(small_corpus, acceptance_report):
    checked = 0
    bad = []
    for g in small_corpus:
        for h in small_corpus:
            if g.order * h.order > PRODUCT_CAP:
                continue
            rec = check_strong_lemmas(g, h)
            checked += 1
            if not rec.match:
                bad.append((g.to_id(), h.to_id()))
    acceptance_report("4 lambda and xi of strong products", not bad, f"{checked} factor pairs, {len(bad)} mismatches")
    assert checked > 0 and not bad, bad[:5]


def test_spot_values(acceptance_report):
    k2 = make_complete(2)
    got = {}
    for name, p, want in (
        ("K2 x P2", strong_product(k2, make_path(2)), 4),
        ("K2 x C3", strong_product(k2, make_cycle(3)), 8),
        ("K2 x K4", strong_product(k2, make_complete(4)), 12),
    ):
        got[name] = (restricted_edge_connectivity_flow(p).value, restricted_edge_connectivity_oracle(p).value, want)
    k2k2 = strong_product(k2, k2)
    got["lambda K2 x K2"] = (edge_connectivity(k2k2), edge_connectivity_oracle(k2k2), 3)
    xi_direct = min(k2k2.degree(u) + k2k2.degree(v) - 2 for u, v in k2k2.edges)
    got["xi K2 x K2"] = (min_edge_degree(k2k2), xi_direct, 4)
    c5, c6 = classify(make_cycle(5)), classify(make_cycle(6))
    flags_ok = (
        c5.maximally_edge_connected and c5.super_edge_connected is False
        and c6.maximally_restricted and c6.super_restricted is False
    )
    values_ok = all(a == b == want for a, b, want in got.values())
    acceptance_report("5 spot values", values_ok and flags_ok, ", ".join(f"{k}={v[0]}" for k, v in got.items()))
    assert values_ok, got
    assert flags_ok


def test_flow_matches_enumeration(wide_corpus, acceptance_report):
    randoms = generate_corpus((), max_order=10, random_count=25, seed=SEED)
    assert len(randoms) == 200
    assert all(g in wide_corpus for g in randoms)
    disagreements = []
    for g in wide_corpus:
        if g.order > 10:
            continue
        a = restricted_edge_connectivity_flow(g).value
        b = restricted_edge_connectivity_oracle(g).value
        if a != b:
            disagreements.append((g.to_id(), a, b))
    acceptance_report(
        "6 flow equals enumeration",
        not disagreements,
        f"{len(wide_corpus)} graphs ({len(randoms)} random), {len(disagreements)} disagreements",
    )
    assert not disagreements, disagreements[:5]


def test_corollary_soundness(theorem_sweep, acceptance_report):
    res, _ = theorem_sweep
    violations = []
    checked = 0
    for r in res.records:
        if r.skipped:
            continue
        if r.corollary_maximal_predicted:
            checked += 1
            p = strong_product(Graph.from_id(r.factor_id), _factor(r.family, r.n))
            if restricted_edge_connectivity_oracle(p).value != min_edge_degree(p):
                violations.append((r.factor_id, r.family, r.n, "maximal"))
        if r.corollary_super_predicted:
            checked += 1
            p = strong_product(Graph.from_id(r.factor_id), _factor(r.family, r.n))
            if not is_super_restricted(p):
                violations.append((r.factor_id, r.family, r.n, "super"))
    acceptance_report("7 corollary soundness", not violations, f"{checked} predicted instances, {len(violations)} violations")
    assert checked > 0 and not violations, violations[:5]


def _factor(family, n):
    return {"path": make_path, "cycle": make_cycle, "complete": make_complete}[family](n)


@pytest.mark.parametrize("family", ["path", "cycle", "complete"])
@pytest.mark.parametrize("mode", ["maximal", "super"])
def test_corollary_not_necessary(family, mode, theorem_sweep, acceptance_report):
    predicted = "corollary_maximal_predicted" if mode == "maximal" else "corollary_super_predicted"
    observed = "maximal_classified" if mode == "maximal" else "super_classified"
    hits = [
        (r.factor_id, r.n)
        for r in _family_records(theorem_sweep, family)
        if not r.skipped and getattr(r, predicted) is False and getattr(r, observed) is True
    ]
    detail = f"{len(hits)} instances" + (f", e.g. G={hits[0][0]} n={hits[0][1]}" if hits else "")
    acceptance_report(f"7 predicate false but property holds ({family}, {mode})", bool(hits), detail)
    assert hits, f"no {family}/{mode} instance with a false predicate and the property present"


def test_bound_suite(wide_corpus, acceptance_report):
    xi_bad = []
    for g in wide_corpus:
        if g.order >= 4 and not is_star(g):
            lp = restricted_edge_connectivity_flow(g).value
            if lp is None or lp > min_edge_degree(g):
                xi_bad.append(g.to_id())

    subset_bad = []
    subset_checked = 0
    for g in wide_corpus:
        if g.order <= 8:
            subset_checked += 1
            if subset_degree_bound_violations(g):
                subset_bad.append(g.to_id())

    hs = [g for g in generate_corpus(("atlas",), max_order=6, min_order=1)]
    odot_bad = [h.to_id() for h in hs if k2_odot_cut_bound_violations(h)]

    ok = not (xi_bad or subset_bad or odot_bad)
    acceptance_report(
        "8 bound suite",
        ok,
        f"lambda'<=xi bad {len(xi_bad)}, subset bound {subset_checked} graphs bad {len(subset_bad)}, "
        f"K2 odot H {len(hs)} factors bad {len(odot_bad)}",
    )
    assert not xi_bad, xi_bad[:5]
    assert not subset_bad, subset_bad[:5]
    assert not odot_bad, odot_bad[:5]
