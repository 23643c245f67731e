"""Corpus generation and the sweep harness pitting closed forms against solvers."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, TextIO

from .formulas import (
    FAMILIES,
    LAMBDA_PRIME_FORMULAS,
    FactorStats,
    corollary_predicate,
    lambda_strong_formula,
    xi_strong_formula,
)
from .graph import (
    ENUMERATION_CAP,
    Graph,
    GraphError,
    is_connected,
    min_edge_degree,
)
from .invariants import (
    edge_connectivity,
    is_super_restricted,
    restricted_edge_connectivity_flow,
    restricted_edge_connectivity_oracle,
)
from .products import (
    FAMILY_MIN_N,
    family_factor,
    k2_odot,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    strong_product,
)

DEFAULT_SEED = 7
DEFAULT_MAX_PRODUCT_ORDER = 20
DEFAULT_ORACLE_MAX = 16
DEFAULT_N_RANGES = {"path": (2, 3, 4), "cycle": (3, 4, 5), "complete": (4, 5)}

CORPUS_FAMILIES = ("path", "cycle", "complete", "star", "tree", "near_regular", "atlas", "random")
CSV_HEADER = ("factor_id", "family", "n", "formula", "exact", "method", "match", "elapsed_ms")


# ---------------------------------------------------------------------------
# Corpus
# ---------------------------------------------------------------------------

def _broom(n: int) -> Graph:
    # path 0..n-2 with an extra leaf on vertex 1
    return Graph(n, [(i, i + 1) for i in range(n - 2)] + [(1, n - 1)])


def _double_star(n: int) -> Graph:
    left = (n - 2) // 2
    edges = [(0, 1)] + [(0, 2 + i) for i in range(left)]
    edges += [(1, i) for i in range(2 + left, n)]
    return Graph(n, edges)


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _wheel(n: int) -> Graph:
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, edges)


def _complete_minus_edge(n: int) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if e != (0, 1)])


def _circulant_12(n: int) -> Graph:
    edges = {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in (1, 2)}
    return Graph(n, edges)


def _family_members(family: str, order: int) -> list[Graph]:
    if family == "path":
        return [make_path(order)] if order >= 2 else []
    if family == "cycle":
        return [make_cycle(order)] if order >= 3 else []
    if family == "complete":
        return [make_complete(order)] if order >= 2 else []
    if family == "star":
        return [make_star(order - 1)] if order >= 4 else []
    if family == "tree":
        out = []
        if order >= 5:
            out.append(_broom(order))
        if order >= 6:
            out.append(_double_star(order))
        return out
    if family == "near_regular":
        out = []
        if order >= 4:
            out.append(_complete_bipartite(order // 2, order - order // 2))
            out.append(_complete_minus_edge(order))
        if order >= 5:
            out.append(_wheel(order))
        if order >= 6:
            out.append(_circulant_12(order))
        return out
    raise GraphError(f"unknown corpus family {family!r}")


def atlas_graphs(max_order: int, min_order: int = 2) -> list[Graph]:
    """Every connected graph on ``min_order..max_order`` vertices (at most 7), up to isomorphism."""
    import networkx as nx

    out = []
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n < min_order or n > min(max_order, 7):
            continue
        g = Graph(n, nxg.edges())
        if is_connected(g):
            out.append(g)
    return out


def random_connected_graph(order: int, rng: random.Random) -> Graph:
    """Seeded G(n, p) sample with p drawn from [0.2, 0.8], rejecting disconnected draws."""
    if order <= 2:
        return make_complete(order)
    while True:
        p = rng.uniform(0.2, 0.8)
        edges = [e for e in combinations(range(order), 2) if rng.random() < p]
        g = Graph(order, edges)
        if is_connected(g):
            return g


def generate_corpus(
    families: Sequence[str] = ("path", "cycle", "complete"),
    max_order: int = 5,
    random_count: int = 0,
    seed: int = DEFAULT_SEED,
    min_order: int = 2,
) -> list[Graph]:
    """Deterministic list of connected factor graphs.

    Structured families come first, family by family in ascending order; the
    ``random`` family (implied by ``random_count > 0``) draws ``random_count``
    graphs for every order from 3 to ``max_order``.
    """
    if max_order > ENUMERATION_CAP:
        raise GraphError(f"max_order {max_order} exceeds the enumeration cap {ENUMERATION_CAP}")
    corpus: list[Graph] = []
    for family in families:
        if family == "random":
            continue
        if family == "atlas":
            corpus.extend(atlas_graphs(max_order, min_order))
            continue
        for order in range(min_order, max_order + 1):
            corpus.extend(_family_members(family, order))
    if random_count > 0 or "random" in families:
        rng = random.Random(seed)
        for order in range(max(3, min_order), max_order + 1):
            for _ in range(random_count):
                corpus.append(random_connected_graph(order, rng))
    return corpus


# ---------------------------------------------------------------------------
# Theorem checks
# ---------------------------------------------------------------------------

@dataclass
class VerificationRecord:
    """One (factor, family, n) trial of a λ' closed form against an exact solver."""

    factor_id: str
    family: str
    n: int
    formula_value: int
    terms: dict[str, int]
    exact_value: int | None = None
    exact_method: str | None = None
    methods_agree: bool | None = None
    match: bool | None = None
    corollary_maximal_predicted: bool = False
    corollary_super_predicted: bool = False
    maximal_classified: bool | None = None
    super_classified: bool | None = None
    elapsed: float = 0.0
    skip_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.exact_value is None

    @property
    def corollary_violation(self) -> bool:
        return (self.corollary_maximal_predicted and self.maximal_classified is False) or (
            self.corollary_super_predicted and self.super_classified is False
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping) -> VerificationRecord:
        return cls(**data)

    def csv_row(self) -> list:
        return [
            self.factor_id,
            self.family,
            self.n,
            self.formula_value,
            "" if self.exact_value is None else self.exact_value,
            self.exact_method or "",
            "" if self.match is None else str(self.match).lower(),
            f"{self.elapsed * 1000:.3f}",
        ]


# Looked up at call time so tests can substitute a perturbed formula.
FAMILY_FORMULAS = dict(LAMBDA_PRIME_FORMULAS)


def check_theorem(
    g: Graph,
    family: str,
    n: int,
    method: str = "both",
    max_order: int = DEFAULT_MAX_PRODUCT_ORDER,
    oracle_max: int = DEFAULT_ORACLE_MAX,
    classify: bool = True,
) -> VerificationRecord:
    """Compare the closed form for λ'(G ⊠ F_n) with an exact computation.

    ``method`` is ``flow``, ``oracle`` or ``both`` (flow everywhere, oracle
    as a cross-check up to ``oracle_max`` vertices).  Products above
    ``max_order`` produce a skipped record rather than being dropped.
    """
    if method not in ("flow", "oracle", "both"):
        raise ValueError(f"unknown method {method!r}")
    if family not in FAMILY_MIN_N:
        raise GraphError(f"unknown family {family!r}")
    if n < FAMILY_MIN_N[family]:
        raise GraphError(f"{family} family needs n >= {FAMILY_MIN_N[family]}, got {n}")
    start = time.perf_counter()
    stats = FactorStats.of(g)
    breakdown = FAMILY_FORMULAS[family](stats, n)
    rec = VerificationRecord(
        factor_id=g.to_id(),
        family=family,
        n=n,
        formula_value=breakdown.value,
        terms=dict(breakdown.terms),
        corollary_maximal_predicted=corollary_predicate(family, stats, n, "maximal"),
        corollary_super_predicted=corollary_predicate(family, stats, n, "super"),
    )
    order = g.order * n
    limit = min(max_order, ENUMERATION_CAP) if method == "oracle" else max_order
    if order > limit:
        rec.skip_reason = f"product order {order} exceeds {limit}"
        rec.elapsed = time.perf_counter() - start
        return rec

    p = strong_product(g, family_factor(family, n))
    flow_value = oracle_value = None
    if method in ("flow", "both"):
        flow_value = restricted_edge_connectivity_flow(p).value
    if method == "oracle" or (method == "both" and order <= oracle_max):
        oracle_value = restricted_edge_connectivity_oracle(p).value

    if flow_value is not None and oracle_value is not None:
        rec.exact_method = "both"
        rec.methods_agree = flow_value == oracle_value
    else:
        rec.exact_method = "flow" if flow_value is not None else "oracle"
    rec.exact_value = flow_value if flow_value is not None else oracle_value
    rec.match = rec.exact_value == rec.formula_value and rec.methods_agree is not False

    if rec.exact_value is not None:
        rec.maximal_classified = rec.exact_value == min_edge_degree(p)
        if classify and order <= ENUMERATION_CAP:
            rec.super_classified = is_super_restricted(p)
    rec.elapsed = time.perf_counter() - start
    return rec


@dataclass
class SweepSummary:
    checked: int = 0
    matched: int = 0
    mismatched: int = 0
    skipped: int = 0
    corollary_violations: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatched == 0 and self.corollary_violations == 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SweepResult:
    records: list[VerificationRecord] = field(default_factory=list)
    summary: SweepSummary = field(default_factory=SweepSummary)


def summarize(records: Iterable[VerificationRecord]) -> SweepSummary:
    s = SweepSummary()
    for r in records:
        if r.skipped:
            s.skipped += 1
            continue
        s.checked += 1
        if r.match:
            s.matched += 1
        else:
            s.mismatched += 1
        if r.corollary_violation:
            s.corollary_violations += 1
    return s


def sweep(
    corpus: Iterable[Graph],
    families: Sequence[str] = FAMILIES,
    n_ranges: Mapping[str, Iterable[int]] | None = None,
    method: str = "both",
    max_order: int = DEFAULT_MAX_PRODUCT_ORDER,
    oracle_max: int = DEFAULT_ORACLE_MAX,
    classify: bool = True,
) -> SweepResult:
    """Run :func:`check_theorem` over corpus x families x n, in corpus order.

    Factors that cannot be checked (trivial or disconnected) become skipped
    records with a reason; mismatches are counted, never averaged away.
    """
    ranges = {f: tuple(v) for f, v in (n_ranges or DEFAULT_N_RANGES).items()}
    records = []
    for g in corpus:
        for family in families:
            for n in ranges.get(family, DEFAULT_N_RANGES[family]):
                try:
                    rec = check_theorem(g, family, n, method, max_order, oracle_max, classify)
                except GraphError as exc:
                    rec = VerificationRecord(g.to_id(), family, n, 0, {}, skip_reason=str(exc))
                records.append(rec)
    return SweepResult(records, summarize(records))


# ---------------------------------------------------------------------------
# Lemma and bound checks
# ---------------------------------------------------------------------------

@dataclass
class LemmaRecord:
    """λ and ξ of G ⊠ H computed on the product and from the closed forms."""

    g_id: str
    h_id: str
    lambda_formula: int
    lambda_exact: int
    xi_formula: int
    xi_exact: int

    @property
    def match(self) -> bool:
        return self.lambda_formula == self.lambda_exact and self.xi_formula == self.xi_exact


def check_strong_lemmas(g: Graph, h: Graph) -> LemmaRecord:
    gs, hs = FactorStats.of(g), FactorStats.of(h)
    p = strong_product(g, h)
    return LemmaRecord(
        g_id=g.to_id(),
        h_id=h.to_id(),
        lambda_formula=lambda_strong_formula(gs, hs).value,
        lambda_exact=edge_connectivity(p),
        xi_formula=xi_strong_formula(gs, hs).value,
        xi_exact=min_edge_degree(p),
    )


def subset_degree_bound_violations(g: Graph) -> list[tuple[frozenset[int], int]]:
    """Pairs (X, x) with x in X breaking ``|X| + |[X, X̄]| >= d(x) + 1``.

    Exhaustive over nonempty X; intended for graphs of order <= 10.
    """
    n = g.order
    deg = g.degrees()
    bad = []
    for mask in range(1, 1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        cut = sum(1 for u, v in g.edges if (mask >> u & 1) != (mask >> v & 1))
        lhs = len(members) + cut
        for x in members:
            if lhs < deg[x] + 1:
                bad.append((frozenset(members), x))
    return bad


def k2_odot_cut_bound_violations(h: Graph) -> list[frozenset[int]]:
    """Sides X of K2 ⊙ H splitting both H-copies with fewer than 2λ(H) cut edges."""
    if h.order < 2:
        return []
    lam = edge_connectivity(h)
    p = k2_odot(h)
    n = h.order
    full = (1 << n) - 1
    bad = []
    # vertex 0 fixed in X; bits 0..n-2 cover vertices 1..n-1 of copy a,
    # bits n-1..2n-2 cover copy b.
    for mask in range(1 << (2 * n - 1)):
        side = (mask << 1) | 1
        a_part = side & full
        b_part = side >> n
        if a_part == full or b_part in (0, full):
            continue
        cut = sum(1 for u, v in p.edges if (side >> u & 1) != (side >> v & 1))
        if cut < 2 * lam:
            bad.append(frozenset(v for v in range(2 * n) if side >> v & 1))
    return bad


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def write_jsonl(records: Iterable[VerificationRecord], fh: TextIO) -> None:
    for r in records:
        fh.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")


def read_jsonl(fh: TextIO) -> list[VerificationRecord]:
    return [VerificationRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


def write_csv(records: Iterable[VerificationRecord], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.csv_row())


def records_to_csv(records: Iterable[VerificationRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
