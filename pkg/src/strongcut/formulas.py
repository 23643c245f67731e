"""Closed forms for λ, ξ and λ' of strong products, plus witness cuts.

Formula evaluation only needs a :class:`FactorStats` summary of the factor,
never the product graph itself.  Each term of a formula has a matching witness
constructor producing an explicit restricted edge-cut of the actual product of
at most that size, which is what makes the formula an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    Bipartition,
    Graph,
    GraphError,
    cut_of,
    is_connected,
    is_restricted_cut,
    min_degree,
    min_edge_degree,
)
from .invariants import edge_connectivity, minimum_edge_cuts
from .products import FAMILY_MIN_N, family_factor, strong_product

FAMILIES = ("path", "cycle", "complete")


@dataclass(frozen=True)
class FactorStats:
    """Order m, size e, δ, ξ and λ of a factor graph."""

    order: int
    size: int
    min_degree: int
    min_edge_degree: int | None
    edge_connectivity: int

    @classmethod
    def of(cls, g: Graph) -> FactorStats:
        if g.order < 2 or not is_connected(g):
            raise GraphError("factor must be a connected graph with at least two vertices")
        return cls(
            order=g.order,
            size=g.size,
            min_degree=min_degree(g),
            min_edge_degree=min_edge_degree(g),
            edge_connectivity=edge_connectivity(g),
        )

    @property
    def m_plus_2e(self) -> int:
        return self.order + 2 * self.size


@dataclass(frozen=True)
class FormulaBreakdown:
    """Named terms of a min-formula, the minimum and every term attaining it."""

    terms: dict[str, int]
    value: int = field(init=False)
    argmin: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("formula needs at least one term")
        value = min(self.terms.values())
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "argmin", tuple(k for k, v in self.terms.items() if v == value))

    def to_dict(self) -> dict:
        return {"terms": dict(self.terms), "value": self.value, "argmin": list(self.argmin)}

    @classmethod
    def from_dict(cls, data: dict) -> FormulaBreakdown:
        return cls({k: int(v) for k, v in data["terms"].items()})


def _nontrivial(*stats: FactorStats) -> None:
    for s in stats:
        if s.order < 2 or s.edge_connectivity < 1:
            raise GraphError("factors must be connected and nontrivial")


def lambda_strong_formula(gs: FactorStats, hs: FactorStats) -> FormulaBreakdown:
    """Edge-connectivity of G ⊠ H for connected nontrivial G and H."""
    _nontrivial(gs, hs)
    return FormulaBreakdown({
        "lambda(G)(|V(H)|+2e(H))": gs.edge_connectivity * hs.m_plus_2e,
        "lambda(H)(|V(G)|+2e(G))": hs.edge_connectivity * gs.m_plus_2e,
        "delta(G)+delta(H)+delta(G)delta(H)": gs.min_degree + hs.min_degree + gs.min_degree * hs.min_degree,
    })


def xi_strong_formula(gs: FactorStats, hs: FactorStats) -> FormulaBreakdown:
    """Minimum edge-degree of G ⊠ H for connected G and H with at least one edge."""
    _nontrivial(gs, hs)
    xg, xh = gs.min_edge_degree, hs.min_edge_degree
    dg, dh = gs.min_degree, hs.min_degree
    return FormulaBreakdown({
        "xi(G)delta(H)+4delta(H)+xi(G)": xg * dh + 4 * dh + xg,
        "delta(G)xi(H)+4delta(G)+xi(H)": dg * xh + 4 * dg + xh,
    })


def _check_n(family: str, n: int) -> None:
    if family not in FAMILY_MIN_N:
        raise GraphError(f"unknown family {family!r}")
    if n < FAMILY_MIN_N[family]:
        raise GraphError(f"{family} formula needs n >= {FAMILY_MIN_N[family]}, got {n}")


def lambda_prime_path_formula(gs: FactorStats, n: int) -> FormulaBreakdown:
    _check_n("path", n)
    _nontrivial(gs)
    return FormulaBreakdown({
        "(3n-2)lambda": (3 * n - 2) * gs.edge_connectivity,
        "m+2e": gs.m_plus_2e,
        "2xi+4": 2 * gs.min_edge_degree + 4,
        "5delta+1": 5 * gs.min_degree + 1,
    })


def lambda_prime_cycle_formula(gs: FactorStats, n: int) -> FormulaBreakdown:
    _check_n("cycle", n)
    _nontrivial(gs)
    return FormulaBreakdown({
        "3n*lambda": 3 * n * gs.edge_connectivity,
        "2(m+2e)": 2 * gs.m_plus_2e,
        "6delta+2": 6 * gs.min_degree + 2,
    })


def lambda_prime_complete_formula(gs: FactorStats, n: int) -> FormulaBreakdown:
    _check_n("complete", n)
    _nontrivial(gs)
    return FormulaBreakdown({
        "n^2*lambda": n * n * gs.edge_connectivity,
        "(n-1)(m+2e)": (n - 1) * gs.m_plus_2e,
        "2n*delta+2n-4": 2 * n * gs.min_degree + 2 * n - 4,
    })


LAMBDA_PRIME_FORMULAS = {
    "path": lambda_prime_path_formula,
    "cycle": lambda_prime_cycle_formula,
    "complete": lambda_prime_complete_formula,
}


def lambda_prime_formula(family: str, gs: FactorStats, n: int) -> FormulaBreakdown:
    _check_n(family, n)
    return LAMBDA_PRIME_FORMULAS[family](gs, n)


def product_xi_term(family: str, gs: FactorStats, n: int) -> int:
    """ξ(G ⊠ F_n) for F = P, C or K, written in terms of G alone."""
    _check_n(family, n)
    if family == "path":
        return min(2 * gs.min_edge_degree + 4, 5 * gs.min_degree + 1)
    if family == "cycle":
        return 6 * gs.min_degree + 2
    return 2 * n * gs.min_degree + 2 * n - 4


def _structural_term(family: str, gs: FactorStats, n: int) -> int:
    """The smaller of the factor-side and fiber-side terms."""
    lam, mm = gs.edge_connectivity, gs.m_plus_2e
    if family == "path":
        return min((3 * n - 2) * lam, mm)
    if family == "cycle":
        return min(3 * n * lam, 2 * mm)
    return min(n * n * lam, (n - 1) * mm)


def corollary_predicate(family: str, gs: FactorStats, n: int, mode: str) -> bool:
    """Sufficient condition for G ⊠ F_n to be maximally (``>=``) or super (``>``)
    restricted edge-connected.  A false result says nothing."""
    _check_n(family, n)
    _nontrivial(gs)
    lhs = _structural_term(family, gs, n)
    rhs = product_xi_term(family, gs, n)
    if mode == "maximal":
        return lhs >= rhs
    if mode == "super":
        return lhs > rhs
    raise ValueError(f"mode must be 'maximal' or 'super', not {mode!r}")


# ---------------------------------------------------------------------------
# Witness cuts on the flat-indexed product
# ---------------------------------------------------------------------------

def factor_side_witness_cut(g: Graph, x_side: Iterable[int], h: Graph) -> Bipartition:
    """The cut ``[X × V(H), X̄ × V(H)]`` of G ⊠ H.

    Its size is ``|[X, X̄]_G| * (|V(H)| + 2e(H))``.
    """
    x = frozenset(x_side)
    if not x or len(x) >= g.order:
        raise GraphError("X must be a nonempty proper subset of V(G)")
    p = strong_product(g, h)
    side = frozenset().union(*(p.fiber_h(v) for v in x))
    return cut_of(p, side)


def fiber_witness_cut(g: Graph, h: Graph, y: int) -> Bipartition:
    """The cut ``[{y} × V(G), (V(H) - y) × V(G)]`` of G ⊠ H.

    ``y`` must be a minimum-degree vertex of H (a path endpoint, or any
    vertex of a cycle or complete graph); the cut then has
    ``d_H(y) * (m + 2e(G))`` edges.
    """
    if not (0 <= y < h.order):
        raise GraphError(f"H-vertex {y} out of range")
    if h.degree(y) != min_degree(h):
        raise GraphError(f"vertex {y} is not a minimum-degree vertex of H")
    p = strong_product(g, h)
    return cut_of(p, p.fiber_g(y))


def edge_isolating_witness_cut(p: Graph, edge: tuple[int, int] | None = None) -> Bipartition | None:
    """The cut isolating one edge; its size is the edge-degree of that edge.

    Without ``edge``, the first edge of minimum edge-degree whose isolation is a
    restricted cut is used.  Returns None when no such edge exists.
    """
    if p.order < 4:
        return None
    if edge is not None:
        u, v = edge
        if not p.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return cut_of(p, (u, v)) if is_restricted_cut(p, (u, v)) else None
    deg = p.degrees()
    for u, v in sorted(p.edges, key=lambda e: (deg[e[0]] + deg[e[1]], e)):
        if is_restricted_cut(p, (u, v)):
            return cut_of(p, (u, v))
    return None


def minimum_factor_cut(g: Graph) -> frozenset[int]:
    """Side X of the lexicographically first minimum edge-cut of G (contains 0)."""
    return minimum_edge_cuts(g)[0].side_x


def witness_cuts(g: Graph, family: str, n: int) -> dict[str, Bipartition | None]:
    """One explicit cut of G ⊠ F_n per formula term, keyed like the breakdown.

    The factor-side and fiber terms are realised exactly.  The edge-degree
    terms isolate a G-fiber edge at a path end (``2xi+4``) or an H-fiber edge
    at a minimum-degree vertex of G (the δ terms); that cut never exceeds the
    term.  An entry is None when the isolated edge leaves an isolated vertex.
    """
    _check_n(family, n)
    h = family_factor(family, n)
    p = strong_product(g, h)
    labels = list(LAMBDA_PRIME_FORMULAS[family](FactorStats.of(g), n).terms)
    out: dict[str, Bipartition | None] = {
        labels[0]: factor_side_witness_cut(g, minimum_factor_cut(g), h),
        labels[1]: fiber_witness_cut(g, h, 0),
    }
    deg = g.degrees()
    x = deg.index(min(deg))
    h_edge = (p.vertex(x, 0), p.vertex(x, 1))
    if family == "path":
        a, b = min(g.edges, key=lambda e: (deg[e[0]] + deg[e[1]], e))
        out[labels[2]] = edge_isolating_witness_cut(p, (p.vertex(a, 0), p.vertex(b, 0)))
        out[labels[3]] = edge_isolating_witness_cut(p, h_edge)
    else:
        out[labels[2]] = edge_isolating_witness_cut(p, h_edge)
    return out
