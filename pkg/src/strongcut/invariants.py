"""Exact edge-connectivity, restricted edge-connectivity and classification.

Two independent routes are provided for the restricted edge-connectivity:

* :func:`restricted_edge_connectivity_flow` contracts pairs of vertex-disjoint
  edges into a super-source and a super-sink and takes the smallest max-flow.
  A minimum cut between two contracted edges never leaves an isolated vertex
  on either side (moving such a vertex across would shrink the cut), so every
  flow value is the size of a genuine restricted edge-cut.
* :func:`restricted_edge_connectivity_oracle` enumerates every bipartition
  ``[X, X̄]`` and keeps those where neither side induces an isolated vertex.

Minimum restricted edge-cuts are always bipartition cuts: a cut leaving three
or more components contains a smaller restricted cut.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .flow import FlowNetwork
from .graph import (
    ENUMERATION_CAP,
    Bipartition,
    CapacityError,
    DisconnectedGraphError,
    Graph,
    GraphError,
    cut_of,
    has_disjoint_edges,
    is_connected,
    is_restricted_cut,
    min_degree,
    min_edge_degree,
)

_CHUNK_BITS = 16


@dataclass(frozen=True)
class RestrictedCutResult:
    value: int | None
    witness: Bipartition | None
    method: str

    @property
    def exists(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _side_key(side) -> tuple[int, ...]:
    return tuple(sorted(side))


def _normalized_cut(g: Graph, side) -> Bipartition:
    """Cut with ``side_x`` chosen as the side containing vertex 0."""
    side = frozenset(side)
    if 0 not in side:
        side = frozenset(g.vertices()) - side
    return cut_of(g, side)


# ---------------------------------------------------------------------------
# Flow route
# ---------------------------------------------------------------------------

def edge_connectivity(g: Graph) -> int:
    """λ(G) as the minimum over t != 0 of a unit-capacity max-flow 0 -> t."""
    if g.order <= 1:
        raise GraphError("edge-connectivity needs at least two vertices")
    if not is_connected(g):
        return 0
    net = FlowNetwork(g)
    best = min_degree(g)
    for t in range(1, g.order):
        value, _ = net.max_flow((0,), (t,), limit=best)
        if value < best:
            best = value
    return best


def _flow_terminal_pairs(g: Graph, exhaustive: bool) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    edges = g.edges
    if exhaustive:
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if not set(e) & set(f):
                    yield e, f
        return
    # Fix one edge uv.  A restricted bipartition either keeps uv on one side,
    # and then separates it from some disjoint edge f, or cuts uv, and then
    # u keeps a neighbour w and v keeps a neighbour z on their own sides.
    u, v = edges[0]
    for f in edges[1:]:
        if u not in f and v not in f:
            yield (u, v), f
    for w in g.neighbors(u):
        if w == v:
            continue
        for z in g.neighbors(v):
            if z != u and z != w:
                yield (u, w), (v, z)


def restricted_edge_connectivity_flow(g: Graph, exhaustive: bool = False) -> RestrictedCutResult:
    """λ'(G) by edge-contraction max-flows.

    With ``exhaustive=True`` every unordered pair of vertex-disjoint edges is
    tried; the default uses a sufficient subset of pairs anchored at the first
    edge (``|E| + d(u)d(v)`` flows instead of ``O(|E|^2)``).
    """
    if not is_connected(g):
        raise DisconnectedGraphError("restricted edge-connectivity needs a connected graph")
    if g.order < 4 or not has_disjoint_edges(g):
        return RestrictedCutResult(None, None, "flow")

    # Cheap upper bound: isolate an edge of small edge-degree when allowed.
    best: int | None = None
    best_side: frozenset[int] | None = None
    deg = g.degrees()
    for u, v in sorted(g.edges, key=lambda e: (deg[e[0]] + deg[e[1]], e)):
        if is_restricted_cut(g, (u, v)):
            best = deg[u] + deg[v] - 2
            best_side = frozenset((u, v))
            break

    net = FlowNetwork(g)
    for sources, sinks in _flow_terminal_pairs(g, exhaustive):
        value, cap = net.max_flow(sources, sinks, limit=best)
        if best is None or value < best:
            best = value
            best_side = net.source_side(sources, cap)
    assert best is not None and best_side is not None
    witness = _normalized_cut(g, best_side)
    return RestrictedCutResult(best, witness, "flow")


# ---------------------------------------------------------------------------
# Enumeration route
# ---------------------------------------------------------------------------

def _check_cap(g: Graph, cap: int) -> None:
    if g.order > cap:
        raise CapacityError(f"order {g.order} exceeds the enumeration cap {cap}")


def _scan(g: Graph, restricted: bool, cap: int) -> tuple[int | None, list[int]]:
    """Minimum cut size over bipartitions with vertex 0 in X, plus all minimising masks.

    Bit ``i - 1`` of a mask says whether vertex ``i`` (i >= 1) is in X.
    """
    _check_cap(g, cap)
    n = g.order
    if n < 2:
        return None, []
    total = 1 << (n - 1)
    full = total - 1
    best: int | None = None
    winners: list[int] = []
    chunk = 1 << _CHUNK_BITS
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = [np.ones(masks.shape, dtype=np.uint8)]
        bits += [((masks >> (i - 1)) & 1).astype(np.uint8) for i in range(1, n)]
        cut = np.zeros(masks.shape, dtype=np.int32)
        same = [np.zeros(masks.shape, dtype=np.int16) for _ in range(n)] if restricted else None
        for u, v in g.edges:
            crossing = bits[u] ^ bits[v]
            cut += crossing
            if restricted:
                kept = 1 - crossing
                same[u] += kept
                same[v] += kept
        valid = masks != full
        if restricted:
            for w in range(n):
                valid &= same[w] > 0
        if not valid.any():
            continue
        local = int(cut[valid].min())
        if best is None or local < best:
            best = local
            winners = []
        if local == best:
            winners.extend(int(m) for m in masks[valid & (cut == best)])
    return best, winners


def _mask_side(mask: int, order: int) -> frozenset[int]:
    return frozenset([0] + [i for i in range(1, order) if mask >> (i - 1) & 1])


def _sorted_cuts(g: Graph, masks: list[int]) -> list[Bipartition]:
    sides = sorted((_mask_side(m, g.order) for m in masks), key=_side_key)
    return [cut_of(g, s) for s in sides]


def edge_connectivity_oracle(g: Graph, cap: int = ENUMERATION_CAP) -> int:
    if g.order <= 1:
        raise GraphError("edge-connectivity needs at least two vertices")
    value, _ = _scan(g, restricted=False, cap=cap)
    assert value is not None
    return value


def minimum_edge_cuts(g: Graph, cap: int = ENUMERATION_CAP) -> list[Bipartition]:
    """Every bipartition achieving λ(G), side_x containing vertex 0, in lexicographic order."""
    if g.order <= 1:
        raise GraphError("edge-connectivity needs at least two vertices")
    _, masks = _scan(g, restricted=False, cap=cap)
    return _sorted_cuts(g, masks)


def all_minimum_restricted_bipartitions(g: Graph, cap: int = ENUMERATION_CAP) -> list[Bipartition]:
    """Every restricted bipartition achieving λ'(G), in lexicographic order of side_x."""
    if not is_connected(g):
        raise DisconnectedGraphError("restricted edge-connectivity needs a connected graph")
    _, masks = _scan(g, restricted=True, cap=cap)
    return _sorted_cuts(g, masks)


def restricted_edge_connectivity_oracle(g: Graph, cap: int = ENUMERATION_CAP) -> RestrictedCutResult:
    """λ'(G) by brute force over all ``2^(order-1)`` bipartitions.

    The witness is the lexicographically smallest minimising side containing 0.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("restricted edge-connectivity needs a connected graph")
    value, masks = _scan(g, restricted=True, cap=cap)
    if value is None:
        return RestrictedCutResult(None, None, "oracle")
    witness = _sorted_cuts(g, masks)[0]
    return RestrictedCutResult(value, witness, "oracle")


def restricted_edge_connectivity(g: Graph, method: str = "flow", cap: int = ENUMERATION_CAP) -> RestrictedCutResult:
    if method == "flow":
        return restricted_edge_connectivity_flow(g)
    if method == "oracle":
        return restricted_edge_connectivity_oracle(g, cap)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """Per-graph invariants and the four maximal/super flags.

    A super flag is ``None`` ("unknown") when the graph is above the
    enumeration cap.  The restricted flags are ``False`` when λ' does not exist.
    """

    order: int
    size: int
    min_degree: int
    min_edge_degree: int | None
    edge_connectivity: int
    restricted_edge_connectivity: int | None
    maximally_edge_connected: bool
    super_edge_connected: bool | None
    maximally_restricted: bool
    super_restricted: bool | None

    def to_dict(self) -> dict:
        def flag(b):
            return "unknown" if b is None else b

        return {
            "order": self.order,
            "size": self.size,
            "min_degree": self.min_degree,
            "min_edge_degree": self.min_edge_degree,
            "edge_connectivity": self.edge_connectivity,
            "restricted_edge_connectivity": self.restricted_edge_connectivity,
            "maximally_edge_connected": self.maximally_edge_connected,
            "super_edge_connected": flag(self.super_edge_connected),
            "maximally_restricted": self.maximally_restricted,
            "super_restricted": flag(self.super_restricted),
        }


def is_super_edge_connected(g: Graph, cap: int = ENUMERATION_CAP) -> bool:
    """Every minimum edge-cut isolates a vertex."""
    return all(len(c.smaller_side()) == 1 for c in minimum_edge_cuts(g, cap))


def is_super_restricted(g: Graph, cap: int = ENUMERATION_CAP) -> bool:
    """Every minimum restricted edge-cut isolates an edge (has a two-vertex side)."""
    cuts = all_minimum_restricted_bipartitions(g, cap)
    return bool(cuts) and all(len(c.smaller_side()) == 2 for c in cuts)


def classify(g: Graph, cap: int = ENUMERATION_CAP, lambda_prime: int | None = None) -> InvariantReport:
    """Compute δ, ξ, λ, λ' and the maximal/super flags.

    ``lambda_prime`` may be supplied when already known, to skip the flow run;
    pass it only for a connected graph where it is known to exist.
    """
    if g.order < 2:
        raise GraphError("classification needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("classification needs a connected graph")
    delta = min_degree(g)
    xi = min_edge_degree(g)
    lam = edge_connectivity(g)
    if lambda_prime is None:
        lambda_prime = restricted_edge_connectivity_flow(g).value
    within = g.order <= cap
    super_lam = is_super_edge_connected(g, cap) if within else None
    if lambda_prime is None:
        max_res, super_res = False, False
    else:
        max_res = lambda_prime == xi
        super_res = is_super_restricted(g, cap) if within else None
    return InvariantReport(
        order=g.order,
        size=g.size,
        min_degree=delta,
        min_edge_degree=xi,
        edge_connectivity=lam,
        restricted_edge_connectivity=lambda_prime,
        maximally_edge_connected=lam == delta,
        super_edge_connected=super_lam,
        maximally_restricted=max_res,
        super_restricted=super_res,
    )
