"""Immutable simple undirected graphs, edge-list I/O and cut bookkeeping.

Vertices are the integers ``0 .. order-1``.  Edges are stored as sorted
``(u, v)`` pairs with ``u < v`` and the edge tuple itself is sorted, so every
iteration order in the package is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

#: Largest order accepted by the exhaustive bipartition enumerators.
ENUMERATION_CAP = 20

#: Largest order accepted by the product constructors.
MAX_PRODUCT_ORDER = 4096


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CapacityError(GraphError):
    """Requested computation exceeds a configured size limit."""


class DisconnectedGraphError(GraphError):
    pass


Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph.

    Construction validates the edge set; afterwards the value never changes.
    Adjacency is built once and shared by all queries.
    """

    __slots__ = ("_order", "_edges", "_adj", "_edge_set")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise GraphError(f"negative order {order}")
        seen: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(order)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        self._order = order
        self._edges = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self._order)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self._edge_set

    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._order, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={list(self._edges)!r})"

    def __iter__(self) -> Iterator[int]:
        return iter(range(self._order))

    def __len__(self) -> int:
        return self._order

    def to_id(self) -> str:
        """Compact one-line text identifying the graph, e.g. ``"3:0-1;1-2"``."""
        return f"{self._order}:" + ";".join(f"{u}-{v}" for u, v in self._edges)

    @classmethod
    def from_id(cls, text: str) -> Graph:
        head, _, body = text.strip().partition(":")
        edges = []
        if body:
            for item in body.split(";"):
                u, v = item.split("-")
                edges.append((int(u), int(v)))
        return cls(int(head), edges)


# ---------------------------------------------------------------------------
# Edge-list files
# ---------------------------------------------------------------------------

def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse the ``.el`` format: ``order size`` header, then ``size`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    if not isinstance(text, str):
        text = text.read()
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative order or size in header", lineno)
            header = (a, b)
            continue
        order, size = header
        if len(edges) == size:
            raise ParseError(f"more than {size} edge lines", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        if not (0 <= a < order and 0 <= b < order):
            raise ParseError(f"endpoint out of range for order {order}", lineno)
        e = _normalize_edge(a, b)
        if e in seen:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise ParseError("missing 'order size' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical ``.el`` text: optional ``#`` comment lines, header, sorted edges."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.order} {g.size}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g, comments))


# ---------------------------------------------------------------------------
# Structure queries
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    seen = [False] * g.order
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.order


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def edge_degree(g: Graph, u: int, v: int) -> int:
    """Number of edges adjacent to ``uv``: ``d(u) + d(v) - 2``."""
    return g.degree(u) + g.degree(v) - 2


def min_edge_degree(g: Graph) -> int:
    if g.size == 0:
        raise GraphError("minimum edge-degree of an edgeless graph is undefined")
    deg = g.degrees()
    return min(deg[u] + deg[v] - 2 for u, v in g.edges)


def is_star(g: Graph) -> bool:
    """True for K_{1,k}, k >= 0.  K1 and K2 count as stars."""
    if g.order == 0:
        return False
    if g.order == 1:
        return True
    if g.size != g.order - 1:
        return False
    return max(g.degrees()) == g.order - 1


def has_disjoint_edges(g: Graph) -> bool:
    """Whether some two edges share no endpoint (a matching of size two)."""
    edges = g.edges
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c != a and c != b and d != a and d != b:
                return True
    return False


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled by ascending original id."""
    verts = sorted(set(s))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(verts), edges)


def has_isolated_vertex(g: Graph) -> bool:
    return any(d == 0 for d in g.degrees())


# ---------------------------------------------------------------------------
# Cuts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bipartition:
    """A vertex subset X of a graph together with the edge cut [X, X̄]."""

    order: int
    side_x: frozenset[int]
    cut_edges: tuple[Edge, ...]

    @property
    def side_y(self) -> frozenset[int]:
        return frozenset(range(self.order)) - self.side_x

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    def smaller_side(self) -> frozenset[int]:
        x, y = self.side_x, self.side_y
        return x if len(x) <= len(y) else y

    def to_dict(self) -> dict:
        return {
            "side_x": sorted(self.side_x),
            "side_y": sorted(self.side_y),
            "cut_size": self.size,
            "cut_edges": [list(e) for e in self.cut_edges],
        }


def cut_of(g: Graph, side_x: Iterable[int]) -> Bipartition:
    x = frozenset(side_x)
    if not x or len(x) >= g.order:
        raise GraphError("cut side must be a nonempty proper vertex subset")
    if any(not (0 <= v < g.order) for v in x):
        raise GraphError("cut side contains a vertex outside the graph")
    cut = tuple(e for e in g.edges if (e[0] in x) != (e[1] in x))
    return Bipartition(g.order, x, cut)


def is_restricted_cut(g: Graph, side_x: Iterable[int]) -> bool:
    """Whether [X, X̄] is a restricted edge-cut: no side induces an isolated vertex."""
    x = set(side_x)
    if len(x) < 2 or g.order - len(x) < 2:
        return False
    for v in g.vertices():
        inside = v in x
        if not any((w in x) == inside for w in g.neighbors(v)):
            return False
    return True
