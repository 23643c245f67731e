"""Graph products, factor generators and fiber views.

Product vertex ``(x, y)`` with ``x`` in G and ``y`` in H gets the flat id
``x * |V(H)| + y`` (row-major, G index major).  Every product constructor
returns a :class:`ProductGraph` that remembers this indexing.
"""

from __future__ import annotations

from itertools import combinations

from .graph import MAX_PRODUCT_ORDER, CapacityError, Graph, GraphError

PRODUCT_KINDS = ("strong", "cartesian", "direct", "k2odot")


class ProductGraph(Graph):
    """A product graph carrying its row-major vertex indexing."""

    __slots__ = ("g_order", "h_order", "kind")

    def __init__(self, g_order: int, h_order: int, edges, kind: str):
        super().__init__(g_order * h_order, edges)
        self.g_order = g_order
        self.h_order = h_order
        self.kind = kind

    def vertex(self, x: int, y: int) -> int:
        if not (0 <= x < self.g_order and 0 <= y < self.h_order):
            raise GraphError(f"factor pair ({x}, {y}) out of range")
        return x * self.h_order + y

    def pair(self, v: int) -> tuple[int, int]:
        if not (0 <= v < self.order):
            raise GraphError(f"product vertex {v} out of range")
        return divmod(v, self.h_order)

    def project(self, v: int) -> int:
        """Projection onto the second factor, ``(x, y) -> y``."""
        return self.pair(v)[1]

    def fiber_h(self, x: int) -> frozenset[int]:
        """Vertices of the H-fiber at ``x``: ``{(x, y) : y in V(H)}``."""
        if not (0 <= x < self.g_order):
            raise GraphError(f"G-vertex {x} out of range")
        base = x * self.h_order
        return frozenset(range(base, base + self.h_order))

    def fiber_g(self, y: int) -> frozenset[int]:
        """Vertices of the G-fiber at ``y``: ``{(x, y) : x in V(G)}``."""
        if not (0 <= y < self.h_order):
            raise GraphError(f"H-vertex {y} out of range")
        return frozenset(range(y, self.order, self.h_order))

    def indexing_note(self) -> str:
        return f"indexing=row-major g_order={self.g_order} h_order={self.h_order}"


def _check_capacity(g: Graph, h: Graph, max_order: int) -> None:
    if g.order < 1 or h.order < 1:
        raise GraphError("product factors must have at least one vertex")
    if g.order * h.order > max_order:
        raise CapacityError(
            f"product order {g.order * h.order} exceeds the configured maximum {max_order}"
        )


def _cartesian_edges(g: Graph, h: Graph) -> list[tuple[int, int]]:
    n = h.order
    out = []
    for x in range(g.order):
        for y1, y2 in h.edges:
            out.append((x * n + y1, x * n + y2))
    for x1, x2 in g.edges:
        for y in range(n):
            out.append((x1 * n + y, x2 * n + y))
    return out


def _direct_edges(g: Graph, h: Graph) -> list[tuple[int, int]]:
    n = h.order
    out = []
    for x1, x2 in g.edges:
        for y1, y2 in h.edges:
            out.append((x1 * n + y1, x2 * n + y2))
            out.append((x1 * n + y2, x2 * n + y1))
    return out


def cartesian_product(g: Graph, h: Graph, max_order: int = MAX_PRODUCT_ORDER) -> ProductGraph:
    _check_capacity(g, h, max_order)
    return ProductGraph(g.order, h.order, _cartesian_edges(g, h), "cartesian")


def direct_product(g: Graph, h: Graph, max_order: int = MAX_PRODUCT_ORDER) -> ProductGraph:
    _check_capacity(g, h, max_order)
    return ProductGraph(g.order, h.order, _direct_edges(g, h), "direct")


def strong_product(g: Graph, h: Graph, max_order: int = MAX_PRODUCT_ORDER) -> ProductGraph:
    """G ⊠ H: the union of the Cartesian and direct product edge sets."""
    _check_capacity(g, h, max_order)
    edges = _cartesian_edges(g, h) + _direct_edges(g, h)
    return ProductGraph(g.order, h.order, edges, "strong")


def k2_odot(h: Graph, max_order: int = MAX_PRODUCT_ORDER) -> ProductGraph:
    """K2 ⊠ H with the edges of both H-fibers removed.

    What is left is the perfect matching ``(a, y)(b, y)`` plus the doubled
    cross edges ``(a, y1)(b, y2)``, ``(a, y2)(b, y1)`` for each ``y1y2`` in H.
    """
    k2 = make_complete(2)
    _check_capacity(k2, h, max_order)
    n = h.order
    edges = [(y, n + y) for y in range(n)] + _direct_edges(k2, h)
    return ProductGraph(2, n, edges, "k2odot")


def product(kind: str, g: Graph | None, h: Graph, max_order: int = MAX_PRODUCT_ORDER) -> ProductGraph:
    if kind == "k2odot":
        return k2_odot(h, max_order)
    if g is None:
        raise GraphError(f"{kind} product needs two factors")
    builders = {"strong": strong_product, "cartesian": cartesian_product, "direct": direct_product}
    try:
        return builders[kind](g, h, max_order)
    except KeyError:
        raise GraphError(f"unknown product kind {kind!r}") from None


# ---------------------------------------------------------------------------
# Factor generators
# ---------------------------------------------------------------------------

def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph(n, combinations(range(n), 2))


def make_star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


FAMILY_GENERATORS = {"path": make_path, "cycle": make_cycle, "complete": make_complete}

#: Smallest factor order for which each family's closed form applies.
FAMILY_MIN_N = {"path": 2, "cycle": 3, "complete": 4}


def family_factor(family: str, n: int) -> Graph:
    try:
        return FAMILY_GENERATORS[family](n)
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
