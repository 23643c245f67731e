from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from strongcut.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def connected_graphs(draw, min_order=2, max_order=8):
    """Random connected graph: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = list(combinations(range(n), 2))
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges |= set(extra)
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def graphs(draw, max_order=7):
    n = draw(st.integers(1, max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def brute_strong_edges(g: Graph, h: Graph) -> set:
    """Strong product edges straight from the three-clause adjacency rule."""
    n = h.order
    verts = [(x, y) for x in range(g.order) for y in range(n)]
    out = set()
    for (x1, y1), (x2, y2) in combinations(verts, 2):
        if (
            (x1 == x2 and h.has_edge(y1, y2))
            or (y1 == y2 and g.has_edge(x1, x2))
            or (g.has_edge(x1, x2) and h.has_edge(y1, y2))
        ):
            a, b = x1 * n + y1, x2 * n + y2
            out.add((min(a, b), max(a, b)))
    return out


def isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search; only for small graphs."""
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    assert g.order <= 8
    target = h.edge_set()
    dg, dh = g.degrees(), h.degrees()
    for perm in permutations(range(g.order)):
        if any(dg[v] != dh[perm[v]] for v in range(g.order)):
            continue
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges):
            return True
    return False


def brute_min_restricted_cut(g: Graph):
    """λ' by listing every vertex subset with plain Python sets (None if undefined)."""
    best = None
    verts = set(range(g.order))
    for k in range(2, g.order - 1):
        for x in combinations(range(g.order), k):
            xs = set(x)
            ys = verts - xs
            ok = all(any(w in xs for w in g.neighbors(v)) for v in xs) and all(
                any(w in ys for w in g.neighbors(v)) for v in ys
            )
            if ok:
                c = sum(1 for u, v in g.edges if (u in xs) != (v in xs))
                best = c if best is None else min(best, c)
    return best


@pytest.fixture
def acceptance_report():
    def report(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else ""))

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
