"""Small named graphs used in tests, examples and the CLI."""

import re

from .graph import Graph, from_edge_list


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n):
    return from_edge_list(n, [])


def complete_bipartite(r, s):
    """K_{r,s} with parts ``0..r-1`` and ``r..r+s-1``."""
    return from_edge_list(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star_graph(leaves):
    return complete_bipartite(1, leaves)


def join(g: Graph, h: Graph) -> Graph:
    """g ∨ h: disjoint union plus every edge between the two vertex sets."""
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    edges += [(u, off + v) for u in range(g.n) for v in range(h.n)]
    return from_edge_list(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return from_edge_list(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()])


def complete_split(s, t):
    """K_s ∨ complement(K_t)."""
    return join(complete_graph(s), empty_graph(t))


def clique_join_clique_plus_isolated(s, t):
    """K_s ∨ (K_t ∪ K_1)."""
    return join(complete_graph(s), disjoint_union(complete_graph(t), empty_graph(1)))


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def bowtie_graph():
    """Two triangles sharing vertex 0: {0,1,2} and {0,3,4}."""
    return from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def paw_graph():
    """Triangle 0-1-2 with pendant vertex 3 on vertex 0; equals K_1 ∨ (K_2 ∪ K_1)."""
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def theta_graph(a, b, c):
    """Vertices 0 and 1 joined by three internally disjoint paths of a, b, c edges."""
    if min(a, b, c) < 1 or sorted((a, b, c))[1] < 2:
        raise ValueError("at most one of the three paths may be a single edge")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(nxt, edges)


_NAMED = {
    "petersen": petersen_graph,
    "bowtie": bowtie_graph,
    "paw": paw_graph,
}


def named_graph(name: str) -> Graph:
    """Parse names like ``C5``, ``K4``, ``K2,3``, ``P6``, ``S3`` or ``petersen``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"([ckps])(\d+)(?:,(\d+))?", key)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "k":
            raise ValueError(f"unknown graph name {name!r}")
        return complete_bipartite(a, int(b))
    return {"c": cycle_graph, "k": complete_graph, "p": path_graph, "s": star_graph}[kind](a)
