"""Shortest cycles, cut vertices, 2-connectivity and ear decompositions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotTwoConnectedError
from .graph import Graph, components, require_connected


@dataclass(frozen=True)
class CycleInfo:
    """A shortest cycle ``(v1, ..., vg)``; the closing edge vg-v1 is implicit."""

    girth: int
    witness: tuple[int, ...]

    def __post_init__(self):
        if len(self.witness) != self.girth:
            raise ValueError("witness length must equal the girth")

    def edges(self) -> list[tuple[int, int]]:
        w = self.witness
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


def _bfs_tree(g: Graph, root: int):
    depth = [-1] * g.n
    parent = [-1] * g.n
    depth[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if depth[v] < 0:
                depth[v] = depth[u] + 1
                parent[v] = u
                order.append(v)
                queue.append(v)
    return depth, parent


def _path_to_root(parent, v):
    out = [v]
    while parent[out[-1]] >= 0:
        out.append(parent[out[-1]])
    return out


def _normalize(cycle: list[int]) -> tuple[int, ...]:
    # the first vertex is kept; direction chosen so the second entry is smaller
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def girth_and_witness(g: Graph) -> CycleInfo | None:
    """Girth and one shortest cycle, or ``None`` for a forest.

    A BFS from every root closes a cycle at each non-tree edge.  The smallest
    root achieving the minimum wins, then the lexicographically least cycle
    sequence among that root's candidates.
    """
    best: tuple[int, tuple[int, ...]] | None = None
    for root in range(g.n):
        depth, parent = _bfs_tree(g, root)
        cand_len = None
        cand = None
        for u, v in g.edges():
            if depth[u] < 0 or parent[u] == v or parent[v] == u:
                continue
            length = depth[u] + depth[v] + 1
            if best is not None and length >= best[0]:
                continue
            if cand_len is not None and length > cand_len:
                continue
            up = _path_to_root(parent, u)
            vp = _path_to_root(parent, v)
            if len(set(up) & set(vp)) != 1:
                # walk through the tree overlaps itself; a shorter cycle exists elsewhere
                continue
            cycle = _normalize(up[::-1] + vp[:-1])
            if cand_len is None or length < cand_len or cycle < cand:
                cand_len, cand = length, cycle
        if cand is not None and (best is None or cand_len < best[0]):
            best = (cand_len, cand)
        if best is not None and best[0] == 3:
            break
    if best is None:
        return None
    return CycleInfo(best[0], best[1])


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by the iterative Hopcroft-Tarjan lowpoint scan."""
    require_connected(g)
    n = g.n
    if n < 3:
        return set()
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        u, par, it = stack[-1]
        advanced = False
        for v in it:
            if disc[v] < 0:
                disc[v] = low[v] = timer
                timer += 1
                if u == root:
                    root_children += 1
                stack.append((v, u, iter(g.neighbors(v))))
                advanced = True
                break
            if v != par:
                low[u] = min(low[u], disc[v])
        if advanced:
            continue
        stack.pop()
        if par >= 0:
            low[par] = min(low[par], low[u])
            if par != root and low[u] >= disc[par]:
                cuts.add(par)
    if root_children > 1:
        cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, no cut vertex (complete graphs included)."""
    require_connected(g)
    return g.n >= 3 and not cut_vertices(g)


# ---------------------------------------------------------------------------
# ear decompositions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EarDecomposition:
    initial_cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def edge_total(self) -> int:
        return len(self.initial_cycle) + sum(len(e) - 1 for e in self.ears)


@dataclass(frozen=True)
class EarCheck:
    ok: bool
    reason: str = "ok"

    def __bool__(self):
        return self.ok


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _check_cycle(g: Graph, cycle) -> str | None:
    if len(cycle) < 3:
        return "initial cycle shorter than 3"
    if len(set(cycle)) != len(cycle):
        return "initial cycle repeats a vertex"
    if any(not 0 <= v < g.n for v in cycle):
        return "initial cycle vertex out of range"
    for i in range(len(cycle)):
        if not g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]):
            return f"initial cycle uses non-edge {cycle[i]}-{cycle[(i + 1) % len(cycle)]}"
    return None


def ear_decomposition(g: Graph, initial: CycleInfo | tuple[int, ...]) -> EarDecomposition:
    """Grow an ear decomposition from ``initial``.

    Frontier edges are scanned by smallest endpoint in the current subgraph.
    An edge with both ends built is a one-edge ear; otherwise the ear is a
    shortest path through unbuilt vertices back to a built vertex other
    than its start.  Construction fails exactly when ``g`` is not
    2-connected (no ear can close, or vertices are never reached).
    """
    cycle = tuple(initial.witness if isinstance(initial, CycleInfo) else initial)
    bad = _check_cycle(g, cycle)
    if bad:
        raise ValueError(bad)
    built = set(cycle)
    used = {_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    ears = []
    while len(used) < g.edge_count:
        frontier = next(
            ((a, b) for a in sorted(built) for b in g.neighbors(a) if _edge(a, b) not in used),
            None,
        )
        if frontier is None:
            raise NotTwoConnectedError("graph is disconnected from the initial cycle")
        a, b = frontier
        if b in built:
            ear = (a, b)
        else:
            ear = _close_ear(g, a, b, built)
            if ear is None:
                raise NotTwoConnectedError(f"vertex {a} separates {b} from the built subgraph")
        ears.append(ear)
        built.update(ear)
        used.update(_edge(ear[i], ear[i + 1]) for i in range(len(ear) - 1))
    if len(built) != g.n:
        raise NotTwoConnectedError("graph is disconnected from the initial cycle")
    return EarDecomposition(cycle, tuple(ears))


def _close_ear(g: Graph, a: int, b: int, built: set[int]) -> tuple[int, ...] | None:
    prev = {b: a}
    queue = deque([b])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v == a or v in prev:
                continue
            prev[v] = u
            if v in built:
                path = [v]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return tuple(reversed(path))
            queue.append(v)
    return None


def validate_ear_decomposition(g: Graph, d: EarDecomposition) -> EarCheck:
    """Check every ear-decomposition invariant against ``g`` from scratch."""
    bad = _check_cycle(g, d.initial_cycle)
    if bad:
        return EarCheck(False, bad)
    cyc = d.initial_cycle
    vertices = set(cyc)
    edges = {_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    degree = {v: 2 for v in cyc}
    for k, ear in enumerate(d.ears, start=1):
        if len(ear) < 2:
            return EarCheck(False, f"ear {k} has no edge")
        if len(set(ear)) != len(ear):
            return EarCheck(False, f"ear {k} is not a simple path")
        if ear[0] not in vertices or ear[-1] not in vertices:
            return EarCheck(False, f"ear {k} endpoint not in the partial union")
        inner = ear[1:-1]
        if any(v in vertices for v in inner):
            return EarCheck(False, f"ear {k} internal vertex already present")
        ear_edges = [_edge(ear[i], ear[i + 1]) for i in range(len(ear) - 1)]
        for u, v in ear_edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return EarCheck(False, f"ear {k} uses non-edge {u}-{v}")
            if (u, v) in edges:
                return EarCheck(False, f"ear {k} reuses edge {u}-{v}")
        edges.update(ear_edges)
        vertices.update(inner)
        for u, v in ear_edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if any(degree[v] != 2 for v in inner):
            return EarCheck(False, f"ear {k} internal vertex degree is not 2")
        if degree[ear[0]] == 2 or degree[ear[-1]] == 2:
            return EarCheck(False, f"ear {k} is not maximal")
    if vertices != set(range(g.n)):
        return EarCheck(False, "union misses vertices")
    if edges != set(g.edges()):
        return EarCheck(False, "union misses edges")
    return EarCheck(True)
