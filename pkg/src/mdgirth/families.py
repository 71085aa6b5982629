"""Reduction rules for resolving sets and recognizers for the extremal families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import Graph, components, require_connected
from .metric import LandmarkSet, _landmarks, is_resolving
from .structure import cut_vertices

CYCLE = "Cycle"
COMPLETE = "Complete"
COMPLETE_BIPARTITE = "CompleteBipartite"
COMPLETE_SPLIT = "CompleteSplit"
JOIN_KK1 = "JoinKK1"


@dataclass(frozen=True, order=True)
class FamilyLabel:
    """A family tag with its parameters, e.g. CompleteBipartite(2, 3)."""

    family: str
    params: tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class FamilyClassification:
    labels: frozenset[FamilyLabel]

    def __bool__(self):
        return bool(self.labels)

    def __contains__(self, family):
        if isinstance(family, FamilyLabel):
            return family in self.labels
        return any(lab.family == family for lab in self.labels)

    def sorted_names(self) -> list[str]:
        return [str(lab) for lab in sorted(self.labels)]


# ---------------------------------------------------------------------------
# reduction rules
# ---------------------------------------------------------------------------

def components_hit(g: Graph, v: int, w) -> int:
    """Number of components of G - v meeting W - {v}."""
    if v not in cut_vertices(g):
        raise PreconditionError(f"vertex {v} is not a cut vertex")
    members = _landmarks(w).as_set() - {v}
    return sum(1 for comp in components(g, removed=[v]) if members.intersection(comp))


def cut_vertex_reduction(g: Graph, w, v: int) -> LandmarkSet:
    """Drop cut vertex ``v`` from a resolving set that meets two components of G - v."""
    w = _landmarks(w)
    if v not in w:
        raise PreconditionError(f"vertex {v} is not in the landmark set")
    if not is_resolving(g, w):
        raise PreconditionError("landmark set is not resolving")
    hit = components_hit(g, v, w)
    if hit < 2:
        raise PreconditionError(f"landmark set meets only {hit} component(s) of G - {v}")
    out = LandmarkSet.of(x for x in w if x != v)
    if not is_resolving(g, out):
        raise AssertionError(f"cut-vertex reduction produced a non-resolving set {out.members}")
    return out


def leaf_swap(g: Graph, w, u: int) -> LandmarkSet:
    """Replace the neighbor of leaf ``u`` by ``u``: returns (W + u) - v."""
    w = _landmarks(w)
    if g.degree(u) != 1:
        raise PreconditionError(f"vertex {u} has degree {g.degree(u)}, not 1")
    if not is_resolving(g, w):
        raise PreconditionError("landmark set is not resolving")
    (v,) = g.neighbors(u)
    members = [x for x in w if x != v]
    if u not in members:
        members.append(u)
    out = LandmarkSet.of(members)
    if not is_resolving(g, out):
        raise AssertionError(f"leaf swap produced a non-resolving set {out.members}")
    return out


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------

def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """2-colouring of a connected graph from vertex 0, or None if an odd cycle exists."""
    colour = [-1] * g.n
    colour[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                return None
    if min(colour) < 0:
        return None
    return [v for v in range(g.n) if colour[v] == 0], [v for v in range(g.n) if colour[v] == 1]


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(r, s) with r <= s if g is K_{r,s} for some r, s >= 1."""
    if g.n < 2 or not g.edge_count:
        return None
    parts = bipartition(g)
    if parts is None:
        return None
    r, s = sorted(map(len, parts))
    if r >= 1 and g.edge_count == r * s:
        return r, s
    return None


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and len(components(g)) == 1


def classify_extremal_family(g: Graph) -> FamilyClassification:
    """Labels among Cycle, Complete (n >= 3), CompleteBipartite(r, s) with r, s >= 2."""
    require_connected(g)
    labels = set()
    if is_cycle(g):
        labels.add(FamilyLabel(CYCLE, (g.n,)))
    if g.n >= 3 and is_complete(g):
        labels.add(FamilyLabel(COMPLETE, (g.n,)))
    parts = complete_bipartite_parts(g)
    if parts is not None and parts[0] >= 2:
        labels.add(FamilyLabel(COMPLETE_BIPARTITE, parts))
    return FamilyClassification(frozenset(labels))


def dominating_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def classify_n_minus_2_family(g: Graph) -> FamilyClassification:
    """Labels among K_{s,t} (s, t >= 1), K_s ∨ co-K_t (s >= 1, t >= 2), K_s ∨ (K_t ∪ K_1) (s, t >= 1).

    The join families are found by peeling the set D of dominating vertices
    (which is always a clique) and inspecting what remains.
    """
    require_connected(g)
    labels = set()
    parts = complete_bipartite_parts(g)
    if parts is not None:
        labels.add(FamilyLabel(COMPLETE_BIPARTITE, parts))
    dom = dominating_vertices(g)
    rest = [v for v in range(g.n) if v not in set(dom)]
    s, t = len(dom), len(rest)
    if s >= 1 and rest:
        rest_mask = sum(1 << v for v in rest)
        inner_edges = sum((g.rows[v] & rest_mask).bit_count() for v in rest) // 2
        if t >= 2 and inner_edges == 0:
            labels.add(FamilyLabel(COMPLETE_SPLIT, (s, t)))
        comps = components(g, removed=dom)
        if len(comps) == 2:
            small, big = sorted(comps, key=len)
            big_mask = sum(1 << v for v in big)
            big_edges = sum((g.rows[v] & big_mask).bit_count() for v in big) // 2
            if len(small) == 1 and big_edges == len(big) * (len(big) - 1) // 2:
                labels.add(FamilyLabel(JOIN_KK1, (s, len(big))))
    return FamilyClassification(frozenset(labels))
