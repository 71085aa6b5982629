"""Metric representations, resolving sets and exact metric dimension."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .errors import AcyclicGraphError, UnreachableDistanceError
from .graph import DistanceMatrix, Graph, require_connected
from .structure import CycleInfo, girth_and_witness


@dataclass(frozen=True)
class LandmarkSet:
    """Ordered, duplicate-free vertex subset W = (w1, ..., wk)."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(int(v) for v in self.members))
        if len(set(self.members)) != len(self.members):
            raise ValueError("landmarks must be distinct")

    @classmethod
    def of(cls, members: Iterable[int]) -> LandmarkSet:
        return cls(tuple(members))

    @property
    def k(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v):
        return v in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


Representation = tuple[int, ...]


@dataclass(frozen=True)
class MetricDimensionResult:
    beta: int
    basis: LandmarkSet


@dataclass(frozen=True)
class UpperBounds:
    diam_bound: int
    girth_bound: Optional[int]


def _landmarks(w) -> LandmarkSet:
    return w if isinstance(w, LandmarkSet) else LandmarkSet.of(w)


def _check_members(n: int, w: LandmarkSet) -> None:
    for v in w:
        if not 0 <= v < n:
            raise ValueError(f"landmark {v} outside 0..{n - 1}")


def representation(dm: DistanceMatrix, v: int, w) -> Representation:
    """r(v|W) as an exact integer tuple."""
    w = _landmarks(w)
    out = []
    for x in w:
        d = int(dm.matrix[v, x])
        if d < 0:
            raise UnreachableDistanceError(f"vertex {v} cannot reach landmark {x}")
        out.append(d)
    return tuple(out)


def is_resolving(g: Graph, w) -> bool:
    """True iff vertices outside W get pairwise distinct representations."""
    require_connected(g)
    w = _landmarks(w)
    _check_members(g.n, w)
    dm = g.distances
    in_w = w.as_set()
    seen = set()
    for v in range(g.n):
        if v in in_w:
            continue
        r = representation(dm, v, w)
        if r in seen:
            return False
        seen.add(r)
    return True


def twin_classes(g: Graph) -> list[list[int]]:
    """Partition of V into twin classes, each sorted, ordered by least member.

    u and v are twins iff d(u,x) = d(v,x) for every x outside {u, v}.  Any
    resolving set contains all but at most one vertex of each class.
    """
    require_connected(g)
    dist = g.distances.matrix
    n = g.n
    label = list(range(n))
    for u in range(n):
        if label[u] != u:
            continue
        for v in range(u + 1, n):
            if label[v] != v:
                continue
            mask = np.ones(n, dtype=bool)
            mask[[u, v]] = False
            if np.array_equal(dist[u, mask], dist[v, mask]):
                label[v] = u
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(label[v], []).append(v)
    return list(classes.values())


def metric_dimension(g: Graph, prune: bool = True) -> MetricDimensionResult:
    """Exact metric dimension by cardinality-major, lexicographic subset sweep.

    The basis returned is the lexicographically first resolving set of
    minimum size.  With ``prune`` the sweep starts at the twin lower bound
    and skips subsets that leave two vertices of one twin class uncovered;
    neither can change the answer.
    """
    require_connected(g)
    n = g.n
    if n == 1:
        return MetricDimensionResult(0, LandmarkSet(()))
    dist = np.ascontiguousarray(g.distances.matrix)
    if prune:
        classes = twin_classes(g)
        labels = np.empty(n, dtype=np.int64)
        for c, members in enumerate(classes):
            labels[members] = c
        sizes = np.array([len(c) for c in classes], dtype=np.int64)
        start = max(1, sum(len(c) - 1 for c in classes))
    else:
        labels = np.zeros(n, dtype=np.int64)
        sizes = np.zeros(1, dtype=np.int64)
        start = 1
    for k in range(start, n):
        found = kernels.first_resolving(dist, k, labels, sizes, prune)
        if found[0] >= 0:
            return MetricDimensionResult(k, LandmarkSet.of(found.tolist()))
    raise AssertionError("V minus one vertex always resolves; solver sweep is broken")


def girth_resolving_set(g: Graph, cycle: CycleInfo | None = None) -> LandmarkSet:
    """All vertices except v3..vg of a shortest cycle (v1, ..., vg).

    Keeps v1 and v2, which already resolve the cycle, so the set has
    n - g + 2 members.  The result is checked with :func:`is_resolving`.
    """
    require_connected(g)
    if cycle is None:
        cycle = girth_and_witness(g)
    if cycle is None:
        raise AcyclicGraphError("graph has no cycle")
    dropped = set(cycle.witness[2:])
    w = LandmarkSet.of(v for v in range(g.n) if v not in dropped)
    if not is_resolving(g, w):
        raise AssertionError(f"girth landmark set {w.members} does not resolve the graph")
    return w


def upper_bounds(g: Graph, cycle: CycleInfo | None = None) -> UpperBounds:
    require_connected(g)
    if cycle is None:
        cycle = girth_and_witness(g)
    return UpperBounds(
        diam_bound=g.n - g.distances.diameter,
        girth_bound=None if cycle is None else g.n - cycle.girth + 2,
    )
