"""Exhaustive verification of the girth bound on small connected graphs."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import kernels
from .errors import GraphFormatError, NotTwoConnectedError
from .families import classify_extremal_family, classify_n_minus_2_family, is_complete
from .graph import (
    Graph,
    encode_graph6,
    graph6_from_bits,
    is_connected,
    parse_graph6,
    read_graph6_lines,
    require_connected,
)
from .metric import girth_resolving_set, is_resolving, metric_dimension, upper_bounds
from .structure import ear_decomposition, girth_and_witness, is_two_connected, validate_ear_decomposition

CANONICAL_MAX_ORDER = 8
ENUMERATE_MAX_ORDER = 7

PASS, FAIL, NA = "pass", "fail", "n/a"

CHECK_NAMES = (
    "bound",
    "characterization",
    "two_connected_necessity",
    "diameter_bound",
    "n_minus_1_law",
    "n_minus_2_law",
    "constructive_witness",
    "whitney",
)


# ---------------------------------------------------------------------------
# canonical forms and enumeration
# ---------------------------------------------------------------------------

def _scan(g: Graph):
    if g.n > CANONICAL_MAX_ORDER:
        raise ValueError(f"canonical form is limited to n <= {CANONICAL_MAX_ORDER}")
    pi, pj = kernels.pair_order(g.n)
    return kernels.canonical_scan(np.ascontiguousarray(g.adjacency), kernels.permutation_table(g.n), pi, pj)


def canonical_form(g: Graph) -> str:
    """Least graph6 string over all relabelings of ``g``.

    Two graphs get the same string iff they are isomorphic.  With a fixed
    order the graph6 header is constant and payload characters are monotone
    in their 6-bit groups, so the least string is the least upper-triangle
    bit string read as an integer.
    """
    key, _, _ = _scan(g)
    n_pairs = g.n * (g.n - 1) // 2
    key = int(key)
    return graph6_from_bits(g.n, ((key >> (n_pairs - 1 - q)) & 1 for q in range(n_pairs)))


def automorphism_count(g: Graph) -> int:
    """|Aut(g)|: the relabelings reaching the canonical key form one coset of Aut(g)."""
    _, count, _ = _scan(g)
    return int(count)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    # every connected graph has a non-cut vertex, so it arises from a
    # connected graph on n-1 vertices plus one vertex with a nonempty neighbourhood
    found = set()
    for code in _connected_classes(n - 1):
        base = parse_graph6(code)
        for mask in range(1, 1 << (n - 1)):
            rows = [row | ((mask >> v & 1) << (n - 1)) for v, row in enumerate(base.rows)]
            found.add(canonical_form(Graph(n, tuple(rows) + (mask,))))
    return tuple(sorted(found))


def enumerate_connected_graphs(n: int) -> Iterable[Graph]:
    """One canonically labelled graph per isomorphism class, in canonical-string order."""
    if not 1 <= n <= ENUMERATE_MAX_ORDER:
        raise ValueError(f"built-in enumeration covers 1 <= n <= {ENUMERATE_MAX_ORDER}")
    for code in _connected_classes(n):
        yield parse_graph6(code)


def graph_id(g: Graph) -> str:
    return canonical_form(g) if g.n <= CANONICAL_MAX_ORDER else encode_graph6(g)


# ---------------------------------------------------------------------------
# per-graph verification
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    graph_id: str
    n: int
    edge_count: int
    beta: int
    basis: list[int]
    diameter: int
    girth: int | None
    diam_bound: int
    girth_bound: int | None
    family_labels: list[str]
    two_connected: bool
    checks: dict[str, str]
    details: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v != FAIL for v in self.checks.values())

    @property
    def attains_girth_bound(self) -> bool:
        return self.girth_bound is not None and self.beta == self.girth_bound

    def to_dict(self) -> dict:
        # field order is part of the JSON-lines contract
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "edge_count": self.edge_count,
            "beta": self.beta,
            "basis": list(self.basis),
            "diameter": self.diameter,
            "girth": self.girth,
            "diam_bound": self.diam_bound,
            "girth_bound": self.girth_bound,
            "family_labels": list(self.family_labels),
            "two_connected": self.two_connected,
            "checks": {name: self.checks[name] for name in CHECK_NAMES},
            "details": dict(sorted(self.details.items())),
        }


def verify_graph(g: Graph) -> VerificationReport:
    """Evaluate every bound, characterization and structure predicate on ``g``.

    Graphs small enough for a canonical form are relabelled to it first, so
    the basis and witnesses in the report refer to the vertices of
    ``graph_id``.
    """
    require_connected(g)
    gid = graph_id(g)
    if g.n <= CANONICAL_MAX_ORDER:
        g = parse_graph6(gid)
    n = g.n
    md = metric_dimension(g)
    beta = md.beta
    cycle = girth_and_witness(g)
    bounds = upper_bounds(g, cycle)
    extremal = classify_extremal_family(g)
    two_conn = is_two_connected(g)
    gb = bounds.girth_bound
    checks: dict[str, str] = {}
    details: dict[str, str] = {}

    def record(name, applicable, ok, detail=""):
        if not applicable:
            checks[name] = NA
        elif ok:
            checks[name] = PASS
        else:
            checks[name] = FAIL
            details[name] = detail

    cyclic = cycle is not None
    record("bound", cyclic, cyclic and beta <= gb, f"beta={beta} > n-g+2={gb}")
    record(
        "characterization",
        cyclic,
        cyclic and (beta == gb) == bool(extremal),
        f"beta={beta} girth_bound={gb} labels={extremal.sorted_names()}",
    )
    record(
        "two_connected_necessity",
        cyclic,
        cyclic and (beta != gb or two_conn),
        f"beta={beta} attains n-g+2 but graph has a cut vertex",
    )
    record("diameter_bound", n >= 2, beta <= bounds.diam_bound, f"beta={beta} > n-diam={bounds.diam_bound}")
    complete = is_complete(g)
    record("n_minus_1_law", True, (beta == n - 1) == complete, f"beta={beta} n={n} complete={complete}")
    if n >= 4:
        n2 = classify_n_minus_2_family(g)
        record(
            "n_minus_2_law",
            True,
            (beta == n - 2) == bool(n2),
            f"beta={beta} n={n} labels={n2.sorted_names()}",
        )
    else:
        record("n_minus_2_law", False, True)

    if cyclic:
        try:
            w = girth_resolving_set(g, cycle)
            ok = len(w) == gb and is_resolving(g, w)
            detail = f"landmarks={list(w.members)} size={len(w)} expected={gb}"
        except AssertionError as exc:
            ok, detail = False, str(exc)
        record("constructive_witness", True, ok, detail)
    else:
        record("constructive_witness", False, True)

    has_ears = False
    ear_note = "no cycle"
    if cyclic:
        try:
            check = validate_ear_decomposition(g, ear_decomposition(g, cycle))
            has_ears, ear_note = check.ok, check.reason
        except NotTwoConnectedError as exc:
            ear_note = str(exc)
    record("whitney", True, two_conn == has_ears, f"two_connected={two_conn} ear_decomposition={ear_note}")

    return VerificationReport(
        graph_id=gid,
        n=n,
        edge_count=g.edge_count,
        beta=beta,
        basis=list(md.basis.members),
        diameter=g.distances.diameter,
        girth=cycle.girth if cyclic else None,
        diam_bound=bounds.diam_bound,
        girth_bound=gb,
        family_labels=extremal.sorted_names(),
        two_connected=two_conn,
        checks=checks,
        details=details,
    )


# ---------------------------------------------------------------------------
# corpus runs
# ---------------------------------------------------------------------------

@dataclass
class CorpusSummary:
    graphs_checked: int
    failures: list[VerificationReport]
    equality_counts: dict[int, int]
    equality_graphs: dict[int, list[str]]
    input_errors: list[str]
    wall_time: float
    reports: list[VerificationReport] = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "failures": [r.graph_id for r in self.failures],
            "equality_counts": {str(k): v for k, v in sorted(self.equality_counts.items())},
            "equality_graphs": {str(k): v for k, v in sorted(self.equality_graphs.items())},
            "input_errors": list(self.input_errors),
            "wall_time": round(self.wall_time, 3),
        }


def parse_order_range(text: str) -> range:
    """``"5"`` or ``"3..7"`` (inclusive) to a range of orders."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise ValueError(f"bad order range {text!r}; use N or A..B") from None
    if lo_i > hi_i:
        raise ValueError(f"empty order range {text!r}")
    return range(lo_i, hi_i + 1)


def load_corpus(source) -> tuple[list[Graph], list[str]]:
    """Graphs and input-error messages from an order range or a graph6 file path."""
    if isinstance(source, range):
        graphs = [g for n in source for g in enumerate_connected_graphs(n)]
        return graphs, []
    graphs, errors = [], []
    with open(source, encoding="ascii", errors="replace") as fh:
        for lineno, item in read_graph6_lines(fh):
            if isinstance(item, GraphFormatError):
                errors.append(str(item))
            elif not is_connected(item):
                errors.append(f"line {lineno}: graph is disconnected")
            else:
                graphs.append(item)
    return graphs, errors


def run_corpus(
    source,
    jobs: int = 1,
    fail_fast: bool = False,
    on_report=None,
) -> CorpusSummary:
    """Verify every graph from ``source`` (an order ``range`` or a graph6 path).

    Reports are aggregated in graph-id order, so the result does not depend
    on ``jobs``.  ``on_report`` is called with each report in that order.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    start = time.perf_counter()
    graphs, errors = load_corpus(source)
    reports: list[VerificationReport] = []
    if jobs == 1 or len(graphs) < 2:
        for g in graphs:
            r = verify_graph(g)
            reports.append(r)
            if fail_fast and not r.passed:
                break
    else:
        chunk = max(1, len(graphs) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(verify_graph, graphs, chunksize=chunk):
                reports.append(r)
                if fail_fast and not r.passed:
                    pool.shutdown(cancel_futures=True)
                    break
    reports.sort(key=lambda r: r.graph_id)
    if on_report is not None:
        for r in reports:
            on_report(r)
    eq: dict[int, list[str]] = {}
    for r in reports:
        if r.attains_girth_bound:
            eq.setdefault(r.n, []).append(r.graph_id)
    return CorpusSummary(
        graphs_checked=len(reports),
        failures=[r for r in reports if not r.passed],
        equality_counts={n: len(ids) for n, ids in sorted(eq.items())},
        equality_graphs=dict(sorted(eq.items())),
        input_errors=errors,
        wall_time=time.perf_counter() - start,
        reports=reports,
    )


def default_jobs() -> int:
    return os.cpu_count() or 1
