"""Simple undirected graphs on vertices ``0..n-1`` stored as bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import DisconnectedGraphError, GraphFormatError, UnreachableDistanceError

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are
    adjacent.  Build instances with :meth:`from_edges` (or the parsers below)
    rather than the raw constructor; ``__post_init__`` still validates.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return from_edge_list(n, edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``perm[i]``."""
        perm = list(perm)
        inverse = {old: new for new, old in enumerate(perm)}
        return from_edge_list(self.n, [(inverse[u], inverse[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered pairs; duplicate edges collapse."""
    if n < 1:
        raise ValueError("a graph needs at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _graph6_payload_bits(text: str, n: int) -> list[int]:
    n_bits = n * (n - 1) // 2
    n_chars = -(-n_bits // 6)
    payload = text[1:]
    if len(payload) != n_chars:
        raise GraphFormatError(
            f"graph6 payload for n={n} needs {n_chars} characters, got {len(payload)}"
        )
    bits = []
    for ch in payload:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphFormatError(f"graph6 character {ch!r} outside range 63..126")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[n_bits:]):
        raise GraphFormatError("graph6 padding bits are not zero")
    return bits[:n_bits]


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string (order at most 62)."""
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    first = ord(text[0])
    if first == 126:
        raise GraphFormatError("graph6 long form (order > 62) is not supported")
    if not 63 <= first < 126:
        raise GraphFormatError(f"malformed graph6 length byte {text[0]!r}")
    n = first - 63
    if n == 0:
        raise GraphFormatError("graph6 string encodes the null graph")
    bits = _graph6_payload_bits(text, n)
    i_idx, j_idx = kernels.pair_order(n)
    edges = [(int(i), int(j)) for i, j, b in zip(i_idx, j_idx, bits) if b]
    return from_edge_list(n, edges)


def graph6_from_bits(n: int, bits: Iterable[int]) -> str:
    bits = list(bits)
    bits += [0] * (-len(bits) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphFormatError("graph6 short form supports order at most 62")
    return graph6_from_bits(g.n, (int(g.has_edge(j, i)) for i in range(1, g.n) for j in range(i)))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | GraphFormatError]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line.

    Malformed lines are reported as :class:`GraphFormatError` values instead
    of being raised, so a corpus run can keep going.
    """
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if lineno == 1 and line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except (GraphFormatError, ValueError) as exc:
            yield lineno, GraphFormatError(f"line {lineno}: {exc}")


# ---------------------------------------------------------------------------
# plain edge-list text: "n m" then m lines "u v"
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(t) for t in lines[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for parts in lines[1:]:
            if len(parts) != 2:
                raise ValueError
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError:
        raise GraphFormatError("edge list must be 'n m' followed by 'u v' lines") from None
    if len(edges) != m:
        raise GraphFormatError(f"edge list header promises {m} edges, found {len(edges)}")
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

class _Unreachable:
    """Distance between vertices in different components.

    Arithmetic and ordering raise, so a disconnected probe cannot silently
    produce a wrong diameter or representation.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def _fail(self, *_):
        raise UnreachableDistanceError("arithmetic on an unreachable distance")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _fail
    __lt__ = __le__ = __gt__ = __ge__ = __int__ = __index__ = _fail

    def __reduce__(self):
        return (_Unreachable, ())


INF = _Unreachable()


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Hop distances; ``matrix`` holds ``-1`` where ``d`` returns :data:`INF`."""

    matrix: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def d(self, u: int, v: int):
        x = int(self.matrix[u, v])
        return INF if x < 0 else x

    @cached_property
    def connected(self) -> bool:
        return bool((self.matrix >= 0).all())

    @cached_property
    def diameter(self) -> int:
        """Largest finite distance."""
        return int(self.matrix.max()) if self.n else 0


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    m = np.ascontiguousarray(kernels.all_pairs_bfs(np.ascontiguousarray(g.adjacency)))
    m.setflags(write=False)
    return DistanceMatrix(m)


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g`` minus ``removed``, each sorted, ordered by least vertex."""
    alive = ((1 << g.n) - 1) & ~sum(1 << v for v in set(removed))
    out = []
    while alive:
        start = alive & -alive
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            nxt &= alive & ~seen
            seen |= nxt
            frontier = nxt
        out.append(list(_bits(seen)))
        alive &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")
