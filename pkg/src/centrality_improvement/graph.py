"""Unweighted simple graphs (directed or undirected) and the traversals the
solvers are built on.

Vertices are dense integer indices ``0 .. n-1``.  Graphs are immutable; every
operation that "changes" a graph returns a new one.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from typing import Union

Pair = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex arguments."""


class InvalidSolutionError(ValueError):
    """Raised when an addition set is not a legal augmentation of a graph."""

    def __init__(self, message: str, pair: Pair | None = None):
        super().__init__(message)
        self.pair = pair


class _Unreachable:
    """Distance to a vertex with no path.  Compares above every integer."""

    __slots__ = ()
    _instance: _Unreachable | None = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return "UNREACHABLE"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


UNREACHABLE = _Unreachable()
Distance = Union[int, _Unreachable]


class Graph:
    """Immutable unweighted simple graph with sorted adjacency lists.

    Undirected graphs share one neighbor list per vertex; directed graphs keep
    separate out- and in-neighbor lists.
    """

    __slots__ = ("n", "directed", "m", "_out", "_in", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), directed: bool = False):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)] if directed else out
        seen: set[Pair] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            out[u].add(v)
            if directed:
                inn[v].add(u)
            else:
                out[v].add(u)
        self.n = n
        self.directed = directed
        self.m = len(seen)
        self._out: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn) if directed else self._out
        self._edges = frozenset(seen)

    # -- queries ---------------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range [0, {self.n})")
        return v

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self._edges
        return (min(u, v), max(u, v)) in self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Out-neighbors for directed graphs."""
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def degree(self, v: int) -> int:
        """Total degree (in + out for directed graphs)."""
        if self.directed:
            return len(self._out[v]) + len(self._in[v])
        return len(self._out[v])

    def edges(self) -> list[Pair]:
        """Sorted edge list; undirected edges are reported as ``(u, v)`` with u < v."""
        return sorted(self._edges)

    def canonical(self, u: int, v: int) -> Pair:
        if self.directed:
            return (u, v)
        return (u, v) if u < v else (v, u)

    def absent_pairs(self) -> list[Pair]:
        """Every pair that could legally be added, in lexicographic order."""
        n = self.n
        if self.directed:
            return [(u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in self._edges]
        return [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in self._edges]

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``keep``; returns it with the new-to-old vertex map."""
        old = sorted(set(keep))
        index = {v: i for i, v in enumerate(old)}
        sub = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(old), sub, self.directed), old

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.directed, self._edges) == (other.n, other.directed, other._edges)

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self._edges))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, n={self.n}, m={self.m})"


# -- traversal -----------------------------------------------------------

def _bfs(adj: Sequence[Sequence[int]], source: int) -> tuple[list[int], list[int]]:
    """Layered BFS returning (distances, shortest-path counts); -1 marks unreachable."""
    dist = [-1] * len(adj)
    sigma = [0] * len(adj)
    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        sv = sigma[v]
        for w in adj[v]:
            dw = dist[w]
            if dw < 0:
                dist[w] = dv
                sigma[w] = sv
                queue.append(w)
            elif dw == dv:
                sigma[w] += sv
    return dist, sigma


def _bfs_dist(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def _to_distance(d: int) -> Distance:
    return UNREACHABLE if d < 0 else d


def bfs_distances(g: Graph, source: int) -> list[Distance]:
    """Edge-count distances from ``source`` (following arc direction)."""
    g.check_vertex(source)
    return [_to_distance(d) for d in _bfs_dist(g._out, source)]


def shortest_path_counts(g: Graph, source: int) -> tuple[list[Distance], list[int]]:
    """Distances from ``source`` and the number of distinct shortest paths to each vertex."""
    g.check_vertex(source)
    dist, sigma = _bfs(g._out, source)
    return [_to_distance(d) for d in dist], sigma


def diameter(g: Graph) -> Distance:
    """Largest distance over ordered pairs; UNREACHABLE if some pair has no path."""
    best = 0
    for s in range(g.n):
        dist = _bfs_dist(g._out, s)
        for d in dist:
            if d < 0:
                return UNREACHABLE
            if d > best:
                best = d
    return best


def is_strongly_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return -1 not in _bfs_dist(g._out, 0) and -1 not in _bfs_dist(g._in, 0)


def is_acyclic(g: Graph) -> bool:
    """True for directed graphs without a directed cycle (Kahn's algorithm)."""
    if not g.directed:
        raise GraphError("acyclicity is only checked on directed graphs")
    indeg = [len(g._in[v]) for v in range(g.n)]
    stack = [v for v in range(g.n) if indeg[v] == 0]
    removed = 0
    while stack:
        v = stack.pop()
        removed += 1
        for w in g._out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return removed == g.n


def h_index(g: Graph) -> int:
    """Largest h such that at least h vertices have degree >= h."""
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    h = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i:
            h = i
        else:
            break
    return h


def add_edges(g: Graph, additions: Iterable[Sequence[int]]) -> Graph:
    """Return ``g + additions``.  Every addition must be a new, non-loop pair."""
    new: list[Pair] = []
    seen: set[Pair] = set()
    for e in additions:
        u, v = int(e[0]), int(e[1])
        pair = (u, v)
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise InvalidSolutionError(f"pair {pair} references a vertex outside [0, {g.n})", pair)
        if u == v:
            raise InvalidSolutionError(f"pair {pair} is a self-loop", pair)
        key = g.canonical(u, v)
        if g.has_edge(u, v):
            raise InvalidSolutionError(f"pair {pair} is already an edge", pair)
        if key in seen:
            raise InvalidSolutionError(f"pair {pair} is listed twice", pair)
        seen.add(key)
        new.append(key)
    if not new:
        return g
    return Graph(g.n, list(g._edges) + new, g.directed)


def is_cluster_graph(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Check that every component is a clique.

    Returns ``(True, None)`` or ``(False, (a, b, c))`` where ``a-b-c`` is the
    lexicographically smallest induced path with ``a < c``.
    """
    if g.directed:
        raise GraphError("cluster-graph test needs an undirected graph")
    witness = induced_p3(g)
    return witness is None, witness


def induced_p3(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> tuple[int, int, int] | None:
    """Lexicographically smallest induced P3 ``(a, b, c)``, a < c, avoiding ``removed``."""
    adj = g._out
    for a in range(g.n):
        if a in removed:
            continue
        for b in adj[a]:
            if b in removed:
                continue
            for c in adj[b]:
                if c > a and c not in removed and not g.has_edge(a, c):
                    return (a, b, c)
    return None


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of the undirected graph minus ``removed``, each sorted, ordered by smallest vertex."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g._out[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


# -- edge-list text format -------------------------------------------------

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse ``directed|undirected <n>`` followed by one ``u v`` pair per line."""
    lines = [ln for ln in (_strip_comment(raw) for raw in text.splitlines()) if ln]
    return _parse_edge_lines(lines)


def _parse_edge_lines(lines: list[str]) -> Graph:
    if not lines:
        raise GraphError("empty edge list")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("directed", "undirected"):
        raise GraphError(f"bad header {lines[0]!r}; expected 'directed <n>' or 'undirected <n>'")
    try:
        n = int(header[1])
    except ValueError:
        raise GraphError(f"bad vertex count {header[1]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {line!r}") from None
    return Graph(n, edges, directed=header[0] == "directed")


def format_edge_list(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    lines = [f"{kind} {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
