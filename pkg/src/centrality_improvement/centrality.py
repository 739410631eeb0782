"""Exact harmonic closeness and betweenness of a single vertex.

All values are :class:`fractions.Fraction`; nothing here touches floating point.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction

from .graph import Graph, _bfs, _bfs_dist


class CentralityKind(str, Enum):
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"

    @classmethod
    def parse(cls, text: str) -> CentralityKind:
        aliases = {"c": cls.CLOSENESS, "b": cls.BETWEENNESS}
        if text in aliases:
            return aliases[text]
        return cls(text)


def format_rational(x: Fraction) -> str:
    """Serialize as ``p/q`` in lowest terms (integers keep the ``/1``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _closeness(adj: Sequence[Sequence[int]], z: int) -> Fraction:
    per_distance: dict[int, int] = defaultdict(int)
    for d in _bfs_dist(adj, z):
        if d > 0:
            per_distance[d] += 1
    total = Fraction(0)
    for d, count in per_distance.items():
        total += Fraction(count, d)
    return total


def _betweenness(
    out: Sequence[Sequence[int]],
    inn: Sequence[Sequence[int]],
    z: int,
    directed: bool,
) -> Fraction:
    # sigma_stz = sigma_sz * sigma_zt whenever d(s,z) + d(z,t) = d(s,t)
    n = len(out)
    dist_from_z, paths_from_z = _bfs(out, z)
    if directed:
        dist_to_z, paths_to_z = _bfs(inn, z)
    else:
        dist_to_z, paths_to_z = dist_from_z, paths_from_z
    targets = [t for t in range(n) if t != z and dist_from_z[t] > 0]
    # numerators grouped by denominator sigma_st; summed as fractions once at the end
    grouped: dict[int, int] = defaultdict(int)
    for s in range(n):
        if s == z or dist_to_z[s] < 0:
            continue
        dist_s, sigma_s = _bfs(out, s)
        via = dist_to_z[s]
        through = paths_to_z[s]
        for t in targets:
            if t == s or (not directed and t < s):
                continue
            if dist_s[t] == via + dist_from_z[t]:
                grouped[sigma_s[t]] += through * paths_from_z[t]
    total = Fraction(0)
    for denominator, numerator in grouped.items():
        total += Fraction(numerator, denominator)
    return total


def closeness(g: Graph, z: int, *, reverse: bool = False) -> Fraction:
    """Harmonic closeness: sum of 1/d(z, u) over vertices reachable from z.

    For directed graphs distances run from z along arcs; ``reverse=True``
    measures distances from the other vertices to z instead.
    """
    g.check_vertex(z)
    return _closeness(g._in if reverse else g._out, z)


def betweenness(g: Graph, z: int) -> Fraction:
    """Sum over pairs s, t != z of sigma_stz / sigma_st.

    Undirected graphs count each unordered pair once; directed graphs count
    both orders.
    """
    g.check_vertex(z)
    return _betweenness(g._out, g._in, z, g.directed)


def betweenness_naive(g: Graph, z: int) -> Fraction:
    """Betweenness by listing every shortest path explicitly.  Test oracle only."""
    g.check_vertex(z)
    total = Fraction(0)
    for s in range(g.n):
        if s == z:
            continue
        shortest = _enumerate_shortest_paths(g, s)
        for t, paths in shortest.items():
            if t == z or t == s or (not g.directed and t < s):
                continue
            via_z = sum(1 for p in paths if z in p[1:-1])
            total += Fraction(via_z, len(paths))
    return total


def _enumerate_shortest_paths(g: Graph, s: int) -> dict[int, list[tuple[int, ...]]]:
    # grow explicit paths one edge at a time; a path is kept only while its
    # endpoint has not been reached by a strictly shorter path
    reached = {s: 0}
    paths: dict[int, list[tuple[int, ...]]] = {s: [(s,)]}
    frontier = [(s,)]
    length = 0
    while frontier:
        length += 1
        grown: list[tuple[int, ...]] = []
        for path in frontier:
            for w in g.neighbors(path[-1]):
                if w in path:
                    continue
                if reached.get(w, length) != length:
                    continue
                reached[w] = length
                grown.append(path + (w,))
        for path in grown:
            paths.setdefault(path[-1], []).append(path)
        frontier = grown
    return paths


def centrality(g: Graph, z: int, kind: CentralityKind) -> Fraction:
    if kind is CentralityKind.CLOSENESS:
        return closeness(g, z)
    return betweenness(g, z)
