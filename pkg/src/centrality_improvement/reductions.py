"""Hardness gadgets as instance generators, and brute-force oracles for their sources.

Dominating Set and Set Cover instances are turned into improvement instances
whose answer matches the source answer.  Budgets larger than the source can
use (k > n vertices, k > m sets) are clamped, since any larger budget is
equivalent and the targets below assume k is attainable.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .centrality import CentralityKind
from .graph import Graph, GraphError, _parse_edge_lines, _strip_comment
from .instances import ImprovementInstance
from .solve_exact import SizeGuardError


@dataclass(frozen=True)
class DominatingSetInstance:
    g: Graph
    k: int

    def __post_init__(self):
        if self.g.directed:
            raise GraphError("dominating set instances are undirected")
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")


@dataclass(frozen=True)
class SetCoverInstance:
    n: int
    family: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        family = tuple(tuple(sorted(set(s))) for s in self.family)
        for j, members in enumerate(family):
            if not members:
                raise ValueError(f"set {j} is empty")
            if members[0] < 0 or members[-1] >= self.n:
                raise ValueError(f"set {j} has an element outside [0, {self.n})")
        object.__setattr__(self, "family", family)

    @property
    def m(self) -> int:
        return len(self.family)


@dataclass(frozen=True)
class ReductionOutput:
    inst: ImprovementInstance
    role_map: dict[int, str] = field(compare=False)
    alpha: int | None = None


def _role(name: str, i: int) -> str:
    return f"{name}_{i + 1}"


# -- closeness ---------------------------------------------------------------------

def ds_to_closeness(ds: DominatingSetInstance) -> ReductionOutput:
    """Dominating set of size k exists iff an isolated z can reach k + (n-k)/2."""
    n = ds.g.n
    k = min(ds.k, n)
    z = n
    g = Graph(n + 1, ds.g.edges())
    roles = {i: _role("u", i) for i in range(n)}
    roles[z] = "z"
    r = k + Fraction(n - k, 2)
    return ReductionOutput(ImprovementInstance.build(g, z, k, r, CentralityKind.CLOSENESS), roles)


def ds_to_closeness_diam4(ds: DominatingSetInstance) -> ReductionOutput:
    """Like :func:`ds_to_closeness`, with a path u_i - x_i - y_i - z per vertex.

    Vertices: u_i = i, x_i = n + i, y_i = 2n + i, z = 3n.  Target 2n + k/2.
    """
    n = ds.g.n
    k = min(ds.k, n)
    z = 3 * n
    edges = list(ds.g.edges())
    roles = {}
    for i in range(n):
        edges += [(i, n + i), (n + i, 2 * n + i), (2 * n + i, z)]
        roles[i] = _role("u", i)
        roles[n + i] = _role("x", i)
        roles[2 * n + i] = _role("y", i)
    roles[z] = "z"
    g = Graph(3 * n + 1, edges)
    r = 2 * n + Fraction(k, 2)
    return ReductionOutput(ImprovementInstance.build(g, z, k, r, CentralityKind.CLOSENESS), roles)


def _set_arcs(sc: SetCoverInstance, set_offset: int) -> list[tuple[int, int]]:
    return [(set_offset + j, i) for j, members in enumerate(sc.family) for i in members]


def sc_to_directed_closeness(sc: SetCoverInstance) -> ReductionOutput:
    """Arcs from each set vertex v_j to its elements u_i, plus a source-less z.

    Vertices: u_i = i, v_j = n + j, z = n + m.  Target k + n/2.
    """
    n, m = sc.n, sc.m
    k = min(sc.k, m)
    z = n + m
    g = Graph(n + m + 1, _set_arcs(sc, n), directed=True)
    roles = {i: _role("u", i) for i in range(n)}
    roles.update({n + j: _role("v", j) for j in range(m)})
    roles[z] = "z"
    r = k + Fraction(n, 2)
    return ReductionOutput(ImprovementInstance.build(g, z, k, r, CentralityKind.CLOSENESS), roles)


def sc_to_directed_closeness_diam4(sc: SetCoverInstance) -> ReductionOutput:
    """:func:`sc_to_directed_closeness` plus z -> w_j -> v_j and arcs back into z.

    Vertices: u_i = i, v_j = n + j, z = n + m, w_j = n + m + 1 + j.
    Target k + m + (n + m - k)/2.  Every element must lie in some set, or the
    output is not strongly connected.
    """
    n, m = sc.n, sc.m
    covered = {i for members in sc.family for i in members}
    if len(covered) != n:
        missing = min(set(range(n)) - covered)
        raise ValueError(f"element {missing} is in no set")
    k = min(sc.k, m)
    z = n + m
    arcs = _set_arcs(sc, n)
    roles = {i: _role("u", i) for i in range(n)}
    roles.update({n + j: _role("v", j) for j in range(m)})
    roles[z] = "z"
    arcs += [(i, z) for i in range(n)]
    for j in range(m):
        w = z + 1 + j
        roles[w] = _role("w", j)
        arcs += [(z, w), (w, n + j), (n + j, z), (w, z)]
    g = Graph(n + 2 * m + 1, arcs, directed=True)
    r = k + m + Fraction(n + m - k, 2)
    return ReductionOutput(ImprovementInstance.build(g, z, k, r, CentralityKind.CLOSENESS), roles)


# -- betweenness -------------------------------------------------------------------

def betweenness_alpha(k: int) -> int:
    """Smallest integer strictly greater than 3k(k-1)/2."""
    return 3 * k * (k - 1) // 2 + 1


def ds_to_betweenness(ds: DominatingSetInstance) -> ReductionOutput:
    """Copy of the graph hanging off z_4, with z_1 joined to z_3, z_4 and a
    layer Z_2 of alpha vertices that also touch z_3.

    Vertices: u_i = i, z_1 = n, z_2_i = n + 1 + i, z_3 = n + alpha + 1,
    z_4 = n + alpha + 2.  The target vertex is z_1.
    """
    n = ds.g.n
    k = min(ds.k, n)
    if k < 1:
        raise ValueError("the betweenness gadget needs k >= 1")
    alpha = betweenness_alpha(k)
    z1, z3, z4 = n, n + alpha + 1, n + alpha + 2
    edges = list(ds.g.edges())
    roles = {i: _role("u", i) for i in range(n)}
    roles.update({z1: "z_1", z3: "z_3", z4: "z_4"})
    for i in range(alpha):
        z2 = n + 1 + i
        roles[z2] = f"z_2_{i + 1}"
        edges += [(z1, z2), (z2, z3)]
    edges += [(z1, z3), (z1, z4), (z3, z4)]
    edges += [(z4, i) for i in range(n)]
    g = Graph(n + alpha + 3, edges)
    r = alpha * k + Fraction(2 * alpha * (n - k), 3) + Fraction(k + alpha + comb(alpha, 2), 2)
    return ReductionOutput(ImprovementInstance.build(g, z1, k, r, CentralityKind.BETWEENNESS), roles, alpha)


def sc_to_directed_betweenness(sc: SetCoverInstance) -> ReductionOutput:
    """Set/element arcs as in :func:`sc_to_directed_closeness` plus m(m+n-1)
    sources c that all point at z.

    Vertices: u_i = i, v_j = n + j, z = n + m, c_t = n + m + 1 + t.
    Target (k + n) * m(m+n-1).
    """
    n, m = sc.n, sc.m
    k = min(sc.k, m)
    z = n + m
    count = m * (m + n - 1)
    arcs = _set_arcs(sc, n)
    roles = {i: _role("u", i) for i in range(n)}
    roles.update({n + j: _role("v", j) for j in range(m)})
    roles[z] = "z"
    for t in range(count):
        roles[z + 1 + t] = _role("c", t)
        arcs.append((z + 1 + t, z))
    g = Graph(n + m + 1 + count, arcs, directed=True)
    r = Fraction((k + n) * count)
    return ReductionOutput(ImprovementInstance.build(g, z, k, r, CentralityKind.BETWEENNESS), roles)


REDUCTIONS = {
    "ds": ds_to_closeness,
    "ds-diam4": ds_to_closeness_diam4,
    "ds-betw": ds_to_betweenness,
    "sc": sc_to_directed_closeness,
    "sc-diam4": sc_to_directed_closeness_diam4,
    "sc-betw": sc_to_directed_betweenness,
}


# -- oracles -----------------------------------------------------------------------

def solve_dominating_set_bf(g: Graph, k: int, max_n: int = 20) -> tuple[int, ...] | None:
    """Lexicographically first smallest dominating set of size <= k, or None."""
    if g.n > max_n:
        raise SizeGuardError(f"dominating set oracle limited to {max_n} vertices, got {g.n}")
    closed = [(1 << v) | sum(1 << w for w in g.neighbors(v)) for v in range(g.n)]
    everything = (1 << g.n) - 1
    for size in range(min(k, g.n) + 1):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= closed[v]
            if mask == everything:
                return subset
    return None


def solve_set_cover_bf(sc: SetCoverInstance, max_m: int = 20) -> tuple[int, ...] | None:
    """Lexicographically first smallest cover using <= k sets, or None."""
    if sc.m > max_m:
        raise SizeGuardError(f"set cover oracle limited to {max_m} sets, got {sc.m}")
    masks = [sum(1 << i for i in members) for members in sc.family]
    everything = (1 << sc.n) - 1
    for size in range(min(sc.k, sc.m) + 1):
        for subset in combinations(range(sc.m), size):
            mask = 0
            for j in subset:
                mask |= masks[j]
            if mask == everything:
                return subset
    return None


# -- source file formats -----------------------------------------------------------

def _split_k(text: str) -> tuple[list[str], int]:
    lines = []
    k = None
    for raw in text.splitlines():
        line = _strip_comment(raw)
        if not line:
            continue
        parts = line.split()
        if parts[0] == "k":
            if k is not None:
                raise GraphError("field 'k' given twice")
            if len(parts) != 2:
                raise GraphError(f"bad budget line {raw!r}")
            try:
                k = int(parts[1])
            except ValueError:
                raise GraphError(f"bad budget line {raw!r}") from None
        else:
            lines.append(line)
    if k is None:
        raise GraphError("missing 'k <int>' line")
    return lines, k


def parse_dominating_set(text: str) -> DominatingSetInstance:
    """Edge list (``undirected <n>`` header and ``u v`` lines) plus a ``k <int>`` line."""
    lines, k = _split_k(text)
    try:
        return DominatingSetInstance(_parse_edge_lines(lines), k)
    except ValueError as exc:
        raise GraphError(str(exc)) from None


def format_dominating_set(ds: DominatingSetInstance) -> str:
    lines = [f"undirected {ds.g.n}"] + [f"{u} {v}" for u, v in ds.g.edges()] + [f"k {ds.k}"]
    return "\n".join(lines) + "\n"


def parse_set_cover(text: str) -> SetCoverInstance:
    """``universe <n>``, one ``set e1 e2 ...`` line per set, and ``k <int>``."""
    lines, k = _split_k(text)
    n = None
    family: list[Sequence[int]] = []
    for line in lines:
        head, *rest = line.split()
        try:
            values = [int(x) for x in rest]
        except ValueError:
            raise GraphError(f"bad line {line!r}") from None
        if head == "universe" and len(values) == 1 and n is None:
            n = values[0]
        elif head == "set":
            family.append(values)
        else:
            raise GraphError(f"bad line {line!r}")
    if n is None:
        raise GraphError("missing 'universe <n>' line")
    try:
        return SetCoverInstance(n, tuple(family), k)
    except ValueError as exc:
        raise GraphError(str(exc)) from None


def format_set_cover(sc: SetCoverInstance) -> str:
    lines = [f"universe {sc.n}"] + ["set " + " ".join(map(str, s)) for s in sc.family] + [f"k {sc.k}"]
    return "\n".join(lines) + "\n"
