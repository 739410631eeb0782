"""Solvers parameterized by the distance to a cluster graph.

A cluster vertex deletion set ``vds`` leaves ``g - vds - z`` as a disjoint
union of cliques.  Signatures are bitmasks over ``vds + [z]``: bit ``i`` is
``vds[i]`` and bit ``len(vds)`` is z.
"""

from __future__ import annotations

import time
from collections import defaultdict
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .centrality import CentralityKind
from .graph import Graph, GraphError, Pair, _bfs_dist, connected_components, induced_p3
from .instances import ImprovementInstance, Solution
from .solve_exact import Evaluator, SolverReport, incident_candidates, search_order

_INF = 1 << 30


@dataclass(frozen=True)
class ClusterDecomposition:
    z: int | None
    vds: tuple[int, ...]
    clusters: tuple[tuple[int, ...], ...]
    cluster_sig: tuple[int, ...]
    vertex_sig: Mapping[int, int] = field(compare=True)

    @property
    def ell(self) -> int:
        return len(self.vds)

    @property
    def z_bit(self) -> int:
        return 1 << len(self.vds)

    def describe(self, mask: int) -> list[str]:
        """Human-readable members of a signature."""
        names = [str(x) for i, x in enumerate(self.vds) if mask >> i & 1]
        if mask & self.z_bit:
            names.append("z")
        return names


def build_decomposition(g: Graph, z: int | None, vds: Sequence[int]) -> ClusterDecomposition:
    """Clusters and signatures for a given deletion set; checks it is one."""
    if g.directed:
        raise GraphError("cluster decompositions need an undirected graph")
    vds = tuple(sorted(set(vds)))
    for x in vds:
        g.check_vertex(x)
        if x == z:
            raise GraphError("z may not be part of the deletion set")
    removed = set(vds)
    if z is not None:
        g.check_vertex(z)
        removed.add(z)
    witness = induced_p3(g, removed)
    if witness is not None:
        raise GraphError(f"removing {list(vds)} leaves the induced path {witness}")
    slot = {x: i for i, x in enumerate(vds)}
    if z is not None:
        slot[z] = len(vds)
    clusters = tuple(tuple(c) for c in connected_components(g, removed))
    vertex_sig: dict[int, int] = {}
    cluster_sig = []
    for members in clusters:
        union = 0
        for v in members:
            mask = 0
            for w in g.neighbors(v):
                if w in slot:
                    mask |= 1 << slot[w]
            vertex_sig[v] = mask
            union |= mask
        cluster_sig.append(union)
    return ClusterDecomposition(z, vds, clusters, tuple(cluster_sig), vertex_sig)


def cluster_vertex_deletion(g: Graph, z: int | None = None) -> ClusterDecomposition:
    """Minimum cluster vertex deletion set of ``g - z`` by 3-way branching on induced P3s.

    The bound is raised one at a time, so the first set found is minimum.
    Branches try the endpoints of the lexicographically smallest P3 in order.
    """
    if g.directed:
        raise GraphError("cluster vertex deletion needs an undirected graph")
    base = frozenset() if z is None else frozenset([g.check_vertex(z)])

    def branch(removed: frozenset[int], budget: int) -> list[int] | None:
        p3 = induced_p3(g, removed)
        if p3 is None:
            return []
        if budget == 0:
            return None
        for v in p3:
            rest = branch(removed | {v}, budget - 1)
            if rest is not None:
                return [v] + rest
        return None

    for ell in range(g.n + 1):
        found = branch(base, ell)
        if found is not None:
            return build_decomposition(g, z, found)
    raise AssertionError("unreachable: deleting every vertex leaves a cluster graph")


def check_decomposition(g: Graph, z: int, dec: ClusterDecomposition) -> None:
    if dec.z != z:
        raise GraphError(f"decomposition was built for z={dec.z}, instance has z={z}")
    if build_decomposition(g, z, dec.vds) != dec:
        raise GraphError("decomposition does not match the graph")


# -- shared bookkeeping ------------------------------------------------------------

@dataclass
class _Cluster:
    index: int
    members: tuple[int, ...]
    sig: int
    free: dict[int, list[int]]  # vertex signature -> members not adjacent to z

    @property
    def size(self) -> int:
        return len(self.members)


def _clusters(dec: ClusterDecomposition) -> list[_Cluster]:
    out = []
    for i, members in enumerate(dec.clusters):
        free: dict[int, list[int]] = defaultdict(list)
        for v in members:
            s = dec.vertex_sig[v]
            if not s & dec.z_bit:
                free[s].append(v)
        out.append(_Cluster(i, members, dec.cluster_sig[i], dict(free)))
    return out


def _subsets_by_size(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for size in range(len(items) + 1):
        yield from combinations(items, size)


class _Best:
    """Running maximum.  Ties go to fewer additions, then to the set the
    incident search would enumerate first."""

    def __init__(self, inst: ImprovementInstance, candidates: Sequence[Pair]):
        self.evaluate = Evaluator(inst.g, inst.z, inst.kind.centrality)
        self.rank = {p: i for i, p in enumerate(search_order(inst, candidates))}
        self.cache: dict[tuple[Pair, ...], Fraction] = {}
        self.additions: tuple[Pair, ...] = ()
        self.order: tuple[int, ...] = ()
        self.value: Fraction | None = None

    def offer(self, additions: Sequence[Pair]) -> None:
        key = tuple(sorted(additions))
        value = self.cache.get(key)
        if value is None:
            value = self.cache[key] = self.evaluate(key)
        order = tuple(sorted(self.rank[p] for p in key))
        if (
            self.value is None
            or value > self.value
            or (value == self.value and (len(order), order) < (len(self.order), self.order))
        ):
            self.additions, self.order, self.value = key, order, value

    def report(self, start: float, name: str) -> SolverReport:
        return SolverReport(
            Solution(self.additions, self.value), self.evaluate.calls, time.perf_counter() - start, name
        )


def _prepare(inst: ImprovementInstance, dec: ClusterDecomposition, centrality: CentralityKind):
    if inst.g.directed or inst.kind.centrality is not centrality:
        raise GraphError(f"this solver handles undirected {centrality.value} instances only")
    check_decomposition(inst.g, inst.z, dec)
    candidates = incident_candidates(inst)
    target = min(inst.k, len(candidates))
    vds_free = [x for x in dec.vds if not inst.g.has_edge(inst.z, x)]
    return candidates, target, vds_free


# -- closeness ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class _Element:
    """Signature of the chosen part of one cluster: (cluster sig, vertex sigs)."""

    cluster_sig: int
    vertex_sigs: tuple[int, ...]

    @property
    def cost(self) -> int:
        return len(self.vertex_sigs)


def _closeness_elements(clusters: list[_Cluster]) -> dict[_Element, list[_Cluster]]:
    eligible: dict[_Element, list[_Cluster]] = defaultdict(list)
    for c in clusters:
        sigs = sorted(c.free)
        for size in range(1, len(sigs) + 1):
            for combo in combinations(sigs, size):
                eligible[_Element(c.sig, combo)].append(c)
    return dict(sorted(eligible.items()))


def _element_sets(elements: Sequence[_Element], budget: int) -> Iterator[tuple[_Element, ...]]:
    def rec(start: int, remaining: int, acc: list[_Element]):
        yield tuple(acc)
        for i in range(start, len(elements)):
            e = elements[i]
            if e.cost <= remaining:
                acc.append(e)
                yield from rec(i + 1, remaining - e.cost, acc)
                acc.pop()

    yield from rec(0, budget, [])


def _profile(g: Graph, z: int, extra: Sequence[int]) -> list[int]:
    """Distances from z once z is joined to ``extra``."""
    out = list(g._out)
    for v in extra:
        out[z] = out[z] + (v,)
        out[v] = out[v] + (z,)
    return _bfs_dist(out, z)


def _cluster_gain(
    g: Graph, z: int, dec: ClusterDecomposition, cluster: _Cluster, element: _Element, reach: Mapping[int, int]
) -> Fraction:
    """Closeness gained by joining z to one vertex per signature of ``element`` in ``cluster``.

    ``reach[mask]`` is the distance from z to the nearest member of the mask
    given the rest of the solution.
    """
    chosen = {cluster.free[s][0] for s in element.vertex_sigs}
    via_cluster = 2 + reach[cluster.sig]
    gain = Fraction(0)
    for v in cluster.members:
        if g.has_edge(z, v):
            continue
        before = min(1 + reach[dec.vertex_sig[v]], via_cluster)
        after = 1 if v in chosen else min(before, 2)
        gain += Fraction(1, after) - (Fraction(1, before) if before < _INF else 0)
    return gain


def _reach_table(dec: ClusterDecomposition, dist: Sequence[int]) -> dict[int, int]:
    table: dict[int, int] = {}
    for mask in range(1 << (dec.ell + 1)):
        best = _INF
        if mask & dec.z_bit:
            best = 0
        for i, x in enumerate(dec.vds):
            if mask >> i & 1 and 0 <= dist[x] < best:
                best = dist[x]
        table[mask] = best
    return table


def _assignments(
    elements: Sequence[_Element], options: Mapping[_Element, Sequence[_Cluster]], budget: int
) -> Iterator[list[tuple[_Cluster, _Element]]]:
    """Every way to give each element at least one distinct cluster within budget."""

    def rec(i: int, remaining: int, used: frozenset[int], acc: list):
        if i == len(elements):
            yield list(acc)
            return
        e = elements[i]
        free = [c for c in options[e] if c.index not in used]
        for t in range(1, remaining // e.cost + 1):
            for combo in combinations(free, t):
                acc.extend((c, e) for c in combo)
                yield from rec(i + 1, remaining - t * e.cost, used | {c.index for c in combo}, acc)
                del acc[len(acc) - t:]

    yield from rec(0, budget, frozenset(), [])


def solve_closeness_fpt(
    inst: ImprovementInstance, dec: ClusterDecomposition, rank: str = "gain"
) -> SolverReport:
    """Optimal closeness improvement by enumerating solution signatures.

    For every choice of deletion-set endpoints and every solution signature,
    each signature element is given its most potent clusters, the remaining
    budget is padded with arbitrary incident pairs, and the candidate is
    evaluated exactly.  ``rank`` orders a signature element's eligible
    clusters: ``"gain"`` by the closeness they add under that signature,
    ``"size"`` by cluster size alone.
    """
    if rank not in ("gain", "size"):
        raise ValueError(f"unknown rank {rank!r}")
    start = time.perf_counter()
    g, z = inst.g, inst.z
    candidates, target, vds_free = _prepare(inst, dec, CentralityKind.CLOSENESS)
    clusters = _clusters(dec)
    eligible = _closeness_elements(clusters)
    elements = list(eligible)
    best = _Best(inst, candidates)

    for vpart in _subsets_by_size(vds_free):
        budget = target - len(vpart)
        if budget < 0:
            break
        for sig_set in _element_sets(elements, budget):
            reps = []
            for e in sig_set:
                c = eligible[e][0]
                reps.extend(c.free[s][0] for s in e.vertex_sigs)
            reach = _reach_table(dec, _profile(g, z, list(vpart) + reps))
            options = {}
            for e in sig_set:
                if rank == "gain":
                    key = lambda c: (-_cluster_gain(g, z, dec, c, e, reach), -c.size, c.index)  # noqa: E731
                else:
                    key = lambda c: (-c.size, c.index)  # noqa: E731
                options[e] = sorted(eligible[e], key=key)[:budget]
            for assignment in _assignments(sig_set, options, budget):
                chosen = set(vpart)
                for c, e in assignment:
                    chosen.update(c.free[s][0] for s in e.vertex_sigs)
                additions = [g.canonical(z, v) for v in chosen]
                taken = set(additions)
                for pair in candidates:
                    if len(additions) >= target:
                        break
                    if pair not in taken:
                        additions.append(pair)
                best.offer(additions)
    return best.report(start, f"fpt-closeness[{rank}]")


# -- betweenness -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class _Entry:
    """Clusters of one signature that receive ``counts[s]`` vertices of each vertex signature s."""

    cluster_sig: int
    counts: tuple[tuple[int, int], ...]

    @property
    def cost(self) -> int:
        return sum(c for _, c in self.counts)

    def fits(self, cluster: _Cluster) -> bool:
        return cluster.sig == self.cluster_sig and all(len(cluster.free.get(s, ())) >= c for s, c in self.counts)


def _count_vectors(free: Mapping[int, list[int]], budget: int) -> Iterator[tuple[tuple[int, int], ...]]:
    sigs = sorted(free)

    def rec(i: int, remaining: int, acc: list):
        if i == len(sigs):
            if acc:
                yield tuple(acc)
            return
        yield from rec(i + 1, remaining, acc)
        s = sigs[i]
        for c in range(1, min(remaining, len(free[s])) + 1):
            acc.append((s, c))
            yield from rec(i + 1, remaining - c, acc)
            acc.pop()

    yield from rec(0, budget, [])


def _entry_multisets(entries: Sequence[_Entry], budget: int) -> Iterator[list[tuple[_Entry, int]]]:
    def rec(i: int, remaining: int, acc: list):
        if i == len(entries):
            yield list(acc)
            return
        yield from rec(i + 1, remaining, acc)
        e = entries[i]
        for mult in range(1, remaining // e.cost + 1):
            acc.append((e, mult))
            yield from rec(i + 1, remaining - mult * e.cost, acc)
            acc.pop()

    yield from rec(0, budget, [])


def _cluster_type(cluster: _Cluster, dec: ClusterDecomposition) -> tuple:
    return (cluster.sig, tuple(sorted(dec.vertex_sig[v] for v in cluster.members)))


def _marking_options(
    entry: _Entry, cap: int, clusters: Sequence[_Cluster], dec: ClusterDecomposition, k: int, marking: str
) -> list[_Cluster]:
    fitting = sorted((c for c in clusters if entry.fits(c)), key=lambda c: (-c.size, c.index))
    if marking == "largest":
        return fitting[:k]
    # up to `cap` clusters per isomorphism type: clusters of equal type are
    # exchangeable by an automorphism fixing everything else, and a profile
    # marks at most `cap` clusters in total
    per_type: dict[tuple, int] = defaultdict(int)
    kept = []
    for c in fitting:
        t = _cluster_type(c, dec)
        if per_type[t] < cap:
            per_type[t] += 1
            kept.append(c)
    return kept


def _markings(
    profile: Sequence[tuple[_Entry, int]], options: Sequence[Sequence[_Cluster]]
) -> Iterator[list[tuple[_Cluster, _Entry]]]:
    def rec(i: int, used: frozenset[int], acc: list):
        if i == len(profile):
            yield list(acc)
            return
        entry, mult = profile[i]
        free = [c for c in options[i] if c.index not in used]
        for combo in combinations(free, mult):
            acc.extend((c, entry) for c in combo)
            yield from rec(i + 1, used | {c.index for c in combo}, acc)
            del acc[len(acc) - mult:]

    yield from rec(0, frozenset(), [])


def solve_betweenness_fpt(
    inst: ImprovementInstance, dec: ClusterDecomposition, marking: str = "types"
) -> SolverReport:
    """Optimal betweenness improvement by enumerating solution profiles.

    A profile fixes the deletion-set endpoints, and for every cluster
    signature the multiset of per-cluster vertex-signature counts.  Each
    profile is completed by marking clusters that fit it and taking the
    smallest-id vertices of the required signatures; every completion is
    evaluated exactly.  ``marking="largest"`` tries markings among the k
    largest fitting clusters only; ``"types"`` tries one representative
    group per cluster isomorphism type.
    """
    if marking not in ("types", "largest"):
        raise ValueError(f"unknown marking {marking!r}")
    start = time.perf_counter()
    g, z = inst.g, inst.z
    candidates, target, vds_free = _prepare(inst, dec, CentralityKind.BETWEENNESS)
    clusters = _clusters(dec)
    best = _Best(inst, candidates)

    entries = sorted(
        {_Entry(c.sig, counts) for c in clusters for counts in _count_vectors(c.free, target)}
    )
    for vpart in _subsets_by_size(vds_free):
        budget = target - len(vpart)
        if budget < 0:
            break
        for profile in _entry_multisets(entries, budget):
            cap = sum(mult for _, mult in profile)
            options = [_marking_options(e, cap, clusters, dec, inst.k, marking) for e, _ in profile]
            for marked in _markings(profile, options):
                chosen = list(vpart)
                for c, entry in marked:
                    for s, count in entry.counts:
                        chosen.extend(c.free[s][:count])
                best.offer([g.canonical(z, v) for v in chosen])
    return best.report(start, f"fpt-betweenness[{marking}]")
