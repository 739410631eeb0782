"""Exhaustive solvers: the incident-edge XP search, the unrestricted oracle and
a greedy baseline."""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .centrality import CentralityKind, _betweenness, _closeness
from .graph import Graph, Pair
from .instances import ImprovementInstance, Solution


class SizeGuardError(RuntimeError):
    """The requested exhaustive search is larger than the configured limit."""


@dataclass(frozen=True)
class SolverReport:
    best: Solution
    candidates_evaluated: int
    elapsed: float
    solver: str = ""


class Evaluator:
    """Centrality of z in ``g + additions`` without rebuilding a :class:`Graph`.

    Neighbor lists of touched vertices are extended in place of a copy; BFS
    results do not depend on list order.
    """

    def __init__(self, g: Graph, z: int, kind: CentralityKind):
        self.g = g
        self.z = z
        self.kind = kind
        self.calls = 0

    def __call__(self, additions: Iterable[Pair]) -> Fraction:
        self.calls += 1
        g = self.g
        out = list(g._out)
        inn = list(g._in) if g.directed else out
        for u, v in additions:
            out[u] = out[u] + (v,)
            if g.directed:
                inn[v] = inn[v] + (u,)
            else:
                out[v] = out[v] + (u,)
        if self.kind is CentralityKind.CLOSENESS:
            return _closeness(out, self.z)
        return _betweenness(out, inn, self.z, g.directed)


def incident_candidates(inst: ImprovementInstance) -> list[Pair]:
    """Absent pairs touching z that can matter for the instance's problem kind.

    Directed closeness only uses arcs leaving z; directed betweenness uses
    both orientations.
    """
    g, z = inst.g, inst.z
    out: list[Pair] = []
    for v in range(g.n):
        if v == z:
            continue
        if g.directed:
            if not g.has_edge(z, v):
                out.append((z, v))
            if inst.kind.centrality is CentralityKind.BETWEENNESS and not g.has_edge(v, z):
                out.append((v, z))
        elif not g.has_edge(z, v):
            out.append(g.canonical(z, v))
    return sorted(out)


def search_order(inst: ImprovementInstance, candidates: Sequence[Pair]) -> list[Pair]:
    """Candidates by decreasing degree of the endpoint other than z, then lexicographically.

    High-degree endpoints tend to be good additions, so ``early_exit`` stops sooner.
    """
    g, z = inst.g, inst.z

    def other(pair: Pair) -> int:
        return pair[1] if pair[0] == z else pair[0]

    return sorted(candidates, key=lambda p: (-g.degree(other(p)), p))


def _subsets(candidates: Sequence[Pair], k: int) -> Iterator[tuple[Pair, ...]]:
    # increasing size, then lexicographic
    for size in range(min(k, len(candidates)) + 1):
        yield from combinations(candidates, size)


def _search(inst: ImprovementInstance, candidates: Sequence[Pair], name: str, early_exit: bool) -> SolverReport:
    start = time.perf_counter()
    evaluate = Evaluator(inst.g, inst.z, inst.kind.centrality)
    best_set: tuple[Pair, ...] = ()
    best_value: Fraction | None = None
    for subset in _subsets(candidates, inst.k):
        value = evaluate(subset)
        # first maximum in enumeration order wins ties: fewest additions, then lexicographic
        if best_value is None or value > best_value:
            best_set, best_value = subset, value
            if early_exit and value >= inst.r:
                break
    return SolverReport(Solution(best_set, best_value), evaluate.calls, time.perf_counter() - start, name)


def solve_incident(inst: ImprovementInstance, early_exit: bool = False) -> SolverReport:
    """Best addition set among subsets (size <= k) of the pairs incident to z.

    Subsets are tried by increasing size, then in :func:`search_order`; the
    first maximum wins.  With ``early_exit`` the search stops at the first
    set reaching r.
    """
    candidates = search_order(inst, incident_candidates(inst))
    report = _search(inst, candidates, "incident", early_exit)
    best = Solution(tuple(sorted(report.best.additions)), report.best.achieved)
    return SolverReport(best, report.candidates_evaluated, report.elapsed, report.solver)


def count_subsets(num_candidates: int, k: int) -> int:
    return sum(comb(num_candidates, i) for i in range(min(k, num_candidates) + 1))


def solve_unrestricted(inst: ImprovementInstance, max_subsets: int = 250_000) -> SolverReport:
    """Best addition set over every absent pair, not only those at z.

    Exists to check empirically that restricting to pairs at z loses nothing.
    """
    candidates = inst.g.absent_pairs()
    total = count_subsets(len(candidates), inst.k)
    if total > max_subsets:
        raise SizeGuardError(
            f"unrestricted search needs {total} subsets ({len(candidates)} candidates, k={inst.k}); "
            f"limit is {max_subsets}"
        )
    return _search(inst, candidates, "unrestricted", early_exit=False)


def greedy(inst: ImprovementInstance) -> SolverReport:
    """Repeatedly add the candidate with the largest marginal gain (up to k rounds).

    Ties go to the earlier candidate in :func:`search_order`.
    """
    start = time.perf_counter()
    evaluate = Evaluator(inst.g, inst.z, inst.kind.centrality)
    remaining = search_order(inst, incident_candidates(inst))
    chosen: list[Pair] = []
    current = evaluate(())
    for _ in range(inst.k):
        best_pair, best_value = None, current
        for pair in remaining:
            value = evaluate(chosen + [pair])
            if value > best_value:
                best_pair, best_value = pair, value
        if best_pair is None:
            break
        chosen.append(best_pair)
        remaining.remove(best_pair)
        current = best_value
    best = Solution(tuple(sorted(chosen)), current)
    return SolverReport(best, evaluate.calls, time.perf_counter() - start, "greedy")
