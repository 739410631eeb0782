"""Improvement instances, solutions and the independent verifier."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .centrality import CentralityKind, centrality, format_rational, parse_rational
from .graph import (
    Graph,
    GraphError,
    InvalidSolutionError,
    Pair,
    _parse_edge_lines,
    _strip_comment,
    add_edges,
    format_edge_list,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ProblemKind:
    centrality: CentralityKind
    directed: bool

    @property
    def name(self) -> str:
        prefix = "directed " if self.directed else ""
        return prefix + self.centrality.value


@dataclass(frozen=True)
class ImprovementInstance:
    """``(g, z, k, r)``: add at most k absent pairs so that z's centrality reaches r."""

    g: Graph
    z: int
    k: int
    r: Fraction
    kind: ProblemKind

    def __post_init__(self):
        self.g.check_vertex(self.z)
        if self.k < 0:
            raise ValueError(f"budget k must be nonnegative, got {self.k}")
        if self.kind.directed != self.g.directed:
            raise ValueError("problem kind and graph disagree on directedness")
        object.__setattr__(self, "r", Fraction(self.r))

    @classmethod
    def build(cls, g: Graph, z: int, k: int, r, centrality_kind: CentralityKind | str) -> ImprovementInstance:
        if isinstance(centrality_kind, str):
            centrality_kind = CentralityKind.parse(centrality_kind)
        return cls(g, z, k, Fraction(r), ProblemKind(centrality_kind, g.directed))

    def value(self, g: Graph | None = None) -> Fraction:
        """Centrality of z in ``g`` (default: the instance graph)."""
        return centrality(self.g if g is None else g, self.z, self.kind.centrality)

    def with_r(self, r) -> ImprovementInstance:
        return ImprovementInstance(self.g, self.z, self.k, Fraction(r), self.kind)


@dataclass(frozen=True)
class Solution:
    additions: tuple[Pair, ...]
    achieved: Fraction


def normalize_additions(g: Graph, additions: Iterable[Sequence[int]]) -> tuple[Pair, ...]:
    return tuple(sorted(g.canonical(int(u), int(v)) for u, v in additions))


def verify(inst: ImprovementInstance, additions: Iterable[Sequence[int]]) -> tuple[bool, Fraction]:
    """Recompute z's centrality in ``g + additions`` and compare it with r.

    Raises :class:`InvalidSolutionError` naming the offending pair when the
    additions overlap the graph, repeat, contain a loop, or exceed the budget.
    """
    additions = list(additions)
    augmented = add_edges(inst.g, additions)
    if len(additions) > inst.k:
        raise InvalidSolutionError(
            f"{len(additions)} additions exceed the budget k={inst.k}", tuple(additions[inst.k])
        )
    achieved = inst.value(augmented)
    return achieved >= inst.r, achieved


# -- instance text format ------------------------------------------------------

_KEYWORDS = ("z", "k", "r", "kind")


def format_instance(inst: ImprovementInstance) -> str:
    return (
        format_edge_list(inst.g)
        + f"z {inst.z}\nk {inst.k}\nr {format_rational(inst.r)}\nkind {inst.kind.centrality.value}\n"
    )


def parse_instance(text: str) -> ImprovementInstance:
    graph_lines: list[str] = []
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = _strip_comment(raw)
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head in _KEYWORDS:
            if head in fields:
                raise GraphError(f"field {head!r} given twice")
            fields[head] = rest.strip()
        else:
            graph_lines.append(line)
    missing = [key for key in _KEYWORDS if key not in fields]
    if missing:
        raise GraphError(f"instance is missing field(s): {', '.join(missing)}")
    g = _parse_edge_lines(graph_lines)
    try:
        z, k = int(fields["z"]), int(fields["k"])
        kind = CentralityKind.parse(fields["kind"])
    except ValueError as exc:
        raise GraphError(f"bad instance field: {exc}") from None
    return ImprovementInstance.build(g, z, k, parse_rational(fields["r"]), kind)


def instance_to_dict(inst: ImprovementInstance) -> dict:
    return {
        "format": FORMAT_VERSION,
        "directed": inst.g.directed,
        "n": inst.g.n,
        "edges": [list(e) for e in inst.g.edges()],
        "z": inst.z,
        "k": inst.k,
        "r": format_rational(inst.r),
        "kind": inst.kind.centrality.value,
    }


def instance_from_dict(data: dict) -> ImprovementInstance:
    g = Graph(data["n"], data["edges"], directed=data["directed"])
    return ImprovementInstance.build(g, data["z"], data["k"], parse_rational(data["r"]), data["kind"])


# -- solution wire format ------------------------------------------------------

def format_solution(solution: Solution) -> str:
    lines = [f"achieved {format_rational(solution.achieved)}"]
    lines.extend(f"add {u} {v}" for u, v in solution.additions)
    return "\n".join(lines) + "\n"


def solution_to_dict(solution: Solution) -> dict:
    return {
        "additions": [list(p) for p in solution.additions],
        "achieved": format_rational(solution.achieved),
    }


def parse_solution(text: str) -> tuple[list[Pair], Fraction | None]:
    """Read additions (and the claimed value, if present) from text or JSON.

    Accepts the output of ``improve`` in either format; unrelated text lines
    are ignored.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        body = data.get("solution", data)
        claimed = body.get("achieved")
        pairs = [(int(u), int(v)) for u, v in body["additions"]]
        return pairs, None if claimed is None else parse_rational(claimed)
    pairs: list[Pair] = []
    claimed = None
    for raw in text.splitlines():
        parts = _strip_comment(raw).split()
        if not parts:
            continue
        if parts[0] == "add":
            if len(parts) != 3:
                raise GraphError(f"bad addition line {raw!r}")
            try:
                pairs.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphError(f"bad addition line {raw!r}") from None
        elif parts[0] == "achieved" and len(parts) == 2:
            claimed = parse_rational(parts[1])
    return pairs, claimed
