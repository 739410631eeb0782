"""Seeded random instance generators.  All randomness goes through ``random.Random(seed)``."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph


def erdos_renyi(n: int, p: float, seed: int, directed: bool = False) -> Graph:
    """G(n, p): each possible edge (arc) present independently with probability p."""
    rng = random.Random(seed)
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [e for e in pairs if rng.random() < p], directed=directed)


@dataclass(frozen=True)
class PlantedClusters:
    g: Graph
    z: int
    clusters: tuple[tuple[int, ...], ...]
    extra: tuple[int, ...]


def planted_clusters(
    sizes: Sequence[int], extra: int, seed: int, p_extra: float = 0.5, p_z: float = 0.3
) -> PlantedClusters:
    """Disjoint cliques of the given sizes, ``extra`` vertices with random
    attachments, and a target vertex z (the last vertex).

    Extra vertices and z connect to every other vertex independently with
    probability ``p_extra`` and ``p_z`` respectively, so deleting the extra
    vertices and z leaves a cluster graph.
    """
    rng = random.Random(seed)
    edges = []
    clusters = []
    nxt = 0
    for size in sizes:
        members = tuple(range(nxt, nxt + size))
        clusters.append(members)
        edges.extend((u, v) for i, u in enumerate(members) for v in members[i + 1:])
        nxt += size
    extras = tuple(range(nxt, nxt + extra))
    z = nxt + extra
    n = z + 1
    for x in extras:
        for v in range(x):
            if rng.random() < p_extra:
                edges.append((v, x))
    for v in range(z):
        if rng.random() < p_z:
            edges.append((v, z))
    return PlantedClusters(Graph(n, edges), z, tuple(clusters), extras)


def random_family(n: int, m: int, seed: int, p: float = 0.4) -> list[list[int]]:
    """m nonempty subsets of range(n) whose union is everything."""
    rng = random.Random(seed)
    family = [sorted(i for i in range(n) if rng.random() < p) for _ in range(m)]
    for j, members in enumerate(family):
        if not members:
            family[j] = [rng.randrange(n)]
    covered = {i for members in family for i in members}
    for i in range(n):
        if i not in covered:
            j = rng.randrange(m)
            family[j] = sorted(family[j] + [i])
    return family
