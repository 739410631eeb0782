"""Acceptance gate: one test per criterion, each recording a pass/fail line.

The lines are collected in ``RESULTS`` and printed in the pytest terminal
summary (see conftest.py), so a plain ``pytest`` run shows the whole gate.
"""

import random
import time
from itertools import combinations

from centrality_improvement.centrality import betweenness, betweenness_naive, closeness
from centrality_improvement.generators import erdos_renyi, planted_clusters, random_family
from centrality_improvement.graph import (
    Graph,
    add_edges,
    diameter,
    h_index,
    is_acyclic,
    is_strongly_connected,
)
from centrality_improvement.instances import ImprovementInstance
from centrality_improvement.reductions import (
    DominatingSetInstance,
    SetCoverInstance,
    ds_to_betweenness,
    ds_to_closeness,
    ds_to_closeness_diam4,
    sc_to_directed_betweenness,
    sc_to_directed_closeness,
    sc_to_directed_closeness_diam4,
    solve_dominating_set_bf,
    solve_set_cover_bf,
)
from centrality_improvement.solve_exact import solve_incident, solve_unrestricted
from centrality_improvement.solve_fpt import (
    cluster_vertex_deletion,
    solve_betweenness_fpt,
    solve_closeness_fpt,
)

from cli_suite import run_suite
from conftest import EXAMPLE_EDGES

RESULTS: dict[int, str] = {}


def check(number: int, description: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {number:>2} {description}"
    if detail:
        line += f" ({detail})"
    RESULTS[number] = line
    print(line)
    assert ok, line


def is_yes(out) -> bool:
    return solve_incident(out.inst, early_exit=True).best.achieved >= out.inst.r


def random_set_cover(rng: random.Random, max_n: int, max_m: int) -> SetCoverInstance:
    n, m = rng.randint(1, max_n), rng.randint(1, max_m)
    family = tuple(map(tuple, random_family(n, m, seed=rng.randrange(10**6))))
    return SetCoverInstance(n, family, rng.randint(0, 2))


def test_01_example_reproduction():
    start = time.perf_counter()
    out = ds_to_closeness(DominatingSetInstance(Graph(6, EXAMPLE_EDGES), 2))
    best = solve_incident(out.inst).best
    elapsed = time.perf_counter() - start
    ok = out.inst.r == 4 and best.achieved == 4 and best.additions == ((1, 6), (2, 6)) and elapsed < 1
    check(
        1,
        "six-vertex dominating-set example: r = 4, optimum 4 via {z,u2},{z,u3}",
        ok,
        f"r={out.inst.r}, achieved={best.achieved}, additions={best.additions}, {elapsed:.3f}s",
    )


def _incident_matches_unrestricted(kind: str, seed: int):
    rng = random.Random(seed)
    start = time.perf_counter()
    graphs = mismatches = 0
    first = None
    for directed in (False, True):
        for _ in range(100):
            g = erdos_renyi(rng.randint(2, 8), rng.choice([0.15, 0.3, 0.5]), rng.randrange(10**6), directed)
            z = rng.randrange(g.n)
            graphs += 1
            for k in (1, 2):
                inst = ImprovementInstance.build(g, z, k, 0, kind)
                a = solve_incident(inst).best.achieved
                b = solve_unrestricted(inst).best.achieved
                if a != b:
                    mismatches += 1
                    first = first or (g.directed, g.n, g.edges(), z, k, a, b)
    return graphs, mismatches, first, time.perf_counter() - start


def test_02_closeness_incident_suffices():
    graphs, mismatches, first, elapsed = _incident_matches_unrestricted("c", 2)
    check(
        2,
        "closeness: incident optimum equals unrestricted optimum",
        mismatches == 0 and graphs >= 200 and elapsed < 120,
        f"{graphs} graphs, k in {{1,2}}, {mismatches} mismatches, {elapsed:.1f}s" + (f", first {first}" if first else ""),
    )


def test_03_betweenness_incident_suffices():
    graphs, mismatches, first, elapsed = _incident_matches_unrestricted("b", 3)
    check(
        3,
        "betweenness: incident optimum equals unrestricted optimum",
        mismatches == 0 and graphs >= 200 and elapsed < 180,
        f"{graphs} graphs, k in {{1,2}}, {mismatches} mismatches, {elapsed:.1f}s" + (f", first {first}" if first else ""),
    )


def _planted_fpt_run(kind, solver, count, max_n, max_k, seed, max_size, p_extra):
    rng = random.Random(seed)
    start = time.perf_counter()
    done = mismatches = 0
    first = None
    attempt = 0
    while done < count:
        attempt += 1
        extra = rng.randint(0, 2)
        sizes = [rng.randint(1, max_size) for _ in range(rng.randint(2, 4))]
        while sum(sizes) > max_n - 1 - extra:
            sizes.pop()
        pc = planted_clusters(sizes, extra, seed=seed * 10**6 + attempt, p_extra=p_extra, p_z=rng.choice([0.0, 0.1, 0.2]))
        dec = cluster_vertex_deletion(pc.g, pc.z)
        if dec.ell > 2:
            continue
        inst = ImprovementInstance.build(pc.g, pc.z, rng.randint(1, max_k), 0, kind)
        a = solver(inst, dec).best.achieved
        b = solve_incident(inst).best.achieved
        done += 1
        if a != b:
            mismatches += 1
            first = first or (pc.g.n, pc.g.edges(), pc.z, inst.k, a, b)
    return done, mismatches, first, time.perf_counter() - start


def test_04_closeness_fpt():
    done, mismatches, first, elapsed = _planted_fpt_run("c", solve_closeness_fpt, 100, 14, 3, 4, 5, 0.5)
    check(
        4,
        "closeness FPT solver equals incident optimum (deletion set <= 2, n <= 14, k <= 3)",
        mismatches == 0 and elapsed < 600,
        f"{done} instances, {mismatches} mismatches, {elapsed:.1f}s" + (f", first {first}" if first else ""),
    )


def test_05_betweenness_fpt():
    done, mismatches, first, elapsed = _planted_fpt_run("b", solve_betweenness_fpt, 50, 10, 2, 5, 4, 0.4)
    check(
        5,
        "betweenness FPT solver equals incident optimum (deletion set <= 2, n <= 10, k <= 2)",
        mismatches == 0 and elapsed < 600,
        f"{done} instances, {mismatches} mismatches, {elapsed:.1f}s" + (f", first {first}" if first else ""),
    )


def test_06_reduction_round_trips():
    rng = random.Random(6)
    failures: dict[str, list] = {}
    counts: dict[str, int] = {}

    def record(name, expected, got, sample):
        counts[name] = counts.get(name, 0) + 1
        if expected != got:
            failures.setdefault(name, []).append(sample)

    for _ in range(500):
        g = erdos_renyi(rng.randint(1, 6), rng.choice([0.2, 0.4, 0.6]), seed=rng.randrange(10**6))
        for k in (1, 2):
            expected = solve_dominating_set_bf(g, k) is not None
            ds = DominatingSetInstance(g, k)
            record("ds", expected, is_yes(ds_to_closeness(ds)), (g.n, g.edges(), k))
            record("ds-diam4", expected, is_yes(ds_to_closeness_diam4(ds)), (g.n, g.edges(), k))
    for _ in range(300):
        sc = random_set_cover(rng, 4, 4)
        expected = solve_set_cover_bf(sc) is not None
        record("sc", expected, is_yes(sc_to_directed_closeness(sc)), (sc.n, sc.family, sc.k))
        record("sc-diam4", expected, is_yes(sc_to_directed_closeness_diam4(sc)), (sc.n, sc.family, sc.k))
    for _ in range(200):
        g = erdos_renyi(rng.randint(1, 5), rng.choice([0.2, 0.4, 0.6]), seed=rng.randrange(10**6))
        expected = solve_dominating_set_bf(g, 2) is not None
        record("ds-betw", expected, is_yes(ds_to_betweenness(DominatingSetInstance(g, 2))), (g.n, g.edges(), 2))
    for _ in range(200):
        sc = random_set_cover(rng, 3, 3)
        expected = solve_set_cover_bf(sc) is not None
        record("sc-betw", expected, is_yes(sc_to_directed_betweenness(sc)), (sc.n, sc.family, sc.k))

    summary = ", ".join(f"{name} {len(failures.get(name, []))}/{counts[name]}" for name in counts)
    detail = f"disagreements {summary}"
    for name, samples in failures.items():
        detail += f"; first {name} disagreement {samples[0]}"
    check(6, "reduction round-trips agree with the source oracles", not failures, detail)


def test_07_betweenness_engine():
    rng = random.Random(7)
    start = time.perf_counter()
    bad = []
    for i in range(240):
        g = erdos_renyi(rng.randint(1, 9), rng.choice([0.2, 0.35, 0.5]), rng.randrange(10**6), i % 2 == 1)
        for z in range(g.n):
            if betweenness(g, z) != betweenness_naive(g, z):
                bad.append((g.directed, g.n, g.edges(), z))
    elapsed = time.perf_counter() - start
    check(
        7,
        "betweenness equals the path-enumeration reference",
        not bad and elapsed < 60,
        f"240 graphs, all z, {len(bad)} mismatches, {elapsed:.1f}s" + (f", first {bad[0]}" if bad else ""),
    )


def test_08_structural_checks():
    rng = random.Random(8)
    problems = []

    for _ in range(60):
        g = erdos_renyi(rng.randint(1, 7), rng.choice([0.2, 0.5, 0.8]), seed=rng.randrange(10**6))
        d = diameter(ds_to_betweenness(DominatingSetInstance(g, rng.randint(1, 3))).inst.g)
        if d != 3:
            problems.append(f"ds-betw diameter {d} on {g.edges()}")

    inputs = [Graph(5, list(combinations(range(5), 2)))]
    while len(inputs) < 80:
        g = erdos_renyi(rng.randint(1, 9), rng.choice([0.2, 0.4, 0.6]), seed=rng.randrange(10**6))
        if max(g.degree(v) for v in range(g.n)) <= 4:
            inputs.append(g)
    for g in inputs:
        out = ds_to_closeness_diam4(DominatingSetInstance(g, 1)).inst.g
        h, d = h_index(out), diameter(out)
        if h > 4:
            problems.append(f"ds-diam4 H-index {h} on n={g.n} {g.edges()}")
        if d > 6 or (diameter(g) <= 2 and d > 4):
            problems.append(f"ds-diam4 diameter {d} on n={g.n} {g.edges()}")

    for _ in range(100):
        sc = random_set_cover(rng, 4, 4)
        if not is_acyclic(sc_to_directed_closeness(sc).inst.g):
            problems.append(f"sc not acyclic on {sc}")
        if not is_acyclic(sc_to_directed_betweenness(sc).inst.g):
            problems.append(f"sc-betw not acyclic on {sc}")
        g = sc_to_directed_closeness_diam4(sc).inst.g
        if not is_strongly_connected(g) or diameter(g) > 4:
            problems.append(f"sc-diam4 not strongly connected with diameter <= 4 on {sc}")

    check(
        8,
        "gadget structure: diameters, H-index, acyclicity, strong connectivity",
        not problems,
        f"{len(problems)} violations" + "".join(f"; {p}" for p in problems[:3]),
    )


def test_09_closeness_monotone():
    rng = random.Random(9)
    bad = []
    triples = 0
    while triples < 1000:
        directed = rng.random() < 0.5
        g = erdos_renyi(rng.randint(2, 9), rng.choice([0.1, 0.25, 0.4]), rng.randrange(10**6), directed)
        z = rng.randrange(g.n)
        absent = [v for v in range(g.n) if v != z and not g.has_edge(z, v)]
        if not absent:
            continue
        v = rng.choice(absent)
        triples += 1
        if closeness(add_edges(g, [(z, v)]), z) < closeness(g, z):
            bad.append((directed, g.n, g.edges(), z, v))
    check(
        9,
        "adding an edge at z never decreases its closeness",
        not bad,
        f"{triples} triples, {len(bad)} violations" + (f", first {bad[0]}" if bad else ""),
    )


def test_10_cli_determinism(tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = run_suite(tmp_path / "a", "0")
    second = run_suite(tmp_path / "b", "0")
    check(10, "two runs of the CLI suite are byte-identical", first == second, f"{len(first)} bytes of output")
