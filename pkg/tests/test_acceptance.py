"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Values checked against independent oracles are computed here (BFS sums,
brute-force closures); only the two Wiener values 27 and 48 are literal.
"""

import itertools
import time

import numpy as np
import pytest

from acceptance_log import record
from oracles import as_classes, theta_star_naive, wiener_naive

from theta_lab import fixtures
from theta_lab import generators as gen
from theta_lab.chordal import (
    expected_chordal_partition,
    exposed_edges,
    verify_lemma_chordal_phi,
    verify_theorem_chordal,
)
from theta_lab.cycles import find_touching_pair_for_edge
from theta_lab.graph import all_pairs_distances, blocks, random_shortest_path
from theta_lab.partition import Comparison, compare_partitions
from theta_lab.planar import (
    expected_triangulation_partition,
    phi_bar_refines_theta_star,
    separating_cycle_scan,
    verify_theorem_fullerene,
    verify_theorem_triangulation,
)
from theta_lab.relations import is_partial_cube, theta_matrix, theta_star, wiener_bfs, wiener_via_cuts
from theta_lab.subdivision import (
    check_distance_formulas,
    converse_pairs_check,
    halfedge_merge_check,
    lift_partition,
    project_check,
    subdivide,
)

pytestmark = pytest.mark.acceptance


def test_criterion_1_exhaustive_small_graphs():
    t0 = time.perf_counter()
    graphs = fixtures.small_graphs(max_n=7, min_n=3)
    counts = {}
    for g in graphs:
        counts[g.n] = counts.get(g.n, 0) + 1
    failures = []
    for g in graphs:
        sg, smap = subdivide(g)
        for rep in (check_distance_formulas(g, sg, smap), project_check(g, sg, smap),
                    converse_pairs_check(g, sg, smap), halfedge_merge_check(g, sg, smap)):
            if not rep.passed:
                failures.append((g.edges, rep.check, rep.witness))
        block_of = blocks(g).block_of_edge(g.m)
        tmat = theta_matrix(g)
        i, j = np.nonzero(np.triu(tmat, k=1))
        if (block_of[i] != block_of[j]).any():
            failures.append((g.edges, "block-confinement", None))

    # 1000 geodesics sampled across the whole corpus
    rng = np.random.default_rng(2024)
    sampled = 0
    while sampled < 1000:
        g = graphs[int(rng.integers(len(graphs)))]
        u, v = (int(x) for x in rng.choice(g.n, size=2, replace=False))
        dm = all_pairs_distances(g)
        tmat = theta_matrix(g, dm)
        path = random_shortest_path(g, dm, u, v, rng)
        if any(tmat[a, b] for a, b in itertools.combinations(path, 2)):
            failures.append((g.edges, "geodesic", path))
        sampled += 1

    elapsed = time.perf_counter() - t0
    complete = counts == {3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    ok = complete and not failures
    record(1, ok, "exhaustive suite on connected graphs, 3 <= n <= 7",
           f"{len(graphs)} graphs, {sampled} geodesics, {len(failures)} failures, {elapsed:.1f}s")
    assert complete, counts
    assert not failures, failures[:3]


def test_criterion_2_subdivided_k4():
    k4, emb = fixtures.load_embedded("k4")
    sg, _ = subdivide(k4)
    brute = theta_star(sg)
    tri = expected_triangulation_partition(k4, emb)
    chordal = expected_chordal_partition(k4)
    oracle = theta_star_naive(sg.n, list(sg.edges))
    ok = (len(brute) == 4 and brute.sizes() == [3, 3, 3, 3] and brute == tri == chordal
          and as_classes(brute) == oracle and is_partial_cube(sg))
    record(2, ok, "S(K4): four classes of three, both predictions, partial cube",
           f"sizes {brute.sizes()}")
    assert ok


def test_criterion_3_fullerene_subdivision():
    t0 = time.perf_counter()
    verdicts = {}
    for name in fixtures.FULLERENES:
        g, emb = fixtures.load_embedded(name)
        verdicts[name] = verify_theorem_fullerene(g, emb).details["comparison"]
    elapsed = time.perf_counter() - t0
    ok = all(v == "Equal" for v in verdicts.values()) and elapsed < 120
    record(3, ok, "Theta*_S(G) equals the lift on every bundled fullerene",
           ", ".join(f"{k} {v}" for k, v in verdicts.items()) + f"; {elapsed:.1f}s")
    assert ok, verdicts


def test_criterion_4_separating_cycles():
    t0 = time.perf_counter()
    results = {}
    for name in fixtures.FULLERENES:
        g, emb = fixtures.load_embedded(name)
        results[name] = separating_cycle_scan(g, emb, max_len=9)
    elapsed = time.perf_counter() - t0
    ok = all(results.values()) and elapsed < 600
    sep9 = {k: r.details["separating_by_length"].get(9, 0) for k, r in results.items()}
    record(4, ok, "no separating cycle shorter than 9; 9-cycles isolate pentagon-only vertices",
           f"separating 9-cycles {sep9}; {elapsed:.1f}s")
    assert ok, {k: r.witness for k, r in results.items() if not r}


def test_criterion_5_triangulations():
    names = ("k4", "octahedron", "icosahedron", "apollonian_1", "apollonian_2", "apollonian_3")
    classes = {}
    ok = True
    for name in names:
        g, emb = fixtures.load_embedded(name)
        assert g.n <= 14
        rep = verify_theorem_triangulation(g, emb)
        ok &= rep.passed and rep.details["theta_star_G_classes"] == 1
        classes[name] = rep.details["sub_classes"]
    record(5, ok, "triangulation prediction equals brute force; Theta*_G single class",
           f"S(G) classes {classes}")
    assert ok


def test_criterion_6_chordal():
    graphs = {"k4": fixtures.load("k4")[0], "k5": gen.complete_graph(5), "diamond": fixtures.load("diamond")[0],
              "chordal_1": fixtures.load("chordal_1")[0], "chordal_2": fixtures.load("chordal_2")[0],
              "chordal_3": fixtures.load("chordal_3")[0]}
    colouring_ok, closure_ok = {}, {}
    for name, g in graphs.items():
        assert g.n <= 12
        rep = verify_theorem_chordal(g)
        colouring_ok[name] = rep.passed and rep.details["sub_classes"] == exposed_edges(g).component_count
        closure_ok[name] = verify_lemma_chordal_phi(g).passed
    ok = all(colouring_ok.values()) and all(closure_ok.values())
    bad_closure = [k for k, v in closure_ok.items() if not v]
    record(6, ok, "chordal colouring, class count, and C6-closure equality",
           f"colouring+count pass on {sum(colouring_ok.values())}/6; "
           f"C6-closure equal on {sum(closure_ok.values())}/6"
           + (f", strictly finer on {', '.join(bad_closure)}" if bad_closure else ""))
    assert all(colouring_ok.values()), colouring_ok
    assert all(closure_ok.values()), f"C6-opposite closure differs from Theta*_S(G) on {bad_closure}"


def test_criterion_7_touching_cycles_pipeline():
    names = ("octahedron", "icosahedron") + fixtures.FULLERENES
    missing, unequal = {}, []
    for name in names:
        g, _ = fixtures.load_embedded(name)
        dm = all_pairs_distances(g)
        miss = [e for e in range(g.m) if find_touching_pair_for_edge(g, e, 6, dm) is None]
        if miss:
            missing[name] = len(miss)
        sg, smap = subdivide(g)
        if compare_partitions(theta_star(sg), lift_partition(g, theta_star(g), smap)) is not Comparison.EQUAL:
            unequal.append(name)
    ok = not missing and not unequal
    record(7, ok, "touching pair for every edge with L = 6, hence equality",
           f"{len(names)} graphs, edges without a pair {missing or 0}, unequal {unequal or 0}")
    assert ok


def test_criterion_8_wiener_cut_method():
    cases = {"C6": gen.cycle_graph(6), "Q3": gen.hypercube_graph(3), "S(K4)": subdivide(gen.complete_graph(4))[0]}
    cases.update({f"C{k}": gen.cycle_graph(k) for k in range(4, 21, 2)})
    values, ok = {}, True
    for name, g in cases.items():
        bfs, cuts = wiener_bfs(g), wiener_via_cuts(g)
        ok &= bfs == cuts == wiener_naive(g.n, list(g.edges))
        values[name] = cuts
    ok &= values["C6"] == 27 and values["Q3"] == 48
    record(8, ok, "cut method equals BFS Wiener index",
           f"C6 {values['C6']}, Q3 {values['Q3']}, S(K4) {values['S(K4)']}, C20 {values['C20']}")
    assert ok, values


def test_criterion_9_phi_bar_refinement():
    flags, ok = {}, True
    for name in fixtures.FULLERENES:
        g, emb = fixtures.load_embedded(name)
        rep = phi_bar_refines_theta_star(g, emb)
        ok &= rep.passed
        flags[name] = "equal" if rep.details["equal"] else "strict"
    record(9, ok, "Phi-bar closure refines Theta*_G on every bundled fullerene", f"equality {flags}")
    assert ok
