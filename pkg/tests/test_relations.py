import itertools

import numpy as np
import pytest

from oracles import as_classes, theta_pairs_naive, theta_star_naive, wiener_naive
from conftest import corpus

from theta_lab import generators as gen
from theta_lab.errors import NotBipartite, NotInTheta, NotPartialCube
from theta_lab.graph import (
    all_pairs_distances,
    blocks,
    build_graph,
    is_bipartite,
    is_isometric_subgraph,
    random_shortest_path,
)
from theta_lab.relations import (
    bipartite_theta_witness,
    cut_sizes,
    is_partial_cube,
    theta_pairs,
    theta_star,
    wiener_bfs,
    wiener_via_cuts,
)
from theta_lab.subdivision import subdivide


def test_triangle_all_pairs_related():
    assert set(theta_pairs(gen.complete_graph(3))) == {(0, 1), (0, 2), (1, 2)}


def test_tree_has_no_pairs():
    assert len(theta_pairs(gen.star_graph(4))) == 0
    assert len(theta_pairs(gen.path_graph(6))) == 0


def test_hexagon_antipodal_pairs_only():
    c6 = gen.cycle_graph(6)  # edge i joins i and i+1, edge 5 is (0, 5)
    pairs = {frozenset(c6.edges[e] + c6.edges[f]) for e, f in theta_pairs(c6)}
    assert pairs == {frozenset({0, 1, 3, 4}), frozenset({1, 2, 4, 5}), frozenset({2, 3, 0, 5})}


@pytest.mark.parametrize("name", sorted(corpus()))
def test_theta_pairs_match_definition(name):
    g = corpus()[name]
    assert set(theta_pairs(g)) == theta_pairs_naive(g.n, list(g.edges))


def test_theta_independent_of_endpoint_labelling():
    g = gen.petersen_graph()
    relabel = build_graph([(v, u) for u, v in g.edges[::-1]])
    ours = {frozenset((g.edges[e], g.edges[f])) for e, f in theta_pairs(g)}
    theirs = {frozenset((relabel.edges[e], relabel.edges[f])) for e, f in theta_pairs(relabel)}
    assert ours == theirs


def test_theta_star_examples():
    assert len(theta_star(gen.path_graph(5))) == 4
    assert theta_star(gen.cycle_graph(6)).sizes() == [2, 2, 2]
    k4 = theta_star(gen.complete_graph(4))
    assert len(k4) == 1 and k4.sizes() == [6]


@pytest.mark.parametrize("name", sorted(corpus()))
def test_theta_star_matches_oracle(name):
    g = corpus()[name]
    assert as_classes(theta_star(g)) == theta_star_naive(g.n, list(g.edges))


@pytest.mark.parametrize("name", sorted(corpus()))
def test_theta_star_canonical_numbering(name):
    part = theta_star(corpus()[name])
    firsts = [min(c) for c in part.classes]
    assert firsts == sorted(firsts)
    assert part.class_of[0] == 0


def test_witness_hexagon():
    c6 = gen.cycle_graph(6)
    w = bipartite_theta_witness(c6, c6.edge_id(0, 1), c6.edge_id(3, 4))
    assert (w.d_ux, w.d_vy, w.d_uy, w.d_vx) == (2, 2, 3, 3)


def test_witness_square():
    c4 = gen.cycle_graph(4)
    w = bipartite_theta_witness(c4, c4.edge_id(0, 1), c4.edge_id(2, 3))
    assert (w.d_ux, w.d_vy, w.d_uy, w.d_vx) == (1, 1, 2, 2)


def test_witness_errors():
    with pytest.raises(NotBipartite):
        bipartite_theta_witness(gen.complete_graph(3), 0, 1)
    c6 = gen.cycle_graph(6)
    with pytest.raises(NotInTheta):
        bipartite_theta_witness(c6, c6.edge_id(0, 1), c6.edge_id(1, 2))


@pytest.mark.parametrize("name", [k for k, g in sorted(corpus().items()) if is_bipartite(g)] + ["S(K4)"])
def test_witness_exists_for_every_bipartite_pair(name):
    g = subdivide(gen.complete_graph(4))[0] if name == "S(K4)" else corpus()[name]
    dm = all_pairs_distances(g)
    for e, f in theta_pairs(g):
        w = bipartite_theta_witness(g, e, f, dm)
        assert {w.x, w.y} == set(g.edges[e]) and {w.u, w.v} == set(g.edges[f])
        assert w.d_ux == w.d_vy == w.d_uy - 1 == w.d_vx - 1


def test_partial_cube_examples():
    assert is_partial_cube(gen.cycle_graph(6))
    assert is_partial_cube(subdivide(gen.complete_graph(4))[0])
    assert not is_partial_cube(gen.complete_graph(3))
    assert is_partial_cube(gen.hypercube_graph(3))
    assert not is_partial_cube(gen.complete_bipartite_graph(2, 3))


def test_wiener_bfs_examples():
    assert wiener_bfs(gen.path_graph(3)) == 4
    assert wiener_bfs(gen.cycle_graph(6)) == 27
    assert wiener_bfs(gen.complete_graph(4)) == 6


@pytest.mark.parametrize("name", sorted(corpus()))
def test_wiener_bfs_matches_oracle(name):
    g = corpus()[name]
    assert wiener_bfs(g) == wiener_naive(g.n, list(g.edges))


def test_wiener_cuts_examples():
    c6 = gen.cycle_graph(6)
    assert [(a, b) for _, a, b in cut_sizes(c6)] == [(3, 3)] * 3
    assert wiener_via_cuts(c6) == 27
    q3 = gen.hypercube_graph(3)
    assert sorted((min(a, b), max(a, b)) for _, a, b in cut_sizes(q3)) == [(4, 4)] * 3
    assert wiener_via_cuts(q3) == 48
    with pytest.raises(NotPartialCube):
        wiener_via_cuts(gen.complete_graph(3))


@pytest.mark.parametrize("name", sorted(corpus()))
def test_wiener_agreement_on_partial_cubes(name):
    g = corpus()[name]
    if is_partial_cube(g):
        assert wiener_via_cuts(g) == wiener_bfs(g)
    sg, _ = subdivide(g)
    if is_partial_cube(sg):
        assert wiener_via_cuts(sg) == wiener_bfs(sg)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_shortest_paths_have_no_related_edges(name):
    g = corpus()[name]
    dm = all_pairs_distances(g)
    pairs = set(theta_pairs(g, dm))
    rng = np.random.default_rng(7)
    for _ in range(50):
        u, v = (int(x) for x in rng.integers(g.n, size=2))
        path = random_shortest_path(g, dm, u, v, rng)
        assert len(path) == dm[u, v]
        for e, f in itertools.combinations(path, 2):
            assert (min(e, f), max(e, f)) not in pairs


@pytest.mark.parametrize("name", sorted(corpus()))
def test_theta_confined_to_blocks(name):
    g = corpus()[name]
    block_of = blocks(g).block_of_edge(g.m)
    for e, f in theta_pairs(g):
        assert block_of[e] == block_of[f]
    part = theta_star(g)
    for cls in part.classes:
        assert len({int(block_of[e]) for e in cls}) == 1


@pytest.mark.parametrize("name", sorted(corpus()))
def test_isometric_subgraph_restricts_theta(name):
    g = corpus()[name]
    dm = all_pairs_distances(g)
    full = theta_pairs(g, dm)
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(60):
        size = int(rng.integers(2, g.n + 1))
        subset = sorted(int(v) for v in rng.choice(g.n, size=size, replace=False))
        if not is_isometric_subgraph(g, subset, dm):
            continue
        h, old = g.induced_subgraph(subset)
        kept = [g.edge_id(old[a], old[b]) for a, b in h.edges]
        assert set(theta_pairs(h)) == set(full.restrict(kept))
        checked += 1
    assert checked > 0
