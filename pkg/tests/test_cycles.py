import itertools

import networkx as nx
import pytest

from oracles import to_nx
from conftest import corpus

from theta_lab import fixtures
from theta_lab import generators as gen
from theta_lab.cycles import (
    CycleSubgraph,
    antipodal_pairs,
    canonical_cycle,
    cycles_through_edge,
    find_touching_pair_for_edge,
    is_isometric_cycle,
    is_touching_pair,
    lemma34_check,
    simple_cycles,
    touching_cycles_check,
    touching_hypothesis_report,
)
from theta_lab.graph import all_pairs_distances, is_bipartite, is_isometric_subgraph
from theta_lab.relations import theta_pairs


def test_canonical_form():
    assert canonical_cycle([3, 1, 2]) == (1, 2, 3)
    assert canonical_cycle([2, 0, 1, 5]) == (0, 1, 5, 2)
    assert canonical_cycle((0, 5, 1, 2)) == (0, 2, 1, 5)


def test_cycle_rejects_repeats():
    with pytest.raises(ValueError):
        CycleSubgraph.from_vertices(gen.complete_graph(4), [0, 1, 0])


def test_cycles_through_edge_examples():
    k3 = gen.complete_graph(3)
    assert [c.vertices for c in cycles_through_edge(k3, 0, 3)] == [(0, 1, 2)]
    c6 = gen.cycle_graph(6)
    assert [len(c) for c in cycles_through_edge(c6, 2, 6)] == [6]
    k4 = gen.complete_graph(4)
    # K4 has three 4-cycles and each edge lies on two of them
    assert sorted(len(c) for c in cycles_through_edge(k4, 0, 4)) == [3, 3, 4, 4]
    with pytest.raises(ValueError):
        cycles_through_edge(k4, 0, 2)


@pytest.mark.parametrize("name", ["K4", "K5", "Q3", "petersen", "diamond", "K23", "octahedron"])
def test_cycle_enumeration_matches_networkx(name):
    g = corpus()[name]
    limit = 7
    theirs = {canonical_cycle(c) for c in nx.simple_cycles(to_nx(g), length_bound=limit) if len(c) >= 3}
    assert set(simple_cycles(g, limit)) == theirs
    for e in range(g.m):
        through = {c.vertices for c in cycles_through_edge(g, e, limit)}
        assert through == {c for c in theirs if e in CycleSubgraph.from_vertices(g, c).edges}


def test_isometric_cycle_examples():
    c20, _ = fixtures.load_embedded("c20")
    _, emb = fixtures.load_embedded("c20")
    face = CycleSubgraph.from_vertices(c20, emb.faces[0])
    assert len(face) == 5 and is_isometric_cycle(c20, face)
    k4 = gen.complete_graph(4)
    assert not is_isometric_cycle(k4, CycleSubgraph.from_vertices(k4, [0, 1, 2, 3]))
    assert is_isometric_cycle(k4, CycleSubgraph.from_vertices(k4, [0, 1, 2]))


@pytest.mark.parametrize("name", sorted(corpus()))
def test_isometric_cycle_matches_subgraph_oracle(name):
    g = corpus()[name]
    dm = all_pairs_distances(g)
    for vs in simple_cycles(g, 6)[:60]:
        c = CycleSubgraph.from_vertices(g, vs)
        # an isometric cycle is induced, so the vertex-subset predicate must agree
        induced_is_cycle = g.induced_subgraph(vs)[0].m == len(vs)
        assert is_isometric_cycle(g, c, dm) == (induced_is_cycle and is_isometric_subgraph(g, vs, dm))


def _face_cycle(g, emb, k):
    return CycleSubgraph.from_vertices(g, emb.faces[k])


def test_touching_pair_examples():
    octa, emb = fixtures.load_embedded("octahedron")
    shared = next((i, j) for i, j in itertools.combinations(range(emb.face_count), 2)
                  if len(set(emb.face_edges[i]) & set(emb.face_edges[j])) == 1)
    assert is_touching_pair(octa, _face_cycle(octa, emb, shared[0]), _face_cycle(octa, emb, shared[1]))

    k4 = gen.complete_graph(4)
    assert not is_touching_pair(k4, CycleSubgraph.from_vertices(k4, [0, 1, 2]),
                                CycleSubgraph.from_vertices(k4, [0, 1, 3]))

    c60, emb60 = fixtures.load_embedded("c60")
    hexes = [k for k, f in enumerate(emb60.faces) if len(f) == 6]
    i, j = next((i, j) for i, j in itertools.combinations(hexes, 2)
                if len(set(emb60.face_edges[i]) & set(emb60.face_edges[j])) == 1)
    assert is_touching_pair(c60, _face_cycle(c60, emb60, i), _face_cycle(c60, emb60, j))


def test_find_touching_pair_examples():
    octa = fixtures.load("octahedron")[0]
    for e in range(octa.m):
        pair = find_touching_pair_for_edge(octa, e, 6)
        assert pair is not None and len(pair.first) == len(pair.second) == 3
    assert find_touching_pair_for_edge(gen.star_graph(3), 0, 12) is None
    c60 = fixtures.load("c60")[0]
    dm = all_pairs_distances(c60)
    for e in range(0, c60.m, 7):
        pair = find_touching_pair_for_edge(c60, e, 6, dm)
        assert pair is not None and pair.first.edges & pair.second.edges == {e}


@pytest.mark.parametrize("name", ["octahedron", "icosahedron", "Q3", "K4", "apollonian_1"])
def test_touching_pairs_are_isometric_cycles(name):
    g = corpus()[name]
    dm = all_pairs_distances(g)
    for e in range(g.m):
        pair = find_touching_pair_for_edge(g, e, 6, dm)
        if pair is None:
            continue
        assert is_touching_pair(g, pair.first, pair.second, dm)
        assert is_isometric_cycle(g, pair.first, dm) and is_isometric_cycle(g, pair.second, dm)


def test_lemma34_examples():
    octa = fixtures.load("octahedron")[0]
    assert lemma34_check(octa, find_touching_pair_for_edge(octa, 0, 6))
    c60 = fixtures.load("c60")[0]
    assert lemma34_check(c60, find_touching_pair_for_edge(c60, 0, 6))
    q3 = gen.hypercube_graph(3)
    pair = find_touching_pair_for_edge(q3, 0, 4)
    assert len(pair.first) == len(pair.second) == 4
    assert lemma34_check(q3, pair)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_antipodal_pairing_on_bipartite_isometric_cycles(name):
    g = corpus()[name]
    if not is_bipartite(g):
        pytest.skip("bipartite graphs only")
    dm = all_pairs_distances(g)
    pairs = theta_pairs(g, dm)
    for vs in simple_cycles(g, 8):
        c = CycleSubgraph.from_vertices(g, vs)
        if is_isometric_cycle(g, c, dm):
            inside = {p for p in pairs if p[0] in c.edges and p[1] in c.edges}
            assert inside == antipodal_pairs(g, c)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_touching_hypothesis_implies_equality(name):
    g = corpus()[name]
    rep = touching_cycles_check(g, 6)
    assert rep.passed
    hyp, _ = touching_hypothesis_report(g, 6)
    assert rep.applicable == hyp.passed
