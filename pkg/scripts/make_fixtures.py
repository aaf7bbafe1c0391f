"""Regenerate the bundled fixtures under src/theta_lab/data/.

Needs networkx (planar embeddings, graph atlas).  The library itself never
imports networkx; the files written here are plain text.

    python scripts/make_fixtures.py
"""

from collections import deque
from itertools import combinations
from pathlib import Path

import networkx as nx

from theta_lab.generators import diamond_graph, hypercube_graph, plane_k4, random_2connected_chordal, stacked_triangulation
from theta_lab.graph import build_graph
from theta_lab.io import serialize_graph
from theta_lab.planar import trace_faces, validate_fullerene, validate_triangulation

DATA = Path(__file__).resolve().parents[1] / "src" / "theta_lab" / "data"

APOLLONIAN = {"apollonian_1": (8, 1), "apollonian_2": (11, 2), "apollonian_3": (14, 3)}
CHORDAL = {"chordal_1": (8, 1), "chordal_2": (10, 2), "chordal_3": (12, 3)}


def nx_rotation(G):
    ok, emb = nx.check_planarity(G)
    assert ok
    return tuple(tuple(emb.neighbors_cw_order(v)) for v in range(G.number_of_nodes()))


def from_nx(G):
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    g = build_graph(sorted(tuple(sorted(e)) for e in G.edges()), n=G.number_of_nodes())
    return g, nx_rotation(G)


def nx_faces(G):
    ok, emb = nx.check_planarity(G)
    assert ok
    seen, faces = set(), []
    for u, v in emb.edges():
        if (u, v) not in seen:
            faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return faces


def windup(spiral):
    """Dual triangulation adjacency from a face spiral, or None if it does not close."""
    F = len(spiral)
    adj = [set() for _ in range(F)]
    val = list(spiral)

    def connect(i, j):
        if i == j or j in adj[i]:
            raise ValueError
        adj[i].add(j)
        adj[j].add(i)
        val[i] -= 1
        val[j] -= 1

    try:
        connect(0, 1)
        ring = deque([0, 1])
        for i in range(2, F - 1):
            connect(i, ring[-1])
            connect(i, ring[0])
            while val[ring[0]] == 0:
                ring.popleft()
                connect(i, ring[0])
            while val[ring[-1]] == 0:
                ring.pop()
                connect(i, ring[-1])
            if val[i] <= 0:
                return None
            ring.append(i)
        last = F - 1
        if len(ring) != spiral[last]:
            return None
        for j in ring:
            connect(last, j)
    except (ValueError, IndexError):
        return None
    if any(val):
        return None
    return adj


def fullerene_from_spiral(spiral):
    adj = windup(spiral)
    if adj is None:
        return None
    D = nx.Graph()
    D.add_edges_from((i, j) for i in range(len(adj)) for j in adj[i] if i < j)
    if not nx.check_planarity(D)[0]:
        return None
    tris = [frozenset(f) for f in nx_faces(D)]
    if any(len(t) != 3 for t in tris):
        return None
    index = {t: k for k, t in enumerate(tris)}
    G = nx.Graph()
    G.add_nodes_from(range(len(tris)))
    for a, b in D.edges():
        both = [index[t] for t in tris if a in t and b in t]
        if len(both) != 2:
            return None
        G.add_edge(*both)
    return G


def first_fullerene(n):
    faces = n // 2 + 2
    for pent in combinations(range(faces), 12):
        spiral = [6] * faces
        for p in pent:
            spiral[p] = 5
        G = fullerene_from_spiral(spiral)
        if G is not None and G.number_of_nodes() == n:
            g, rot = from_nx(G)
            if validate_fullerene(g, trace_faces(g, rot)).accepted:
                return g, rot
    raise RuntimeError(f"no spiral fullerene on {n} vertices")


def capped_tube(layers, ring=5):
    """Zigzag (ring,0) tube capped by two ring-gons; ``layers`` odd, 20 atoms per 4 layers for ring=5."""
    G = nx.Graph()

    def v(layer, i):
        return layer * ring + i % ring

    for i in range(ring):
        G.add_edge(v(0, i), v(0, i + 1))
        G.add_edge(v(layers, i), v(layers, i + 1))
    for j in range(1, layers + 1):
        for i in range(ring):
            if j % 2:
                G.add_edge(v(j, i), v(j - 1, i))
            else:
                G.add_edge(v(j, i), v(j - 1, i))
                G.add_edge(v(j, i), v(j - 1, i + 1))
    return G


def truncate(G):
    """Truncation of a plane graph: one vertex per dart."""
    ok, emb = nx.check_planarity(G)
    assert ok
    T = nx.Graph()
    for u in G.nodes():
        order = list(emb.neighbors_cw_order(u))
        for k, w in enumerate(order):
            T.add_edge((u, w), (u, order[(k + 1) % len(order)]))
            T.add_edge((u, w), (w, u))
    return T


def small_graph_lines():
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 3 <= n <= 7 and nx.is_connected(G):
            out.append(f"{n}: " + " ".join(f"{min(e)}-{max(e)}" for e in sorted(G.edges())))
    return out


def write(name, g, rotation=None):
    (DATA / f"{name}.graph").write_text(serialize_graph(g, rotation))
    print(f"{name}: n={g.n} m={g.m}")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    g, rot = plane_k4()
    write("k4", g, rot)
    write("diamond", diamond_graph())
    for name, G in [("octahedron", nx.octahedral_graph()), ("icosahedron", nx.icosahedral_graph())]:
        g, rot = from_nx(G)
        assert validate_triangulation(g, trace_faces(g, rot))
        write(name, g, rot)
    q3 = hypercube_graph(3)
    Q = nx.Graph(list(q3.edges))
    write("q3", q3, nx_rotation(Q))

    write("c20", *from_nx(nx.dodecahedral_graph()))
    for n in (24, 26, 28):
        write(f"c{n}", *first_fullerene(n))
    write("c40_tube", *from_nx(capped_tube(7)))
    write("c60", *from_nx(truncate(nx.icosahedral_graph())))

    for name, (n, seed) in APOLLONIAN.items():
        write(name, *stacked_triangulation(n, seed))
    for name, (n, seed) in CHORDAL.items():
        write(name, random_2connected_chordal(n, seed))

    lines = small_graph_lines()
    (DATA / "small_graphs.txt").write_text(
        "# connected graphs on 3..7 vertices up to isomorphism, one per line: n: u-v ...\n"
        + "\n".join(lines) + "\n")
    print(f"small graphs: {len(lines)}")


if __name__ == "__main__":
    main()
