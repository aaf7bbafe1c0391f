"""Small named graphs and seeded random families used by tests and fixtures."""

from itertools import combinations

import numpy as np

from .graph import build_graph, is_two_connected
from .planar import rotation_from_faces


def path_graph(n):
    return build_graph([(i, i + 1) for i in range(n - 1)], n=n)


def cycle_graph(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)], n=n)


def complete_graph(n):
    return build_graph(combinations(range(n), 2), n=n)


def star_graph(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def hypercube_graph(d):
    return build_graph([(v, v ^ (1 << k)) for v in range(1 << d) for k in range(d) if v < v ^ (1 << k)],
                       n=1 << d)


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(outer + spokes + inner)


def diamond_graph():
    """K4 minus the edge {0, 3}: triangles 012 and 123."""
    return build_graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def complete_bipartite_graph(p, q):
    return build_graph([(i, p + j) for i in range(p) for j in range(q)], n=p + q)


K4_FACES = ((0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2))


def plane_k4():
    g = complete_graph(4)
    return g, rotation_from_faces(4, K4_FACES)


def stacked_triangulation(n, seed):
    """Apollonian network on ``n >= 4`` vertices: stack into random faces of K4.

    Returns ``(graph, rotation)``.  Faces are kept consistently oriented so
    the rotation is read off them directly.
    """
    if n < 4:
        raise ValueError("stacked triangulations start at K4")
    rng = np.random.default_rng(seed)
    faces = [tuple(f) for f in K4_FACES]
    edges = list(combinations(range(4), 2))
    for v in range(4, n):
        a, b, c = faces.pop(int(rng.integers(len(faces))))
        faces.extend([(a, b, v), (b, c, v), (c, a, v)])
        edges.extend([(a, v), (b, v), (c, v)])
    g = build_graph(edges, n=n)
    return g, rotation_from_faces(n, faces)


def random_chordal(n, seed, start_clique=3):
    """Clique-tree growth: each new vertex joins a random subset of a maximal clique."""
    rng = np.random.default_rng(seed)
    k = min(start_clique, n)
    edges = list(combinations(range(k), 2))
    cliques = [set(range(k))]
    for v in range(k, n):
        idx = int(rng.integers(len(cliques)))
        base = sorted(cliques[idx])
        size = int(rng.integers(1, len(base) + 1))
        chosen = sorted(int(x) for x in rng.choice(base, size=size, replace=False))
        edges.extend((u, v) for u in chosen)
        if len(chosen) == len(base):
            cliques[idx] = set(chosen) | {v}
        else:
            cliques.append(set(chosen) | {v})
    return build_graph(edges, n=n)


def random_2connected_chordal(n, seed, start_clique=3, attempts=1000):
    """First 2-connected graph from ``random_chordal`` over seeds derived from ``seed``."""
    for k in range(attempts):
        g = random_chordal(n, (seed, k), start_clique)
        if is_two_connected(g):
            return g
    raise RuntimeError(f"no 2-connected chordal graph after {attempts} attempts")
