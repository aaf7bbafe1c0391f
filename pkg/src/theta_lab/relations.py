"""The Djokovic-Winkler relation, its closure, partial cubes and the Wiener index."""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ClassRemovalNotTwoComponents, NotBipartite, NotInTheta, NotPartialCube
from .graph import all_pairs_distances, is_bipartite, vertex_components
from .partition import EdgePartition, EdgeRelationPairs


def theta_matrix(g, dm=None):
    """Boolean m x m matrix of Theta (reflexive diagonal included)."""
    dm = dm or all_pairs_distances(g)
    arr = g.edge_array
    return kernels.theta_matrix(dm.dist, arr[:, 0], arr[:, 1])


def theta_pairs(g, dm=None):
    """All unordered pairs of distinct edges in relation Theta."""
    return EdgeRelationPairs.from_matrix(theta_matrix(g, dm))


def is_theta(g, e, f, dm=None):
    dm = dm or all_pairs_distances(g)
    (x, y), (u, v) = g.edges[e], g.edges[f]
    d = dm.dist
    return bool(d[x, u] + d[y, v] != d[x, v] + d[y, u])


def _closure_of_matrix(mat):
    i, j = np.nonzero(np.triu(mat, k=1))
    return EdgePartition(kernels.closure_labels(mat.shape[0], i, j))


def theta_star(g, dm=None):
    """Theta* classes of ``g``, numbered by smallest edge id."""
    return _closure_of_matrix(theta_matrix(g, dm))


@dataclass(frozen=True)
class BipartiteThetaWitness:
    """Edges oriented as ``e = (x, y)``, ``f = (u, v)`` with
    ``d(u,x) = d(v,y) = d(u,y) - 1 = d(v,x) - 1``."""

    x: int
    y: int
    u: int
    v: int
    d_ux: int
    d_vy: int
    d_uy: int
    d_vx: int


def bipartite_theta_witness(g, e, f, dm=None):
    if not is_bipartite(g):
        raise NotBipartite("Theta witness pattern needs a bipartite graph")
    if e == f:
        raise NotInTheta("witness needs two distinct edges")
    dm = dm or all_pairs_distances(g)
    if not is_theta(g, e, f, dm):
        raise NotInTheta(f"edges {g.edges[e]} and {g.edges[f]} are not in relation Theta")
    d = dm.dist
    a, b = g.edges[e]
    for x, y in ((a, b), (b, a)):
        for u, v in (g.edges[f], g.edges[f][::-1]):
            dux, dvy, duy, dvx = int(d[u, x]), int(d[v, y]), int(d[u, y]), int(d[v, x])
            if dux == dvy == duy - 1 == dvx - 1:
                return BipartiteThetaWitness(x, y, u, v, dux, dvy, duy, dvx)
    # cannot happen in a bipartite graph
    raise AssertionError(f"no orientation realises the bipartite pattern for {g.edges[e]}, {g.edges[f]}")


def is_partial_cube(g, dm=None):
    """Bipartite and Theta already transitive."""
    if not is_bipartite(g):
        return False
    mat = theta_matrix(g, dm)
    part = _closure_of_matrix(mat)
    same = part.class_of[:, None] == part.class_of[None, :]
    return not bool((same & ~mat).any())


def wiener_bfs(g, dm=None):
    dm = dm or all_pairs_distances(g)
    return int(dm.dist.astype(np.int64).sum() // 2)


def cut_sizes(g, dm=None):
    """``(class, n1, n2)`` for every Theta class of a partial cube."""
    if not is_partial_cube(g, dm):
        raise NotPartialCube("the cut method needs a partial cube")
    part = theta_star(g, dm)
    out = []
    everything = np.arange(g.m)
    for k, cls in enumerate(part.classes):
        keep = everything[part.class_of != k]
        comp = vertex_components(g, keep)
        if comp.max() != 1:
            raise ClassRemovalNotTwoComponents(
                f"removing class {k} ({len(cls)} edges) leaves {int(comp.max()) + 1} components")
        n1 = int((comp == 0).sum())
        out.append((k, n1, g.n - n1))
    return out


def wiener_via_cuts(g, dm=None):
    """Wiener index of a partial cube as the sum of ``n1 * n2`` over Theta classes."""
    return sum(n1 * n2 for _, n1, n2 in cut_sizes(g, dm))
