"""Plane graphs given by rotation systems: faces, fullerenes, triangulations.

Planarity is never tested here.  Callers supply a rotation (cyclic
neighbour order per vertex) and the face count is checked against Euler's
formula.
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cycles import simple_cycles
from .errors import ConsistencyError, EulerViolation, NotFullerene, NotTriangulation
from .graph import vertex_components
from .partition import Comparison, EdgePartition, EdgeRelationPairs, compare_partitions
from .relations import theta_matrix, theta_star
from .reports import CheckReport
from .subdivision import lift_partition, subdivide


@dataclass(frozen=True)
class PlanarEmbedding:
    rotation: tuple       # rotation[v]: neighbours of v in cyclic order
    faces: tuple          # facial walks as vertex sequences
    face_edges: tuple     # the same walks as edge-id sequences

    @property
    def face_count(self):
        return len(self.faces)

    def face_lengths(self):
        return [len(f) for f in self.face_edges]

    def faces_at_vertex(self, v):
        return [k for k, f in enumerate(self.faces) if v in f]

    def faces_at_edge(self, eid):
        return [k for k, f in enumerate(self.face_edges) if eid in f]


def check_rotation(g, rotation):
    if len(rotation) != g.n:
        raise ConsistencyError(f"rotation has {len(rotation)} rows for {g.n} vertices")
    for v, row in enumerate(rotation):
        if len(row) != len(set(row)) or set(row) != set(g.neighbors(v)):
            raise ConsistencyError(
                f"rotation of vertex {v} is {list(row)}, neighbours are {list(g.neighbors(v))}")


def trace_faces(g, rotation):
    """Facial walks of the rotation system; raises EulerViolation if not planar."""
    rotation = tuple(tuple(int(w) for w in row) for row in rotation)
    check_rotation(g, rotation)
    pos = [{w: k for k, w in enumerate(row)} for row in rotation]
    seen = set()
    faces, face_edges = [], []
    darts = sorted([(x, y) for x, y in g.edges] + [(y, x) for x, y in g.edges])
    for u, v in darts:
        if (u, v) in seen:
            continue
        walk, eids = [], []
        a, b = u, v
        while (a, b) not in seen:
            seen.add((a, b))
            walk.append(a)
            eids.append(g.edge_id(a, b))
            row = rotation[b]
            a, b = b, row[(pos[b][a] + 1) % len(row)]
        faces.append(tuple(walk))
        face_edges.append(tuple(eids))
    if g.n - g.m + len(faces) != 2:
        raise EulerViolation(
            f"n - m + f = {g.n} - {g.m} + {len(faces)} != 2; rotation is not a plane embedding")
    return PlanarEmbedding(rotation, tuple(faces), tuple(face_edges))


def rotation_from_faces(n, faces):
    """Rotation system whose traced faces are the given oriented faces.

    A face ``(..., a, b, c, ...)`` means ``c`` follows ``a`` around ``b``.
    """
    succ = [dict() for _ in range(n)]
    for f in faces:
        k = len(f)
        for i in range(k):
            a, b, c = f[i - 1], f[i], f[(i + 1) % k]
            succ[b][a] = c
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append(())
            continue
        start = min(succ[v])
        row = [start]
        while succ[v][row[-1]] != start:
            row.append(succ[v][row[-1]])
        if len(row) != len(succ[v]):
            raise ConsistencyError(f"faces around vertex {v} do not close up into one cycle")
        rotation.append(tuple(row))
    return tuple(rotation)


def subdivision_rotation(g, rotation):
    """Rotation system of S(G) induced by one of G."""
    rows = [tuple(g.n + g.edge_id(v, w) for w in rotation[v]) for v in range(g.n)]
    rows.extend(g.edges)
    return tuple(rows)


# ---------------------------------------------------------------------------
# fullerenes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FullereneCheck:
    is_cubic: bool
    face_lengths: tuple   # sorted multiset
    pentagon_count: int
    hexagon_count: int
    accepted: bool

    def __bool__(self):
        return self.accepted

    def to_dict(self):
        return {"is_cubic": self.is_cubic, "face_lengths": dict(Counter(self.face_lengths)),
                "pentagon_count": self.pentagon_count, "hexagon_count": self.hexagon_count,
                "accepted": self.accepted}


def validate_fullerene(g, emb):
    lengths = tuple(sorted(emb.face_lengths()))
    cubic = bool((g.degrees == 3).all()) and g.n > 0
    counts = Counter(lengths)
    accepted = cubic and set(counts) <= {5, 6}
    check = FullereneCheck(cubic, lengths, counts[5], counts[6], accepted)
    if accepted and check.pentagon_count != 12:
        # Euler's formula forces 12 pentagons for every cubic 5/6-faced plane graph
        raise AssertionError(f"accepted fullerene with {check.pentagon_count} pentagons")
    return check


def _require_fullerene(g, emb):
    check = validate_fullerene(g, emb)
    if not check.accepted:
        raise NotFullerene(f"not a fullerene: cubic={check.is_cubic}, "
                           f"face lengths {dict(Counter(check.face_lengths))}")
    return check


def phi_relation(g, emb):
    """Opposite edges of every hexagonal face."""
    _require_fullerene(g, emb)
    pairs = []
    for seq in emb.face_edges:
        if len(seq) == 6:
            pairs.extend((seq[k], seq[k + 3]) for k in range(3))
    return EdgeRelationPairs(g.m, pairs)


def phi_bar_relation(g, emb):
    """Phi plus every non-incident edge pair of a pentagonal face."""
    _require_fullerene(g, emb)
    pairs = []
    for seq in emb.face_edges:
        if len(seq) == 6:
            pairs.extend((seq[k], seq[k + 3]) for k in range(3))
        elif len(seq) == 5:
            pairs.extend((seq[k], seq[(k + 2) % 5]) for k in range(5))
    return EdgeRelationPairs(g.m, pairs)


@dataclass(frozen=True)
class Railroad:
    edges: tuple   # in order along the railroad
    shape: str     # "path" or "cycle"

    def __len__(self):
        return len(self.edges)


def railroads(g, emb):
    """Connected components of the Phi graph on edges, each a path or a cycle."""
    phi = phi_relation(g, emb)
    nbrs = [[] for _ in range(g.m)]
    for e, f in phi.pairs:
        nbrs[e].append(f)
        nbrs[f].append(e)
    if any(len(x) > 2 for x in nbrs):
        raise AssertionError("an edge has more than two Phi partners")
    done = [False] * g.m
    out = []
    for start in range(g.m):
        if done[start]:
            continue
        # collect component, then walk it from an end (path) or its smallest edge (cycle)
        comp, stack = [], [start]
        done[start] = True
        while stack:
            e = stack.pop()
            comp.append(e)
            for f in nbrs[e]:
                if not done[f]:
                    done[f] = True
                    stack.append(f)
        ends = sorted(e for e in comp if len(nbrs[e]) < 2)
        shape = "path" if ends else "cycle"
        first = ends[0] if ends else min(comp)
        order, prev, cur = [first], None, first
        while True:
            nxt = [f for f in sorted(nbrs[cur]) if f != prev and f != first]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        out.append(Railroad(tuple(order), shape))
    return out


def separating_cycle_scan(g, emb, max_len=9):
    """Enumerate cycles up to ``max_len`` and classify the separating ones.

    Passes iff no separating cycle is shorter than 9 and every separating
    9-cycle cuts off a single vertex all of whose faces are pentagons.
    """
    face_len = {}
    for k, walk in enumerate(emb.faces):
        for v in walk:
            face_len.setdefault(v, []).append(len(walk))
    all_pent = sorted(v for v, ls in face_len.items() if len(ls) == 3 and all(x == 5 for x in ls))
    pent_set = set(all_pent)

    counts = Counter()
    separating = Counter()
    isolated = []
    failure = None
    everything = np.arange(g.n)
    for cyc in simple_cycles(g, max_len):
        counts[len(cyc)] += 1
        keep = np.setdiff1d(everything, cyc)
        if keep.size == 0:
            continue
        sub, old = g.induced_subgraph(keep.tolist())
        comp = vertex_components(sub)
        if comp.max() == 0:
            continue
        separating[len(cyc)] += 1
        sizes = np.bincount(comp)
        if len(cyc) < 9:
            failure = failure or {"kind": "short separating cycle", "cycle": list(cyc)}
            continue
        if len(cyc) == 9:
            small = np.flatnonzero(sizes == 1)
            lone = [old[int(np.flatnonzero(comp == c)[0])] for c in small]
            good = [v for v in lone if v in pent_set]
            if len(sizes) != 2 or not good:
                if failure is None:
                    failure = {"kind": "separating 9-cycle not around a pentagon-only vertex",
                               "cycle": list(cyc), "component_sizes": sizes.tolist()}
                continue
            isolated.append(good[0])
    details = {
        "max_len": max_len,
        "cycles_by_length": dict(sorted(counts.items())),
        "separating_by_length": dict(sorted(separating.items())),
        "isolated_vertices": sorted(isolated),
        "pentagon_only_vertices": all_pent,
    }
    return CheckReport("separating-cycles", failure is None, witness=failure, details=details)


def verify_theorem_fullerene(g, emb):
    """Theta*_{S(G)} equals the lift of Theta*_G."""
    _require_fullerene(g, emb)
    sg, smap = subdivide(g)
    sub_part = theta_star(sg)
    lifted = lift_partition(g, theta_star(g), smap)
    verdict = compare_partitions(sub_part, lifted)
    ok = verdict is Comparison.EQUAL
    return CheckReport("fullerene-subdivision", ok, witness=None if ok else {"comparison": verdict.value},
                       details={"sub_classes": len(sub_part), "lifted_classes": len(lifted),
                                "comparison": verdict.value})


def phi_bar_refines_theta_star(g, emb):
    """Phi-bar is inside Theta_G, and its closure refines (or equals) Theta*_G."""
    phib = phi_bar_relation(g, emb)
    tmat = theta_matrix(g)
    outside = [(e, f) for e, f in sorted(phib.pairs) if not tmat[e, f]]
    closure = phib.closure()
    tstar = theta_star(g)
    verdict = compare_partitions(closure, tstar)
    ok = not outside and verdict in (Comparison.EQUAL, Comparison.P1_REFINES_P2)
    witness = None
    if outside:
        witness = {"kind": "Phi-bar pair not in Theta", "e": g.edges[outside[0][0]], "f": g.edges[outside[0][1]]}
    elif not ok:
        witness = {"comparison": verdict.value}
    return CheckReport("phi-bar-refinement", ok, witness=witness, details={
        "phi_bar_pairs": len(phib), "phi_bar_classes": len(closure), "theta_star_classes": len(tstar),
        "equal": verdict is Comparison.EQUAL})


# ---------------------------------------------------------------------------
# plane triangulations
# ---------------------------------------------------------------------------

def validate_triangulation(g, emb):
    return g.n >= 4 and all(len(f) == 3 for f in emb.face_edges)


def expected_triangulation_partition(g, emb):
    """Predicted Theta*_{S(G)}: one class per degree-3 vertex plus one global class.

    The class of a degree-3 vertex ``x`` holds, for each neighbour ``y``, the
    half edge of ``xy`` at ``y``.  For K4 these classes cover everything.
    """
    if not validate_triangulation(g, emb):
        raise NotTriangulation("not a plane triangulation")
    _, smap = subdivide(g)
    labels = np.full(2 * g.m, -1, dtype=np.int64)
    for x in range(g.n):
        if g.degree(x) != 3:
            continue
        for y, eid in g.incident(x):
            labels[smap.half_edge(eid, y)] = x
    labels[labels < 0] = g.n  # the global class
    return EdgePartition(labels)


def verify_theorem_triangulation(g, emb):
    if not validate_triangulation(g, emb):
        raise NotTriangulation("not a plane triangulation")
    tstar = theta_star(g)
    sg, _ = subdivide(g)
    brute = theta_star(sg)
    predicted = expected_triangulation_partition(g, emb)
    single = len(tstar) == 1
    match = brute == predicted
    witness = None
    if not single:
        witness = {"kind": "Theta*_G has several classes", "classes": len(tstar)}
    elif not match:
        witness = {"kind": "prediction differs", "comparison": compare_partitions(brute, predicted).value}
    degree3 = [x for x in range(g.n) if g.degree(x) == 3]
    return CheckReport("triangulation-subdivision", single and match, witness=witness, details={
        "theta_star_G_classes": len(tstar), "sub_classes": len(brute), "predicted_classes": len(predicted),
        "degree3_vertices": degree3})
