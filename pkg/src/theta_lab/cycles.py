"""Bounded cycle search, isometric cycles and isometrically touching pairs."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import all_pairs_distances, is_isometric_edge_subgraph
from .partition import Comparison, compare_partitions
from .relations import theta_star
from .reports import CheckReport
from .subdivision import halfedges_merged, lift_partition, subdivide

DEFAULT_MAX_LEN = 12


def canonical_cycle(vertices):
    """Rotate the smallest vertex first, then take the lexicographically smaller direction."""
    vs = list(vertices)
    k = vs.index(min(vs))
    fwd = vs[k:] + vs[:k]
    back = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, back))


@dataclass(frozen=True)
class CycleSubgraph:
    vertices: tuple
    edges: frozenset

    @classmethod
    def from_vertices(cls, g, vertices):
        vs = canonical_cycle(vertices)
        if len(set(vs)) != len(vs) or len(vs) < 3:
            raise ValueError(f"not a simple cycle: {vertices}")
        eids = frozenset(g.edge_id(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
        return cls(vs, eids)

    def __len__(self):
        return len(self.vertices)

    def edge_sequence(self, g):
        vs = self.vertices
        return [g.edge_id(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _paths_between(g, dist, start, target, banned_edge, exact_len):
    """Simple paths start -> target of exactly ``exact_len`` edges avoiding ``banned_edge``."""
    out = []
    path = [start]
    on_path = {start}
    stack = [iter(g.incident(start))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        w, eid = step
        if eid == banned_edge or w in on_path:
            continue
        used = len(path)  # edges after taking this step
        if w == target:
            if used == exact_len:
                out.append(list(path) + [w])
            continue
        if used + dist[w, target] > exact_len:
            continue
        path.append(w)
        on_path.add(w)
        stack.append(iter(g.incident(w)))
    return out


def cycles_through_edge_of_length(g, e, length, dm=None):
    dm = dm or all_pairs_distances(g)
    u, v = g.edges[e]
    found = {canonical_cycle(p) for p in _paths_between(g, dm.dist, v, u, e, length - 1)}
    return [CycleSubgraph.from_vertices(g, c) for c in sorted(found)]


def cycles_through_edge(g, e, max_len=DEFAULT_MAX_LEN, dm=None):
    """All simple cycles through edge ``e`` of length at most ``max_len``.

    Ordered by length, then by canonical vertex sequence.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    out = []
    for length in range(3, max_len + 1):
        out.extend(cycles_through_edge_of_length(g, e, length, dm))
    return out


def simple_cycles(g, max_len):
    """Every simple cycle of length at most ``max_len`` exactly once, canonical form."""
    found = []
    for s in range(g.n):
        # cycles whose smallest vertex is s
        path = [s]
        on_path = {s}
        stack = [iter(w for w in g.neighbors(s) if w > s)]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if w in on_path:
                continue
            if len(path) >= 2 and g.has_edge(w, s) and path[1] < w:
                found.append(tuple(path + [w]))
            if len(path) < max_len - 1:
                path.append(w)
                on_path.add(w)
                stack.append(iter(x for x in g.neighbors(w) if x > s))
    return sorted(found, key=lambda c: (len(c), c))


def is_isometric_cycle(g, cycle, dm=None):
    dm = dm or all_pairs_distances(g)
    vs = np.array(cycle.vertices)
    k = len(vs)
    idx = np.arange(k)
    gap = np.abs(idx[:, None] - idx[None, :])
    along = np.minimum(gap, k - gap)
    return bool(np.array_equal(dm.dist[np.ix_(vs, vs)], along))


def antipodal_pairs(g, cycle):
    """Antipodal edge pairs of an even cycle, as sorted edge-id pairs."""
    seq = cycle.edge_sequence(g)
    k = len(seq)
    if k % 2:
        return set()
    return {tuple(sorted((seq[i], seq[i + k // 2]))) for i in range(k // 2)}


@dataclass(frozen=True)
class TouchingPair:
    first: CycleSubgraph
    second: CycleSubgraph
    shared_edge: int


def is_touching_pair(g, c1, c2, dm=None):
    """Exactly one common edge and the union of both cycles is isometric."""
    if len(c1.edges & c2.edges) != 1:
        return False
    return is_isometric_edge_subgraph(g, c1.edges | c2.edges, dm)


def find_touching_pair_for_edge(g, e, max_len=DEFAULT_MAX_LEN, dm=None) -> Optional[TouchingPair]:
    """First isometrically touching pair sharing exactly ``e``, or None.

    Pairs are tried in order of their longer cycle, so the witness uses the
    shortest cycles possible.  None only means nothing was found up to
    ``max_len``.
    """
    dm = dm or all_pairs_distances(g)
    pool = []
    for length in range(3, max_len + 1):
        fresh = [c for c in cycles_through_edge_of_length(g, e, length, dm) if is_isometric_cycle(g, c, dm)]
        for c2 in fresh:
            pool.append(c2)
            for c1 in pool:
                if c1 is not c2 and c1.edges & c2.edges == {e} and is_touching_pair(g, c1, c2, dm):
                    return TouchingPair(c1, c2, e)
    return None


def touching_pairs_for_all_edges(g, max_len=DEFAULT_MAX_LEN):
    """``{edge id: TouchingPair or None}`` for every edge."""
    dm = all_pairs_distances(g)
    return {e: find_touching_pair_for_edge(g, e, max_len, dm) for e in range(g.m)}


def lemma34_check(g, pair, sub_part=None):
    """Both half edges of the shared edge fall in one Theta*_{S(G)} class."""
    sg, smap = subdivide(g)
    if sub_part is None:
        sub_part = theta_star(sg)
    ok = halfedges_merged(sub_part, smap, pair.shared_edge)
    witness = None if ok else {"edge": g.edges[pair.shared_edge]}
    return CheckReport("touching-cycles-merge", ok, witness=witness, details={
        "cycles": [list(pair.first.vertices), list(pair.second.vertices)],
        "edge": g.edges[pair.shared_edge]})


def touching_hypothesis_report(g, max_len=DEFAULT_MAX_LEN):
    """Whether every edge lies in two isometrically touching cycles, up to ``max_len``."""
    found = touching_pairs_for_all_edges(g, max_len)
    missing = [e for e, p in found.items() if p is None]
    ok = not missing
    note = f"hypothesis confirmed up to L={max_len}" if ok else f"hypothesis not confirmed up to L={max_len}"
    witness = None if ok else {"edge": g.edges[missing[0]], "missing_edges": len(missing)}
    return CheckReport("touching-hypothesis", ok, witness=witness, note=note,
                       details={"edges": g.m, "max_len": max_len}), found


def touching_cycles_check(g, max_len=DEFAULT_MAX_LEN):
    """If every edge has an isometrically touching pair, Theta*_{S(G)} must equal the lift.

    Not applicable when the bounded search misses some edge.
    """
    hypothesis, found = touching_hypothesis_report(g, max_len)
    if not hypothesis.passed:
        rep = CheckReport.not_applicable("touching-cycles", hypothesis.note)
        rep.details = dict(hypothesis.details, missing_edges=hypothesis.witness["missing_edges"])
        return rep
    sg, smap = subdivide(g)
    sub_part = theta_star(sg)
    unmerged = [e for e in range(g.m) if not halfedges_merged(sub_part, smap, e)]
    verdict = compare_partitions(sub_part, lift_partition(g, theta_star(g), smap))
    ok = not unmerged and verdict is Comparison.EQUAL
    witness = None
    if unmerged:
        pair = found[unmerged[0]]
        witness = {"kind": "touching pair without merged half edges", "edge": g.edges[unmerged[0]],
                   "cycles": [list(pair.first.vertices), list(pair.second.vertices)]}
    elif not ok:
        witness = {"comparison": verdict.value}
    return CheckReport("touching-cycles", ok, witness=witness, note=hypothesis.note,
                       details={"max_len": max_len, "comparison": verdict.value, "sub_classes": len(sub_part)})
