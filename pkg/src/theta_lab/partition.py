"""Edge relations, edge partitions and their lattice comparison."""

import enum

import numpy as np

from . import kernels
from .errors import GroundSetMismatch


class EdgeRelationPairs:
    """Symmetric irreflexive relation on edge ids ``0..m-1``.

    ``pairs`` is a frozenset of ``(e, f)`` tuples with ``e < f``.
    """

    __slots__ = ("m", "pairs")

    def __init__(self, m, pairs):
        self.m = int(m)
        norm = set()
        for e, f in pairs:
            e, f = int(e), int(f)
            if e == f:
                continue
            if not (0 <= e < m and 0 <= f < m):
                raise ValueError(f"edge pair ({e}, {f}) outside 0..{m - 1}")
            norm.add((e, f) if e < f else (f, e))
        self.pairs = frozenset(norm)

    @classmethod
    def from_matrix(cls, mat):
        i, j = np.nonzero(np.triu(mat, k=1))
        return cls(mat.shape[0], zip(i.tolist(), j.tolist()))

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, pair):
        e, f = pair
        return (e, f) in self.pairs or (f, e) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __eq__(self, other):
        return isinstance(other, EdgeRelationPairs) and self.m == other.m and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.m, self.pairs))

    def __repr__(self):
        return f"EdgeRelationPairs(m={self.m}, pairs={len(self.pairs)})"

    def issubset(self, other):
        return self.pairs <= other.pairs

    def restrict(self, edge_ids):
        """Pairs with both ends in ``edge_ids``, renumbered by sorted position."""
        ids = sorted(edge_ids)
        pos = {e: k for k, e in enumerate(ids)}
        return EdgeRelationPairs(len(ids), ((pos[e], pos[f]) for e, f in self.pairs if e in pos and f in pos))

    def closure(self):
        return partition_from_pairs(self.m, self.pairs)


class EdgePartition:
    """Partition of ``0..m-1`` with canonical class numbering.

    Class ids are ordered by the smallest member, so two equal partitions
    always have identical ``class_of`` arrays.
    """

    __slots__ = ("class_of", "classes")

    def __init__(self, labels):
        labels = np.asarray(labels).reshape(-1)
        canon = _canonical(labels)
        canon.setflags(write=False)
        self.class_of = canon
        members = [[] for _ in range(int(canon.max()) + 1 if canon.size else 0)]
        for e, c in enumerate(canon.tolist()):
            members[c].append(e)
        self.classes = tuple(tuple(c) for c in members)

    @property
    def m(self):
        return self.class_of.shape[0]

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        return isinstance(other, EdgePartition) and np.array_equal(self.class_of, other.class_of)

    def __hash__(self):
        return hash(self.class_of.tobytes())

    def __repr__(self):
        sizes = sorted((len(c) for c in self.classes), reverse=True)
        return f"EdgePartition(m={self.m}, classes={len(self.classes)}, sizes={sizes})"

    def same_class(self, e, f):
        return bool(self.class_of[e] == self.class_of[f])

    def sizes(self):
        return [len(c) for c in self.classes]


def _canonical(labels):
    # first-occurrence order == order by smallest member
    if labels.size == 0:
        return np.zeros(0, dtype=np.int64)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.reshape(-1)]


def partition_from_pairs(m, pairs):
    """Transitive closure of ``pairs`` over ``0..m-1`` as an :class:`EdgePartition`."""
    arr = np.array(sorted(pairs), dtype=np.int64).reshape(-1, 2)
    return EdgePartition(kernels.closure_labels(m, arr[:, 0], arr[:, 1]))


def singleton_partition(m):
    return EdgePartition(np.arange(m))


class Comparison(enum.Enum):
    EQUAL = "Equal"
    P1_REFINES_P2 = "P1RefinesP2"
    P2_REFINES_P1 = "P2RefinesP1"
    INCOMPARABLE = "Incomparable"

    def __str__(self):
        return self.value


def refines(p1, p2):
    """True iff every class of ``p1`` sits inside one class of ``p2``."""
    if p1.m != p2.m:
        raise GroundSetMismatch(f"ground sets differ: {p1.m} vs {p2.m} edges")
    if p1.m == 0:
        return True
    # p1 refines p2 iff class_of1 -> class_of2 is a function
    target = np.full(len(p1), -1, dtype=np.int64)
    target[p1.class_of] = p2.class_of
    return bool(np.array_equal(target[p1.class_of], p2.class_of))


def compare_partitions(p1, p2):
    fine = refines(p1, p2)
    coarse = refines(p2, p1)
    if fine and coarse:
        return Comparison.EQUAL
    if fine:
        return Comparison.P1_REFINES_P2
    if coarse:
        return Comparison.P2_REFINES_P1
    return Comparison.INCOMPARABLE
