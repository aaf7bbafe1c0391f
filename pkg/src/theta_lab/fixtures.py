"""Bundled instances shipped as graph files under ``theta_lab/data``."""

from functools import lru_cache
from importlib import resources

from .graph import build_graph
from .io import parse_graph_file
from .planar import trace_faces

FULLERENES = ("c20", "c24", "c26", "c28", "c40_tube", "c60")
TRIANGULATIONS = ("k4", "octahedron", "icosahedron", "apollonian_1", "apollonian_2", "apollonian_3")
CHORDAL = ("k4", "diamond", "chordal_1", "chordal_2", "chordal_3")


def _data():
    return resources.files("theta_lab") / "data"


def names():
    return sorted(p.name[:-len(".graph")] for p in _data().iterdir() if p.name.endswith(".graph"))


def path(name):
    return _data() / f"{name}.graph"


def text(name):
    return path(name).read_text()


@lru_cache(maxsize=None)
def load(name):
    """``(Graph, rotation or None)`` for a bundled fixture."""
    if name not in names():
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(names())}")
    return parse_graph_file(text(name))


@lru_cache(maxsize=None)
def load_embedded(name):
    """``(Graph, PlanarEmbedding)``; the rotation is validated by face tracing."""
    g, rot = load(name)
    if rot is None:
        raise ValueError(f"fixture {name!r} has no rotation section")
    return g, trace_faces(g, rot)


@lru_cache(maxsize=None)
def small_graphs(max_n=7, min_n=3):
    """Connected graphs on ``min_n..max_n`` vertices, one per isomorphism class."""
    out = []
    for line in (_data() / "small_graphs.txt").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        head, _, body = line.partition(":")
        n = int(head)
        if not (min_n <= n <= max_n):
            continue
        pairs = [tuple(int(x) for x in tok.split("-")) for tok in body.split()]
        out.append(build_graph(pairs, n=n))
    return tuple(out)
