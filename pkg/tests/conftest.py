import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from theta_lab import _accel, fixtures  # noqa: E402
from theta_lab import generators as gen  # noqa: E402


@pytest.fixture(params=["numba", "numpy"])
def each_backend(request):
    if request.param == "numba" and not _accel.HAS_NUMBA:
        pytest.skip("numba not importable")
    previous = _accel.set_backend(request.param)
    yield request.param
    _accel.set_backend(previous)


def corpus():
    """Named graphs shared by the property-style tests."""
    out = {
        "P4": gen.path_graph(4),
        "K3": gen.complete_graph(3),
        "K4": gen.complete_graph(4),
        "K5": gen.complete_graph(5),
        "C5": gen.cycle_graph(5),
        "C6": gen.cycle_graph(6),
        "C7": gen.cycle_graph(7),
        "star4": gen.star_graph(4),
        "Q3": gen.hypercube_graph(3),
        "K23": gen.complete_bipartite_graph(2, 3),
        "petersen": gen.petersen_graph(),
        "diamond": gen.diamond_graph(),
    }
    for name in ("octahedron", "icosahedron", "c20", "apollonian_1", "chordal_1"):
        out[name] = fixtures.load(name)[0]
    return out


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, line in sorted(acceptance_log.LINES.items()):
        terminalreporter.write_line(line)
