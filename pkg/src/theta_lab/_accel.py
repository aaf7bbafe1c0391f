"""Backend selection for the numeric kernels.

``THETA_LAB_BACKEND`` picks the kernel family: ``numba`` (default when numba
imports) or ``numpy``.  ``THETA_LAB_THREADS`` caps the numba thread pool.
"""

import os
import warnings

# numba probes for TBB at import and warns when only an old TBB is around;
# the workqueue/omp layers are used instead, so the warning is noise.
warnings.filterwarnings("ignore", message=".*TBB threading layer.*")

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None
    HAS_NUMBA = False

BACKENDS = ("numba", "numpy")

_backend = None


def _initial_backend():
    requested = os.environ.get("THETA_LAB_BACKEND", "").strip().lower()
    if requested and requested not in BACKENDS:
        warnings.warn(f"unknown THETA_LAB_BACKEND={requested!r}, using default")
        requested = ""
    if requested == "numpy" or not HAS_NUMBA:
        return "numpy"
    return "numba"


def backend():
    """Name of the active kernel backend."""
    global _backend
    if _backend is None:
        _backend = _initial_backend()
        _apply_thread_cap()
    return _backend


def set_backend(name):
    """Switch kernels at runtime; returns the previous backend name."""
    global _backend
    if name not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba is not importable")
    previous = backend()
    _backend = name
    return previous


def _apply_thread_cap():
    cap = os.environ.get("THETA_LAB_THREADS")
    if not cap or not HAS_NUMBA:
        return
    try:
        k = int(cap)
    except ValueError:
        warnings.warn(f"ignoring non-integer THETA_LAB_THREADS={cap!r}")
        return
    numba.set_num_threads(max(1, min(k, numba.config.NUMBA_NUM_THREADS)))


def njit(*args, **kwargs):
    """``numba.njit`` when available, identity otherwise."""
    if HAS_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda f: f


if HAS_NUMBA:
    prange = numba.prange
else:  # pragma: no cover
    prange = range
