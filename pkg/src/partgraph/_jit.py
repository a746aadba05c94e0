"""Backend switch for the numeric kernels.

Set ``PARTGRAPH_BACKEND=python`` to run every kernel as plain Python over
numpy arrays.  The default ``numba`` backend compiles them with ``@njit``;
if numba cannot be imported the python backend is used silently.
"""

import os
import warnings

BACKEND = os.environ.get("PARTGRAPH_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "python"):
    raise ImportError(f"PARTGRAPH_BACKEND must be 'numba' or 'python', got {BACKEND!r}")

if BACKEND == "numba":
    try:
        import numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        BACKEND = "python"
    else:
        # old system TBB: numba falls back to omp/workqueue but warns on every run
        warnings.filterwarnings("ignore", message="The TBB threading layer", category=numba.NumbaWarning)

if BACKEND == "numba":
    prange = numba.prange

    def jit(fn=None, *, parallel=False, cache=True):
        def wrap(f):
            return numba.njit(cache=cache, parallel=parallel)(f)

        return wrap(fn) if fn is not None else wrap

    def set_workers(count):
        numba.set_num_threads(max(1, min(int(count), numba.config.NUMBA_NUM_THREADS)))

else:
    prange = range

    def jit(fn=None, *, parallel=False, cache=True):
        def wrap(f):
            f.py_func = f
            return f

        return wrap(fn) if fn is not None else wrap

    def set_workers(count):
        pass


USING_NUMBA = BACKEND == "numba"
