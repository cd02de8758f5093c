"""Backend selection for the integer kernels.

Set ``HURWITZKP_NO_NUMBA=1`` to force the pure-numpy fallbacks.
"""
import os

_DISABLED = os.environ.get("HURWITZKP_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(fn):
    """Compile with numba (cached, nopython) when available, else return ``fn`` unchanged."""
    if not HAVE_NUMBA:
        return fn
    return _njit(cache=True, nogil=True)(fn)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
