"""Optional numba acceleration.

Set ``TORUSMOTIVE_DISABLE_NUMBA=1`` to force the numpy code paths (useful
for debugging and for checking that both back ends agree).
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("TORUSMOTIVE_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    if DISABLED:
        raise ImportError("disabled by TORUSMOTIVE_DISABLE_NUMBA")
    import numba
except ImportError:
    numba = None

HAVE_NUMBA = numba is not None


def njit(func):
    """``numba.njit`` when available, otherwise ``None`` so callers pick the fallback."""
    if not HAVE_NUMBA:
        return None
    return numba.njit(cache=False)(func)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
