"""Kernel backend selection.

The hot loops (face enumeration, sparse elimination over GF(p), component
splitting) have two interchangeable implementations: a Cython extension and
a pure-Python module. The extension is preferred when importable; setting
MATCHPOWER_PURE=1 forces the fallback. Characteristic-0 linear algebra is
always the rational module.
"""

from __future__ import annotations

import os

from . import rational  # noqa: F401  (re-exported for callers)

if os.environ.get("MATCHPOWER_PURE"):
    from . import pure as backend
else:
    try:
        from . import _ckern as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as backend


def backend_name() -> str:
    return backend.BACKEND
