"""Select the BFS backend at import time.

The compiled kernel is used when the extension was built; otherwise the
numpy fallback takes over. Both expose ``bfs_distances`` and
``eccentricities`` with identical semantics.
"""

from __future__ import annotations

from types import ModuleType

from . import _bfs_fallback

try:
    from . import _bfs_kernel
except ImportError:  # extension not built
    _bfs_kernel = None

BACKENDS: dict[str, ModuleType] = {"python": _bfs_fallback}
if _bfs_kernel is not None:
    BACKENDS["compiled"] = _bfs_kernel

DEFAULT_BACKEND = "compiled" if _bfs_kernel is not None else "python"


def get_backend(name: str | None = None) -> ModuleType:
    key = DEFAULT_BACKEND if name is None else name
    try:
        return BACKENDS[key]
    except KeyError:
        raise ValueError(f"unknown or unavailable BFS backend {key!r}; have {sorted(BACKENDS)}") from None
