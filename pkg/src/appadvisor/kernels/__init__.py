"""Hot-kernel backend selection.

The compiled Cython extension is preferred; the pure numpy fallback is used
when it is missing or when ``APPADVISOR_PURE=1`` is set.  Both backends
implement the same three functions with identical semantics:

- ``nondominated_mask(values)``
- ``nondominated_rank(values)``
- ``enumerate_front(mats)``
"""

from __future__ import annotations

import os

from . import pykernels

if os.environ.get("APPADVISOR_PURE") == "1":
    _backend = pykernels
else:
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        _backend = pykernels

IMPLEMENTATION: str = _backend.IMPLEMENTATION
nondominated_mask = _backend.nondominated_mask
nondominated_rank = _backend.nondominated_rank
enumerate_front = _backend.enumerate_front

__all__ = [
    "IMPLEMENTATION",
    "nondominated_mask",
    "nondominated_rank",
    "enumerate_front",
    "pykernels",
]
