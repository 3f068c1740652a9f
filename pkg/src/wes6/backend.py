"""Backend selection for the Smith normal form kernel.

At import time we try the compiled int64 kernel and fall back to the pure
Python one.  Even with the compiled kernel loaded, any computation whose
intermediates leave the int64 range is transparently redone in pure Python,
so callers always see exact arbitrary-precision results.
"""

from __future__ import annotations

from . import _snf_py

try:
    from . import _snf_cy  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    _snf_cy = None
    HAVE_COMPILED = False

BACKEND = "compiled" if HAVE_COMPILED else "pure-python"


def snf_triple(entries, m, n):
    """Return (U, D, V) nested lists for an m x n row-major integer matrix."""
    if HAVE_COMPILED:
        try:
            return _snf_cy.snf_triple(entries, m, n)
        except OverflowError:
            pass
    return _snf_py.snf_triple(entries, m, n)
