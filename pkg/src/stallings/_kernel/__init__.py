"""Folding kernel selection.

The compiled kernel is used when available; set ``STALLINGS_PURE_PYTHON``
in the environment to force the pure fallback.  Both implement the same
contract and produce isomorphic results (folding is confluent).
"""

from __future__ import annotations

import os

from .fold_py import fold as fold_python

if os.environ.get("STALLINGS_PURE_PYTHON"):
    fold = fold_python
    BACKEND = "python"
else:
    try:
        from ._fold_c import fold as fold_compiled

        fold = fold_compiled
        BACKEND = "c"
    except ImportError:
        fold = fold_python
        BACKEND = "python"

__all__ = ["fold", "fold_python", "BACKEND"]
