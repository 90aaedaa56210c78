"""Kernel dispatch: compiled core when available, pure Python otherwise.

Set ``MISCENSUS_PURE_PYTHON=1`` to force the fallback.  Graphs above the
compiled word size always use the pure-Python path.
"""

from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import BudgetExceeded

_compiled = None
if not os.environ.get("MISCENSUS_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_WORD = 64

__all__ = ["BACKEND", "BudgetExceeded", "mis_count", "mis_list", "canonical_labelling"]


def _impl(adj):
    if _compiled is not None and len(adj) <= _WORD:
        return _compiled
    return _pykernels


def mis_count(adj, budget: int = 0) -> int:
    return _impl(adj).mis_count(adj, budget)


def mis_list(adj, limit: int, budget: int = 0) -> tuple[int, list[int]]:
    return _impl(adj).mis_list(adj, limit, budget)


def canonical_labelling(adj) -> list[int]:
    return _impl(adj).canonical_labelling(adj)
