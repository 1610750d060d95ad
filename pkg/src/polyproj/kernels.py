"""Backend selection for the integer kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise
(or when ``POLYPROJ_PURE_PYTHON=1``) the pure-Python ``_pykernels`` module
is used.  ``BACKEND`` names the active implementation.
"""

import os

from polyproj import _pykernels

if os.environ.get("POLYPROJ_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from polyproj import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

rank = _impl.rank
dots = _impl.dots
zero_set = _impl.zero_set
zero_rank = _impl.zero_rank
rank_subset = _impl.rank_subset

__all__ = ["BACKEND", "rank", "dots", "zero_set", "zero_rank", "rank_subset"]
