"""Kernel selection for the exhaustive reduction hot loop.

The compiled extension (``tripart._reduce``) is preferred when importable;
otherwise, or when ``TRIPART_PURE_PYTHON=1`` is set, the integer-bitset
fallback in ``tripart._reduce_py`` is used.  Both backends take the columns
as a list of int bitsets, reduce in place, and return the per-column lows
(-1 for zero columns).
"""

from __future__ import annotations

import os
from collections.abc import Callable

from . import _reduce_py

try:
    from . import _reduce as _compiled
except ImportError:  # extension not built
    _compiled = None

__all__ = ["BACKEND", "available_backends", "reduce_columns"]

Reducer = Callable[[list[int], list[int]], list[int]]


def reduce_columns_python(cols: list[int], aux: list[int]) -> list[int]:
    return _reduce_py.exhaustive_reduce_columns(cols, aux)


def reduce_columns_compiled(cols: list[int], aux: list[int]) -> list[int]:
    import numpy as np

    n = len(cols)
    if n == 0:
        return []
    nbytes = ((n + 63) // 64) * 8
    packed_c = np.frombuffer(
        b"".join(c.to_bytes(nbytes, "little") for c in cols), dtype=np.uint64
    ).reshape(n, nbytes // 8).copy()
    packed_a = np.frombuffer(
        b"".join(a.to_bytes(nbytes, "little") for a in aux), dtype=np.uint64
    ).reshape(n, nbytes // 8).copy()
    lows = np.full(n, -1, dtype=np.int64)
    pivot_of_row = np.full(n, -1, dtype=np.int64)
    _compiled.exhaustive_reduce(packed_c, packed_a, lows, pivot_of_row)
    cols[:] = [int.from_bytes(packed_c[j].tobytes(), "little") for j in range(n)]
    aux[:] = [int.from_bytes(packed_a[j].tobytes(), "little") for j in range(n)]
    return lows.tolist()


def available_backends() -> dict[str, Reducer]:
    """Backends usable in this process, keyed by name."""
    out: dict[str, Reducer] = {"python": reduce_columns_python}
    if _compiled is not None:
        out["cython"] = reduce_columns_compiled
    return out


_force_python = os.environ.get("TRIPART_PURE_PYTHON", "") not in ("", "0")

if _compiled is not None and not _force_python:
    BACKEND = "cython"
    reduce_columns: Reducer = reduce_columns_compiled
else:
    BACKEND = "python"
    reduce_columns = reduce_columns_python
