"""Numba-accelerated compressed-length kernel for binary ('0'/'1') bytes.

Space-time diagrams are serialized as '0'/'1' bytes, so the hot path only
needs a two-way trie.  The kernel mirrors the reference parse in
``compressor.compress`` exactly; if numba is unavailable importing this
module fails and callers fall back to the reference implementation.
"""

from __future__ import annotations

import numba
import numpy as np


_READONLY_BYTES = numba.types.Array(numba.uint8, 1, "C", readonly=True)


@numba.njit(numba.int64(_READONLY_BYTES), cache=True)
def _bits_kernel(data):  # pragma: no cover - exercised via wrapper
    n = data.shape[0]
    # child[2*node + symbol] = child node id, or 0 if absent (node 0 is the
    # root and never a child, so 0 doubles as the null marker).
    child = np.zeros(2 * (n + 1), dtype=np.int64)
    tokens = 0
    bits = 0
    width = 0  # bit width of the current token's index field
    next_width_at = 1  # token count at which the width increments
    last = n - 1
    i = 0
    while i < n:
        node = 0
        j = i
        while j < last:
            b = data[j]
            if b == 48:
                sym = 0
            elif b == 49:
                sym = 1
            else:
                return -1
            nxt = child[2 * node + sym]
            if nxt == 0:
                break
            node = nxt
            j += 1
        b = data[j]
        if b == 48:
            sym = 0
        elif b == 49:
            sym = 1
        else:
            return -1
        if tokens == next_width_at:
            width += 1
            next_width_at *= 2
        bits += width + 8
        tokens += 1
        if child[2 * node + sym] == 0:
            child[2 * node + sym] = tokens
        i = j + 1
    return bits


def binary_lz78_bits(data: bytes) -> int:
    """Bit length of the reference parse, or -1 for non-binary input."""
    if not data:
        return 0
    arr = np.frombuffer(data, dtype=np.uint8)
    return int(_bits_kernel(arr))
