"""Exact rank computations over the rationals.

Characteristic 0 runs through this module regardless of which mod-p backend
is active: the arithmetic is exact (gmpy2.mpq when available, otherwise
fractions.Fraction), so there is no compiled variant.
"""

from __future__ import annotations

import heapq

from ..errors import ConsistencyCheckError

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _Q


def rank_of_columns_q(cols: list[list[tuple[int, int]]]) -> int:
    """Rank over Q; same incremental echelon scheme as the mod-p kernels."""
    pivots: dict[int, list[tuple[int, object]]] = {}
    rank = 0
    for col in cols:
        work = {r: _Q(v) for r, v in col if v}
        heap = list(work)
        heapq.heapify(heap)
        while heap:
            r = heapq.heappop(heap)
            v = work.get(r)
            if not v:
                work.pop(r, None)
                continue
            tail = pivots.get(r)
            if tail is None:
                del work[r]
                pivots[r] = sorted((rr, vv / v) for rr, vv in work.items() if vv)
                rank += 1
                break
            del work[r]
            for rr, vv in tail:
                cur = work.get(rr)
                if cur is None:
                    nv = -v * vv
                    if nv:
                        work[rr] = nv
                        heapq.heappush(heap, rr)
                else:
                    nv = cur - v * vv
                    if nv:
                        work[rr] = nv
                    else:
                        del work[rr]
    return rank


def chain_data_q(levels: list[list[int]], check: bool = True):
    """Rational analogue of the backends' chain_data."""
    counts = [len(lv) for lv in levels]
    ranks = [0] * len(levels)
    prev_cols = None
    for s in range(1, len(levels)):
        index = {m: i for i, m in enumerate(levels[s - 1])}
        cols = []
        for face in levels[s]:
            col = []
            sign = 1
            rest = face
            while rest:
                bit = rest & -rest
                col.append((index[face ^ bit], sign))
                sign = -sign
                rest ^= bit
            cols.append(col)
        if check and prev_cols is not None:
            for col in cols:
                acc: dict[int, int] = {}
                for r, c in col:
                    for r2, c2 in prev_cols[r]:
                        acc[r2] = acc.get(r2, 0) + c * c2
                if any(acc.values()):
                    raise ConsistencyCheckError("boundary composition is nonzero")
        ranks[s] = rank_of_columns_q(cols)
        prev_cols = cols
    return counts, ranks
