"""Pure-Python backend for the enumeration and exact-rank kernels.

Same API as the compiled extension (`matchpower._kernels._ckern`); selected
at import time when the extension is missing or MATCHPOWER_PURE=1 is set.
Vertex subsets are bitmasks (ints); all arithmetic is exact.

Boundary convention: for a face with vertices v_1 < ... < v_r, the summand
dropping v_j carries sign (-1)^(j+1).
"""

from __future__ import annotations

import heapq

from ..errors import ConsistencyCheckError

BACKEND = "pure"


def _popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# face enumeration
# ---------------------------------------------------------------------------


def sr_faces(gens: list[int], universe: int) -> list[list[int]]:
    """Faces of {S subset of universe : no g in gens with g subset of S}.

    Returns faces grouped by cardinality, each level sorted ascending.
    A zero mask in gens forbids every subset, so the result is void ([]).
    """
    if any(g == 0 for g in gens):
        return []
    verts = [v for v in range(universe.bit_length()) if (universe >> v) & 1]
    levels = [[0]]
    while True:
        nxt = []
        for face in levels[-1]:
            lo = face.bit_length()
            for v in verts:
                if v < lo:
                    continue
                cand = face | (1 << v)
                for g in gens:
                    if g & ~cand == 0:
                        break
                else:
                    nxt.append(cand)
        if not nxt:
            return levels
        nxt.sort()
        levels.append(nxt)


def cover_faces(facets: list[int]) -> list[list[int]]:
    """Faces of the complex whose facets are the given masks.

    A face is any subset of some facet. No facets means the void complex
    ([]); a single empty facet gives the complex whose only face is empty.
    """
    if not facets:
        return []
    universe = 0
    for f in facets:
        universe |= f
    verts = [v for v in range(universe.bit_length()) if (universe >> v) & 1]
    levels = [[0]]
    while True:
        nxt = []
        for face in levels[-1]:
            lo = face.bit_length()
            for v in verts:
                if v < lo:
                    continue
                cand = face | (1 << v)
                for f in facets:
                    if cand & ~f == 0:
                        nxt.append(cand)
                        break
        if not nxt:
            return levels
        nxt.sort()
        levels.append(nxt)


# ---------------------------------------------------------------------------
# exact rank over GF(p)
# ---------------------------------------------------------------------------


def rank_of_columns(cols: list[list[tuple[int, int]]], p: int) -> int:
    """Rank over GF(p) of the matrix with the given sparse columns.

    Each column is a list of (row, value) pairs with distinct rows.
    Incremental echelon: pivot vectors are kept normalized and indexed by
    their leading row; rows of a pivot tail are strictly larger than its
    leading row, so elimination proceeds in increasing row order.
    """
    pivots: dict[int, list[tuple[int, int]]] = {}
    rank = 0
    for col in cols:
        work: dict[int, int] = {}
        for r, v in col:
            v %= p
            if v:
                work[r] = v
        heap = list(work)
        heapq.heapify(heap)
        while heap:
            r = heapq.heappop(heap)
            v = work.get(r, 0)
            if not v:
                work.pop(r, None)
                continue
            tail = pivots.get(r)
            if tail is None:
                inv = pow(v, p - 2, p)
                del work[r]
                pivots[r] = sorted(
                    (rr, (vv * inv) % p) for rr, vv in work.items() if vv
                )
                rank += 1
                break
            del work[r]
            for rr, vv in tail:
                cur = work.get(rr)
                if cur is None:
                    nv = (-v * vv) % p
                    if nv:
                        work[rr] = nv
                        heapq.heappush(heap, rr)
                else:
                    nv = (cur - v * vv) % p
                    if nv:
                        work[rr] = nv
                    else:
                        del work[rr]
    return rank


def _boundary_columns(level: list[int], prev: list[int]) -> list[list[tuple[int, int]]]:
    index = {m: i for i, m in enumerate(prev)}
    cols = []
    for face in level:
        col = []
        sign = 1
        rest = face
        while rest:
            bit = rest & -rest
            col.append((index[face ^ bit], sign))
            sign = -sign
            rest ^= bit
        cols.append(col)
    return cols


def _check_composition(cols: list[list[tuple[int, int]]],
                       prev_cols: list[list[tuple[int, int]]]) -> None:
    for col in cols:
        acc: dict[int, int] = {}
        for r, c in col:
            for r2, c2 in prev_cols[r]:
                acc[r2] = acc.get(r2, 0) + c * c2
        if any(acc.values()):
            raise ConsistencyCheckError("boundary composition is nonzero")


def chain_data(levels: list[list[int]], p: int, check: bool = True):
    """Face counts and boundary ranks mod p of a complex given by levels.

    levels[s] lists the size-s faces (as produced by sr_faces/cover_faces).
    Returns (counts, ranks) with ranks[s] the rank of the map from size-s
    chains to size-(s-1) chains; ranks[0] is 0 by convention.
    """
    counts = [len(lv) for lv in levels]
    ranks = [0] * len(levels)
    prev_cols = None
    for s in range(1, len(levels)):
        cols = _boundary_columns(levels[s], levels[s - 1])
        if check and prev_cols is not None:
            _check_composition(cols, prev_cols)
        ranks[s] = rank_of_columns(cols, p)
        prev_cols = cols
    return counts, ranks


def filter_split(gens: list[int], w: int) -> list[int]:
    """Support masks of the overlap components of {g in gens : g subset w}."""
    comps: list[int] = []
    for g in gens:
        if g & ~w:
            continue
        merged = g
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        rest.append(merged)
        comps = rest
    comps.sort()
    return comps
