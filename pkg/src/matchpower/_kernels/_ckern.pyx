# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the enumeration and exact-rank kernels.

Mirrors matchpower._kernels.pure: same functions, same results. Subset
masks are 64-bit; GF(p) arithmetic is int64 with p < 2^31. The sparse rank
routine is an incremental echelon with a binary heap ordering the active
rows, identical in structure to the pure version.
"""

from libc.stdlib cimport free, malloc, realloc

from ..errors import ConsistencyCheckError

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline int _bitlen(unsigned long long x) nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


cdef struct MaskBuf:
    unsigned long long* data
    size_t size
    size_t cap


cdef int _buf_push(MaskBuf* buf, unsigned long long v) except -1:
    cdef unsigned long long* grown
    if buf.size == buf.cap:
        buf.cap = buf.cap * 2 if buf.cap else 1024
        grown = <unsigned long long*> realloc(buf.data, buf.cap * sizeof(unsigned long long))
        if grown == NULL:
            raise MemoryError()
        buf.data = grown
    buf.data[buf.size] = v
    buf.size += 1
    return 0


cdef void _sort_masks(unsigned long long* a, Py_ssize_t lo, Py_ssize_t hi) nogil:
    # iterative quicksort with insertion sort for small runs
    cdef Py_ssize_t stack[128]
    cdef int top = 0
    cdef Py_ssize_t i, j, l, r
    cdef unsigned long long pivot, tmp
    stack[0] = lo
    stack[1] = hi
    top = 2
    while top:
        top -= 2
        l = stack[top]
        r = stack[top + 1]
        while r - l > 16:
            pivot = a[l + ((r - l) >> 1)]
            i = l
            j = r
            while i <= j:
                while a[i] < pivot:
                    i += 1
                while a[j] > pivot:
                    j -= 1
                if i <= j:
                    tmp = a[i]; a[i] = a[j]; a[j] = tmp
                    i += 1
                    j -= 1
            # push the smaller partition; keep looping on the larger
            if j - l < r - i:
                if l < j:
                    stack[top] = l; stack[top + 1] = j; top += 2
                l = i
            else:
                if i < r:
                    stack[top] = i; stack[top + 1] = r; top += 2
                r = j
        for i in range(l + 1, r + 1):
            pivot = a[i]
            j = i - 1
            while j >= l and a[j] > pivot:
                a[j + 1] = a[j]
                j -= 1
            a[j + 1] = pivot


cdef list _enum(list mask_args, unsigned long long universe, bint avoid_mode):
    """Shared BFS over subset sizes.

    avoid_mode: keep candidates containing no generator (masks = generators).
    otherwise: keep candidates inside at least one facet (masks = facets).
    """
    cdef Py_ssize_t ngen = len(mask_args)
    cdef unsigned long long* gens = NULL
    cdef int verts[64]
    cdef int nverts = 0
    cdef Py_ssize_t i, j, gi
    cdef unsigned long long face, cand
    cdef int lo, v
    cdef bint ok
    cdef MaskBuf cur, nxt, swap

    gens = <unsigned long long*> malloc(max(ngen, 1) * sizeof(unsigned long long))
    if gens == NULL:
        raise MemoryError()
    for i in range(ngen):
        gens[i] = <unsigned long long> mask_args[i]

    for v in range(64):
        if (universe >> v) & 1:
            verts[nverts] = v
            nverts += 1

    levels = [[0]]
    cur.data = NULL; cur.size = 0; cur.cap = 0
    nxt.data = NULL; nxt.size = 0; nxt.cap = 0
    try:
        _buf_push(&cur, 0)
        while True:
            nxt.size = 0
            for i in range(<Py_ssize_t> cur.size):
                face = cur.data[i]
                lo = _bitlen(face)
                for j in range(nverts):
                    v = verts[j]
                    if v < lo:
                        continue
                    cand = face | ((<unsigned long long> 1) << v)
                    if avoid_mode:
                        ok = True
                        for gi in range(ngen):
                            if (gens[gi] & ~cand) == 0:
                                ok = False
                                break
                    else:
                        ok = False
                        for gi in range(ngen):
                            if (cand & ~gens[gi]) == 0:
                                ok = True
                                break
                    if ok:
                        _buf_push(&nxt, cand)
            if nxt.size == 0:
                break
            _sort_masks(nxt.data, 0, <Py_ssize_t> nxt.size - 1)
            level = [0] * nxt.size
            for i in range(<Py_ssize_t> nxt.size):
                level[i] = nxt.data[i]
            levels.append(level)
            swap = cur; cur = nxt; nxt = swap
        return levels
    finally:
        free(gens)
        free(cur.data)
        free(nxt.data)


def sr_faces(gens, universe):
    """Faces of {S subset of universe : no g in gens with g subset of S}."""
    for g in gens:
        if g == 0:
            return []
    return _enum(list(gens), <unsigned long long> universe, True)


def cover_faces(facets):
    """Faces of the complex whose facets are the given masks."""
    cdef unsigned long long universe = 0
    facets = list(facets)
    if not facets:
        return []
    for f in facets:
        universe |= <unsigned long long> f
    return _enum(facets, universe, False)


# ---------------------------------------------------------------------------
# GF(p) elimination
# ---------------------------------------------------------------------------


cdef inline long long _mod_inv(long long a, long long p) nogil:
    # Fermat inverse; p is prime and a is nonzero mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef struct RankState:
    long long* work        # dense accumulator indexed by row
    unsigned char* inheap
    Py_ssize_t* heap
    Py_ssize_t heap_size
    Py_ssize_t* touched
    Py_ssize_t touched_size
    unsigned char* intouch
    Py_ssize_t* piv_start  # offset into pool per leading row, -1 if none
    Py_ssize_t* piv_len
    Py_ssize_t* pool_rows
    long long* pool_vals
    Py_ssize_t pool_size
    Py_ssize_t pool_cap


cdef int _pool_reserve(RankState* st, Py_ssize_t extra) except -1:
    cdef Py_ssize_t need = st.pool_size + extra
    cdef Py_ssize_t* nr
    cdef long long* nv
    if need <= st.pool_cap:
        return 0
    while st.pool_cap < need:
        st.pool_cap = st.pool_cap * 2 if st.pool_cap else 4096
    nr = <Py_ssize_t*> realloc(st.pool_rows, st.pool_cap * sizeof(Py_ssize_t))
    if nr == NULL:
        raise MemoryError()
    st.pool_rows = nr
    nv = <long long*> realloc(st.pool_vals, st.pool_cap * sizeof(long long))
    if nv == NULL:
        raise MemoryError()
    st.pool_vals = nv
    return 0


cdef inline void _touch(RankState* st, Py_ssize_t r) nogil:
    if not st.intouch[r]:
        st.intouch[r] = 1
        st.touched[st.touched_size] = r
        st.touched_size += 1


cdef inline void _heap_push(RankState* st, Py_ssize_t r) nogil:
    cdef Py_ssize_t i, parent
    cdef Py_ssize_t tmp
    if st.inheap[r]:
        return
    st.inheap[r] = 1
    st.heap[st.heap_size] = r
    i = st.heap_size
    st.heap_size += 1
    while i > 0:
        parent = (i - 1) >> 1
        if st.heap[parent] <= st.heap[i]:
            break
        tmp = st.heap[parent]; st.heap[parent] = st.heap[i]; st.heap[i] = tmp
        i = parent


cdef inline Py_ssize_t _heap_pop(RankState* st) nogil:
    cdef Py_ssize_t top = st.heap[0]
    cdef Py_ssize_t i = 0, child
    cdef Py_ssize_t tmp
    st.heap_size -= 1
    st.heap[0] = st.heap[st.heap_size]
    while True:
        child = 2 * i + 1
        if child >= st.heap_size:
            break
        if child + 1 < st.heap_size and st.heap[child + 1] < st.heap[child]:
            child += 1
        if st.heap[i] <= st.heap[child]:
            break
        tmp = st.heap[i]; st.heap[i] = st.heap[child]; st.heap[child] = tmp
        i = child
    st.inheap[top] = 0
    return top


cdef long long _rank_csr(Py_ssize_t ncols, Py_ssize_t nrows,
                         Py_ssize_t* colptr, Py_ssize_t* ent_rows,
                         long long* ent_vals, long long p,
                         RankState* st) except -1:
    cdef long long rank = 0
    cdef Py_ssize_t c, k, r, rr, t
    cdef long long v, nv, inv
    cdef Py_ssize_t start, ln

    for c in range(ncols):
        st.heap_size = 0
        st.touched_size = 0
        for k in range(colptr[c], colptr[c + 1]):
            r = ent_rows[k]
            v = ent_vals[k] % p
            if v < 0:
                v += p
            st.work[r] = v
            if v != 0:
                _touch(st, r)
                _heap_push(st, r)
        while st.heap_size:
            r = _heap_pop(st)
            v = st.work[r]
            if v == 0:
                continue
            if st.piv_start[r] < 0:
                inv = _mod_inv(v, p)
                start = st.pool_size
                ln = 0
                _pool_reserve(st, st.touched_size)
                for t in range(st.touched_size):
                    rr = st.touched[t]
                    if rr == r or st.work[rr] == 0:
                        continue
                    st.pool_rows[st.pool_size] = rr
                    st.pool_vals[st.pool_size] = (st.work[rr] * inv) % p
                    st.pool_size += 1
                    ln += 1
                st.piv_start[r] = start
                st.piv_len[r] = ln
                rank += 1
                break
            st.work[r] = 0
            start = st.piv_start[r]
            ln = st.piv_len[r]
            for k in range(start, start + ln):
                rr = st.pool_rows[k]
                nv = (st.work[rr] - v * st.pool_vals[k]) % p
                if nv < 0:
                    nv += p
                if nv != 0:
                    _touch(st, rr)
                    _heap_push(st, rr)
                st.work[rr] = nv
        for t in range(st.touched_size):
            st.work[st.touched[t]] = 0
            st.inheap[st.touched[t]] = 0
            st.intouch[st.touched[t]] = 0
    return rank


cdef int _state_alloc(RankState* st, Py_ssize_t nrows) except -1:
    st.work = <long long*> malloc(max(nrows, 1) * sizeof(long long))
    st.inheap = <unsigned char*> malloc(max(nrows, 1))
    st.heap = <Py_ssize_t*> malloc(max(nrows, 1) * sizeof(Py_ssize_t))
    st.touched = <Py_ssize_t*> malloc(max(nrows, 1) * sizeof(Py_ssize_t))
    st.intouch = <unsigned char*> malloc(max(nrows, 1))
    st.piv_start = <Py_ssize_t*> malloc(max(nrows, 1) * sizeof(Py_ssize_t))
    st.piv_len = <Py_ssize_t*> malloc(max(nrows, 1) * sizeof(Py_ssize_t))
    st.pool_rows = NULL
    st.pool_vals = NULL
    st.pool_size = 0
    st.pool_cap = 0
    if (st.work == NULL or st.inheap == NULL or st.heap == NULL
            or st.touched == NULL or st.intouch == NULL
            or st.piv_start == NULL or st.piv_len == NULL):
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(nrows):
        st.work[i] = 0
        st.inheap[i] = 0
        st.intouch[i] = 0
        st.piv_start[i] = -1
        st.piv_len[i] = 0
    st.heap_size = 0
    st.touched_size = 0
    return 0


cdef void _state_free(RankState* st):
    free(st.work)
    free(st.inheap)
    free(st.heap)
    free(st.touched)
    free(st.intouch)
    free(st.piv_start)
    free(st.piv_len)
    free(st.pool_rows)
    free(st.pool_vals)


def rank_of_columns(cols, p):
    """Rank over GF(p) of a matrix given by sparse columns of (row, value)."""
    cdef long long pp = p
    if pp < 2 or pp >= (<long long> 1 << 31):
        raise ValueError("p out of range")
    cdef Py_ssize_t ncols = len(cols)
    cdef Py_ssize_t nnz = 0
    cdef Py_ssize_t nrows = 0
    for col in cols:
        nnz += len(col)
        for r, _ in col:
            if r + 1 > nrows:
                nrows = r + 1
    cdef Py_ssize_t* colptr = <Py_ssize_t*> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* ent_rows = <Py_ssize_t*> malloc(max(nnz, 1) * sizeof(Py_ssize_t))
    cdef long long* ent_vals = <long long*> malloc(max(nnz, 1) * sizeof(long long))
    if colptr == NULL or ent_rows == NULL or ent_vals == NULL:
        free(colptr); free(ent_rows); free(ent_vals)
        raise MemoryError()
    cdef Py_ssize_t k = 0, c = 0
    cdef RankState st
    try:
        for col in cols:
            colptr[c] = k
            for r, v in col:
                ent_rows[k] = r
                ent_vals[k] = v
                k += 1
            c += 1
        colptr[ncols] = k
        _state_alloc(&st, nrows)
        try:
            return _rank_csr(ncols, nrows, colptr, ent_rows, ent_vals, pp, &st)
        finally:
            _state_free(&st)
    finally:
        free(colptr)
        free(ent_rows)
        free(ent_vals)


# ---------------------------------------------------------------------------
# boundary chain ranks
# ---------------------------------------------------------------------------


cdef Py_ssize_t _bsearch(unsigned long long* arr, Py_ssize_t n,
                         unsigned long long key) nogil:
    cdef Py_ssize_t lo = 0, hi = n - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        elif arr[mid] > key:
            hi = mid - 1
        else:
            return mid
    return -1


def chain_data(levels, p, check=True):
    """Face counts and boundary ranks mod p for faces grouped by size."""
    cdef long long pp = p
    if pp < 2 or pp >= (<long long> 1 << 31):
        raise ValueError("p out of range")
    cdef bint do_check = bool(check)
    counts = [len(lv) for lv in levels]
    ranks = [0] * len(levels)
    cdef Py_ssize_t nlevels = len(levels)
    if nlevels <= 1:
        return counts, ranks

    cdef Py_ssize_t maxn = 0
    cdef Py_ssize_t i
    for i in range(nlevels):
        if counts[i] > maxn:
            maxn = counts[i]

    cdef unsigned long long* prev = <unsigned long long*> malloc(max(maxn, 1) * sizeof(unsigned long long))
    cdef unsigned long long* curr = <unsigned long long*> malloc(max(maxn, 1) * sizeof(unsigned long long))
    # columns of the current and previous boundary matrices
    cdef Py_ssize_t* colptr = NULL
    cdef Py_ssize_t* ent_rows = NULL
    cdef long long* ent_vals = NULL
    cdef Py_ssize_t* pcolptr = NULL
    cdef Py_ssize_t* pent_rows = NULL
    cdef long long* pent_vals = NULL
    cdef Py_ssize_t nprev, ncurr, s, c, k, pos, t
    cdef unsigned long long face, rest, bit
    cdef long long sign, coeff, acc
    cdef RankState st
    cdef Py_ssize_t check_rows[4096]
    cdef long long check_vals[4096]
    cdef Py_ssize_t ncheck, u, kk
    if prev == NULL or curr == NULL:
        free(prev); free(curr)
        raise MemoryError()

    try:
        level0 = levels[0]
        nprev = len(level0)
        for i in range(nprev):
            prev[i] = <unsigned long long> level0[i]
        for s in range(1, nlevels):
            level = levels[s]
            ncurr = len(level)
            for i in range(ncurr):
                curr[i] = <unsigned long long> level[i]
            colptr = <Py_ssize_t*> malloc((ncurr + 1) * sizeof(Py_ssize_t))
            ent_rows = <Py_ssize_t*> malloc(max(ncurr * s, 1) * sizeof(Py_ssize_t))
            ent_vals = <long long*> malloc(max(ncurr * s, 1) * sizeof(long long))
            if colptr == NULL or ent_rows == NULL or ent_vals == NULL:
                raise MemoryError()
            k = 0
            for c in range(ncurr):
                colptr[c] = k
                face = curr[c]
                rest = face
                sign = 1
                while rest:
                    bit = rest & (~rest + 1)
                    pos = _bsearch(prev, nprev, face ^ bit)
                    if pos < 0:
                        raise ConsistencyCheckError("missing face in lower level")
                    ent_rows[k] = pos
                    ent_vals[k] = sign
                    k += 1
                    sign = -sign
                    rest ^= bit
            colptr[ncurr] = k
            if do_check and pcolptr != NULL:
                # verify that consecutive boundary matrices compose to zero
                for c in range(ncurr):
                    ncheck = 0
                    for k in range(colptr[c], colptr[c + 1]):
                        pos = ent_rows[k]
                        coeff = ent_vals[k]
                        for kk in range(pcolptr[pos], pcolptr[pos + 1]):
                            if ncheck >= 4096:
                                raise ConsistencyCheckError("check buffer overflow")
                            check_rows[ncheck] = pent_rows[kk]
                            check_vals[ncheck] = coeff * pent_vals[kk]
                            ncheck += 1
                    for t in range(ncheck):
                        if check_vals[t] == 0:
                            continue
                        acc = check_vals[t]
                        for u in range(t + 1, ncheck):
                            if check_rows[u] == check_rows[t] and check_vals[u] != 0:
                                acc += check_vals[u]
                                check_vals[u] = 0
                        if acc != 0:
                            raise ConsistencyCheckError("boundary composition is nonzero")
            _state_alloc(&st, nprev)
            try:
                ranks[s] = _rank_csr(ncurr, nprev, colptr, ent_rows, ent_vals, pp, &st)
            finally:
                _state_free(&st)
            free(pcolptr); free(pent_rows); free(pent_vals)
            pcolptr = colptr
            pent_rows = ent_rows
            pent_vals = ent_vals
            colptr = NULL
            ent_rows = NULL
            ent_vals = NULL
            # current level becomes the row space of the next map
            for i in range(ncurr):
                prev[i] = curr[i]
            nprev = ncurr
        return counts, ranks
    finally:
        free(prev)
        free(curr)
        free(colptr)
        free(ent_rows)
        free(ent_vals)
        free(pcolptr)
        free(pent_rows)
        free(pent_vals)


def filter_split(gens, w):
    """Support masks of the overlap components of {g in gens : g subset w}."""
    cdef unsigned long long ww = <unsigned long long> w
    cdef Py_ssize_t ngen = len(gens)
    cdef unsigned long long* comps = <unsigned long long*> malloc(max(ngen, 1) * sizeof(unsigned long long))
    cdef Py_ssize_t ncomp = 0, i, j, wpos
    cdef unsigned long long g, merged
    if comps == NULL:
        raise MemoryError()
    try:
        for obj in gens:
            g = <unsigned long long> obj
            if g & ~ww:
                continue
            merged = g
            wpos = 0
            for j in range(ncomp):
                if comps[j] & merged:
                    merged |= comps[j]
                else:
                    comps[wpos] = comps[j]
                    wpos += 1
            comps[wpos] = merged
            ncomp = wpos + 1
        out = [0] * ncomp
        if ncomp:
            _sort_masks(comps, 0, ncomp - 1)
        for i in range(ncomp):
            out[i] = comps[i]
        return out
    finally:
        free(comps)
