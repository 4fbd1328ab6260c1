# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on uint64 word bitsets; contract mirrors ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef inline int _ctz(uint64_t w) nogil:
    return __builtin_ctzll(w)


cdef void _load(object value, uint64_t* out, int words):
    cdef int w
    for w in range(words):
        out[w] = <uint64_t>((value >> (64 * w)) & WORD_MASK)


cdef void _dominated_by(int x, uint64_t* adj, uint64_t* alive, uint64_t* out,
                        int words) nogil:
    cdef int w, k, z
    cdef uint64_t bitsw
    for w in range(words):
        out[w] = alive[w]
    for w in range(words):
        bitsw = adj[x * words + w]
        while bitsw:
            z = w * 64 + _ctz(bitsw)
            bitsw &= bitsw - 1
            for k in range(words):
                out[k] &= adj[z * words + k]
    out[x >> 6] &= ~((<uint64_t>1) << (x & 63))


def dismantle_lex(masks):
    """Greedy good-pair dismantling removing the smallest ``(y, x)`` each step.

    Returns ``[(removed, witness), ...]``.
    """
    cdef int n = len(masks)
    cdef int words = (n + 63) // 64 if n > 0 else 1
    cdef uint64_t* adj = <uint64_t*>calloc(<size_t>n * words + 1, sizeof(uint64_t))
    cdef uint64_t* dom = <uint64_t*>calloc(<size_t>n * words + 1, sizeof(uint64_t))
    cdef uint64_t* alive = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef uint64_t* union_ = <uint64_t*>calloc(words, sizeof(uint64_t))
    cdef int v, w, b, x, y, ywd
    cdef uint64_t ybit, bitsw
    steps = []
    if adj == NULL or dom == NULL or alive == NULL or union_ == NULL:
        free(adj); free(dom); free(alive); free(union_)
        raise MemoryError()
    try:
        for v in range(n):
            _load(masks[v], adj + v * words, words)
            alive[v >> 6] |= (<uint64_t>1) << (v & 63)
        with nogil:
            for v in range(n):
                _dominated_by(v, adj, alive, dom + v * words, words)
        while True:
            with nogil:
                for w in range(words):
                    union_[w] = 0
                for v in range(n):
                    for w in range(words):
                        union_[w] |= dom[v * words + w]
                y = -1
                for w in range(words):
                    if union_[w]:
                        y = w * 64 + _ctz(union_[w])
                        break
                if y >= 0:
                    ywd = y >> 6
                    ybit = (<uint64_t>1) << (y & 63)
                    x = 0
                    while not (dom[x * words + ywd] & ybit):
                        x += 1
                    alive[ywd] &= ~ybit
                    for w in range(words):
                        dom[y * words + w] = 0
                    for v in range(n):
                        dom[v * words + ywd] &= ~ybit
                    for w in range(words):
                        bitsw = adj[y * words + w]
                        while bitsw:
                            b = _ctz(bitsw)
                            bitsw &= bitsw - 1
                            adj[(w * 64 + b) * words + ywd] &= ~ybit
                    for w in range(words):
                        bitsw = adj[y * words + w]
                        while bitsw:
                            b = _ctz(bitsw)
                            bitsw &= bitsw - 1
                            _dominated_by(w * 64 + b, adj, alive, dom + (w * 64 + b) * words, words)
                    for w in range(words):
                        adj[y * words + w] = 0
            if y < 0:
                return steps
            steps.append((y, x))
    finally:
        free(adj)
        free(dom)
        free(alive)
        free(union_)


def gf2_rank(rows):
    """Rank over GF(2) of a matrix given as row bitmasks."""
    cdef int m = len(rows)
    if m == 0:
        return 0
    cdef int width = max(r.bit_length() for r in rows)
    if width == 0:
        return 0
    cdef int words = (width + 63) // 64
    cdef uint64_t* mat = <uint64_t*>calloc(<size_t>m * words, sizeof(uint64_t))
    cdef int i, j, w, col, rank = 0, pw
    cdef uint64_t pbit
    if mat == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            _load(rows[i], mat + i * words, words)
        with nogil:
            for col in range(width):
                pw = col >> 6
                pbit = (<uint64_t>1) << (col & 63)
                j = rank
                while j < m and not (mat[j * words + pw] & pbit):
                    j += 1
                if j == m:
                    continue
                if j != rank:
                    for w in range(words):
                        mat[j * words + w], mat[rank * words + w] = mat[rank * words + w], mat[j * words + w]
                for j in range(rank + 1, m):
                    if mat[j * words + pw] & pbit:
                        for w in range(pw, words):
                            mat[j * words + w] ^= mat[rank * words + w]
                rank += 1
                if rank == m:
                    break
        return rank
    finally:
        free(mat)
