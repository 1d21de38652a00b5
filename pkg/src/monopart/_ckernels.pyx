# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts and visiting order as ``_pykernels``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free, qsort

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    KEY_SHIFT = 21
cdef uint64_t KEY_MASK = (1 << KEY_SHIFT) - 1
cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef inline long long _llabs(long long v) noexcept nogil:
    return -v if v < 0 else v


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<uint64_t *> a)[0]
    cdef uint64_t y = (<uint64_t *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef void _load(object value, uint64_t *dst, int words):
    cdef int w
    for w in range(words):
        dst[w] = <uint64_t> ((value >> (64 * w)) & WORD_MASK)


cdef struct Search:
    int m
    int n
    int words
    uint64_t *adj
    uint64_t *dom
    uint64_t *univ
    uint64_t *used
    uint64_t *tmp
    uint64_t *cv
    int *order
    int *pos
    int *image
    int *rank
    int *e_off
    int *e_list
    int *l_off
    int *l_list
    int *cands
    int *ncand
    int *idx
    uint64_t *keys


cdef int _candidates(Search *s, int t) noexcept nogil:
    cdef int words = s.words
    cdef int u = s.order[t]
    cdef int i, j, w, v, ww, h, base, count = 0, need
    cdef uint64_t *c = s.tmp
    cdef uint64_t *cv = s.cv
    cdef uint64_t *ah
    cdef uint64_t bits, low, any_bits
    cdef int ok, score
    any_bits = 0
    for w in range(words):
        c[w] = s.dom[u * words + w] & ~s.used[w]
    for i in range(s.e_off[u], s.e_off[u + 1]):
        ah = s.adj + s.image[s.e_list[i]] * words
        any_bits = 0
        for w in range(words):
            c[w] &= ah[w]
            any_bits |= c[w]
        if any_bits == 0:
            s.ncand[t] = 0
            return 0
    need = s.l_off[u + 1] - s.l_off[u]
    for w in range(words):
        bits = c[w]
        while bits:
            low = bits & (~bits + 1)
            bits ^= low
            h = w * 64 + __builtin_ctzll(low)
            ah = s.adj + h * words
            s.used[w] |= low
            ok = 1
            for i in range(s.l_off[u], s.l_off[u + 1]):
                v = s.l_list[i]
                any_bits = 0
                for ww in range(words):
                    cv[ww] = s.dom[v * words + ww] & ah[ww] & ~s.used[ww]
                    any_bits |= cv[ww]
                if any_bits:
                    for j in range(s.e_off[v], s.e_off[v + 1]):
                        if s.pos[s.e_list[j]] < t:
                            base = s.image[s.e_list[j]] * words
                            any_bits = 0
                            for ww in range(words):
                                cv[ww] &= s.adj[base + ww]
                                any_bits |= cv[ww]
                            if any_bits == 0:
                                break
                if any_bits == 0:
                    ok = 0
                    break
            if ok:
                score = 0
                for ww in range(words):
                    score += __builtin_popcountll(ah[ww] & s.univ[ww] & ~s.used[ww])
                if score >= need:
                    s.keys[count] = ((<uint64_t> score) << (2 * KEY_SHIFT)) | ((<uint64_t> s.rank[h]) << KEY_SHIFT) | (<uint64_t> h)
                    count += 1
            s.used[w] ^= low
    qsort(s.keys, count, sizeof(uint64_t), _cmp_u64)
    base = t * s.n
    for i in range(count):
        s.cands[base + i] = <int> (s.keys[i] & KEY_MASK)
    s.ncand[t] = count
    return count


def embed_search(order, nbrs, domains, adj, rank, long long node_budget):
    cdef int m = len(order)
    if m == 0:
        return [], 0, False
    cdef int n = len(adj)
    if n >= (1 << KEY_SHIFT):
        raise ValueError("host too large for the compiled kernel")
    cdef int words = (n + 63) // 64
    if words == 0:
        words = 1
    cdef Search s
    cdef int i, t, u, w, h, ne = 0, nl = 0
    cdef long long nodes = 0
    cdef object result
    s.m = m
    s.n = n
    s.words = words
    pos_py = [0] * m
    for t in range(m):
        pos_py[order[t]] = t
    for u in range(m):
        for w in nbrs[u]:
            if pos_py[w] < pos_py[u]:
                ne += 1
            else:
                nl += 1
    s.adj = <uint64_t *> malloc(sizeof(uint64_t) * n * words)
    s.dom = <uint64_t *> malloc(sizeof(uint64_t) * m * words)
    s.univ = <uint64_t *> malloc(sizeof(uint64_t) * words)
    s.used = <uint64_t *> malloc(sizeof(uint64_t) * words)
    s.tmp = <uint64_t *> malloc(sizeof(uint64_t) * words)
    s.cv = <uint64_t *> malloc(sizeof(uint64_t) * words)
    s.order = <int *> malloc(sizeof(int) * m)
    s.pos = <int *> malloc(sizeof(int) * m)
    s.image = <int *> malloc(sizeof(int) * m)
    s.rank = <int *> malloc(sizeof(int) * n)
    s.e_off = <int *> malloc(sizeof(int) * (m + 1))
    s.e_list = <int *> malloc(sizeof(int) * (ne + 1))
    s.l_off = <int *> malloc(sizeof(int) * (m + 1))
    s.l_list = <int *> malloc(sizeof(int) * (nl + 1))
    s.cands = <int *> malloc(sizeof(int) * m * n)
    s.ncand = <int *> malloc(sizeof(int) * m)
    s.idx = <int *> malloc(sizeof(int) * m)
    s.keys = <uint64_t *> malloc(sizeof(uint64_t) * (n + 1))
    try:
        if (not s.adj or not s.dom or not s.univ or not s.used or not s.tmp or not s.cv
                or not s.order or not s.pos or not s.image or not s.rank or not s.e_off
                or not s.e_list or not s.l_off or not s.l_list or not s.cands
                or not s.ncand or not s.idx or not s.keys):
            raise MemoryError()
        for h in range(n):
            _load(adj[h], s.adj + h * words, words)
            s.rank[h] = rank[h]
        for w in range(words):
            s.univ[w] = 0
            s.used[w] = 0
        for u in range(m):
            _load(domains[u], s.dom + u * words, words)
            for w in range(words):
                s.univ[w] |= s.dom[u * words + w]
            s.order[u] = order[u]
            s.pos[u] = pos_py[u]
            s.image[u] = -1
        ne = 0
        nl = 0
        for u in range(m):
            s.e_off[u] = ne
            s.l_off[u] = nl
            for w in nbrs[u]:
                if pos_py[w] < pos_py[u]:
                    s.e_list[ne] = w
                    ne += 1
                else:
                    s.l_list[nl] = w
                    nl += 1
        s.e_off[m] = ne
        s.l_off[m] = nl

        with nogil:
            _candidates(&s, 0)
            s.idx[0] = 0
            t = 0
            while True:
                if s.idx[t] < s.ncand[t]:
                    h = s.cands[t * n + s.idx[t]]
                    s.idx[t] += 1
                    nodes += 1
                    if node_budget >= 0 and nodes > node_budget:
                        nodes -= 1
                        t = -2
                        break
                    s.image[s.order[t]] = h
                    s.used[h >> 6] |= (<uint64_t> 1) << (h & 63)
                    if t + 1 == m:
                        break
                    t += 1
                    _candidates(&s, t)
                    s.idx[t] = 0
                else:
                    t -= 1
                    if t < 0:
                        break
                    h = s.image[s.order[t]]
                    s.used[h >> 6] &= ~((<uint64_t> 1) << (h & 63))
                    s.image[s.order[t]] = -1
        if t == -2:
            result = (None, nodes, True)
        elif t < 0:
            result = (None, nodes, False)
        else:
            result = ([s.image[u] for u in range(m)], nodes, False)
        return result
    finally:
        free(s.adj); free(s.dom); free(s.univ); free(s.used); free(s.tmp); free(s.cv)
        free(s.order); free(s.pos); free(s.image); free(s.rank)
        free(s.e_off); free(s.e_list); free(s.l_off); free(s.l_list)
        free(s.cands); free(s.ncand); free(s.idx); free(s.keys)


def regularity_scan(cols, int a, int b, long long eps_num, long long eps_den):
    if a > 30 or b > 62:
        raise ValueError("pair too large for the compiled kernel")
    cdef uint64_t c[64]
    cdef long long degs[64]
    cdef int ys[64]
    cdef long long low[65]
    cdef long long key[64]
    cdef long long total = 0, ab = a * b, bound, high_sum, tmpk
    cdef int y, i, j, x, s, found = 0
    cdef uint64_t xmask, ymask = 0
    cdef uint64_t limit = (<uint64_t> 1) << a
    for y in range(b):
        c[y] = <uint64_t> cols[y]
        total += __builtin_popcountll(c[y])
    with nogil:
        xmask = 1
        while xmask < limit and not found:
            x = __builtin_popcountll(xmask)
            if x * eps_den <= eps_num * a:
                xmask += 1
                continue
            for y in range(b):
                key[y] = __builtin_popcountll(c[y] & xmask) * b + y
            for i in range(1, b):
                tmpk = key[i]
                j = i - 1
                while j >= 0 and key[j] > tmpk:
                    key[j + 1] = key[j]
                    j -= 1
                key[j + 1] = tmpk
            low[0] = 0
            for i in range(b):
                degs[i] = key[i] // b
                ys[i] = <int> (key[i] % b)
                low[i + 1] = low[i] + degs[i]
            for s in range(1, b + 1):
                if s * eps_den <= eps_num * b:
                    continue
                bound = eps_num * x * s * ab
                high_sum = low[b] - low[b - s]
                if eps_den * _llabs(high_sum * ab - total * x * s) >= bound:
                    for i in range(b - s, b):
                        ymask |= (<uint64_t> 1) << ys[i]
                    found = 1
                    break
                if eps_den * _llabs(low[s] * ab - total * x * s) >= bound:
                    for i in range(s):
                        ymask |= (<uint64_t> 1) << ys[i]
                    found = 1
                    break
            if not found:
                xmask += 1
    if found:
        return int(xmask), int(ymask)
    return None
