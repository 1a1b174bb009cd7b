# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-construction kernel (estimates limited to 63 states).

Mirrors the contract of ``_kernel_py.explore``; see that module for the
parameter semantics.  Uses an open-addressing hash table keyed by the
estimate mask, so the hot loop never touches Python objects.
"""

from libc.stdlib cimport malloc, calloc, free, realloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

STOP_NONE = 0
STOP_SECRET_ONLY = 1
STOP_MISSES = 2


cdef struct Table:
    u64 *keys       # stored as mask+1 so 0 means empty slot
    int *vals
    size_t cap      # power of two
    size_t used


cdef int table_init(Table *t, size_t cap) except -1:
    t.keys = <u64 *>calloc(cap, sizeof(u64))
    t.vals = <int *>malloc(cap * sizeof(int))
    if t.keys == NULL or t.vals == NULL:
        raise MemoryError()
    t.cap = cap
    t.used = 0
    return 0


cdef void table_free(Table *t):
    free(t.keys)
    free(t.vals)


cdef inline size_t _slot(Table *t, u64 key) nogil:
    # splitmix64-style scramble, then linear probing
    cdef u64 h = key
    h ^= h >> 33
    h *= <u64>0xff51afd7ed558ccdULL
    h ^= h >> 33
    cdef size_t i = <size_t>h & (t.cap - 1)
    while t.keys[i] != 0 and t.keys[i] != key:
        i = (i + 1) & (t.cap - 1)
    return i


cdef int table_grow(Table *t) except -1:
    cdef Table nt
    cdef size_t i, j
    table_init(&nt, t.cap * 2)
    for i in range(t.cap):
        if t.keys[i] != 0:
            j = _slot(&nt, t.keys[i])
            nt.keys[j] = t.keys[i]
            nt.vals[j] = t.vals[i]
    nt.used = t.used
    table_free(t)
    t[0] = nt
    return 0


cdef inline bint _stopped(u64 e, int stop_mode, u64 m1, u64 m2) nogil:
    if stop_mode == 1:
        return (e & m1) != 0 and (e & m2) == 0
    if stop_mode == 2:
        return (e & m1) == 0
    return False


cdef struct IntVec:
    int *data
    size_t size
    size_t cap


cdef int vec_push(IntVec *v, int x) except -1:
    if v.size == v.cap:
        v.cap = v.cap * 2 if v.cap else 1024
        v.data = <int *>realloc(v.data, v.cap * sizeof(int))
        if v.data == NULL:
            raise MemoryError()
    v.data[v.size] = x
    v.size += 1
    return 0


cdef struct U64Vec:
    u64 *data
    size_t size
    size_t cap


cdef int uvec_push(U64Vec *v, u64 x) except -1:
    if v.size == v.cap:
        v.cap = v.cap * 2 if v.cap else 1024
        v.data = <u64 *>realloc(v.data, v.cap * sizeof(u64))
        if v.data == NULL:
            raise MemoryError()
    v.data[v.size] = x
    v.size += 1
    return 0


def explore(succ_obj, int n_states, int n_syms, root_obj, include_empty=False,
            stop_mode=STOP_NONE, m1=0, m2=0, want_edges=False):
    """Compiled counterpart of ``_kernel_py.explore``; same return shape."""
    if n_states > 63:
        raise ValueError("compiled kernel supports at most 63 states")
    cdef u64 root = <u64>root_obj
    cdef u64 sm1 = <u64>m1, sm2 = <u64>m2
    cdef int smode = stop_mode
    cdef bint incl_empty = bool(include_empty)
    cdef bint w_edges = bool(want_edges)

    cdef size_t total = <size_t>n_states * n_syms
    cdef u64 *succ = <u64 *>malloc(total * sizeof(u64))
    if succ == NULL:
        raise MemoryError()
    cdef size_t si
    for si in range(total):
        succ[si] = <u64>succ_obj[si]

    cdef Table tab
    table_init(&tab, 1 << 14)
    cdef U64Vec nodes
    cdef IntVec parent, parent_sym, edges
    nodes.data = NULL; nodes.size = 0; nodes.cap = 0
    parent.data = NULL; parent.size = 0; parent.cap = 0
    parent_sym.data = NULL; parent_sym.size = 0; parent_sym.cap = 0
    edges.data = NULL; edges.size = 0; edges.cap = 0

    cdef size_t slot = _slot(&tab, root + 1)
    tab.keys[slot] = root + 1
    tab.vals[slot] = 0
    tab.used = 1
    uvec_push(&nodes, root)
    vec_push(&parent, -1)
    vec_push(&parent_sym, -1)

    cdef long hit = -1
    cdef size_t i = 0
    cdef int a, q, idx
    cdef u64 cur, nxt, e

    if _stopped(root, smode, sm1, sm2):
        hit = 0
    else:
        while i < nodes.size:
            cur = nodes.data[i]
            for a in range(n_syms):
                nxt = 0
                e = cur
                while e:
                    q = __builtin_ctzll(e)
                    e &= e - 1
                    nxt |= succ[<size_t>q * n_syms + a]
                if nxt == 0 and not incl_empty:
                    if w_edges:
                        vec_push(&edges, -1)
                    continue
                slot = _slot(&tab, nxt + 1)
                if tab.keys[slot] == 0:
                    idx = <int>nodes.size
                    tab.keys[slot] = nxt + 1
                    tab.vals[slot] = idx
                    tab.used += 1
                    uvec_push(&nodes, nxt)
                    vec_push(&parent, <int>i)
                    vec_push(&parent_sym, a)
                    if tab.used * 10 > tab.cap * 7:
                        table_grow(&tab)
                    if _stopped(nxt, smode, sm1, sm2):
                        hit = idx
                        break
                else:
                    idx = tab.vals[slot]
                if w_edges:
                    vec_push(&edges, idx)
            if hit >= 0:
                break
            i += 1

    out_nodes = [nodes.data[si] for si in range(nodes.size)]
    out_parent = [parent.data[si] for si in range(parent.size)]
    out_psym = [parent_sym.data[si] for si in range(parent_sym.size)]
    out_edges = [edges.data[si] for si in range(edges.size)] if w_edges else None
    free(succ)
    table_free(&tab)
    free(nodes.data)
    free(parent.data)
    free(parent_sym.data)
    free(edges.data)
    return out_nodes, out_edges, out_parent, out_psym, hit
