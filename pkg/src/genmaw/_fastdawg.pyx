# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled construction kernels.

``build_online`` mirrors ``genmaw._pure.build_online`` (same contract) and is
used by the single-string builder.  ``build_labeled`` is a fused fast path
for the whole pipeline (online construction, spine pruning, sample remapping,
edge sorting, label propagation) that the pure-Python stage functions
replicate step by step; both produce bit-identical automata.
"""

from libc.stdlib cimport calloc, free, malloc, realloc

BACKEND = "cython"


cdef struct Automaton:
    long *lens
    long *links
    long *samples
    long *spine
    Py_ssize_t count
    Py_ssize_t cap


cdef inline int _ensure(Automaton *a, Py_ssize_t need) except -1:
    if need <= a.cap:
        return 0
    cdef Py_ssize_t cap = a.cap * 2
    if cap < need:
        cap = need
    a.lens = <long *>realloc(a.lens, cap * sizeof(long))
    a.links = <long *>realloc(a.links, cap * sizeof(long))
    a.samples = <long *>realloc(a.samples, cap * sizeof(long))
    if a.lens == NULL or a.links == NULL or a.samples == NULL:
        raise MemoryError()
    a.cap = cap
    return 0


cdef int _construct(list chars, Automaton *a, list adj) except -1:
    """Online suffix-automaton construction into C arrays + Python dicts."""
    cdef Py_ssize_t n = len(chars)
    a.cap = 2 * n + 5
    a.lens = <long *>malloc(a.cap * sizeof(long))
    a.links = <long *>malloc(a.cap * sizeof(long))
    a.samples = <long *>malloc(a.cap * sizeof(long))
    a.spine = <long *>malloc((n + 1) * sizeof(long))
    if a.lens == NULL or a.links == NULL or a.samples == NULL or a.spine == NULL:
        raise MemoryError()
    a.count = 1
    a.lens[0] = 0
    a.links[0] = -1
    a.samples[0] = -1
    a.spine[0] = 0
    adj.append({})

    cdef Py_ssize_t last = 0, cur, clone, p, q, pos
    cdef long c
    cdef dict d
    cdef object target
    for pos in range(n):
        c = chars[pos]
        cur = a.count
        a.count += 1
        _ensure(a, a.count)
        a.lens[cur] = a.lens[last] + 1
        a.links[cur] = -1
        a.samples[cur] = pos
        adj.append({})
        p = last
        while p != -1:
            d = <dict>adj[p]
            if c in d:
                break
            d[c] = cur
            p = a.links[p]
        if p == -1:
            a.links[cur] = 0
        else:
            q = (<dict>adj[p])[c]
            if a.lens[p] + 1 == a.lens[q]:
                a.links[cur] = q
            else:
                clone = a.count
                a.count += 1
                _ensure(a, a.count)
                a.lens[clone] = a.lens[p] + 1
                a.links[clone] = a.links[q]
                a.samples[clone] = pos
                adj.append(dict(<dict>adj[q]))
                while p != -1:
                    d = <dict>adj[p]
                    target = d.get(c)
                    if target is None or <Py_ssize_t>target != q:
                        break
                    d[c] = clone
                    p = a.links[p]
                a.links[q] = clone
                a.links[cur] = clone
        last = cur
        a.spine[pos + 1] = last
    return 0


cdef void _release(Automaton *a):
    free(a.lens)
    free(a.links)
    free(a.samples)
    free(a.spine)


def build_online(text):
    """Suffix automaton of one string; see genmaw._pure.build_online."""
    cdef Automaton a
    cdef list adj = []
    cdef Py_ssize_t n = len(text)
    _construct(list(text), &a, adj)
    try:
        lens = [a.lens[i] for i in range(a.count)]
        links = [a.links[i] for i in range(a.count)]
        samples = [a.samples[i] for i in range(a.count)]
        spine = [a.spine[i] for i in range(n + 1)]
    finally:
        _release(&a)
    return lens, links, adj, samples, spine


def build_labeled(text, boundaries, Py_ssize_t k):
    """Fused construction of the pruned, labeled, edge-sorted DAWG.

    Requires k <= 64 (labels fit one machine word here; the pure pipeline
    handles wider collections).  Returns
    (lens, links, edge_syms, edge_dst, sample_doc, sample_end, sinks, labels).
    """
    if k > 64 or k != len(boundaries):
        raise ValueError("build_labeled needs k == len(boundaries) <= 64")
    cdef Automaton a
    cdef list adj = []
    cdef list chars = list(text)
    cdef Py_ssize_t n = len(chars)
    _construct(chars, &a, adj)

    cdef long *B = NULL
    cdef char *deleted = NULL
    cdef long *doc_of = NULL
    cdef long *remap = NULL
    cdef long *offs = NULL
    cdef long *esyms = NULL
    cdef long *edst = NULL
    cdef long *lens2 = NULL
    cdef long *links2 = NULL
    cdef long *sdoc = NULL
    cdef long *send = NULL
    cdef unsigned long long *lab = NULL
    cdef long *bucket = NULL
    cdef long *order = NULL
    cdef Py_ssize_t count = a.count
    cdef Py_ssize_t i, j, p, v, t, e, gm, q, nv, n_new, total, deg, maxlen
    cdef long c, sym, dst
    cdef dict dct
    cdef unsigned long long acc

    try:
        B = <long *>malloc(k * sizeof(long))
        for i in range(k):
            B[i] = boundaries[i]
        deleted = <char *>calloc(count, 1)
        doc_of = <long *>malloc(n * sizeof(long))
        if B == NULL or deleted == NULL or doc_of == NULL:
            raise MemoryError()
        j = 0
        for p in range(n):
            if p >= B[j]:
                j += 1
            doc_of[p] = j + 1

        # Truncate or delete the spine nodes of documents 2..k.
        for i in range(k - 1, 0, -1):
            q = B[i - 1]
            for p in range(q + 1, B[i] + 1):
                v = a.spine[p]
                gm = p - q
                if gm < a.lens[a.links[v]] + 1:
                    deleted[v] = 1
                else:
                    a.lens[v] = gm

        remap = <long *>malloc(count * sizeof(long))
        if remap == NULL:
            raise MemoryError()
        n_new = 0
        for v in range(count):
            if deleted[v]:
                remap[v] = -1
            else:
                remap[v] = n_new
                n_new += 1

        sinks = [remap[a.spine[B[i]]] for i in range(k)]
        is_sink = <char *>calloc(count, 1)
        if is_sink == NULL:
            raise MemoryError()
        for i in range(k):
            is_sink[a.spine[B[i]]] = 1

        # Count surviving edges, then fill and sort each adjacency segment.
        offs = <long *>calloc(n_new + 1, sizeof(long))
        if offs == NULL:
            free(is_sink)
            raise MemoryError()
        total = 0
        for v in range(count):
            if deleted[v] or is_sink[v]:
                continue
            deg = 0
            dct = <dict>adj[v]
            for target in dct.values():
                if not deleted[<Py_ssize_t>target]:
                    deg += 1
            offs[remap[v] + 1] = deg
            total += deg
        for v in range(n_new):
            offs[v + 1] += offs[v]
        esyms = <long *>malloc(total * sizeof(long))
        edst = <long *>malloc(total * sizeof(long))
        lens2 = <long *>malloc(n_new * sizeof(long))
        links2 = <long *>malloc(n_new * sizeof(long))
        sdoc = <long *>malloc(n_new * sizeof(long))
        send = <long *>malloc(n_new * sizeof(long))
        lab = <unsigned long long *>calloc(n_new, sizeof(unsigned long long))
        if (esyms == NULL or edst == NULL or lens2 == NULL or links2 == NULL
                or sdoc == NULL or send == NULL or lab == NULL):
            free(is_sink)
            raise MemoryError()
        for v in range(count):
            if deleted[v]:
                continue
            nv = remap[v]
            lens2[nv] = a.lens[v]
            links2[nv] = -1 if a.links[v] == -1 else remap[a.links[v]]
            if v == 0:
                sdoc[nv] = 1
                send[nv] = -1
            else:
                e = a.samples[v]
                i = doc_of[e]
                sdoc[nv] = i
                send[nv] = e if i == 1 else e - B[i - 2]
            if is_sink[v]:
                continue
            e = offs[nv]
            dct = <dict>adj[v]
            for key, target in dct.items():
                t = <Py_ssize_t>target
                if deleted[t]:
                    continue
                sym = <long>key
                dst = remap[t]
                # insertion sort by symbol rank; degrees are tiny
                j = e
                while j > offs[nv] and esyms[j - 1] > sym:
                    esyms[j] = esyms[j - 1]
                    edst[j] = edst[j - 1]
                    j -= 1
                esyms[j] = sym
                edst[j] = dst
                e += 1
        free(is_sink)

        # Labels: seed the sinks, then OR over children in decreasing
        # longest-length order (a reverse topological order).
        for i in range(k):
            lab[sinks[i]] = <unsigned long long>1 << i
        maxlen = 0
        for v in range(n_new):
            if lens2[v] > maxlen:
                maxlen = lens2[v]
        bucket = <long *>calloc(maxlen + 2, sizeof(long))
        order = <long *>malloc(n_new * sizeof(long))
        if bucket == NULL or order == NULL:
            raise MemoryError()
        for v in range(n_new):
            bucket[lens2[v] + 1] += 1
        for i in range(1, maxlen + 2):
            bucket[i] += bucket[i - 1]
        for v in range(n_new):
            order[bucket[lens2[v]]] = v
            bucket[lens2[v]] += 1
        for i in range(n_new - 1, -1, -1):
            v = order[i]
            acc = lab[v]
            for e in range(offs[v], offs[v + 1]):
                acc |= lab[edst[e]]
            lab[v] = acc

        out_lens = [lens2[v] for v in range(n_new)]
        out_links = [links2[v] for v in range(n_new)]
        out_sdoc = [sdoc[v] for v in range(n_new)]
        out_send = [send[v] for v in range(n_new)]
        out_labels = [lab[v] for v in range(n_new)]
        out_syms = []
        out_dst = []
        for v in range(n_new):
            out_syms.append([esyms[e] for e in range(offs[v], offs[v + 1])])
            out_dst.append([edst[e] for e in range(offs[v], offs[v + 1])])
    finally:
        _release(&a)
        free(B); free(deleted); free(doc_of); free(remap); free(offs)
        free(esyms); free(edst); free(lens2); free(links2)
        free(sdoc); free(send); free(lab); free(bucket); free(order)
    return (out_lens, out_links, out_syms, out_dst, out_sdoc, out_send,
            sinks, out_labels)
