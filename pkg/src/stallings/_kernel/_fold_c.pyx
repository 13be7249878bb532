# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled folding kernel.

Same contract as the pure fallback: merge half-edges sharing an initial
vertex and a label until none remain, returning union-find
representatives.  Collision lookup uses a flat (vertex x label) table,
so a vertex merge costs one scan over the alphabet.
"""

from libc.stdlib cimport free, malloc, realloc


cdef inline int _find(int* parent, int v) noexcept nogil:
    cdef int root = v
    cdef int tmp
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        tmp = parent[v]
        parent[v] = root
        v = tmp
    return root


def fold(int n_vertices, list einit, list elabel, seed=None):
    """Fold completely; return (vertex_rep, half_edge_rep) lists."""
    cdef Py_ssize_t m2 = len(einit)
    cdef int ngens = 0
    cdef Py_ssize_t i
    cdef int code
    for i in range(m2):
        code = elabel[i]
        if code < 0:
            code = -code
        if code > ngens:
            ngens = code
    cdef int L = 2 * ngens if ngens else 1

    cdef int* ein = <int*> malloc(m2 * sizeof(int))
    cdef int* lab = <int*> malloc(m2 * sizeof(int))
    cdef int* vparent = <int*> malloc(n_vertices * sizeof(int))
    cdef int* eparent = <int*> malloc(m2 * sizeof(int)) if m2 else NULL
    cdef long long tsize = <long long> n_vertices * L
    cdef int* table = <int*> malloc(tsize * sizeof(int))
    cdef Py_ssize_t cap = 4 * m2 + 16
    cdef int* stack_a = <int*> malloc(cap * sizeof(int))
    cdef int* stack_b = <int*> malloc(cap * sizeof(int))
    if (
        (m2 and (ein == NULL or lab == NULL or eparent == NULL))
        or vparent == NULL or table == NULL
        or stack_a == NULL or stack_b == NULL
    ):
        free(ein); free(lab); free(vparent); free(eparent)
        free(table); free(stack_a); free(stack_b)
        raise MemoryError()

    cdef Py_ssize_t top = 0
    cdef long long slot
    cdef int v, w, x, y, a, b, a1, b1, h, e2, li
    cdef unsigned long long rng = 0
    cdef bint randomized = seed is not None
    if randomized:
        rng = (<unsigned long long> (seed if seed >= 0 else -seed)) * 2 + 1

    try:
        for i in range(m2):
            ein[i] = einit[i]
            code = elabel[i]
            lab[i] = 2 * (code - 1) if code > 0 else 2 * (-code - 1) + 1
            eparent[i] = <int> i
        for i in range(n_vertices):
            vparent[i] = <int> i
        for slot in range(tsize):
            table[slot] = 0

        for i in range(m2):
            slot = <long long> ein[i] * L + lab[i]
            if table[slot]:
                stack_a[top] = table[slot] - 1
                stack_b[top] = <int> i
                top += 1
            else:
                table[slot] = <int> i + 1

        while top:
            if randomized and top > 1:
                rng = rng * 6364136223846793005ULL + 1442695040888963407ULL
                i = <Py_ssize_t> ((rng >> 16) % top)
                a = stack_a[i]; stack_a[i] = stack_a[top - 1]; stack_a[top - 1] = a
                b = stack_b[i]; stack_b[i] = stack_b[top - 1]; stack_b[top - 1] = b
            top -= 1
            a = _find(eparent, stack_a[top])
            b = _find(eparent, stack_b[top])
            if a == b:
                continue
            # merge edge class b into a, and the reverses likewise
            eparent[b] = a
            a1 = _find(eparent, a ^ 1)
            b1 = _find(eparent, b ^ 1)
            if a1 != b1:
                eparent[b1] = a1
            x = _find(vparent, ein[a ^ 1])
            y = _find(vparent, ein[b ^ 1])
            if x == y:
                continue
            vparent[y] = x
            for li in range(L):
                slot = <long long> y * L + li
                e2 = table[slot]
                if not e2:
                    continue
                e2 = _find(eparent, e2 - 1)
                slot = <long long> x * L + li
                if table[slot]:
                    h = _find(eparent, table[slot] - 1)
                    if h != e2:
                        if top == cap:
                            cap *= 2
                            stack_a = <int*> realloc(stack_a, cap * sizeof(int))
                            stack_b = <int*> realloc(stack_b, cap * sizeof(int))
                            if stack_a == NULL or stack_b == NULL:
                                raise MemoryError()
                        stack_a[top] = h
                        stack_b[top] = e2
                        top += 1
                else:
                    table[slot] = e2 + 1

        vrep = [0] * n_vertices
        for i in range(n_vertices):
            vrep[i] = _find(vparent, <int> i)
        erep = [0] * m2
        for i in range(m2):
            erep[i] = _find(eparent, <int> i)
        return vrep, erep
    finally:
        free(ein); free(lab); free(vparent); free(eparent)
        free(table); free(stack_a); free(stack_b)
