# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``abpart._kernels_py``."""

from libc.stdlib cimport malloc, calloc, free


def peel(const long long[:] indptr, const long long[:] indices,
         const long long[:] weights, members, threshold):
    cdef Py_ssize_t n = len(members)
    cdef Py_ssize_t v, u, k, best
    cdef char *alive = <char *> calloc(n + 1, 1)
    cdef char *removable = <char *> calloc(n + 1, 1)
    cdef long long *deg = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long *thr = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long s
    cdef Py_ssize_t pending = 0
    if alive == NULL or removable == NULL or deg == NULL or thr == NULL:
        free(alive); free(removable); free(deg); free(thr)
        raise MemoryError()
    order = []
    try:
        for v in range(n):
            alive[v] = 1 if members[v] else 0
            thr[v] = threshold[v]
        for v in range(n):
            if alive[v]:
                s = 0
                for k in range(indptr[v], indptr[v + 1]):
                    if alive[indices[k]]:
                        s += weights[k]
                deg[v] = s
                if s <= thr[v]:
                    removable[v] = 1
                    pending += 1
        # removability is monotone, so the smallest removable id is found
        # by a forward scan that restarts only when a smaller id unlocks
        best = 0
        while pending:
            while not removable[best]:
                best += 1
            v = best
            removable[v] = 0
            pending -= 1
            alive[v] = 0
            order.append(v)
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if alive[u]:
                    deg[u] -= weights[k]
                    if not removable[u] and deg[u] <= thr[u]:
                        removable[u] = 1
                        pending += 1
                        if u < best:
                            best = u
        stuck = [v for v in range(n) if alive[v]]
    finally:
        free(alive); free(removable); free(deg); free(thr)
    return len(stuck) == 0, order, stuck


def first_feasible_split(const long long[:] indptr, const long long[:] indices,
                         const long long[:] weights, a, b):
    cdef Py_ssize_t n = len(a)
    if n > 62:
        raise ValueError("split enumeration supports at most 62 vertices")
    cdef Py_ssize_t v, k, x, j
    cdef long long *deg = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long *d_a = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long *ca = <long long *> calloc(n + 1, sizeof(long long))
    cdef long long *cb = <long long *> calloc(n + 1, sizeof(long long))
    cdef char *in_a = <char *> calloc(n + 1, 1)
    cdef char *ok = <char *> calloc(n + 1, 1)
    cdef long long bad = 0
    cdef unsigned long long mask = 0, last, changed
    cdef long long result = -1
    cdef long long s
    cdef char now
    if (deg == NULL or d_a == NULL or ca == NULL or cb == NULL
            or in_a == NULL or ok == NULL):
        free(deg); free(d_a); free(ca); free(cb); free(in_a); free(ok)
        raise MemoryError()
    try:
        for v in range(n):
            ca[v] = a[v]
            cb[v] = b[v]
            s = 0
            for k in range(indptr[v], indptr[v + 1]):
                s += weights[k]
            deg[v] = s
            if s >= cb[v]:
                ok[v] = 1
            else:
                bad += 1
        last = (<unsigned long long> 1 << n) - 2
        with nogil:
            while mask < last:
                mask += 1
                changed = mask ^ (mask - 1)
                v = 0
                while changed:
                    if changed & 1:
                        if in_a[v]:
                            in_a[v] = 0
                            for k in range(indptr[v], indptr[v + 1]):
                                d_a[indices[k]] -= weights[k]
                        else:
                            in_a[v] = 1
                            for k in range(indptr[v], indptr[v + 1]):
                                d_a[indices[k]] += weights[k]
                        for j in range(indptr[v] - 1, indptr[v + 1]):
                            if j < indptr[v]:
                                x = v
                            else:
                                x = indices[j]
                            if in_a[x]:
                                now = d_a[x] >= ca[x]
                            else:
                                now = deg[x] - d_a[x] >= cb[x]
                            if now != ok[x]:
                                ok[x] = now
                                if now:
                                    bad -= 1
                                else:
                                    bad += 1
                    changed >>= 1
                    v += 1
                if bad == 0:
                    result = <long long> mask
                    break
    finally:
        free(deg); free(d_a); free(ca); free(cb); free(in_a); free(ok)
    return result
