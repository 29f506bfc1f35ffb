"""Pure-Python kernels. Reference behaviour for the compiled ``_kernels``.

Both implementations take the graph in CSR form (``indptr``, ``indices``,
``weights`` as ``array('q')``) and must return identical results.
"""
from __future__ import annotations

from heapq import heapify, heappop, heappush


def peel(indptr, indices, weights, members, threshold):
    """Repeatedly delete the smallest-id member whose degree inside the
    current set is at most ``threshold[v]``.

    Returns ``(succeeded, order, stuck)``; ``stuck`` lists the survivors.
    """
    n = len(members)
    alive = bytearray(members)
    deg = [0] * n
    for v in range(n):
        if alive[v]:
            s = 0
            for k in range(indptr[v], indptr[v + 1]):
                if alive[indices[k]]:
                    s += weights[k]
            deg[v] = s

    queued = bytearray(n)
    heap = []
    for v in range(n):
        if alive[v] and deg[v] <= threshold[v]:
            heap.append(v)
            queued[v] = 1
    heapify(heap)

    order = []
    while heap:
        v = heappop(heap)
        alive[v] = 0
        order.append(v)
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if alive[u]:
                deg[u] -= weights[k]
                if not queued[u] and deg[u] <= threshold[u]:
                    queued[u] = 1
                    heappush(heap, u)

    stuck = [v for v in range(n) if alive[v]]
    return not stuck, order, stuck


def first_feasible_split(indptr, indices, weights, a, b):
    """Smallest mask in ``1 .. 2**n - 2`` whose set bits (side A) and clear
    bits (side B) form an (a,b)-feasible split, or -1.

    Walks masks in ascending order, flipping the bits that change between
    consecutive integers and updating side degrees incrementally.
    """
    n = len(a)
    deg = [0] * n
    for v in range(n):
        s = 0
        for k in range(indptr[v], indptr[v + 1]):
            s += weights[k]
        deg[v] = s

    in_a = bytearray(n)
    d_a = [0] * n
    ok = bytearray(n)
    bad = 0
    for v in range(n):
        if deg[v] >= b[v]:
            ok[v] = 1
        else:
            bad += 1

    def refresh(x):
        nonlocal bad
        if in_a[x]:
            now = d_a[x] >= a[x]
        else:
            now = deg[x] - d_a[x] >= b[x]
        if now != ok[x]:
            ok[x] = now
            bad += -1 if now else 1

    last = (1 << n) - 2
    mask = 0
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
                refresh(v)
                for k in range(indptr[v], indptr[v + 1]):
                    refresh(indices[k])
            changed >>= 1
            v += 1
        if bad == 0:
            return mask
    return -1
