"""Exhaustive ground truth, written straight from the definitions.

Nothing here touches the peeling kernels, the partition caches or the
solver: the only shared piece is ``Multigraph``, read through ``n`` and
``edges()``. Every function has a hard size cap and raises ``ValueError``
above it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .multigraph import Instance, Multigraph

__all__ = [
    "OracleVerdict",
    "brute_partition",
    "brute_degenerate",
    "brute_minimal_nice",
    "brute_feasible_pair",
    "MAX_PARTITION_N",
    "MAX_SUBSET_N",
    "MAX_PAIR_N",
]

MAX_PARTITION_N = 20
MAX_SUBSET_N = 16
MAX_PAIR_N = 13


@dataclass(frozen=True)
class OracleVerdict:
    feasible: bool
    A: frozenset[int] | None = None
    B: frozenset[int] | None = None


def _layers(g: Multigraph) -> tuple[list[list[int]], list[int]]:
    """``layers[k][v]``: bitmask of neighbours joined to ``v`` by more than
    ``k`` edges; so the edge count from ``v`` into mask ``S`` is
    ``sum_k popcount(layers[k][v] & S)``. Also returns vertex weights."""
    n = g.n
    mu = [0] * n
    edges = g.edges()
    top = max((m for _, _, m in edges), default=0)
    layers = [[0] * n for _ in range(top)]
    for u, v, m in edges:
        mu[u] = max(mu[u], m)
        mu[v] = max(mu[v], m)
        for k in range(m):
            layers[k][u] |= 1 << v
            layers[k][v] |= 1 << u
    return layers, mu


def _deg_in(layers, v: int, S: int) -> int:
    return sum((layer[v] & S).bit_count() for layer in layers)


def _satisfies(layers, S: int, need: Sequence[int]) -> bool:
    v = 0
    s = S
    while s:
        if s & 1 and _deg_in(layers, v, S) < need[v]:
            return False
        s >>= 1
        v += 1
    return True


def _bits(S: int) -> frozenset[int]:
    return frozenset(v for v in range(S.bit_length()) if S >> v & 1)


def _demand(g: Multigraph, f) -> list[int]:
    return [f] * g.n if isinstance(f, int) else list(f)


def brute_partition(instance: Instance) -> OracleVerdict:
    """First (a,b)-feasible split by ascending mask of side A, else
    infeasible. Each split is checked from scratch."""
    g, spec = instance.graph, instance.spec
    n = g.n
    if n > MAX_PARTITION_N:
        raise ValueError(f"brute_partition is capped at n={MAX_PARTITION_N}")
    layers, _ = _layers(g)
    full = (1 << n) - 1
    for S in range(1, full):
        if _satisfies(layers, S, spec.a) and _satisfies(layers, full ^ S, spec.b):
            return OracleVerdict(True, _bits(S), _bits(full ^ S))
    return OracleVerdict(False)


def brute_degenerate(g: Multigraph, X, f) -> bool:
    """Every nonempty subset of ``X`` has a vertex of internal degree <= f."""
    members = sorted(set(X))
    if len(members) > MAX_SUBSET_N:
        raise ValueError(f"brute_degenerate is capped at |X|={MAX_SUBSET_N}")
    layers, _ = _layers(g)
    fl = _demand(g, f)
    k = len(members)
    for sel in range(1, 1 << k):
        S = 0
        for i in range(k):
            if sel >> i & 1:
                S |= 1 << members[i]
        if not any(_deg_in(layers, v, S) <= fl[v] for v in _bits(S)):
            return False
    return True


def brute_minimal_nice(g: Multigraph, f) -> frozenset[int] | None:
    """Minimum-cardinality f-nice subset, lexicographically least among
    ties (compared as sorted vertex tuples), or ``None``."""
    n = g.n
    if n > MAX_SUBSET_N:
        raise ValueError(f"brute_minimal_nice is capped at n={MAX_SUBSET_N}")
    layers, mu = _layers(g)
    need = [fx + mu[v] - 1 for v, fx in enumerate(_demand(g, f))]
    best = None
    for S in range(1, 1 << n):
        if _satisfies(layers, S, need):
            key = (S.bit_count(), tuple(sorted(_bits(S))))
            if best is None or key < best:
                best = key
    return None if best is None else frozenset(best[1])


def brute_feasible_pair(instance: Instance) -> tuple[frozenset[int], frozenset[int]] | None:
    """Some disjoint nonempty ``(X, Y)`` with X a-feasible, Y b-feasible.

    Exhausts all a-feasible X; a subset-closure table over every mask tells
    whether the complement of X contains a nonempty b-feasible Y.
    """
    g, spec = instance.graph, instance.spec
    n = g.n
    if n > MAX_PAIR_N:
        raise ValueError(f"brute_feasible_pair is capped at n={MAX_PAIR_N}")
    layers, _ = _layers(g)
    size = 1 << n
    # holds[M] = some nonempty b-feasible subset of M (0 if none)
    holds = [0] * size
    for M in range(1, size):
        if _satisfies(layers, M, spec.b):
            holds[M] = M
            continue
        for v in range(n):
            if M >> v & 1 and holds[M ^ (1 << v)]:
                holds[M] = holds[M ^ (1 << v)]
                break
    full = size - 1
    for X in range(1, size):
        if _satisfies(layers, X, spec.a) and holds[full ^ X]:
            return _bits(X), _bits(holds[full ^ X])
    return None
