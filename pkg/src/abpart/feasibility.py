"""Degree predicates on vertex subsets, decided by greedy peeling.

For a demand function ``f`` (a sequence indexed by vertex, or one int for
all vertices) and a subset ``X``:

* ``X`` is f-feasible if every member has at least ``f(x)`` edges into ``X``;
* f-nice if every member has at least ``f(x) + mu(x) - 1`` such edges,
  where ``mu`` is the vertex weight in the whole graph;
* f-degenerate if every nonempty subset has a member of internal degree at
  most ``f(x)``; f-meager likewise with ``f(x) + mu(x) - 1``.

Degenerate/meager are decided by peeling, feasible/nice cores by peeling at
one below the demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import _backend
from .multigraph import Multigraph, vertex_set

Demand = Union[int, Sequence[int]]

__all__ = [
    "PeelResult",
    "demand_list",
    "peel",
    "is_f_feasible",
    "is_f_nice",
    "is_f_degenerate",
    "is_f_meager",
    "max_f_feasible_core",
    "max_f_nice_core",
    "minimal_f_nice_subset",
    "contains_f_feasible",
]


@dataclass(frozen=True)
class PeelResult:
    succeeded: bool
    order: tuple[int, ...]
    stuck_set: frozenset[int]


def demand_list(g: Multigraph, f: Demand) -> list[int]:
    if isinstance(f, int):
        return [f] * g.n
    out = [int(x) for x in f]
    if len(out) != g.n:
        raise ValueError(f"demand has length {len(out)}, graph has {g.n} vertices")
    return out


def _nice_threshold(g: Multigraph, f: Demand) -> list[int]:
    return [fx + g.vertex_weight(v) - 1 for v, fx in enumerate(demand_list(g, f))]


def _members(g: Multigraph, X: Iterable[int] | None) -> bytearray:
    mem = bytearray(g.n)
    for v in vertex_set(g, X):
        mem[v] = 1
    return mem


def _peel(g: Multigraph, X, threshold: list[int]) -> PeelResult:
    indptr, indices, weights = g.csr()
    ok, order, stuck = _backend.peel(indptr, indices, weights, _members(g, X), threshold)
    return PeelResult(ok, tuple(order), frozenset(stuck))


def peel(g: Multigraph, X: Iterable[int] | None, threshold: Demand) -> PeelResult:
    """Remove, smallest id first, any vertex whose degree inside the
    remaining set is at most its threshold.

    Succeeds iff the set empties. Otherwise ``stuck_set`` is the terminal
    set, in which every vertex exceeds its threshold. Success does not
    depend on the removal order.
    """
    return _peel(g, X, demand_list(g, threshold))


def is_f_feasible(g: Multigraph, X: Iterable[int] | None, f: Demand) -> bool:
    X = vertex_set(g, X)
    fl = demand_list(g, f)
    return all(g.degree_within(x, X) >= fl[x] for x in X)


def is_f_nice(g: Multigraph, X: Iterable[int] | None, f: Demand) -> bool:
    X = vertex_set(g, X)
    thr = _nice_threshold(g, f)
    return all(g.degree_within(x, X) >= thr[x] for x in X)


def is_f_degenerate(g: Multigraph, X: Iterable[int] | None, f: Demand) -> bool:
    return _peel(g, X, demand_list(g, f)).succeeded


def is_f_meager(g: Multigraph, X: Iterable[int] | None, f: Demand) -> bool:
    return _peel(g, X, _nice_threshold(g, f)).succeeded


def max_f_feasible_core(g: Multigraph, X: Iterable[int] | None, f: Demand) -> frozenset[int]:
    """Largest f-feasible subset of ``X`` (empty iff ``X`` is (f-1)-degenerate)."""
    return _peel(g, X, [fx - 1 for fx in demand_list(g, f)]).stuck_set


def max_f_nice_core(g: Multigraph, X: Iterable[int] | None, f: Demand) -> frozenset[int]:
    return _peel(g, X, [t - 1 for t in _nice_threshold(g, f)]).stuck_set


def minimal_f_nice_subset(
    g: Multigraph, f: Demand, order: Sequence[int] | None = None
) -> frozenset[int] | None:
    """An inclusion-minimal nonempty f-nice subset, or ``None``.

    Starts from the nice core of the whole graph and keeps replacing the
    current set ``S`` by the nice core of ``S - {v}`` whenever that is
    nonempty. Candidates ``v`` are scanned in ``order`` (ascending id by
    default). On return no ``S - {v}`` contains an f-nice subset.
    """
    thr = [t - 1 for t in _nice_threshold(g, f)]
    scan = list(range(g.n)) if order is None else list(order)
    S = _peel(g, None, thr).stuck_set
    if not S:
        return None
    shrunk = True
    while shrunk:
        shrunk = False
        for v in scan:
            if v not in S:
                continue
            core = _peel(g, S - {v}, thr).stuck_set
            if core:
                S = core
                shrunk = True
                break
    return S


def contains_f_feasible(g: Multigraph, X: Iterable[int] | None, f: Demand) -> bool:
    return bool(max_f_feasible_core(g, X, f))
