"""End-to-end search for (a,b)-feasible partitions.

Pipeline: validate the instance, seed from a minimal a-nice set, complete
a feasible pair to a partition when the seed yields one, repair with a
local search over single moves and swaps, and fall back to exhaustive
split enumeration for small graphs. Only the exhaustive routes may report
``infeasible``; heuristics that run out of budget report ``unknown``.
"""
from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import _backend
from .feasibility import is_f_feasible, max_f_feasible_core, minimal_f_nice_subset
from .multigraph import DegreeSpec, Instance, Multigraph, vertex_set
from .partition import (
    Partition,
    classify_sides,
    deficiency,
    is_feasible_partition,
    omega,
)
from .patterns import PatternWitness, find_quad_sharing

__all__ = [
    "Instance",
    "Violation",
    "FeasiblePair",
    "SolveOptions",
    "SolveStats",
    "SolveReport",
    "ExactResult",
    "FEASIBLE",
    "INFEASIBLE",
    "UNKNOWN",
    "DEFAULT_MAX_EXACT",
    "validate",
    "seed_partition",
    "complete_pair",
    "local_search",
    "exact_solve",
    "solve",
]

log = logging.getLogger(__name__)

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNKNOWN = "unknown"

DEFAULT_MAX_EXACT = 22
DEFAULT_RESTARTS = 8


def default_budget(n: int) -> int:
    return 200 * n * n


@dataclass(frozen=True)
class Violation:
    kind: str  # "size", "range", "degree" or "structure"
    vertex: int | None
    message: str
    witness: PatternWitness | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertex": self.vertex, "message": self.message}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


@dataclass(frozen=True)
class FeasiblePair:
    X: frozenset[int]
    Y: frozenset[int]


@dataclass
class SolveOptions:
    strict: bool = False
    seed: int = 0
    budget: int | None = None
    max_exact: int = DEFAULT_MAX_EXACT
    restarts: int = DEFAULT_RESTARTS


@dataclass
class SolveStats:
    seed_branch: str = ""
    restarts: int = 0
    moves: int = 0
    exact_ran: bool = False
    exhaustive: bool = False
    aborted: bool = False


@dataclass
class SolveReport:
    status: str
    partition: Partition | None
    deficiency: int | None
    stats: SolveStats = field(default_factory=SolveStats)
    violations: list[Violation] = field(default_factory=list)

    def to_json(self) -> dict:
        p = self.partition
        return {
            "status": self.status,
            "A": sorted(p.A) if p is not None else [],
            "B": sorted(p.B) if p is not None else [],
            "deficiency": self.deficiency,
            "stats": asdict(self.stats),
            "violations": [v.to_json() for v in self.violations],
        }


@dataclass(frozen=True)
class ExactResult:
    feasible: bool
    partition: Partition | None = None


def validate(instance: Instance, strict: bool = True) -> list[Violation]:
    """Range, degree and (strict mode) structure hypotheses.

    In non-strict mode a structure failure is only logged.
    """
    g, spec = instance.graph, instance.spec
    out: list[Violation] = []
    if g.n < 2:
        out.append(Violation("size", None, f"need at least 2 vertices, got {g.n}"))
    for v in range(g.n):
        for name, val in (("a", spec.a[v]), ("b", spec.b[v])):
            if val < 2:
                out.append(Violation("range", v, f"{name}({v}) = {val} < 2"))
    for v in range(g.n):
        need = spec.a[v] + spec.b[v] + 2 * g.vertex_weight(v) - 3
        if g.degree(v) < need:
            out.append(
                Violation("degree", v, f"d({v}) = {g.degree(v)} < a+b+2mu-3 = {need}")
            )
    w = find_quad_sharing(g)
    if w is not None:
        msg = f"{w.kind} on edge {w.shared_edge}"
        if strict:
            out.append(Violation("structure", None, msg, w))
        else:
            log.warning("structure hypothesis fails: %s", msg)
    return out


def seed_partition(
    instance: Instance, order: Sequence[int] | None = None
) -> Partition | FeasiblePair:
    """Start point built from a minimal a-nice set ``S``.

    With ``T`` the rest of the graph: if ``T`` has a nonempty b-feasible
    core, ``(S, core)`` is returned as a feasible pair. Otherwise the vertex
    of ``S`` with fewest edges into ``T`` is moved across and the
    resulting partition returned. ``order`` sets scan order and
    tie-breaks (ascending id by default).
    """
    g, spec = instance.graph, instance.spec
    if g.n < 2:
        raise ValueError("a partition needs at least 2 vertices")
    order = list(range(g.n)) if order is None else list(order)
    pos = {v: i for i, v in enumerate(order)}
    S = minimal_f_nice_subset(g, spec.a, order)
    if S is None:
        return Partition(g, [order[0]])
    T = frozenset(range(g.n)) - S
    if T and is_f_feasible(g, S, spec.a):
        core = max_f_feasible_core(g, T, spec.b)
        if core:
            return FeasiblePair(S, core)
    v = min(S, key=lambda x: (g.degree_within(x, T), pos[x]))
    A = S - {v}
    if not A or len(A) == g.n:
        return Partition(g, [order[0]])
    return Partition(g, A)


def _assign_leftovers(instance: Instance, X, Y) -> Partition:
    g, spec = instance.graph, instance.spec
    A, B = set(X), set(Y)
    rest = [v for v in range(g.n) if v not in A and v not in B]
    rest.sort(key=lambda v: (-g.degree(v), v))
    for v in rest:
        slack_a = g.degree_within(v, A) - spec.a[v]
        slack_b = g.degree_within(v, B) - spec.b[v]
        (A if slack_a >= slack_b else B).add(v)
    return Partition(g, A)


# --- local search -----------------------------------------------------------


def _shortfall(p: Partition, spec: DegreeSpec, v: int) -> int:
    if p.in_b[v]:
        return max(0, spec.b[v] - p.d_B[v])
    return max(0, spec.a[v] - p.d_A[v])


def _deficiency_change(g: Multigraph, p: Partition, spec: DegreeSpec, moved: tuple[int, ...]) -> int:
    touched = set(moved)
    for v in moved:
        touched.update(g.neighbors(v))
    before = sum(_shortfall(p, spec, x) for x in touched)
    for v in moved:
        p.move(v)
    after = sum(_shortfall(p, spec, x) for x in touched)
    for v in moved:
        p.move(v)
    return after - before


def _omega_change(g: Multigraph, p: Partition, spec: DegreeSpec, moved: tuple[int, ...]) -> int:
    d = 0
    for v in moved:
        if p.in_b[v]:
            d += p.d_A[v] - p.d_B[v] + spec.b[v] - spec.a[v]
        else:
            d += p.d_B[v] - p.d_A[v] + spec.a[v] - spec.b[v]
    if len(moved) == 2:
        d -= 2 * g.multiplicity(*moved)
    return d


def _first_improving(g: Multigraph, p: Partition, spec: DegreeSpec):
    """First move that lowers deficiency, or keeps it and raises omega.

    Vertices short of their demand come first, then the remaining
    under-threshold ones, then the rest; singles before swaps.
    """
    cls = classify_sides(g, p, spec)
    deficient = cls.D_A | cls.D_B
    minus = cls.A_minus | cls.B_minus
    rank = [0 if v in deficient else 1 if v in minus else 2 for v in range(g.n)]
    by_rank = sorted(range(g.n), key=lambda v: (rank[v], v))

    for v in by_rank:
        if (p.size_b if p.in_b[v] else p.size_a) < 2:
            continue
        mv = (v,)
        dd = _deficiency_change(g, p, spec, mv)
        if dd < 0 or (dd == 0 and _omega_change(g, p, spec, mv) > 0):
            return mv, dd, _omega_change(g, p, spec, mv)

    side_a = [v for v in by_rank if not p.in_b[v]]
    side_b = [v for v in by_rank if p.in_b[v]]
    pairs = sorted(
        ((u, v) for u in side_a for v in side_b),
        key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]]), e),
    )
    for mv in pairs:
        dd = _deficiency_change(g, p, spec, mv)
        if dd < 0:
            return mv, dd, _omega_change(g, p, spec, mv)
        if dd == 0:
            dw = _omega_change(g, p, spec, mv)
            if dw > 0:
                return mv, dd, dw
    return None


def _descend(g, p, spec, budget: int, stats: SolveStats) -> None:
    defi = deficiency(g, p, spec)
    while defi > 0 and stats.moves < budget:
        step = _first_improving(g, p, spec)
        if step is None:
            return
        mv, dd, _ = step
        for v in mv:
            p.move(v)
        defi += dd
        stats.moves += 1


def _random_split(g: Multigraph, rng: random.Random) -> Partition:
    n = g.n
    A = [v for v in range(n) if rng.random() < 0.5]
    if not A:
        A = [rng.randrange(n)]
    elif len(A) == n:
        A.remove(rng.choice(A))
    return Partition(g, A)


def local_search(
    instance: Instance,
    start: Partition,
    budget: int | None = None,
    rng_seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    stats: SolveStats | None = None,
) -> Partition:
    """Lower deficiency (then raise omega) by first-improvement moves.

    Moves are the single transfers and swaps whose omega changes are the
    exchange identities. When no move improves, the search restarts from
    ``seed_partition`` under a random vertex order (or a random split if
    that start was already tried). Returns the best partition seen; its
    deficiency never exceeds the start's.
    """
    g, spec = instance.graph, instance.spec
    stats = SolveStats() if stats is None else stats
    budget = default_budget(g.n) if budget is None else budget
    limit = stats.moves + budget
    rng = random.Random(rng_seed)

    def score(q: Partition) -> tuple[int, int]:
        return deficiency(g, q, spec), -omega(g, q, spec)

    best = start.copy()
    best_score = score(best)
    seen = {start.key()}
    p = start.copy()
    for attempt in range(restarts + 1):
        _descend(g, p, spec, limit, stats)
        s = score(p)
        if s < best_score:
            best, best_score = p.copy(), s
        if best_score[0] == 0 or stats.moves >= limit or attempt == restarts:
            break
        stats.restarts += 1
        order = list(range(g.n))
        rng.shuffle(order)
        seeded = seed_partition(instance, order)
        if isinstance(seeded, FeasiblePair):
            seeded = _assign_leftovers(instance, seeded.X, seeded.Y)
        if seeded.key() in seen:
            seeded = _random_split(g, rng)
        seen.add(seeded.key())
        p = seeded
    return best


# --- exhaustive fallback ------------------------------------------------------


def exact_solve(instance: Instance, max_exact: int = DEFAULT_MAX_EXACT) -> ExactResult:
    """Enumerate splits by ascending mask of side A; first feasible wins.

    An infeasible result is a certified negative.
    """
    g, spec = instance.graph, instance.spec
    if g.n > max_exact:
        raise ValueError(f"exact_solve is capped at n={max_exact}, got n={g.n}")
    if g.n < 2:
        return ExactResult(False)
    indptr, indices, weights = g.csr()
    mask = _backend.first_feasible_split(indptr, indices, weights, list(spec.a), list(spec.b))
    if mask < 0:
        return ExactResult(False)
    return ExactResult(True, Partition.from_mask(g, mask))


# --- pipeline -----------------------------------------------------------------


def _verified(instance: Instance, p: Partition) -> Partition:
    fresh = Partition(instance.graph, p.A)
    if not is_feasible_partition(instance.graph, fresh, instance.spec):
        raise AssertionError(f"returned partition is not feasible: {p!r}")
    return fresh


def _finish(instance: Instance, start: Partition, opts: SolveOptions, stats: SolveStats) -> SolveReport:
    g, spec = instance.graph, instance.spec
    best = local_search(instance, start, opts.budget, opts.seed, opts.restarts, stats)
    if is_feasible_partition(g, best, spec):
        return SolveReport(FEASIBLE, _verified(instance, best), 0, stats)
    if g.n <= opts.max_exact:
        stats.exact_ran = True
        res = exact_solve(instance, opts.max_exact)
        stats.exhaustive = True
        if res.feasible:
            return SolveReport(FEASIBLE, _verified(instance, res.partition), 0, stats)
        return SolveReport(INFEASIBLE, best, deficiency(g, best, spec), stats)
    return SolveReport(UNKNOWN, best, deficiency(g, best, spec), stats)


def complete_pair(
    instance: Instance,
    X,
    Y,
    options: SolveOptions | None = None,
) -> Partition:
    """Extend a feasible pair ``(X, Y)`` to a partition of all vertices.

    Leftover vertices go, highest degree first, to the side where their
    slack (edges into the side minus demand) is larger, ties to A. The
    result is then repaired by local search and, for small graphs, by
    exhaustive search. Returns the best partition found, which is
    feasible whenever one was reached.
    """
    g, spec = instance.graph, instance.spec
    X, Y = vertex_set(g, X), vertex_set(g, Y)
    if not X or not Y or X & Y:
        raise ValueError("pair sides must be nonempty and disjoint")
    if not is_f_feasible(g, X, spec.a) or not is_f_feasible(g, Y, spec.b):
        raise ValueError("pair is not (a,b)-feasible")
    opts = options or SolveOptions()
    start = _assign_leftovers(instance, X, Y)
    rep = _finish(instance, start, opts, SolveStats())
    return rep.partition


def solve(instance: Instance, options: SolveOptions | None = None) -> SolveReport:
    opts = options or SolveOptions()
    g = instance.graph
    stats = SolveStats()
    violations = validate(instance, strict=opts.strict)
    if opts.strict and violations:
        stats.aborted = True
        return SolveReport(UNKNOWN, None, None, stats, violations)
    if g.n < 2:
        stats.exhaustive = True
        return SolveReport(INFEASIBLE, None, None, stats, violations)

    seeded = seed_partition(instance)
    if isinstance(seeded, FeasiblePair):
        stats.seed_branch = "pair"
        start = _assign_leftovers(instance, seeded.X, seeded.Y)
    else:
        stats.seed_branch = "partition"
        start = seeded
    rep = _finish(instance, start, opts, stats)
    rep.violations = violations
    return rep
