"""Seeded instance generators and bundled fixtures."""
from __future__ import annotations

import random
from heapq import heapify, heappop, heappush
from math import comb

from .multigraph import DegreeSpec, Instance, Multigraph
from .patterns import edge_breaks_hypothesis

__all__ = [
    "FAMILIES",
    "gen_structure",
    "inflate_multiplicities",
    "assign_spec",
    "fixtures",
    "fixture",
    "petersen",
    "robertson",
    "cycle",
]

GIRTH5 = "girth5"
C4_FREE = "c4-free"
TRIANGLE_FREE_C4_DISJOINT = "triangle-free-c4-disjoint"
HYPOTHESIS = "hypothesis"
FAMILIES = (GIRTH5, C4_FREE, TRIANGLE_FREE_C4_DISJOINT, HYPOTHESIS)


def _rejects(family: str, nb: list[set[int]], u: int, v: int) -> bool:
    """Whether adding ``uv`` (not yet inserted) leaves the family."""
    has_triangle = bool(nb[u] & nb[v])
    has_quad = any(nb[p] & nb[v] for p in nb[u] if p != v)
    if family == GIRTH5:
        return has_triangle or has_quad
    if family == C4_FREE:
        return has_quad
    if family == TRIANGLE_FREE_C4_DISJOINT and has_triangle:
        return True
    nb[u].add(v)
    nb[v].add(u)
    bad = edge_breaks_hypothesis(nb, u, v)
    nb[u].discard(v)
    nb[v].discard(u)
    return bad


def gen_structure(n: int, density: float, rng_seed: int, family: str = HYPOTHESIS) -> Multigraph:
    """Random simple graph in ``family`` by edge insertion with rejection.

    ``round(density * C(n, 2))`` candidate pairs are tried. Each attempt
    takes the untried pair whose endpoints have the smallest current
    degrees (random tie-break), which pushes the minimum degree up; the
    pair is kept only if the graph stays in the family. Every family also
    satisfies the quadrilateral-sharing hypothesis.
    """
    family = family.lower()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 0 < density <= 1:
        raise ValueError("density must lie in (0, 1]")
    rng = random.Random(rng_seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    tiebreak = {e: rng.random() for e in pairs}
    nb: list[set[int]] = [set() for _ in range(n)]

    def key(e: tuple[int, int]) -> tuple[int, int, float]:
        du, dv = len(nb[e[0]]), len(nb[e[1]])
        return (min(du, dv), max(du, dv), tiebreak[e])

    # keys never decrease, so a lazily refreshed heap yields the true minimum
    heap = [(key(e), e) for e in pairs]
    heapify(heap)
    edges = []
    for _ in range(round(density * comb(n, 2))):
        while heap:
            k, e = heappop(heap)
            fresh = key(e)
            if fresh == k:
                break
            heappush(heap, (fresh, e))
        else:
            break
        u, v = e
        if _rejects(family, nb, u, v):
            continue
        nb[u].add(v)
        nb[v].add(u)
        edges.append((u, v))
    return Multigraph(n, sorted(edges))


def inflate_multiplicities(g: Multigraph, max_mult: int, rng_seed: int) -> Multigraph:
    """Raise each edge's multiplicity to a uniform draw from
    ``[1, max_mult]`` (never lowering it). Adjacency is unchanged."""
    if max_mult < 1:
        raise ValueError("max_mult must be at least 1")
    rng = random.Random(rng_seed)
    return Multigraph(g.n, [(u, v, max(m, rng.randint(1, max_mult))) for u, v, m in g.edges()])


def assign_spec(g: Multigraph, rng_seed: int) -> DegreeSpec | None:
    """Random demands meeting ``d(v) >= a(v) + b(v) + 2 mu(v) - 3``.

    With budget ``s(v) = d(v) - 2 mu(v) + 3``, draws ``a(v)`` from
    ``[2, s(v) - 2]`` and ``b(v)`` from ``[2, s(v) - a(v)]``. Returns
    ``None`` when some vertex has ``s(v) < 4``.
    """
    rng = random.Random(rng_seed)
    budgets = [g.degree(v) - 2 * g.vertex_weight(v) + 3 for v in range(g.n)]
    if any(s < 4 for s in budgets):
        return None
    a, b = [], []
    for s in budgets:
        x = rng.randint(2, s - 2)
        a.append(x)
        b.append(rng.randint(2, s - x))
    return DegreeSpec(a, b)


# --- fixtures -----------------------------------------------------------------


def cycle(n: int) -> Multigraph:
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Multigraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes ``i -- i+5``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Multigraph(10, outer + inner + spokes)


_ROBERTSON_CHORDS = (8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4)


def robertson() -> Multigraph:
    """The (4,5)-cage: Hamiltonian 19-cycle plus one chord per vertex."""
    n = 19
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + s) % n) for i, s in enumerate(_ROBERTSON_CHORDS)]
    return Multigraph(n, edges)


def _doubled(g: Multigraph, u: int, v: int) -> Multigraph:
    return Multigraph(g.n, [(x, y, m + (1 if (x, y) == (u, v) else 0)) for x, y, m in g.edges()])


def _l3() -> Multigraph:
    # 4-cycles 0-1-2-3 and 0-1-4-5 glued on edge 01
    return Multigraph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)])


def _k23() -> Multigraph:
    return Multigraph(5, [(p, x) for p in (0, 1) for x in (2, 3, 4)])


def fixtures() -> dict[str, Instance]:
    """Named instances. Every spec is constant; see the names."""

    def const(g: Multigraph, a: int, b: int) -> Instance:
        return Instance(g, DegreeSpec.constant(g.n, a, b))

    out = {
        "petersen": const(petersen(), 2, 2),
        "robertson": const(robertson(), 2, 2),
        "robertson-doubled": const(_doubled(robertson(), 0, 1), 2, 2),
        "triangle-ab2": const(cycle(3), 2, 2),
        "k23": const(_k23(), 2, 2),
        "l3": const(_l3(), 2, 2),
    }
    for k in (5, 6, 7, 8, 9):
        out[f"c{k}-tight-degree"] = const(cycle(k), 2, 2)
        out[f"c{k}-tight-range"] = const(cycle(k), 1, 2)
    return out


def fixture(name: str) -> Instance:
    table = fixtures()
    if name not in table:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(table))}")
    return table[name]
