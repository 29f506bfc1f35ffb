"""Forbidden-structure detection on the underlying simple graph.

Two formulations of the same hypothesis:

* no 4-cycle shares an edge with a triangle or with another 4-cycle
  (``find_quad_sharing`` / ``hypothesis_holds``);
* no subgraph (not necessarily induced) isomorphic to K4-, C5+, K2,3 or
  L3 (``find_forbidden``).

Parallel edges are ignored: cycles live on distinct vertices and adjacency
is what matters.

Witness vertex conventions (``PatternWitness.vertices``):

``K4Minus``  ``(u, v, w, z)``: ``uv`` is the edge present in both
             triangles, ``w`` and ``z`` are adjacent to ``u`` and ``v``.
``C5Plus``   ``(c0, c1, c2, c3, c4)``: 5-cycle in this order, chord ``c0c2``.
``K23``      ``(p, q, x, y, z)``: ``p`` and ``q`` adjacent to each of x, y, z.
``L3``       ``(u, v, w1, x1, w2, x2)``: 4-cycles ``u v w1 x1`` and
             ``u v w2 x2`` glued on ``uv``.
Share kinds  the 4-cycle in cycle order followed by the other cycle's
             vertices not already listed; ``cycles`` holds both cycles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .multigraph import Multigraph

__all__ = [
    "K4_MINUS",
    "C5_PLUS",
    "K23",
    "L3",
    "QUAD_TRIANGLE",
    "QUAD_QUAD",
    "PatternWitness",
    "find_forbidden",
    "find_quad_sharing",
    "hypothesis_holds",
    "witness_edges",
    "triangles",
    "quadrilaterals",
    "quads_through",
    "edge_breaks_hypothesis",
]

K4_MINUS = "K4Minus"
C5_PLUS = "C5Plus"
K23 = "K23"
L3 = "L3"
QUAD_TRIANGLE = "QuadTriangleShare"
QUAD_QUAD = "QuadQuadShare"


@dataclass(frozen=True)
class PatternWitness:
    kind: str
    vertices: tuple[int, ...]
    shared_edge: tuple[int, int] | None = None
    cycles: tuple[tuple[int, ...], ...] = field(default=())

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.shared_edge is not None:
            out["shared_edge"] = list(self.shared_edge)
            out["cycles"] = [list(c) for c in self.cycles]
        return out


def _cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def witness_edges(w: PatternWitness) -> list[tuple[int, int]]:
    """Edges the witness claims are present."""
    if w.kind == K4_MINUS:
        u, v, x, z = w.vertices
        return [(u, v), (u, x), (v, x), (u, z), (v, z)]
    if w.kind == C5_PLUS:
        c = w.vertices
        return _cycle_edges(c) + [(c[0], c[2])]
    if w.kind == K23:
        p, q, *rest = w.vertices
        return [(s, t) for s in (p, q) for t in rest]
    if w.kind == L3:
        u, v, w1, x1, w2, x2 = w.vertices
        return _cycle_edges((u, v, w1, x1)) + [(v, w2), (w2, x2), (x2, u)]
    return [e for c in w.cycles for e in _cycle_edges(c)]


def _neighbor_sets(g: Multigraph) -> list[frozenset[int]]:
    return [frozenset(g.neighbors(v)) for v in range(g.n)]


# --- first formulation: forbidden subgraphs ---------------------------------


def _first_k4_minus(nb) -> tuple[int, ...] | None:
    for u in range(len(nb)):
        for v in sorted(nb[u]):
            if v <= u:
                continue
            common = sorted(nb[u] & nb[v])
            if len(common) >= 2:
                return (u, v, common[0], common[1])
    return None


def _first_c5_plus_cycle(nb) -> tuple[int, ...] | None:
    # 5-cycle c0..c4 with chord c0c2, nested ascending loops
    for c0 in range(len(nb)):
        for c1 in sorted(nb[c0]):
            for c2 in sorted(nb[c0] & nb[c1]):
                for c3 in sorted(nb[c2] - {c0, c1}):
                    for c4 in sorted((nb[c3] & nb[c0]) - {c1, c2}):
                        return (c0, c1, c2, c3, c4)
    return None


def _first_c5_plus_pair(nb) -> tuple[int, ...] | None:
    # triangle and 4-cycle sharing exactly one edge, five vertices in all
    best = None
    tris = triangles_from_sets(nb)
    by_edge: dict[frozenset, list[tuple[int, ...]]] = {}
    for q in quadrilaterals_from_sets(nb):
        for s, t in _cycle_edges(q):
            by_edge.setdefault(frozenset((s, t)), []).append(q)
    for tri in tris:
        for i in range(3):
            x, z = tri[i], tri[(i + 1) % 3]
            y = tri[(i + 2) % 3]
            for q in by_edge.get(frozenset((x, z)), ()):
                if y in q:
                    # y on the 4-cycle means a second shared edge
                    continue
                k = q.index(x)
                rot = q[k:] + q[:k]
                if rot[1] != z:
                    rot = (rot[0],) + tuple(reversed(rot[1:]))
                _, _, w, t = rot
                for cand in ((x, y, z, w, t), (z, y, x, t, w)):
                    if best is None or cand < best:
                        best = cand
    return best


def _first_k23(nb) -> tuple[int, ...] | None:
    n = len(nb)
    for p in range(n):
        for q in range(p + 1, n):
            common = sorted(nb[p] & nb[q])
            if len(common) >= 3:
                return (p, q, common[0], common[1], common[2])
    return None


def _first_l3(nb) -> tuple[int, ...] | None:
    for u in range(len(nb)):
        for v in sorted(nb[u]):
            for w1 in sorted(nb[v] - {u}):
                for x1 in sorted((nb[w1] & nb[u]) - {v}):
                    used = {u, v, w1, x1}
                    for w2 in sorted(nb[v] - used):
                        for x2 in sorted((nb[w2] & nb[u]) - used - {w2}):
                            return (u, v, w1, x1, w2, x2)
    return None


def find_forbidden(g: Multigraph) -> PatternWitness | None:
    """First of K4-, C5+, K2,3, L3 found as a subgraph, else ``None``.

    Kinds are tried in that order; within a kind the lexicographically
    smallest vertex tuple (see module docstring) is returned.
    """
    nb = _neighbor_sets(g)
    hit = _first_k4_minus(nb)
    if hit is not None:
        return PatternWitness(K4_MINUS, hit)
    hit = _first_c5_plus_cycle(nb)
    other = _first_c5_plus_pair(nb)
    assert hit == other, f"C5+ encodings disagree: {hit} vs {other}"
    if hit is not None:
        return PatternWitness(C5_PLUS, hit)
    hit = _first_k23(nb)
    if hit is not None:
        return PatternWitness(K23, hit)
    hit = _first_l3(nb)
    if hit is not None:
        return PatternWitness(L3, hit)
    return None


# --- second formulation: cycle sharing -------------------------------------


def triangles_from_sets(nb) -> list[tuple[int, int, int]]:
    out = []
    for x in range(len(nb)):
        for y in sorted(nb[x]):
            if y <= x:
                continue
            for z in sorted(nb[x] & nb[y]):
                if z > y:
                    out.append((x, y, z))
    return out


def quadrilaterals_from_sets(nb) -> list[tuple[int, int, int, int]]:
    """4-cycles as ``(c0, c1, c2, c3)`` with ``c0`` minimal and ``c1 < c3``."""
    out = []
    for c0 in range(len(nb)):
        for c1 in sorted(nb[c0]):
            if c1 <= c0:
                continue
            for c2 in sorted(nb[c1]):
                if c2 <= c0:
                    continue
                for c3 in sorted(nb[c2] & nb[c0]):
                    if c3 > c1 and c3 != c2:
                        out.append((c0, c1, c2, c3))
    return out


def triangles(g: Multigraph) -> list[tuple[int, int, int]]:
    return triangles_from_sets(_neighbor_sets(g))


def quadrilaterals(g: Multigraph) -> list[tuple[int, int, int, int]]:
    return quadrilaterals_from_sets(_neighbor_sets(g))


def _canonical_quad(c: Sequence[int]) -> tuple[int, int, int, int]:
    k = c.index(min(c))
    r = tuple(c[k:]) + tuple(c[:k])
    if r[1] > r[3]:
        r = (r[0], r[3], r[2], r[1])
    return r


def quads_through(nb, x: int, y: int) -> Iterator[tuple[int, int, int, int]]:
    """Canonical 4-cycles using edge ``xy``."""
    for p in sorted(nb[y] - {x}):
        for q in sorted((nb[p] & nb[x]) - {y}):
            yield _canonical_quad((x, y, p, q))


def _quad_share_on(nb, quad) -> PatternWitness | None:
    for s, t in _cycle_edges(quad):
        for z in sorted(nb[s] & nb[t]):
            tri = tuple(sorted((s, t, z)))
            extra = tuple(v for v in tri if v not in quad)
            return PatternWitness(
                QUAD_TRIANGLE, quad + extra, (min(s, t), max(s, t)), (quad, tri)
            )
        for other in quads_through(nb, s, t):
            if other != quad:
                extra = tuple(v for v in other if v not in quad)
                return PatternWitness(
                    QUAD_QUAD, quad + extra, (min(s, t), max(s, t)), (quad, other)
                )
    return None


def find_quad_sharing(g: Multigraph) -> PatternWitness | None:
    """A 4-cycle sharing an edge with a triangle or a distinct 4-cycle.

    4-cycles are scanned in canonical order, their edges in cycle order;
    for each edge a triangle is reported before another 4-cycle.
    """
    nb = _neighbor_sets(g)
    for quad in quadrilaterals_from_sets(nb):
        hit = _quad_share_on(nb, quad)
        if hit is not None:
            return hit
    return None


def hypothesis_holds(g: Multigraph) -> bool:
    return find_quad_sharing(g) is None


def edge_breaks_hypothesis(nb: Sequence[set[int]], x: int, y: int) -> bool:
    """Whether edge ``xy`` (already inserted into ``nb``) creates a 4-cycle
    that shares an edge with a triangle or another 4-cycle.

    Assumes the graph without ``xy`` satisfied the hypothesis, so every new
    offending pair has a cycle through ``xy``.
    """
    for z in nb[x] & nb[y]:
        for s, t in ((x, y), (x, z), (y, z)):
            for _ in quads_through(nb, s, t):
                return True
    for quad in quads_through(nb, x, y):
        if _quad_share_on(nb, quad) is not None:
            return True
    return False
