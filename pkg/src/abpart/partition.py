"""Two-sided partitions with cached side degrees, the exchange weight
omega, exact move deltas, deficiency, and the side classifications used to
rank local-search moves.

omega(A, B) = |E(G[A])| + |E(G[B])| + sum_{u in A} b(u) + sum_{v in B} a(v)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .feasibility import is_f_meager
from .multigraph import DegreeSpec, Multigraph, vertex_set

__all__ = [
    "Partition",
    "MoveDelta",
    "SideClassification",
    "A_TO_B",
    "B_TO_A",
    "SWAP",
    "omega",
    "delta_move_A_to_B",
    "delta_move_B_to_A",
    "delta_swap",
    "deficiency",
    "deficiency_breakdown",
    "is_feasible_partition",
    "is_meager_partition",
    "classify_sides",
]

A_TO_B = "AtoB"
B_TO_A = "BtoA"
SWAP = "Swap"


class Partition:
    """Ordered split ``(A, B)`` of all vertices, both sides nonempty.

    ``d_A[v]`` and ``d_B[v]`` are kept current under ``move``; a move costs
    O(deg(v)). Instances are mutable and meant to be owned by one caller;
    use ``copy`` to branch.
    """

    __slots__ = ("g", "in_b", "d_A", "d_B", "size_a")

    def __init__(self, g: Multigraph, A: Iterable[int]) -> None:
        A = vertex_set(g, A)
        if not A or len(A) == g.n:
            raise ValueError("both sides of a partition must be nonempty")
        self.g = g
        self.in_b = bytearray(1 for _ in range(g.n))
        for v in A:
            self.in_b[v] = 0
        self.size_a = len(A)
        self.d_A = [0] * g.n
        self.d_B = [0] * g.n
        for v in range(g.n):
            for u, m in g.neighbors(v).items():
                if self.in_b[u]:
                    self.d_B[v] += m
                else:
                    self.d_A[v] += m

    @classmethod
    def from_mask(cls, g: Multigraph, mask: int) -> Partition:
        """Side A is the set bits of ``mask``."""
        return cls(g, [v for v in range(g.n) if mask >> v & 1])

    @property
    def A(self) -> frozenset[int]:
        return frozenset(v for v in range(self.g.n) if not self.in_b[v])

    @property
    def B(self) -> frozenset[int]:
        return frozenset(v for v in range(self.g.n) if self.in_b[v])

    @property
    def size_b(self) -> int:
        return self.g.n - self.size_a

    def in_A(self, v: int) -> bool:
        return not self.in_b[v]

    def copy(self) -> Partition:
        p = Partition.__new__(Partition)
        p.g = self.g
        p.in_b = bytearray(self.in_b)
        p.d_A = list(self.d_A)
        p.d_B = list(self.d_B)
        p.size_a = self.size_a
        return p

    def move(self, v: int) -> None:
        """Put ``v`` on the other side. May leave a side empty; callers
        that need a valid partition check ``size_a``/``size_b`` first."""
        if self.in_b[v]:
            self.in_b[v] = 0
            self.size_a += 1
            for u, m in self.g.neighbors(v).items():
                self.d_B[u] -= m
                self.d_A[u] += m
        else:
            self.in_b[v] = 1
            self.size_a -= 1
            for u, m in self.g.neighbors(v).items():
                self.d_A[u] -= m
                self.d_B[u] += m

    def key(self) -> bytes:
        return bytes(self.in_b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.g is other.g and self.in_b == other.in_b

    def __repr__(self) -> str:
        return f"Partition(A={sorted(self.A)}, B={sorted(self.B)})"


@dataclass(frozen=True)
class MoveDelta:
    kind: str
    u: int | None
    v: int | None
    delta: int


@dataclass(frozen=True)
class SideClassification:
    A_minus: frozenset[int]
    B_minus: frozenset[int]
    D_A: frozenset[int]
    D_B: frozenset[int]
    A_eq: frozenset[int]
    B_eq: frozenset[int]


def omega(g: Multigraph, p: Partition, spec: DegreeSpec) -> int:
    """Exchange weight, recomputed from the cached side degrees."""
    inner = 0
    demand = 0
    for v in range(g.n):
        if p.in_b[v]:
            inner += p.d_B[v]
            demand += spec.a[v]
        else:
            inner += p.d_A[v]
            demand += spec.b[v]
    return inner // 2 + demand


def _a_to_b(p: Partition, spec: DegreeSpec, u: int) -> int:
    return p.d_B[u] - p.d_A[u] + spec.a[u] - spec.b[u]


def _b_to_a(p: Partition, spec: DegreeSpec, v: int) -> int:
    return p.d_A[v] - p.d_B[v] + spec.b[v] - spec.a[v]


def delta_move_A_to_B(g: Multigraph, p: Partition, spec: DegreeSpec, u: int) -> MoveDelta:
    if p.in_b[u]:
        raise ValueError(f"vertex {u} is not in A")
    if p.size_a < 2:
        raise ValueError("moving the last vertex of A would empty it")
    return MoveDelta(A_TO_B, u, None, _a_to_b(p, spec, u))


def delta_move_B_to_A(g: Multigraph, p: Partition, spec: DegreeSpec, v: int) -> MoveDelta:
    if not p.in_b[v]:
        raise ValueError(f"vertex {v} is not in B")
    if p.size_b < 2:
        raise ValueError("moving the last vertex of B would empty it")
    return MoveDelta(B_TO_A, None, v, _b_to_a(p, spec, v))


def delta_swap(g: Multigraph, p: Partition, spec: DegreeSpec, u: int, v: int) -> MoveDelta:
    if p.in_b[u]:
        raise ValueError(f"vertex {u} is not in A")
    if not p.in_b[v]:
        raise ValueError(f"vertex {v} is not in B")
    d = _a_to_b(p, spec, u) + _b_to_a(p, spec, v) - 2 * g.multiplicity(u, v)
    return MoveDelta(SWAP, u, v, d)


def _shortfall(p: Partition, spec: DegreeSpec, v: int) -> int:
    if p.in_b[v]:
        return max(0, spec.b[v] - p.d_B[v])
    return max(0, spec.a[v] - p.d_A[v])


def deficiency(g: Multigraph, p: Partition, spec: DegreeSpec) -> int:
    """Total shortfall of internal degrees against the side's demand."""
    return sum(_shortfall(p, spec, v) for v in range(g.n))


def deficiency_breakdown(g: Multigraph, p: Partition, spec: DegreeSpec) -> dict[int, int]:
    """Vertex -> shortfall, for deficient vertices only."""
    out = {}
    for v in range(g.n):
        s = _shortfall(p, spec, v)
        if s:
            out[v] = s
    return out


def is_feasible_partition(g: Multigraph, p: Partition, spec: DegreeSpec) -> bool:
    return deficiency(g, p, spec) == 0


def is_meager_partition(g: Multigraph, p: Partition, spec: DegreeSpec, offset: int) -> bool:
    """A is (a+offset)-meager and B is (b+offset)-meager."""
    fa = [x + offset for x in spec.a]
    fb = [x + offset for x in spec.b]
    return is_f_meager(g, p.A, fa) and is_f_meager(g, p.B, fb)


def classify_sides(g: Multigraph, p: Partition, spec: DegreeSpec) -> SideClassification:
    sets: dict[str, set[int]] = {k: set() for k in ("Am", "Bm", "DA", "DB", "Ae", "Be")}
    for v in range(g.n):
        mu = g.vertex_weight(v)
        if p.in_b[v]:
            d, f, minus, dset, eq = p.d_B[v], spec.b[v], "Bm", "DB", "Be"
        else:
            d, f, minus, dset, eq = p.d_A[v], spec.a[v], "Am", "DA", "Ae"
        if d <= f + mu - 2:
            sets[minus].add(v)
        if d <= f - 1:
            sets[dset].add(v)
        if d == f + mu - 1:
            sets[eq].add(v)
    return SideClassification(
        A_minus=frozenset(sets["Am"]),
        B_minus=frozenset(sets["Bm"]),
        D_A=frozenset(sets["DA"]),
        D_B=frozenset(sets["DB"]),
        A_eq=frozenset(sets["Ae"]),
        B_eq=frozenset(sets["Be"]),
    )
