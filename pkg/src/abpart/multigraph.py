"""Immutable loopless multigraphs on vertices ``0 .. n-1``."""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["Multigraph", "DegreeSpec", "Instance", "vertex_set"]


class Multigraph:
    """Undirected multigraph with integer edge multiplicities and no loops.

    ``edges`` holds ``(u, v)`` or ``(u, v, mult)`` items. Repeated pairs
    accumulate. Loops, out-of-range endpoints and non-positive
    multiplicities raise ``ValueError``.
    """

    __slots__ = ("_n", "_adj", "_deg", "_weight", "_csr", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self._n = n
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for e in edges:
            if len(e) == 2:
                u, v = e
                m = 1
            elif len(e) == 3:
                u, v, m = e
            else:
                raise ValueError(f"edge must be (u, v) or (u, v, mult): {e!r}")
            u, v, m = int(u), int(v), int(m)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if m < 1:
                raise ValueError(f"multiplicity of ({u}, {v}) must be >= 1, got {m}")
            adj[u][v] = adj[u].get(v, 0) + m
            adj[v][u] = adj[v].get(u, 0) + m
        self._adj = [dict(sorted(d.items())) for d in adj]
        self._deg = [sum(d.values()) for d in self._adj]
        self._weight = [max(d.values(), default=0) for d in self._adj]
        self._csr = None
        self._edges = None

    @property
    def n(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise ValueError(f"vertex {v} out of range for n={self._n}")

    def multiplicity(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        if u == v:
            raise ValueError("multiplicity of a vertex with itself is undefined")
        return self._adj[u].get(v, 0)

    def vertex_weight(self, v: int) -> int:
        """Largest multiplicity of an edge at ``v`` (0 if isolated)."""
        self._check(v)
        return self._weight[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return self._deg[v]

    def neighbors(self, v: int) -> dict[int, int]:
        """Neighbour -> multiplicity, ascending by neighbour. Do not mutate."""
        self._check(v)
        return self._adj[v]

    def degree_within(self, v: int, X: Iterable[int]) -> int:
        """Number of edges between ``v`` and ``X - {v}``."""
        self._check(v)
        if not isinstance(X, (set, frozenset)):
            X = set(X)
        return sum(m for u, m in self._adj[v].items() if u in X)

    def edges(self) -> list[tuple[int, int, int]]:
        """``(u, v, mult)`` with ``u < v``, sorted."""
        if self._edges is None:
            self._edges = [
                (u, v, m) for u in range(self._n) for v, m in self._adj[u].items() if u < v
            ]
        return list(self._edges)

    @property
    def num_edges(self) -> int:
        """Edge count with multiplicity."""
        return sum(self._deg) // 2

    def underlying_simple(self) -> Multigraph:
        return Multigraph(self._n, [(u, v) for u, v, _ in self.edges()])

    def is_simple(self) -> bool:
        return all(w <= 1 for w in self._weight)

    def csr(self) -> tuple[array, array, array]:
        """``(indptr, indices, weights)`` as ``array('q')``, for the kernels."""
        if self._csr is None:
            indptr = array("q", [0])
            indices = array("q")
            weights = array("q")
            for d in self._adj:
                indices.extend(d.keys())
                weights.extend(d.values())
                indptr.append(len(indices))
            self._csr = (indptr, indices, weights)
        return self._csr

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Multigraph(n={self._n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class DegreeSpec:
    """Per-vertex demands ``a`` (side A) and ``b`` (side B).

    Values are only required to be integers here; whether they lie in the
    admissible range (>= 2) is reported by ``solver.validate`` so that
    out-of-range specs stay expressible as negative fixtures.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")

    @classmethod
    def constant(cls, n: int, a: int, b: int) -> DegreeSpec:
        return cls((a,) * n, (b,) * n)

    @property
    def n(self) -> int:
        return len(self.a)

    def in_range(self) -> bool:
        return all(x >= 2 for x in self.a) and all(x >= 2 for x in self.b)


@dataclass(frozen=True)
class Instance:
    graph: Multigraph
    spec: DegreeSpec

    def __post_init__(self) -> None:
        if self.spec.n != self.graph.n:
            raise ValueError(
                f"spec covers {self.spec.n} vertices, graph has {self.graph.n}"
            )

    @property
    def n(self) -> int:
        return self.graph.n


def vertex_set(g: Multigraph, X: Iterable[int] | None) -> frozenset[int]:
    """Normalise ``X`` to a frozenset, ``None`` meaning all vertices."""
    if X is None:
        return frozenset(range(g.n))
    out = frozenset(int(v) for v in X)
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return out
