"""Simple undirected graphs on vertices ``0..n-1`` and clique bipartitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, PreconditionError

Edge = tuple[int, int]
CrossPair = tuple[int, int]


class Graph:
    """Immutable simple graph.

    Adjacency is kept twice: as frozensets for O(1) membership tests and as
    sorted neighbour tuples for the pointer-walking sweeps.
    """

    __slots__ = ("n", "_adj", "_nbrs", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(s) for s in adj) // 2

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, combinations(range(n), 2))

    @classmethod
    def from_matrix(cls, mat: np.ndarray) -> Graph:
        """Build from a symmetric boolean matrix; the diagonal is ignored."""
        mat = np.asarray(mat, dtype=bool)
        n = mat.shape[0]
        if mat.shape != (n, n) or not np.array_equal(mat, mat.T):
            raise InvalidInputError("adjacency matrix must be square and symmetric")
        g = cls.__new__(cls)
        nbrs = []
        for v in range(n):
            row = np.flatnonzero(mat[v])
            nbrs.append(tuple(int(u) for u in row if u != v))
        g.n = n
        g._nbrs = tuple(nbrs)
        g._adj = tuple(frozenset(t) for t in nbrs)
        g._m = sum(len(t) for t in nbrs) // 2
        return g

    def matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        for v, nb in enumerate(self._nbrs):
            mat[v, np.asarray(nb, dtype=np.intp)] = True
        return mat

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in ascending order."""
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if v not in self._adj[u]]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def edge_mask(self) -> int:
        """Bitmask over the pairs of ``combinations(range(n), 2)``."""
        mask = 0
        for bit, (u, v) in enumerate(combinations(range(self.n), 2)):
            if v in self._adj[u]:
                mask |= 1 << bit
        return mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    return Graph(g.n, g.non_edges())


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``.

    Returns the subgraph (relabelled ``0..k-1`` in ascending original-id order)
    and the list mapping new ids back to original ids.
    """
    ids = sorted(set(vertices))
    for v in ids:
        if not 0 <= v < g.n:
            raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(ids)}
    edges = [(index[u], index[v]) for u in ids for v in g.neighbors(u) if u < v and v in index]
    return Graph(len(ids), edges), ids


def intersect_all(graphs: Sequence[Graph]) -> Graph:
    """Graph whose edge set is the intersection of all the inputs' edge sets."""
    if not graphs:
        raise InvalidInputError("intersect_all needs at least one graph")
    n = graphs[0].n
    if any(h.n != n for h in graphs):
        raise InvalidInputError("all graphs must share the same vertex count")
    edges = [(u, v) for u, v in graphs[0].edges() if all(h.has_edge(u, v) for h in graphs[1:])]
    return Graph(n, edges)


def add_clique(g: Graph, vertices: Iterable[int]) -> Graph:
    """Copy of ``g`` with every pair in ``vertices`` made adjacent."""
    return Graph(g.n, list(g.edges()) + list(combinations(sorted(set(vertices)), 2)))


@dataclass(frozen=True)
class CliquePartition:
    """Split of the vertex set into two cliques with a fixed numbering.

    ``part_a[i - 1]`` is the vertex numbered ``i`` and ``part_b[j - 1]`` the
    vertex numbered ``j'``. Cross pairs ``(i, j)`` always use these 1-based
    positions, never vertex ids.
    """

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "part_a", tuple(self.part_a))
        object.__setattr__(self, "part_b", tuple(self.part_b))
        if set(self.part_a) & set(self.part_b):
            raise InvalidInputError("partition sides overlap")
        if len(set(self.part_a)) != len(self.part_a) or len(set(self.part_b)) != len(self.part_b):
            raise InvalidInputError("partition side lists a vertex twice")

    @property
    def n1(self) -> int:
        return len(self.part_a)

    @property
    def n2(self) -> int:
        return len(self.part_b)

    def a_vertex(self, i: int) -> int:
        return self.part_a[i - 1]

    def b_vertex(self, j: int) -> int:
        return self.part_b[j - 1]

    def validate(self, g: Graph) -> None:
        """Raise unless the sides cover ``V(g)`` exactly and are both cliques."""
        covered = set(self.part_a) | set(self.part_b)
        if covered != set(range(g.n)):
            raise InvalidInputError("partition does not cover the vertex set exactly")
        for side, name in ((self.part_a, "A"), (self.part_b, "B")):
            members = set(side)
            if any(len(members & g.neighbor_set(v)) != len(side) - 1 for v in side):
                raise PreconditionError(f"side {name} of the partition is not a clique")

    def cross_matrix(self, g: Graph) -> np.ndarray:
        """Boolean ``adj[i, j]`` for 1-based positions; row and column 0 are padding."""
        pos_b = np.zeros(g.n, dtype=np.int64)
        pos_b[np.asarray(self.part_b, dtype=np.intp)] = np.arange(1, self.n2 + 1)
        adj = np.zeros((self.n1 + 1, self.n2 + 1), dtype=bool)
        for i, a in enumerate(self.part_a, start=1):
            cols = pos_b[np.asarray(g.neighbors(a), dtype=np.intp)]
            adj[i, cols[cols > 0]] = True
        return adj


def cross_non_edges(g: Graph, p: CliquePartition) -> list[CrossPair]:
    """Non-adjacent cross pairs ``(i, j)`` in ascending ``i`` then ``j``."""
    p.validate(g)
    return [
        (i, j)
        for i, a in enumerate(p.part_a, start=1)
        for j, b in enumerate(p.part_b, start=1)
        if not g.has_edge(a, b)
    ]
