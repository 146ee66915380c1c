"""Interval models: intersection graphs, extensions, recognition and the
interval models of complements of chain graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError, PreconditionError
from .graph import CliquePartition, CrossPair, Graph, complement


@dataclass(frozen=True)
class IntervalModel:
    """Closed interval ``[l, r]`` per vertex with integer ends, ``l < r``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple((int(l), int(r)) for l, r in self.intervals))
        for v, (l, r) in enumerate(self.intervals):
            if not l < r:
                raise InvalidInputError(f"interval {v} = [{l}, {r}] is empty or a single point")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def span(self) -> tuple[int, int]:
        if not self.intervals:
            raise InvalidInputError("empty interval model has no span")
        return min(l for l, _ in self.intervals), max(r for _, r in self.intervals)

    def overlaps(self, u: int, v: int) -> bool:
        lu, ru = self.intervals[u]
        lv, rv = self.intervals[v]
        return lu <= rv and lv <= ru


def derive_graph(im: IntervalModel) -> Graph:
    # sweep by left end: v meets every later-starting interval that starts by r(v)
    order = sorted(range(im.n), key=lambda v: im.intervals[v])
    edges = []
    for pos, u in enumerate(order):
        ru = im.intervals[u][1]
        for v in order[pos + 1 :]:
            if im.intervals[v][0] > ru:
                break
            edges.append((u, v))
    return Graph(im.n, edges)


def extend_on(im: IntervalModel, ids: Sequence[int], n: int) -> IntervalModel:
    """Extension of ``im`` onto the vertex set ``0..n-1``.

    ``ids[i]`` is the target id of vertex ``i`` of ``im``; every target vertex
    not in ``ids`` receives the full span of ``im`` and so meets everything.
    """
    if len(ids) != im.n:
        raise InvalidInputError("id mapping length does not match the model")
    if im.n == 0:
        raise InvalidInputError("cannot extend an empty interval model")
    span = im.span()
    out = [span] * n
    for i, v in enumerate(ids):
        if not 0 <= v < n:
            raise InvalidInputError(f"target id {v} out of range for n={n}")
        out[v] = im.intervals[i]
    return IntervalModel(tuple(out))


def full_overlap_model(n: int) -> IntervalModel:
    """All vertices get ``[0, 1]``; the derived graph is complete."""
    return IntervalModel(((0, 1),) * n)


def _transitive_orientation(g: Graph) -> list[set[int]] | None:
    """Successor sets of a transitive orientation of ``g``, or ``None``.

    Builds a G-decomposition: repeatedly take an unoriented edge, grow its
    implication class under the forcing relation of the *remaining* graph,
    fail if the class contains an edge in both directions, then remove it.
    """
    remaining = [set(g.neighbors(v)) for v in range(g.n)]
    succ: list[set[int]] = [set() for _ in range(g.n)]
    for u0 in range(g.n):
        while remaining[u0]:
            v0 = min(remaining[u0])
            cls = {(u0, v0)}
            stack = [(u0, v0)]
            while stack:
                a, b = stack.pop()
                # ab forces ab' when bb' is not an edge of the remaining graph
                for b2 in remaining[a]:
                    if b2 != b and b2 not in remaining[b] and (a, b2) not in cls:
                        cls.add((a, b2))
                        stack.append((a, b2))
                # ab forces a'b when aa' is not an edge of the remaining graph
                for a2 in remaining[b]:
                    if a2 != a and a2 not in remaining[a] and (a2, b) not in cls:
                        cls.add((a2, b))
                        stack.append((a2, b))
            if any((b, a) in cls for a, b in cls):
                return None
            for a, b in cls:
                succ[a].add(b)
            for a, b in cls:
                remaining[a].discard(b)
                remaining[b].discard(a)
    return succ


def recognize_interval(g: Graph) -> IntervalModel | None:
    """Interval model of ``g``, or ``None`` when ``g`` is not an interval graph.

    ``g`` is interval exactly when its complement has a transitive orientation
    whose predecessor sets form a chain under inclusion (an interval order).
    With that chain ``D_0 < D_1 < ...``, vertex ``v`` spans from the index of
    its own predecessor set to the last index whose set does not contain it.
    """
    if g.n == 0:
        return IntervalModel(())
    succ = _transitive_orientation(complement(g))
    if succ is None:
        return None
    pred: list[set[int]] = [set() for _ in range(g.n)]
    for u in range(g.n):
        for v in succ[u]:
            pred[v].add(u)
    chain = sorted({frozenset(s) for s in pred}, key=len)
    if any(not x <= y for x, y in zip(chain, chain[1:])):
        return None
    index = {s: k for k, s in enumerate(chain)}
    intervals = []
    for v in range(g.n):
        left = index[frozenset(pred[v])]
        right = next((k for k, s in enumerate(chain) if v in s), len(chain)) - 1
        intervals.append((2 * left, 2 * right + 1))
    model = IntervalModel(tuple(intervals))
    if derive_graph(model) != g:
        # a non-transitive union can only come from a non-comparability complement
        return None
    return model


def is_interval(g: Graph) -> bool:
    return recognize_interval(g) is not None


def chain_complement_model(p: CliquePartition, chain_edges: Iterable[CrossPair]) -> IntervalModel:
    """Interval model of the complement of the chain graph ``(A ∪ B, chain_edges)``.

    A and B become cliques and the cross pair ``(i, j')`` is adjacent exactly
    when it is not a chain edge. Positions are 1-based.
    """
    n1, n2 = p.n1, p.n2
    nbhd: list[set[int]] = [set() for _ in range(n2 + 1)]
    for i, j in chain_edges:
        if not (1 <= i <= n1 and 1 <= j <= n2):
            raise InvalidInputError(f"cross pair ({i}, {j}) out of range")
        nbhd[j].add(i)
    order = sorted(range(1, n2 + 1), key=lambda j: (len(nbhd[j]), j))
    for j, k in zip(order, order[1:]):
        if not nbhd[j] <= nbhd[k]:
            raise PreconditionError("edge set is not a chain graph (induced 2K2 present)")
    threshold = [n2 + 1] * (n1 + 1)
    for pos in range(n2, 0, -1):
        for i in nbhd[order[pos - 1]]:
            threshold[i] = pos
    n = n1 + n2
    out: list[tuple[int, int]] = [(0, 0)] * n
    for i in range(1, n1 + 1):
        out[p.a_vertex(i)] = (0, 2 * threshold[i] - 1)
    for pos, j in enumerate(order, start=1):
        out[p.b_vertex(j)] = (2 * pos, 2 * (n2 + 1))
    return IntervalModel(tuple(out))


def interval_model_of(g: Graph) -> IntervalModel:
    model = recognize_interval(g)
    if model is None:
        raise PreconditionError("graph is not an interval graph")
    return model


@dataclass(frozen=True)
class BoxRepresentation:
    """Interval models over a common vertex set; one per dimension."""

    n: int
    factors: tuple[IntervalModel, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.n != self.n:
                raise InvalidInputError(f"factor has {f.n} vertices, expected {self.n}")

    @property
    def dimension(self) -> int:
        return len(self.factors)

    def graphs(self) -> list[Graph]:
        return [derive_graph(f) for f in self.factors]

    def boxes(self) -> list[tuple[tuple[int, int], ...]]:
        """Per vertex, the axis-parallel box given by its interval in each factor."""
        return [tuple(f.intervals[v] for f in self.factors) for v in range(self.n)]
