"""Circular-arc models, the clockwise numbering scheme and point searches.

Arcs are closed: two arcs that share only an endpoint are adjacent. Arc
endpoints are integers on a circle of integer circumference ``L``; query
points may also be :class:`fractions.Fraction` values so that the open gap
between two consecutive integer endpoints has a representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

import numpy as np

from .errors import InvalidInputError, PreconditionError
from .graph import CliquePartition, Graph
from .intervals import IntervalModel

Point = Union[int, Fraction]


def cw(a: Point, b: Point, circumference: int) -> Point:
    """Clockwise distance from ``a`` to ``b``."""
    return (b - a) % circumference


def _normalize(x: Point) -> Point:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class ArcModel:
    """One closed arc ``[s(v), t(v)]`` per vertex, traversed clockwise."""

    circumference: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(s), int(t)) for s, t in self.arcs))
        L = self.circumference
        if L <= 0:
            raise InvalidInputError(f"circumference must be positive, got {L}")
        for v, (s, t) in enumerate(self.arcs):
            if not (0 <= s < L and 0 <= t < L):
                raise InvalidInputError(f"arc {v} endpoints ({s}, {t}) outside [0, {L})")
            if s == t:
                raise InvalidInputError(f"arc {v} is a single point or the full circle")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def length(self, v: int) -> int:
        s, t = self.arcs[v]
        return (t - s) % self.circumference

    def contains(self, v: int, x: Point) -> bool:
        s, _ = self.arcs[v]
        return cw(s, x, self.circumference) <= self.length(v)

    def overlaps(self, u: int, v: int) -> bool:
        # two arcs meet iff one of them contains the other's start point
        return self.contains(u, self.arcs[v][0]) or self.contains(v, self.arcs[u][0])

    def restrict(self, vertices: Sequence[int]) -> ArcModel:
        """Sub-model on ``vertices``; new vertex ``i`` is ``vertices[i]``."""
        return ArcModel(self.circumference, tuple(self.arcs[v] for v in vertices))

    def endpoints(self) -> list[int]:
        return sorted({x for arc in self.arcs for x in arc})

    def candidate_points(self) -> list[Point]:
        """One representative per elementary region, plus every endpoint.

        Arc membership is constant on each open gap between consecutive
        endpoints, and an endpoint is contained in every arc that contains an
        adjacent gap, so this list is exhaustive for any point search.
        """
        ends = self.endpoints()
        L = self.circumference
        if not ends:
            return [0]
        points: set[Point] = set(ends)
        for a, b in zip(ends, ends[1:] + [ends[0] + L]):
            points.add(_normalize(Fraction(a + b, 2) % L))
        return sorted(points)


def derive_graph(m: ArcModel) -> Graph:
    starts = np.array([s for s, _ in m.arcs], dtype=np.int64)
    lengths = np.array([m.length(v) for v in range(m.n)], dtype=np.int64)
    # holds[u, v]: the start of arc v lies on arc u
    holds = (starts[None, :] - starts[:, None]) % m.circumference <= lengths[:, None]
    return Graph.from_matrix(holds | holds.T)


def arcs_through_point(m: ArcModel, p: Point) -> list[int]:
    return [v for v in range(m.n) if m.contains(v, p)]


@dataclass(frozen=True)
class NumberedPartition(CliquePartition):
    """A clique partition whose numbering came from a point on a model."""

    point: Point | None = None
    model: ArcModel | None = None


def numbering_scheme(m: ArcModel, p: Point) -> NumberedPartition:
    """Clockwise numbering anchored at ``p``.

    ``A`` holds the arcs through ``p``; ``B`` the rest. Within each side the
    vertex whose end point lies farthest clockwise from ``p`` comes first;
    ties go to the smaller vertex id.
    """
    L = m.circumference
    through = set(arcs_through_point(m, p))

    def key(v: int):
        return (-cw(p, m.arcs[v][1], L), v)

    part_a = sorted(through, key=key)
    part_b = sorted((v for v in range(m.n) if v not in through), key=key)
    return NumberedPartition(tuple(part_a), tuple(part_b), point=p, model=m)


@dataclass(frozen=True)
class BiconsecutiveViolation:
    """Adjacent cross pair ``(i, j')`` for which neither clause holds.

    ``missing_a`` is an A-position ``k <= i`` not adjacent to ``j'`` and
    ``missing_b`` a B-position ``k' <= j'`` not adjacent to ``i``.
    """

    i: int
    j: int
    missing_a: int
    missing_b: int


def _first_false(mat: np.ndarray, axis: int) -> np.ndarray:
    """1-based index of the first ``False`` along ``axis`` (length + 1 if none)."""
    missing = ~mat
    first = np.argmax(missing, axis=axis) + 1
    first[~missing.any(axis=axis)] = mat.shape[axis] + 1
    return first


def check_biconsecutive(g: Graph, p: CliquePartition) -> tuple[bool, BiconsecutiveViolation | None]:
    p.validate(g)
    return biconsecutive_on_matrix(p.cross_matrix(g))


def biconsecutive_on_matrix(padded: np.ndarray) -> tuple[bool, BiconsecutiveViolation | None]:
    """Same test on a precomputed 1-based cross adjacency matrix."""
    adj = padded[1:, 1:]
    n1, n2 = adj.shape
    if n1 == 0 or n2 == 0:
        return True, None
    first_miss_a = _first_false(adj, axis=0)  # per B-position j'
    first_miss_b = _first_false(adj, axis=1)  # per A-position i
    rows = np.arange(1, n1 + 1)[:, None]
    cols = np.arange(1, n2 + 1)[None, :]
    bad = adj & (first_miss_a[None, :] < rows) & (first_miss_b[:, None] < cols)
    if not bad.any():
        return True, None
    i, j = (int(x) + 1 for x in np.argwhere(bad)[0])
    return False, BiconsecutiveViolation(i, j, int(first_miss_a[j - 1]), int(first_miss_b[i - 1]))


def require_biconsecutive(g: Graph, p: CliquePartition) -> None:
    ok, bad = check_biconsecutive(g, p)
    if not ok:
        raise PreconditionError(f"numbering is not Bi-Consecutive: {bad}")


def find_two_point_cover(m: ArcModel) -> tuple[Point, Point] | None:
    """Two points such that every arc contains at least one of them."""
    cands = m.endpoints() or [0]
    full = (1 << m.n) - 1
    masks = []
    for x in cands:
        mask = 0
        for v in range(m.n):
            if m.contains(v, x):
                mask |= 1 << v
        masks.append(mask)
    for a, mask_a in enumerate(masks):
        if mask_a == full:
            other = cands[a + 1] if a + 1 < len(cands) else (cands[a] + 1) % m.circumference
            return cands[a], other
    for a, b in combinations(range(len(cands)), 2):
        if masks[a] | masks[b] == full:
            return cands[a], cands[b]
    return None


def _covers_circle(m: ArcModel, u: int, v: int) -> bool:
    # arc v must contain the closed gap [t(u), s(u)] left open by arc u
    L = m.circumference
    su, tu = m.arcs[u]
    sv, _ = m.arcs[v]
    return cw(sv, tu, L) <= cw(sv, su, L) <= m.length(v)


def _has_cover_pair_among(m: ArcModel, vertices: Sequence[int]) -> bool:
    return any(_covers_circle(m, u, v) for u, v in combinations(vertices, 2))


def has_circle_cover_pair(m: ArcModel) -> bool:
    return _has_cover_pair_among(m, range(m.n))


def is_normal(m: ArcModel) -> bool:
    return not has_circle_cover_pair(m)


def find_normal_point(m: ArcModel) -> Point | None:
    """First candidate point whose arcs contain no circle-cover pair."""
    for x in m.candidate_points():
        if not _has_cover_pair_among(m, arcs_through_point(m, x)):
            return x
    return None


def has_cover_pair_at(m: ArcModel, p: Point) -> bool:
    return _has_cover_pair_among(m, arcs_through_point(m, p))


def build_model_from_numbering(g: Graph, p: CliquePartition) -> ArcModel:
    """Arc model of a co-bipartite graph from a Bi-Consecutive numbering.

    Slot layout on ``L = 2(n1 + n2) + 8``: ``a = 0``, A end points at
    ``2(n1 - i + 1)``, ``c = 2 n1 + 4``, B end points at ``c + 2(n2 - j + 1)``.
    Every start point begins at ``a`` (resp. ``c``) and is then pulled back to
    the end point of the highest-numbered vertex on the other side that it
    must reach through an unbroken prefix of adjacencies.
    """
    require_biconsecutive(g, p)
    n1, n2 = p.n1, p.n2
    L = 2 * (n1 + n2) + 8
    c = 2 * n1 + 4
    t_a = [0] + [2 * (n1 - i + 1) for i in range(1, n1 + 1)]
    t_b = [0] + [c + 2 * (n2 - j + 1) for j in range(1, n2 + 1)]
    adj = p.cross_matrix(g)

    arcs: list[tuple[int, int]] = [(0, 0)] * g.n
    for i in range(1, n1 + 1):
        reach = 0
        while reach < n2 and adj[i, reach + 1]:
            reach += 1
        arcs[p.a_vertex(i)] = (t_b[reach] if reach else 0, t_a[i])
    for j in range(1, n2 + 1):
        reach = 0
        while reach < n1 and adj[reach + 1, j]:
            reach += 1
        arcs[p.b_vertex(j)] = (t_a[reach] if reach else c, t_b[j])
    return ArcModel(L, tuple(arcs))


def cut_model_at_point(m: ArcModel, p: Point) -> tuple[IntervalModel, list[int]]:
    """Unroll the circle clockwise from ``p``, keeping arcs that miss ``p``.

    Coordinates are multiplied by the denominator of ``p`` so that the
    resulting intervals stay integral. Returns the interval model and the
    original id of each of its vertices.
    """
    scale = Fraction(p).denominator
    L = m.circumference
    kept = [v for v in range(m.n) if not m.contains(v, p)]
    intervals = []
    for v in kept:
        start = cw(p, m.arcs[v][0], L)
        intervals.append((int(start * scale), int((start + m.length(v)) * scale)))
    return IntervalModel(tuple(intervals)), kept
