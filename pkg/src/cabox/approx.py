"""Approximate box representations of circular-arc graphs.

``approx_box_rep`` gives dimension at most ``2 box(G) + 1`` for any model;
``approx_box_rep_nca`` / ``approx_with_point`` give at most ``box(G) + 2``
when the arcs through the chosen point hold no circle-cover pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arcs import (
    ArcModel,
    Point,
    arcs_through_point,
    cut_model_at_point,
    cw,
    derive_graph,
    has_cover_pair_at,
    is_normal,
    numbering_scheme,
)
from .cobip import boxicity_cobip, cobip_boxicity_value
from .errors import InvalidInputError, PreconditionError
from .graph import CliquePartition, Graph, add_clique, induced_subgraph
from .intervals import BoxRepresentation, IntervalModel, extend_on, recognize_interval
from .oracle import validate_box_rep

__all__ = [
    "BoxRepresentation",
    "approx_box_rep",
    "approx_box_rep_nca",
    "approx_with_point",
    "approx_dimension",
    "approx_dimension_nca",
    "double_representation",
]


def _check_point(m: ArcModel, p: Point) -> Point:
    if not 0 <= p < m.circumference:
        raise InvalidInputError(f"point {p} outside [0, {m.circumference})")
    return p


def _cobip_setup(m: ArcModel, p: Point) -> tuple[Graph, CliquePartition]:
    """``G'``: the derived graph with the arcs missing ``p`` completed to a clique."""
    g = derive_graph(m)
    part = numbering_scheme(m, p)
    return add_clique(g, part.part_b), part


def approx_box_rep(m: ArcModel, p: Point = 0) -> BoxRepresentation:
    """Box representation of dimension at most ``2 box(G) + 1``.

    Cuts the circle at ``p``: the arcs through ``p`` form a clique ``A`` and
    the rest a set ``B`` that is interval on its own. Solving the co-bipartite
    graph ``G' = G + clique(B)`` exactly and adding the extension of ``B``'s
    interval model covers every non-edge of ``G``.
    """
    _check_point(m, p)
    g = derive_graph(m)
    model = recognize_interval(g)
    if model is not None:
        return BoxRepresentation(g.n, (model,))
    g_prime, part = _cobip_setup(m, p)
    _, rep = boxicity_cobip(g_prime, partition=part)
    cut, ids = cut_model_at_point(m, p)
    return BoxRepresentation(g.n, rep.factors + (extend_on(cut, ids, g.n),))


def approx_dimension(m: ArcModel, p: Point = 0) -> int:
    """Dimension of :func:`approx_box_rep` without materialising the factors."""
    _check_point(m, p)
    g = derive_graph(m)
    if recognize_interval(g) is not None:
        return 1
    g_prime, part = _cobip_setup(m, p)
    return cobip_boxicity_value(g_prime, partition=part) + 1


@dataclass
class _NcaSetup:
    g: Graph
    p: Point
    q: Point
    side_a: list[int]
    side_b: list[int]


def _opposite_point(m: ArcModel, p: Point, through: list[int]) -> Point:
    """A point strictly inside the stretch of circle no arc through ``p`` reaches."""
    L = m.circumference
    reach_cw = max(cw(p, m.arcs[v][1], L) for v in through)
    reach_acw = max(cw(m.arcs[v][0], p, L) for v in through)
    gap = L - reach_cw - reach_acw
    if gap <= 0:
        raise PreconditionError(f"arcs through {p} cover the whole circle")
    p1 = (p + reach_cw) % L
    inside = [x for x in m.candidate_points() if 0 < cw(p1, x, L) < gap]
    # nearest region representative to the midpoint of the open stretch (p1, p2)
    return min(inside, key=lambda x: (abs(cw(p1, x, L) - Fraction(gap, 2)), x))


def _nca_setup(m: ArcModel, p: Point) -> _NcaSetup:
    g = derive_graph(m)
    side_a = arcs_through_point(m, p)
    q = _opposite_point(m, p, side_a)
    side_b = arcs_through_point(m, q)
    assert not set(side_a) & set(side_b), "A and B must be disjoint"
    return _NcaSetup(g, p, q, side_a, side_b)


def _cobip_part(setup: _NcaSetup, m: ArcModel) -> tuple[Graph, list[int], CliquePartition]:
    h, ids = induced_subgraph(setup.g, setup.side_a + setup.side_b)
    sub = m.restrict(ids)
    part = numbering_scheme(sub, setup.p)
    return h, ids, part


def approx_with_point(m: ArcModel, p: Point) -> BoxRepresentation:
    """Box representation of dimension at most ``box(G) + 2``.

    Requires that no two arcs through ``p`` jointly cover the circle. ``A``
    is the clique at ``p``, ``B`` the clique at a point ``q`` that no arc of
    ``A`` reaches; the optimal representation of the co-bipartite graph on
    ``A ∪ B`` handles the cross non-edges, and the cuts at ``p`` and ``q``
    handle everything else.
    """
    _check_point(m, p)
    g = derive_graph(m)
    model = recognize_interval(g)
    if model is not None:
        return BoxRepresentation(g.n, (model,))
    if has_cover_pair_at(m, p):
        raise PreconditionError(f"arcs through point {p} contain a circle-cover pair")
    setup = _nca_setup(m, p)
    h, ids, part = _cobip_part(setup, m)
    _, rep_h = boxicity_cobip(h, partition=part)
    factors = [extend_on(f, ids, g.n) for f in rep_h.factors]
    for point in (setup.p, setup.q):
        cut, kept = cut_model_at_point(m, point)
        factors.append(extend_on(cut, kept, g.n))
    return BoxRepresentation(g.n, factors)


def approx_box_rep_nca(m: ArcModel, p: Point = 0) -> BoxRepresentation:
    if not is_normal(m):
        raise PreconditionError(
            "model has a circle-cover pair; pick a point without one (approx_with_point, --point)"
        )
    return approx_with_point(m, p)


def approx_dimension_nca(m: ArcModel, p: Point = 0) -> int:
    """``box(H) + 2`` (or 1 for interval graphs) without building factors."""
    _check_point(m, p)
    g = derive_graph(m)
    if recognize_interval(g) is not None:
        return 1
    if has_cover_pair_at(m, p):
        raise PreconditionError(f"arcs through point {p} contain a circle-cover pair")
    setup = _nca_setup(m, p)
    h, _, part = _cobip_part(setup, m)
    return cobip_boxicity_value(h, partition=part) + 2


def double_representation(g: Graph, rep: BoxRepresentation, part: CliquePartition) -> BoxRepresentation:
    """Representation of ``G + clique(B)`` with exactly twice the dimension.

    Each factor is copied twice: once with every B-interval stretched to the
    factor's leftmost point, once stretched to its rightmost point.
    """
    ok, why = validate_box_rep(g, rep)
    if not ok:
        raise InvalidInputError(f"input representation is invalid: {why}")
    if set(part.part_a) | set(part.part_b) != set(range(g.n)):
        raise InvalidInputError("partition does not cover the vertex set exactly")
    side_b = set(part.part_b)
    factors: list[IntervalModel] = []
    for f in rep.factors:
        lo, hi = f.span()
        left = tuple((lo, r) if v in side_b else (l, r) for v, (l, r) in enumerate(f.intervals))
        right = tuple((l, hi) if v in side_b else (l, r) for v, (l, r) in enumerate(f.intervals))
        factors += [IntervalModel(left), IntervalModel(right)]
    return BoxRepresentation(g.n, factors)
