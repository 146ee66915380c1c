"""Ground truth for small instances: representation validator and exhaustive
boxicity / chromatic-number searches."""

from __future__ import annotations

from itertools import combinations

from .errors import InvalidInputError, PreconditionError
from .graph import CliquePartition, Graph
from .intervals import BoxRepresentation, is_interval

MAX_BRUTEFORCE_N = 7
MAX_HSTAR_VERTICES = 24

_interval_cache: dict[tuple[int, int], bool] = {}


def validate_box_rep(g: Graph, rep: BoxRepresentation) -> tuple[bool, str]:
    """Check that every factor is a supergraph of ``g`` and that they intersect to ``g``.

    Returns ``(ok, diagnostic)``; the diagnostic names the first offending
    factor or surviving non-edge.
    """
    if rep.n != g.n:
        raise InvalidInputError(f"representation has {rep.n} vertices, graph has {g.n}")
    factors = rep.graphs()
    for idx, h in enumerate(factors):
        for u, v in g.edges():
            if not h.has_edge(u, v):
                return False, f"factor {idx} misses edge ({u}, {v})"
    for u, v in g.non_edges():
        if all(h.has_edge(u, v) for h in factors):
            return False, f"non-edge ({u}, {v}) survives every factor"
    return True, "valid"


def _is_interval_cached(n: int, edges: list[tuple[int, int]], mask: int) -> bool:
    key = (n, mask)
    hit = _interval_cache.get(key)
    if hit is None:
        hit = _interval_cache[key] = is_interval(Graph(n, edges))
    return hit


def exact_boxicity_bruteforce(g: Graph) -> int:
    """Minimum number of interval supergraphs whose intersection is ``g``.

    Every supergraph is ``g`` plus a subset ``S`` of its non-edges; a factor
    only matters through the non-edges it keeps, so only inclusion-minimal
    interval completions ``S`` are collected. The smallest cover of all
    non-edges by the kept sets is then found level by level.
    """
    n = g.n
    if n > MAX_BRUTEFORCE_N:
        raise PreconditionError(f"brute force limited to n <= {MAX_BRUTEFORCE_N}, got n={n}")
    non = g.non_edges()
    if not non:
        return 0
    base = g.edges()
    bit_of = {pair: b for b, pair in enumerate(combinations(range(n), 2))}
    base_mask = sum(1 << bit_of[e] for e in base)
    non_bits = [1 << bit_of[e] for e in non]
    t = len(non)
    full = (1 << t) - 1

    minimal: list[int] = []
    for size in range(t + 1):
        for chosen in combinations(range(t), size):
            s = sum(1 << c for c in chosen)
            if any(s & f == f for f in minimal):
                continue
            mask = base_mask | sum(non_bits[c] for c in chosen)
            if _is_interval_cached(n, base + [non[c] for c in chosen], mask):
                minimal.append(s)
    kept = [full & ~s for s in minimal]

    reach = {0}
    for depth in range(1, t + 1):
        reach = {r | k for r in reach for k in kept}
        if full in reach:
            return depth
    raise AssertionError("single non-edge removals always cover")  # pragma: no cover


def _hstar(g: Graph, p: CliquePartition) -> tuple[list[tuple[int, int]], list[set[int]]]:
    p.validate(g)
    non = [
        (i, j)
        for i in range(1, p.n1 + 1)
        for j in range(1, p.n2 + 1)
        if not g.has_edge(p.a_vertex(i), p.b_vertex(j))
    ]
    nbrs: list[set[int]] = [set() for _ in non]
    for x, y in combinations(range(len(non)), 2):
        (a, b), (c, d) = non[x], non[y]
        if a != c and b != d and g.has_edge(p.a_vertex(a), p.b_vertex(d)) and g.has_edge(p.a_vertex(c), p.b_vertex(b)):
            nbrs[x].add(y)
            nbrs[y].add(x)
    return non, nbrs


def _colorable(nbrs: list[set[int]], k: int) -> bool:
    order = sorted(range(len(nbrs)), key=lambda v: -len(nbrs[v]))
    color = [0] * len(nbrs)

    def place(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        used = {color[u] for u in nbrs[v]}
        # colours are symmetric: never open more than one fresh colour
        top = max(color) if pos else 0
        for c in range(1, min(k, top + 1) + 1):
            if c not in used:
                color[v] = c
                if place(pos + 1):
                    return True
                color[v] = 0
        return False

    return place(0)


def exact_chi_hstar_bruteforce(g: Graph, p: CliquePartition) -> int:
    """Chromatic number of H*: cross non-edges, adjacent when they span a 4-cycle of ``g``."""
    non, nbrs = _hstar(g, p)
    if len(non) > MAX_HSTAR_VERTICES:
        raise PreconditionError(f"H* has {len(non)} vertices, limit is {MAX_HSTAR_VERTICES}")
    k = 0
    while not _colorable(nbrs, k):
        k += 1
    return k
