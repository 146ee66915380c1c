"""Seeded instance generators."""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from .arcs import ArcModel, biconsecutive_on_matrix, build_model_from_numbering
from .errors import InvalidInputError
from .graph import CliquePartition, Graph


def gen_roberts(q: int) -> tuple[Graph, CliquePartition, ArcModel]:
    """``K_{2q}`` minus a perfect matching; ``u_i = i - 1`` misses ``w_i = q + i - 1``."""
    if q < 1:
        raise InvalidInputError("Roberts graph needs q >= 1")
    n = 2 * q
    g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if v - u != q])
    part = CliquePartition(tuple(range(q)), tuple(range(q, n)))
    return g, part, build_model_from_numbering(g, part)


def gen_cycle(n: int) -> ArcModel:
    """Arcs ``[2i, 2i + 2]`` on a circle of length ``2n``: consecutive arcs touch."""
    if n < 3:
        raise InvalidInputError("cycle needs n >= 3")
    L = 2 * n
    return ArcModel(L, tuple((2 * i, (2 * i + 2) % L) for i in range(n)))


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def gen_random_ca(n: int, seed: int | random.Random = 0) -> ArcModel:
    """Uniform start points and lengths on a circle of length ``4n``."""
    rng = _rng(seed)
    L = 4 * max(n, 1)
    arcs = []
    for _ in range(n):
        s = rng.randrange(L)
        arcs.append((s, (s + rng.randint(1, L - 1)) % L))
    return ArcModel(L, tuple(arcs))


def gen_random_nca(n: int, seed: int | random.Random = 0) -> ArcModel:
    """Like :func:`gen_random_ca` with every arc shorter than half the circle."""
    rng = _rng(seed)
    L = 4 * max(n, 1)
    arcs = []
    for _ in range(n):
        s = rng.randrange(L)
        arcs.append((s, (s + rng.randint(1, L // 2 - 1)) % L))
    return ArcModel(L, tuple(arcs))


def gen_random_cobip(n: int, seed: int | random.Random = 0) -> ArcModel:
    """Every arc passes through ``0`` or ``L / 2``, so the graph is co-bipartite.

    Each side of an arc reaches less than ``L / 2`` past its anchor, which
    leaves roughly a quarter of the cross pairs non-adjacent.
    """
    rng = _rng(seed)
    L = 4 * max(n, 1)
    half = L // 2
    arcs = []
    for _ in range(n):
        centre = rng.choice((0, half))
        back = ahead = 0
        while back + ahead == 0:
            back, ahead = rng.randrange(half), rng.randrange(half)
        arcs.append(((centre - back) % L, (centre + ahead) % L))
    return ArcModel(L, tuple(arcs))


def perturb_roberts(q: int, flips: int, seed: int | random.Random = 0) -> tuple[Graph, CliquePartition]:
    """Roberts graph with up to ``flips`` cross pairs toggled.

    A toggle is kept only if the numbering ``u_i -> i``, ``w_i -> i`` stays
    Bi-Consecutive, so the result is always a co-bipartite CA graph.
    """
    if q < 1:
        raise InvalidInputError("Roberts graph needs q >= 1")
    rng = _rng(seed)
    part = CliquePartition(tuple(range(q)), tuple(range(q, 2 * q)))
    # 1-based cross adjacency, row and column 0 unused
    cross = ~np.eye(q + 1, dtype=bool)
    for _ in range(flips):
        i, j = rng.randint(1, q), rng.randint(1, q)
        cross[i, j] = not cross[i, j]
        if not biconsecutive_on_matrix(cross)[0]:
            cross[i, j] = not cross[i, j]
    inside = [(u, v) for side in (part.part_a, part.part_b) for u, v in combinations(side, 2)]
    rows, cols = np.nonzero(cross[1:, 1:])
    between = [(int(i), q + int(j)) for i, j in zip(rows, cols)]
    return Graph(2 * q, inside + between), part
