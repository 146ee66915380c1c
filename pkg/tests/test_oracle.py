import random

import pytest

from cabox import (
    CliquePartition,
    Graph,
    InvalidInputError,
    IntervalModel,
    PreconditionError,
    boxicity_cobip,
    exact_boxicity_bruteforce,
    exact_chi_hstar_bruteforce,
    numbering_scheme,
    validate_box_rep,
)
from cabox.intervals import BoxRepresentation, full_overlap_model
from cabox.generators import gen_roberts

from _instances import C4, M4, random_graph

C4_PART = numbering_scheme(M4, 0)
# K4 minus (1,1') = v2v4 and K4 minus (2,2') = v1v3, as interval models
DROP_V2V4 = IntervalModel(((0, 3), (0, 1), (0, 3), (2, 3)))
DROP_V1V3 = IntervalModel(((0, 1), (0, 3), (2, 3), (0, 3)))


def test_validate_examples():
    rep = BoxRepresentation(4, [DROP_V2V4, DROP_V1V3])
    assert validate_box_rep(C4, rep) == (True, "valid")
    ok, why = validate_box_rep(C4, BoxRepresentation(4, [DROP_V2V4]))
    assert not ok and "(0, 2)" in why
    assert validate_box_rep(Graph.complete(3), BoxRepresentation(3, [full_overlap_model(3)]))[0]


def test_validate_detects_missing_edge():
    ok, why = validate_box_rep(Graph(2, [(0, 1)]), BoxRepresentation(2, [IntervalModel(((0, 1), (2, 3)))]))
    assert not ok and "factor 0" in why


def test_validate_vertex_mismatch():
    with pytest.raises(InvalidInputError):
        validate_box_rep(C4, BoxRepresentation(3, [full_overlap_model(3)]))


def test_validate_monotone_under_supergraph_factors():
    rng = random.Random(5)
    rep = BoxRepresentation(4, [DROP_V2V4, DROP_V1V3])
    for _ in range(30):
        # any interval supergraph of C4 keeps a valid representation valid
        extra = IntervalModel(tuple((l, r + rng.randint(0, 2)) for l, r in DROP_V1V3.intervals))
        assert validate_box_rep(C4, BoxRepresentation(4, [*rep.factors, extra]))[0]


def test_bruteforce_examples():
    assert exact_boxicity_bruteforce(Graph(4, [(0, 1), (1, 2), (2, 3)])) == 1
    assert exact_boxicity_bruteforce(C4) == 2
    assert exact_boxicity_bruteforce(gen_roberts(3)[0]) == 3
    assert exact_boxicity_bruteforce(Graph.complete(5)) == 0
    assert exact_boxicity_bruteforce(Graph(3)) == 1


def test_bruteforce_c5_and_limit():
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert exact_boxicity_bruteforce(c5) == 2
    with pytest.raises(PreconditionError):
        exact_boxicity_bruteforce(Graph(8))


def test_chi_hstar_examples():
    assert exact_chi_hstar_bruteforce(C4, C4_PART) == 2
    assert exact_chi_hstar_bruteforce(Graph(4, [(0, 1), (2, 3)]), CliquePartition((0, 1), (2, 3))) == 1
    g, part, _ = gen_roberts(3)
    assert exact_chi_hstar_bruteforce(g, part) == 3
    assert exact_chi_hstar_bruteforce(Graph.complete(4), CliquePartition((0, 1), (2, 3))) == 0


def test_chi_hstar_size_limit():
    g = Graph(10, [(u, v) for u in range(10) for v in range(u + 1, 10) if (u < 5) == (v < 5)])
    with pytest.raises(PreconditionError):
        exact_chi_hstar_bruteforce(g, CliquePartition(tuple(range(5)), tuple(range(5, 10))))


def test_bruteforce_respects_half_n_bound():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(2, 6)
        g = random_graph(rng, n, rng.choice((0.3, 0.6, 0.85)))
        assert exact_boxicity_bruteforce(g) <= n // 2


def test_cobip_route_matches_bruteforce_on_roberts():
    for q in (1, 2, 3):
        g, part, _ = gen_roberts(q)
        k, rep = boxicity_cobip(g, partition=part)
        assert k == exact_boxicity_bruteforce(g) == exact_chi_hstar_bruteforce(g, part)
