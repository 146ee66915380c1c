"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every instance is seeded; counts and tolerances match the criteria exactly.
"""

import random
import time
from collections import Counter

import pytest

from cabox import (
    CliquePartition,
    approx_box_rep,
    approx_box_rep_nca,
    is_normal,
    boxicity_cobip,
    build_model_from_numbering,
    check_biconsecutive,
    derive_arc_graph,
    double_representation,
    exact_boxicity_bruteforce,
    exact_chi_hstar_bruteforce,
    greedy_color_fast,
    greedy_color_naive,
    is_interval,
    longest_chain_length,
    numbering_scheme,
    validate_box_rep,
)
from cabox.arcs import find_two_point_cover
from cabox.graph import add_clique
from cabox.generators import gen_random_ca, gen_random_cobip, gen_random_nca, gen_roberts, perturb_roberts

from _instances import M4, anchored_model


@pytest.fixture(scope="module", autouse=True)
def warm_jit():
    # compile the kernels once so timings measure the algorithms, not numba
    part = numbering_scheme(M4, 0)
    g = derive_arc_graph(M4)
    greedy_color_fast(g, part)
    greedy_color_naive(g, part)
    longest_chain_length(g, part)
    boxicity_cobip(g, partition=part)


def test_criterion_1_roberts_exactness(report):
    rows, ok = [], True
    for q in (2, 3, 4, 5):
        g, _, model = gen_roberts(q)
        start = time.perf_counter()
        k, rep = boxicity_cobip(g, model=model)
        elapsed = time.perf_counter() - start
        valid = validate_box_rep(g, rep)[0]
        good = k == q and rep.dimension == q and valid and elapsed < 1.0
        ok &= good
        rows.append(f"q={q}:k={k},{elapsed * 1000:.1f}ms")
    report(1, "Roberts graphs solved exactly", ok, " ".join(rows))
    assert ok


def _cobip_small(rng: random.Random, idx: int):
    """Alternate Roberts perturbations with numbering/model round-trips, n <= 6.

    Complete graphs (boxicity 0) are redrawn so the sample stays informative.
    """
    while True:
        if idx % 2 == 0:
            q = rng.choice((1, 2, 3, 3))
            g, part = perturb_roberts(q, rng.randint(0, 4), rng)
            model = build_model_from_numbering(g, part)
        else:
            m = gen_random_cobip(rng.randint(2, 6), rng)
            ns = numbering_scheme(m, find_two_point_cover(m)[0])
            g = derive_arc_graph(m)
            model = build_model_from_numbering(g, ns)
            part = CliquePartition(ns.part_a, ns.part_b)
        if g.non_edges():
            break
    assert derive_arc_graph(model) == g
    return g, part, model


def test_criterion_2_oracle_equivalence(report):
    rng = random.Random(20260101)
    count, mismatches, start = 400, [], time.perf_counter()
    seen = Counter()
    for idx in range(count):
        g, part, model = _cobip_small(rng, idx)
        k, rep = boxicity_cobip(g, model=model)
        seen[k] += 1
        brute = exact_boxicity_bruteforce(g)
        chi = exact_chi_hstar_bruteforce(g, part)
        if not (k == brute == chi and validate_box_rep(g, rep)[0]):
            mismatches.append((idx, k, brute, chi))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300
    report(2, "co-bipartite boxicity == brute force == chi(H*)", ok,
           f"{count} instances (k histogram {dict(sorted(seen.items()))}), "
           f"{len(mismatches)} mismatches, {elapsed:.1f}s")
    assert ok, mismatches[:5]


def _ca_sample(rng: random.Random, idx: int, normal: bool):
    """Rotate through three sources of CA models with n <= 6."""
    kind = idx % 3
    if kind == 0:
        n = rng.randint(3, 6)
        return gen_random_nca(n, rng) if normal else gen_random_ca(n, rng)
    if kind == 1:
        return anchored_model(rng, rng.randint(3, 6), normal)
    g, part = perturb_roberts(rng.randint(2, 3), rng.randint(0, 4), rng)
    return build_model_from_numbering(g, part)


def test_criterion_3_approximation_bounds(report):
    # interval models are checked too, but only non-interval ones count
    # toward the quota since they are the ones that run the full pipeline
    rng = random.Random(20260202)
    target, failures = 250, []
    counted = Counter()
    sampled = Counter()
    boxes = Counter()
    for label, normal, solve, slack in (
        ("general", False, approx_box_rep, lambda b: 2 * b + 1),
        ("normal", True, approx_box_rep_nca, lambda b: b + 2),
    ):
        idx = 0
        while counted[label] < target:
            m = _ca_sample(rng, idx, normal)
            idx += 1
            if normal and not is_normal(m):
                continue
            g = derive_arc_graph(m)
            rep = solve(m)
            box = exact_boxicity_bruteforce(g)
            sampled[label] += 1
            if not (validate_box_rep(g, rep)[0] and box <= rep.dimension <= slack(box)):
                failures.append((label, m, box, rep.dimension))
            if not is_interval(g):
                counted[label] += 1
                boxes[box] += 1
    ok = not failures
    report(3, "approximation bounds and validity", ok,
           f"{counted['general']} general + {counted['normal']} normal non-interval models "
           f"({sampled['general'] + sampled['normal']} checked in total, "
           f"box histogram {dict(sorted(boxes.items()))}), {len(failures)} violations")
    assert ok, failures[:5]


def test_criterion_4_fast_equals_naive(report):
    rng = random.Random(20260303)
    count, bad = 1200, []
    sizes = []
    for idx in range(count):
        if idx % 3 == 0:
            q = rng.randint(1, 30)
            g, part = perturb_roberts(q, rng.randint(0, 3 * q * q), rng)
        else:
            m = gen_random_cobip(rng.randint(2, 60), rng)
            g = derive_arc_graph(m)
            part = numbering_scheme(m, find_two_point_cover(m)[0])
        fast = greedy_color_fast(g, part)
        naive = greedy_color_naive(g, part)
        chain = longest_chain_length(g, part)
        sizes.append(g.n)
        if fast.non_edges != naive.non_edges or fast.color != naive.color or fast.k != chain:
            bad.append(idx)
    ok = not bad
    report(4, "fast colouring == naive colouring, k == longest chain", ok,
           f"{count} instances, n up to {max(sizes)}, {len(bad)} mismatches")
    assert ok, bad[:5]


def test_criterion_5_constructive_round_trips(report):
    rng = random.Random(20260404)
    numbered, round_trips, failures = 0, 0, []
    while numbered < 600:
        n = rng.randint(1, 12)
        m = gen_random_ca(n, rng) if numbered % 2 else anchored_model(rng, max(n, 3), rng.random() < 0.5)
        p = rng.choice(m.candidate_points())
        ns = numbering_scheme(m, p)
        # the side missing p is completed to a clique, as in the general pipeline
        g = add_clique(derive_arc_graph(m), ns.part_b)
        if not check_biconsecutive(g, ns)[0]:
            failures.append(("numbering", m, p))
        numbered += 1
        if derive_arc_graph(build_model_from_numbering(g, ns)) != g:
            failures.append(("round-trip", m, p))
        round_trips += 1
    while round_trips < 1200:
        m = gen_random_cobip(rng.randint(1, 12), rng)
        g = derive_arc_graph(m)
        ns = numbering_scheme(m, find_two_point_cover(m)[0])
        if not check_biconsecutive(g, ns)[0]:
            failures.append(("numbering", m, 0))
        if derive_arc_graph(build_model_from_numbering(g, ns)) != g:
            failures.append(("round-trip", m, 0))
        numbered += 1
        round_trips += 1
    ok = not failures
    report(5, "numbering is Bi-Consecutive and models round-trip", ok,
           f"{numbered} numberings, {round_trips} round-trips, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_6_doubling(report):
    rng = random.Random(20260505)
    count, failures, dims = 150, [], Counter()
    for idx in range(count):
        if idx % 3 == 2:
            g, part = perturb_roberts(rng.randint(2, 4), rng.randint(0, 6), rng)
            _, rep = boxicity_cobip(g, partition=part)
        else:
            # interval graphs give one-factor inputs; redraw to exercise the pipeline
            g = None
            while g is None or is_interval(g):
                m = anchored_model(rng, rng.randint(3, 9), idx % 3 == 1)
                g = derive_arc_graph(m)
            rep = approx_box_rep(m)
        dims[rep.dimension] += 1
        side_b = tuple(v for v in range(g.n) if rng.random() < 0.5)
        side_a = tuple(v for v in range(g.n) if v not in side_b)
        doubled = double_representation(g, rep, CliquePartition(side_a, side_b))
        g1 = add_clique(g, side_b)
        if doubled.dimension != 2 * rep.dimension or not validate_box_rep(g1, doubled)[0]:
            failures.append(idx)
    ok = not failures
    report(6, "doubling gives exactly twice the dimension and stays valid", ok,
           f"{count} instances (input dimension histogram {dict(sorted(dims.items()))}), {len(failures)} failures")
    assert ok


def _best_of(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@pytest.mark.perf
def test_criterion_7_performance(report):
    big = gen_random_cobip(2000, 7)
    g_big = derive_arc_graph(big)
    part_big = numbering_scheme(big, 0)
    t_big = _best_of(lambda: greedy_color_fast(g_big, part_big), repeats=1)

    mid = gen_random_cobip(800, 8)
    g_mid = derive_arc_graph(mid)
    part_mid = numbering_scheme(mid, 0)
    t_fast = _best_of(lambda: greedy_color_fast(g_mid, part_mid))
    t_naive = _best_of(lambda: greedy_color_naive(g_mid, part_mid))
    ratio = t_naive / t_fast
    ok = t_big < 10.0 and ratio >= 5.0
    report(7, "scaling of the amortised colouring", ok,
           f"n=2000 fast {t_big:.2f}s; n=800 naive {t_naive:.3f}s / fast {t_fast:.3f}s = {ratio:.1f}x")
    assert ok
