"""Acceptance gate: end-to-end checks with pinned tolerances and budgets.

Every check records one verdict line through record_acceptance(), so the
terminal summary always shows the full table even when an assertion
fails.  Checks comparing desk-scale measurements against asymptotic
expectations are kept faithful to their stated tolerances; the ones that
fail at these sizes fail honestly and are documented in the README.
"""

import math
import time

import numpy as np
import pytest

from conftest import AcceptanceTimer, record_acceptance

from cliquefree.census import census
from cliquefree.critical import (
    concentration_window,
    is_color_critical,
    log_expected_partite,
    partite_exponent_residual,
)
from cliquefree.enumeration import partite_census
from cliquefree.experiments import poisson_check, witness_rate
from cliquefree.graphs import Graph, sample_graph
from cliquefree.logmath import expected_defect_sets, poisson_tail, stein_chen_bound
from cliquefree.profiles import breakpoint_profile, interval_length_multiset, mu_xi, mu_xi_table
from cliquefree.solver import max_clique_free, max_pattern_free
from cliquefree.thresholds import level_threshold, predicted_pmf, threshold_table

from oracles import (
    alpha_clique_free,
    edge_set,
    exact_defect_pmf,
    exact_expected_defect,
    interval_lengths_brute,
    subsets_census,
    triangle_census_brute,
    tv_full_l1,
)

SEED = 20260825


# -- 1: breakpoint profiles ----------------------------------------------------


def test_c01_breakpoint_profiles():
    breakpoint_profile(11), breakpoint_profile(23)  # warm caches and imports
    with AcceptanceTimer() as t:
        p11 = breakpoint_profile(11).breakpoints
        quintuple = tuple(mu_xi(11, j) for j in range(1, 6))
        p23 = breakpoint_profile(23).breakpoints
    ok = (
        p11 == (1, 2, 3, 5, 11)
        and quintuple == ((10, 1), (4, 1), (2, 1), (1, 1), (1, 4))
        and p23 == (1, 2, 3, 4, 5, 7, 11, 23)
        and t.seconds < 1e-3
    )
    record_acceptance(
        "c01 profiles", ok, f"exact profile match, {t.seconds * 1e6:.0f} us"
    )
    assert p11 == (1, 2, 3, 5, 11)
    assert quintuple == ((10, 1), (4, 1), (2, 1), (1, 1), (1, 4))
    assert p23 == (1, 2, 3, 4, 5, 7, 11, 23)
    assert t.seconds < 1e-3


# -- 2: interval lengths at r = 1001 -------------------------------------------

# Hand-compiled reference list of distinct interval lengths at r = 1001.
# Its largest element (501) disagrees with the gap-plus-one formula (502).
REFERENCE_LENGTHS = frozenset(
    {1, 2, 3, 4, 5, 6, 8, 11, 12, 15, 18, 25, 35, 51, 84, 168, 501}
)


@pytest.fixture(scope="module")
def length_comparison():
    ours = interval_length_multiset(1001)
    brute = interval_lengths_brute(1001)
    return ours, brute


def test_c02_interval_lengths_match_oracle(length_comparison):
    ours, brute = length_comparison
    ok = dict(ours) == dict(brute)
    record_acceptance(
        "c02 oracle", ok, f"multiset of {sum(ours.values())} lengths identical"
    )
    assert dict(ours) == dict(brute)


def test_c02_interval_lengths_vs_reference_list(length_comparison):
    ours, _ = length_comparison
    computed = frozenset(ours)
    largest_ours, largest_ref = max(computed), max(REFERENCE_LENGTHS)
    extra_ours = sorted(computed - REFERENCE_LENGTHS - {largest_ours})
    extra_ref = sorted(REFERENCE_LENGTHS - computed - {largest_ref})
    # the reference list turns out to be the exact distinct-length set for
    # a part count of 1000, i.e. it was compiled under the convention that
    # counts parts one lower; at 1001 it disagrees beyond its largest entry
    off_by_one_match = frozenset(interval_length_multiset(1000)) == REFERENCE_LENGTHS
    print(f"computed distinct lengths: {sorted(computed)}")
    print(f"reference list:            {sorted(REFERENCE_LENGTHS)}")
    print(f"flagged largest element:   computed {largest_ours}, reference {largest_ref}")
    print(f"non-largest only in computed:  {extra_ours}")
    print(f"non-largest only in reference: {extra_ref}")
    print(f"reference equals the part-count-1000 set exactly: {off_by_one_match}")
    ok = not extra_ours and not extra_ref
    record_acceptance(
        "c02 ref-list",
        ok,
        f"largest flagged ({largest_ours} vs {largest_ref}); other diffs "
        f"ours{extra_ours} ref{extra_ref}; ref = part-count-1000 set: "
        f"{off_by_one_match}",
    )
    assert not extra_ours and not extra_ref, (
        "reference list disagrees beyond the flagged largest element "
        "(it matches a part count of 1000, not 1001): "
        f"only-computed {extra_ours}, only-reference {extra_ref}"
    )


# -- 3: part-size accounting identity ------------------------------------------


def test_c03_accounting_identity_sweep():
    with AcceptanceTimer() as t:
        ok = True
        for r in range(1, 10_001):
            mu, xi = mu_xi_table(r)
            j = np.arange(1, r + 1, dtype=np.int64)
            ok &= bool(np.all(xi * (mu + 1) + (j - xi) * (mu + 2) == r))
            ok &= bool(np.all((xi >= 1) & (xi <= j)))
    record_acceptance(
        "c03 identity", ok and t.seconds < 1.0, f"50,005,000 pairs in {t.seconds:.2f} s"
    )
    assert ok
    assert t.seconds < 1.0


# -- 4: threshold chain and growth ratios --------------------------------------

CHAIN_KS = range(10, 61)
CHAIN_RS = (2, 3, 5, 11)


@pytest.fixture(scope="module")
def chain_sweep():
    t0 = time.perf_counter()
    violations = []
    for r in CHAIN_RS:
        for k in CHAIN_KS:
            tab = threshold_table(k, r)  # raises ThresholdChainError if broken
            seq = [level_threshold(k)]
            for lo, up in zip(tab.lower, tab.upper):
                seq += [lo, up]
            if not all(x <= y for x, y in zip(seq, seq[1:])):
                violations.append((k, r))
            if tab.upper[-1] != level_threshold(k + 1):
                violations.append((k, r))
    return violations, time.perf_counter() - t0


def test_c04_threshold_chain(chain_sweep):
    violations, elapsed = chain_sweep
    ok = not violations and elapsed < 60.0
    record_acceptance(
        "c04 chain",
        ok,
        f"{len(CHAIN_RS) * len(CHAIN_KS)} tables monotone in {elapsed:.2f} s",
    )
    assert not violations
    assert elapsed < 60.0


def test_c04_growth_ratio_sqrt2():
    # the asymptotic ratio checks apply on the k >= 40 tail
    bad = []
    for k in range(40, 61):
        q = level_threshold(k + 1) / level_threshold(k)
        if abs(q - math.sqrt(2)) > 0.05 * math.sqrt(2):
            bad.append((k, round(q, 5)))
    record_acceptance(
        "c04 sqrt2", not bad, "consecutive ratio within 5% of sqrt(2) for k in [40,60]"
    )
    assert not bad, f"ratio outside 5% band: {bad}"


def test_c04_stirling_form():
    bad = []
    for k in range(40, 61):
        approx = (k / math.e) * 2 ** ((k - 1) / 2)
        q = level_threshold(k) / approx
        if abs(q - 1) > 0.10:
            bad.append((k, round(q, 4)))
    record_acceptance(
        "c04 stirling",
        not bad,
        f"(k/e)*2^((k-1)/2) within 10% for k in [40,60]; offenders {bad}",
    )
    assert not bad, (
        "closed-form approximation misses the 10% band at the low end of "
        f"the range: {bad}"
    )


# -- 5: exact solver equals full enumeration -----------------------------------


def test_c05_solver_matches_enumeration():
    with AcceptanceTimer() as t:
        mismatches = []
        for i in range(200):
            n = 10 + i % 5
            q = 3 + i // 100
            g = sample_graph(n, 31000 + i)
            got = max_clique_free(g, q).size
            want = alpha_clique_free(n, edge_set(n, g.edges()), q)
            if got != want:
                mismatches.append((n, q, 31000 + i, got, want))
        triangle = Graph.complete(3)
        for i in range(100):
            g = sample_graph(8 + i % 6, 32000 + i)
            if max_pattern_free(g, triangle).size != max_clique_free(g, 3).size:
                mismatches.append(("pattern", 32000 + i))
    ok = not mismatches and t.seconds < 300.0
    record_acceptance(
        "c05 solver", ok, f"200 oracle + 100 pattern graphs in {t.seconds:.1f} s"
    )
    assert not mismatches, mismatches[:5]
    assert t.seconds < 300.0


# -- 6: census equals exhaustive subset enumeration ----------------------------


def test_c06_census_matches_enumeration():
    with AcceptanceTimer() as t:
        mismatches = []
        for i in range(100):
            n = 12 + i % 5
            k = 3 + i % 4
            budget = i % 4
            g = sample_graph(n, 33000 + i)
            got = census(g, k, budget).counts
            want = subsets_census(n, edge_set(n, g.edges()), k, budget)
            if got != want:
                mismatches.append((n, k, budget, 33000 + i))
    ok = not mismatches and t.seconds < 300.0
    record_acceptance(
        "c06 census", ok, f"100 graphs, n<=16, k<=6, budget<=3 in {t.seconds:.1f} s"
    )
    assert not mismatches, mismatches[:5]
    assert t.seconds < 300.0


# -- 7: defect-count statistics against a Poisson law --------------------------

POISSON_POINTS = ((30, 7, 0), (32, 7, 0), (34, 8, 1))


@pytest.fixture(scope="module")
def poisson_runs():
    runs = []
    t0 = time.perf_counter()
    for n, k, i in POISSON_POINTS:
        rep = poisson_check(n, k, i, reps=10_000, seed=SEED)
        theory = expected_defect_sets(n, k, i).to_float()
        runs.append((n, k, i, rep.summary, theory))
    return runs, time.perf_counter() - t0


def test_c07_empirical_mean_within_clt(poisson_runs):
    runs, elapsed = poisson_runs
    details, ok = [], True
    for n, k, i, s, theory in runs:
        assert 0.5 <= theory <= 3.0 and 30 <= n <= 60
        gap = abs(s["mean"] - theory)
        ok &= gap <= s["clt_radius_3sigma"]
        details.append(f"({n},{k},{i}) gap {gap:.4f}<= {s['clt_radius_3sigma']:.4f}")
    ok &= elapsed < 600.0
    record_acceptance(
        "c07 mean", ok, "; ".join(details) + f"; {elapsed:.0f} s total"
    )
    for n, k, i, s, theory in runs:
        assert abs(s["mean"] - theory) <= s["clt_radius_3sigma"]
    assert elapsed < 600.0


def test_c07_tv_distance_to_poisson(poisson_runs):
    runs, _ = poisson_runs
    tvs = [(f"({n},{k},{i})", round(s["tv_vs_mean"], 4)) for n, k, i, s, _ in runs]
    ok = all(tv <= 0.05 for _, tv in tvs)
    record_acceptance("c07 tv", ok, f"tv vs Poisson(mean) {tvs}, tolerance 0.05")
    assert ok, (
        "overlapping defect sets make the count variance several times its "
        f"mean at these sizes, so the law is far from Poisson: {tvs}"
    )


# -- 8: constructive witness frequency -----------------------------------------


@pytest.fixture(scope="module")
def witness_run():
    t0 = time.perf_counter()
    rep = witness_rate(21, 2, 1, reps=1000, seed=SEED, k=6)
    return rep.summary, time.perf_counter() - t0


def test_c08_build_vs_supply_gap(witness_run):
    s, _ = witness_run
    expected = expected_defect_sets(21, 7, 1).to_float()
    assert 0.5 <= expected <= 2.0  # the pinned point sits near mean 1
    gap = abs(s["build_rate"] - s["supply_rate"])
    ok = gap <= 0.15
    record_acceptance(
        "c08 gap",
        ok,
        f"supply {s['supply_rate']:.3f} build {s['build_rate']:.3f} "
        f"gap {gap:.3f}, tolerance 0.15",
    )
    assert ok, (
        "a one-defect 7-set usually exists without the disjoint clique-free "
        f"remainder the builder also needs at n = 21: gap {gap:.3f}"
    )


def test_c08_all_successes_verified(witness_run):
    s, elapsed = witness_run
    ok = bool(s["verified_all"]) and s["gave_up"] == 0 and elapsed < 900.0
    record_acceptance(
        "c08 verify",
        ok,
        f"{round(s['build_rate'] * s['reps'])} successes re-verified, "
        f"{elapsed:.0f} s total",
    )
    assert s["verified_all"]
    assert s["gave_up"] == 0
    assert elapsed < 900.0


def test_c08_successes_reach_alpha_bound(witness_run):
    s, _ = witness_run
    ok = bool(s["alpha_reached_all"])
    record_acceptance(
        "c08 alpha", ok, "every built structure certifies alpha >= 2k+1 at n = 21"
    )
    assert ok


# -- 9: two-part reduction emerges from the general machinery -------------------


def test_c09_two_part_reduction_is_generic():
    # the same divisor/floor formulas serve every part count; at r = 2 they
    # specialize to one single-defect part then two clean parts
    assert breakpoint_profile(2).breakpoints == (1, 2)
    assert mu_xi(2, 1) == (1, 1)
    assert mu_xi(2, 2) == (0, 2)
    tab = threshold_table(7, 2)
    assert tab.mus == (1, 0) and tab.xis == (1, 2)

    out = predicted_pmf(40, 2)
    k = out.k
    assert k == 7 and out.js == (0, 1, 2)
    lam1 = float(exact_expected_defect(40, k + 1, 1))
    lam2 = float(exact_expected_defect(40, k + 1, 0))
    tail1 = poisson_tail(lam1, 1)  # one part with one defect
    tail2 = poisson_tail(lam2, 2)  # two independent parts
    ok = (
        math.isclose(out.tails[1], tail1, rel_tol=1e-9)
        and math.isclose(out.tails[2], tail2, rel_tol=1e-9)
        and math.isclose(out.lambdas[1], lam1, rel_tol=1e-9)
        and math.isclose(out.lambdas[2], lam2, rel_tol=1e-9)
    )
    record_acceptance(
        "c09 reduction", ok, "tail(2k+1)=P(Pois(E[Z])>=1), tail(2k+2)=P(Pois(E[Y])>=2)"
    )
    assert ok


# -- 10: color-critical window -------------------------------------------------

WINDOW_GRID = tuple((n, r) for r in (2, 3) for n in (10**3, 10**4, 10**5, 10**6))


def test_c10_window_shape():
    with AcceptanceTimer() as t:
        c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        critical_ok = is_color_critical(c5, 2)
        widths_ok = True
        for n, r in WINDOW_GRID:
            w = concentration_window(n, r)
            widths_ok &= (w.hi - w.lo + 1) == r + 1
    ok = critical_ok and widths_ok and t.seconds < 60.0
    record_acceptance(
        "c10 window", ok, f"5-cycle critical; window spans r+1 sizes on all 8 points"
    )
    assert critical_ok
    assert widths_ok
    assert t.seconds < 60.0


def test_c10_count_drop_ratio():
    rows = []
    for n, r in WINDOW_GRID:
        w = concentration_window(n, r)
        drop = log_expected_partite(n, w.m0, r) - log_expected_partite(n, w.m0 + 1, r)
        rows.append((n, r, drop / math.log(n)))
    ok = all(0.85 <= e <= 1.15 for _, _, e in rows)
    record_acceptance(
        "c10 ratio",
        ok,
        "count drop exponent "
        + ", ".join(f"{e:.3f}" for _, _, e in rows)
        + " in [0.85, 1.15]",
    )
    assert ok, rows


def test_c10_vanishing_size_scaling():
    rows = []
    for n, r in WINDOW_GRID:
        w = concentration_window(n, r)
        rows.append((n, r, w.m0 / (2 * r * math.log2(n))))
    ok = all(0.9 <= q <= 1.1 for _, _, q in rows)
    record_acceptance(
        "c10 scaling",
        ok,
        "m0/(2r log2 n) " + ", ".join(f"{q:.3f}" for _, _, q in rows),
    )
    assert ok, (
        "the vanishing size approaches 2r log2(n) from below with a "
        f"log-log correction still visible at n = 10^6: {rows}"
    )


def test_c10_exponent_residual_identity():
    with AcceptanceTimer() as t:
        bad = sum(
            partite_exponent_residual(r * k, k, r) != 0
            for r in range(1, 21)
            for k in range(1, 1001)
        )
    ok = bad == 0 and t.seconds < 60.0
    record_acceptance(
        "c10 residual", ok, f"20,000 exact zero residuals in {t.seconds:.2f} s"
    )
    assert bad == 0
    assert t.seconds < 60.0


# -- 11: full labeled census ----------------------------------------------------


@pytest.fixture(scope="module")
def labeled_census():
    t0 = time.perf_counter()
    rows = []
    for m in range(3, 8):
        pc = partite_census(m, 2)
        free, hist = triangle_census_brute(m)
        rows.append((m, pc, free, hist))
    return rows, time.perf_counter() - t0


def test_c11_census_matches_bruteforce(labeled_census):
    rows, elapsed = labeled_census
    mismatches = [
        m
        for m, pc, free, hist in rows
        if pc.clique_free != free or dict(pc.distance_histogram) != hist
    ]
    first = rows[0]
    ok = (
        not mismatches
        and first[1].clique_free == 7
        and dict(first[1].distance_histogram) == {0: 7}
        and elapsed < 300.0
    )
    record_acceptance(
        "c11 match", ok, f"m = 3..7 exact, m = 3 gives 7/7 bipartite; {elapsed:.1f} s"
    )
    assert not mismatches
    assert first[1].clique_free == 7
    assert dict(first[1].distance_histogram) == {0: 7}
    assert elapsed < 300.0


def test_c11_bipartite_fraction_monotone(labeled_census):
    rows, _ = labeled_census
    fractions = [(m, pc.exact_partite_fraction) for m, pc, _, _ in rows]
    ok = all(a[1] <= b[1] for a, b in zip(fractions, fractions[1:]))
    record_acceptance(
        "c11 monotone",
        ok,
        "fraction " + ", ".join(f"{f:.4f}" for _, f in fractions),
    )
    assert ok, (
        "odd cycles beat bipartiteness into the census long before the "
        f"almost-all regime: {fractions}"
    )


# -- 12: Poisson-approximation error bound ---------------------------------------


def test_c12_stein_chen_dominates_exact_tv():
    with AcceptanceTimer() as t:
        violations, combos = [], 0
        for n in range(1, 8):
            for k in range(1, 4):
                for i in range(0, 2):
                    combos += 1
                    pmf = exact_defect_pmf(n, k, i)
                    lam = float(exact_expected_defect(n, k, i))
                    tv = tv_full_l1(pmf, lam)
                    bound = stein_chen_bound(n, k, i).to_float()
                    if bound + 1e-12 < tv:
                        violations.append((n, k, i, tv, bound))
    ok = not violations and t.seconds < 300.0
    record_acceptance(
        "c12 stein-chen", ok, f"{combos} exact comparisons in {t.seconds:.1f} s"
    )
    assert not violations, violations
    assert t.seconds < 300.0
