"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line in the summary."""

import math
import time
from collections import Counter
from fractions import Fraction

from mpenergy.graphs import EdgeLocus, PartitionSpec, build_complete_multipartite, remove_locus_edge
from mpenergy.oracle import sweep_theorem, sweep_tripartite
from mpenergy.poly import (
    Poly,
    case_one_factors,
    f_a,
    largest_real_root,
    tripartite_g,
    tripartite_h,
    tripartite_q_r,
)
from mpenergy.spectra import eig_symmetric, graph_energy, second_eigenvalue
from mpenergy.suites import interlacing_suite, monotonicity_suite, resolvent_suite, soundness_audit


def partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def locus_count(parts) -> int:
    """Unordered size pairs available to an inter-part edge."""
    c = Counter(parts)
    sizes = sorted(c)
    return sum(1 for a in sizes for b in sizes if a < b) + sum(1 for s in sizes if c[s] >= 2)


def test_criterion_1_classification_sweep(record_criterion):
    start = time.perf_counter()
    report = sweep_theorem(12, 1e-8, workers=1)
    elapsed = time.perf_counter() - start
    specs = Counter(r.spec for r in report.rows)
    want_specs = sum(partition_count(n) - 1 for n in range(3, 13))
    coverage = len(specs) == want_specs and all(locus_count(s.parts) == m for s, m in specs.items())
    s = report.summary
    ok = coverage and s["disagree"] == 0 and s["inconclusive"] == 0 and elapsed < 30
    record_criterion(1, ok, f"cases={s['cases']} specs={len(specs)}/{want_specs} disagree={s['disagree']} "
                            f"inconclusive={s['inconclusive']} min_margin={s['min_margin']:.4f} "
                            f"time={elapsed:.2f}s")
    assert ok


def test_criterion_2_tripartite_extension(record_criterion):
    report = sweep_tripartite(34, 1e-8)
    want = sum(n - 2 for n in range(3, 35))
    ok = (len(report.rows) == want
          and all(r.agrees and r.margin > 1e-8 for r in report.rows))
    record_criterion(2, ok, f"cases={len(report.rows)}/{want} "
                            f"min_margin={report.summary['min_margin']:.4f}")
    assert ok


def test_criterion_3_closed_forms(record_criterion):
    worst_g = worst_h = 0.0
    count = 0
    for i in range(1, 39):
        for t in range(1, 40 - i):
            spec = PartitionSpec((1, i, t))
            locus = EdgeLocus.between_sizes(spec, 1, i)
            worst_g = max(worst_g, abs(graph_energy(build_complete_multipartite(spec))
                                       - largest_real_root(tripartite_g(i, t))))
            worst_h = max(worst_h, abs(graph_energy(remove_locus_edge(spec, locus))
                                       - largest_real_root(tripartite_h(i, t))))
            count += 1
    ok = worst_g <= 1e-8 and worst_h <= 1e-8
    record_criterion(3, ok, f"pairs={count} max|E(G)-tau(g)|={worst_g:.2e} "
                            f"max|E(G-e)-tau(h)|={worst_h:.2e}")
    assert ok


def test_criterion_4_constants(record_criterion):
    # C4 minus an edge is P4
    p4 = remove_locus_edge(PartitionSpec((2, 2)), EdgeLocus(0, 1))
    d_p4 = abs(second_eigenvalue(p4) - (math.sqrt(5) - 1) / 2)
    spec = PartitionSpec((1, 4, 1, 1))
    d_k = abs(second_eigenvalue(remove_locus_edge(spec, EdgeLocus.between_sizes(spec, 1, 4)))
              - (math.sqrt(2) - 1))
    d_e = max(abs(graph_energy(build_complete_multipartite(PartitionSpec((1, i, 1))))
                  - (1 + math.sqrt(1 + 8 * i))) for i in range(2, 31))
    h6 = tripartite_h(3, 1)(6)
    ok = d_p4 <= 1e-10 and d_k <= 1e-9 and d_e <= 1e-9 and h6 == -448 and isinstance(h6, int)
    record_criterion(4, ok, f"P4 err={d_p4:.1e} K(1,4,1,1)-e err={d_k:.1e} "
                            f"K(1,i,1) err={d_e:.1e} h(6)={h6}")
    assert ok


def test_criterion_5_exact_identities(record_criterion):
    x = Poly.x()
    f04 = sum(1 for i in range(1, 101)
              if 5 * f_a(i + 3, i, Fraction(2, 5)) != 3 * (i * i - 5 * i - 5))
    f1130 = sum(1 for i in range(1, 101)
                if 30 * f_a(i + 3, i, Fraction(11, 30)) != 14 * i * i - 95 * i - 90)
    division = difference = 0
    for i in range(1, 31):
        for t in range(1, 31):
            q, r = tripartite_q_r(i, t)
            g = tripartite_g(i, t)
            division += tripartite_h(i, t) != q * g + r
            difference += q - g != 8 * x + 32
    factor = 0
    for t in range(1, 51):
        h1, h2 = case_one_factors(t)
        factor += tripartite_h(2, t) != h1 * h2
    ok = f04 == f1130 == division == difference == factor == 0
    record_criterion(5, ok, f"mismatches: f_0.4={f04}/100 f_11/30={f1130}/100 h=qg+r={division}/900 "
                            f"q-g=8x+32={difference}/900 h=h1h2={factor}/50")
    assert ok


def test_criterion_6_resolvent(record_criterion):
    res = resolvent_suite(trials=500, tol=1e-7)
    record_criterion(6, res.passed, f"checks={len(res.checks)} failures={len(res.failures)} "
                                    f"energy_cases={res.stats['energy_cases']}")
    assert res.passed


def test_criterion_7_radius_bounds(record_criterion):
    product = ones = 0
    bad = []
    for n in range(4, 31):
        for i in range(2, n - 2):
            lam = eig_symmetric(build_complete_multipartite(PartitionSpec((1, i, n - i - 1)))).values[0]
            product += 1
            if not lam > math.sqrt((n - i) * (i + 1)):
                bad.append(("product", n, i))
        for i in range(2, n - 4):
            lam = eig_symmetric(build_complete_multipartite(PartitionSpec([i] + [1] * (n - i)))).values[0]
            ones += 1
            if not lam > n - i + 0.67:
                bad.append(("ones", n, i))
    ok = not bad and product > 0 and ones > 0
    record_criterion(7, ok, f"tripartite={product} ones={ones} violations={bad[:3]}")
    assert ok


def test_criterion_8_soundness(record_criterion):
    res = soundness_audit(n_max=12)
    trues = res.stats["true"]
    ok = res.passed and all(v > 0 for v in trues.values())
    record_criterion(8, ok, f"true={trues} counterexamples={len(res.failures)}")
    assert ok


def test_criterion_9_monotonicity(record_criterion):
    res = monotonicity_suite(n_max=12, margin=1e-9)
    record_criterion(9, res.passed, f"moves={len(res.checks)} failures={len(res.failures)}")
    assert res.passed


def test_criterion_10_interlacing(record_criterion):
    res = interlacing_suite(trials=200, n_max=10, tol=1e-9)
    record_criterion(10, res.passed, f"trials={len(res.checks)} failures={len(res.failures)}")
    assert res.passed

