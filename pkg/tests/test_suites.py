import math

import pytest

from mpenergy.poly import Poly, largest_real_root, tripartite_g, tripartite_h, tripartite_q_r
from mpenergy.suites import (
    SUITES,
    SuiteResult,
    closed_form_suite,
    interlacing_suite,
    resolvent_suite,
    rey_suite,
    verify_case_analyses,
)


class TestSuiteResult:
    def test_collects_failures(self):
        res = SuiteResult("demo")
        assert res.add("ok", True) and not res.add("bad", False, "why")
        assert [c.label for c in res.failures] == ["bad"]
        assert not res.passed

    def test_empty_suite_does_not_pass(self):
        assert not SuiteResult("empty").passed


class TestCaseAnalysis:
    def test_case_two_value_at_t2(self):
        # independent float evaluation of g(2 sqrt 11) for K_{1,3,2}
        g = tripartite_g(3, 2)
        assert abs(g(2 * math.sqrt(11)) + 96) <= 1e-9

    def test_case_three_factorisation(self):
        for i in range(1, 8):
            assert abs(largest_real_root(tripartite_g(i, 1)) - (1 + math.sqrt(1 + 8 * i))) <= 1e-9

    def test_difference_constant_scales_with_ti(self):
        q, r = tripartite_q_r(4, 5)
        assert q - tripartite_g(4, 5) == Poly((8, 32 * 20))
        assert tripartite_h(4, 5) == q * tripartite_g(4, 5) + r

    def test_small_ranges_pass(self):
        res = verify_case_analyses(range(1, 9), range(1, 9))
        assert res.passed, res.failures[:3]
        # ti = 1 only at i = t = 1, the sole pair where 8x + 32 is right
        assert res.stats["pairs_with_difference_8x_plus_32"] == 1

    def test_range_cap(self):
        with pytest.raises(ValueError):
            verify_case_analyses(range(2, 52))


class TestSmallRuns:
    def test_interlacing(self):
        assert interlacing_suite(trials=30, seed=5).passed

    def test_resolvent(self):
        res = resolvent_suite(trials=60, seed=9)
        assert res.passed and res.stats["energy_cases"] > 0

    def test_closed_form(self):
        assert closed_form_suite(max_sum=12).passed

    def test_rey(self):
        assert rey_suite().passed

    def test_seeded_runs_repeat(self):
        a = interlacing_suite(trials=20, seed=11)
        b = interlacing_suite(trials=20, seed=11)
        assert [(c.label, c.passed, c.detail) for c in a.checks] == [(c.label, c.passed, c.detail) for c in b.checks]


@pytest.mark.parametrize("name", ["lemma2.3", "lemma2.4", "lemma3.1", "lemma3.3", "lemma3.4", "lemma4.1"])
def test_registered_suites_pass(name):
    res = SUITES[name]()
    assert res.passed, [(c.label, c.detail) for c in res.failures[:5]]
