"""The identity suites must pass on healthy tables and catch corrupted
ones.  Corruption is injected into a deep copy so the cached field
instance other tests share stays intact."""

import copy

from grsdual import make_field
from grsdual.selftest import run_selftest, selftest_passed

SUITE_NAMES = [
    "roots-product identity",
    "coset-derivative identity",
    "coset-polynomial factorization",
    "subspace-product character",
    "additive-lift transfer",
    "coset-distinctness criterion",
    "odd-divisor character",
]


def test_all_suites_pass_at_small_scale():
    results = run_selftest(max_q=50)
    assert [r.name for r in results] == SUITE_NAMES
    for r in results:
        assert r.checks > 0
        assert r.failures == 0
        assert r.witnesses == []
    assert selftest_passed(results)


def test_runs_are_deterministic():
    a = run_selftest(max_q=30)
    b = run_selftest(max_q=30)
    assert [(r.name, r.checks, r.failures) for r in a] == \
           [(r.name, r.checks, r.failures) for r in b]


def test_corrupted_zech_table_is_caught():
    bad = copy.deepcopy(make_field(13))
    bad._zech[3] = (bad._zech[3] + 5) % 12
    results = run_selftest(fields=[bad])
    assert not selftest_passed(results)
    total = sum(r.failures for r in results)
    assert total > 0
    witnesses = [w for r in results for w in r.witnesses]
    assert witnesses and all("GF(13)" in w for w in witnesses)
    # witness lists stay readable: at most 8 per suite
    assert all(len(r.witnesses) <= 8 for r in results)


def test_explicit_field_list_restricts_the_run():
    results = run_selftest(fields=[make_field(13)])
    assert selftest_passed(results)
    small = sum(r.checks for r in results)
    full = sum(r.checks for r in run_selftest(max_q=50))
    assert 0 < small < full
