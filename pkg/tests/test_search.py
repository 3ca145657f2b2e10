"""Square-clique greedy search, its q bound, and the catalog sweep."""

import json
import math

import numpy as np
import pytest

from grsdual import make_field
from grsdual.errors import GreedyFailed, HypothesisViolated, VerificationFailed
from grsdual.grs import code_from_obj, lagrange_products
from grsdual.search import (
    CatalogEntry,
    catalog,
    catalog_to_csv,
    catalog_to_jsonl,
    clique_count_lower_bound,
    large_q_bound,
    odd_prime_powers,
    square_clique_greedy,
    th_large_q_code,
)


def test_large_q_bound_values():
    assert large_q_bound(2) == 1.0
    assert abs(large_q_bound(4) - 45.86000936329382) < 1e-9


def test_large_q_bound_is_increasing():
    vals = [large_q_bound(n) for n in range(4, 17)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_count_lower_bound_positive_above_threshold():
    """The expected-clique count is nonnegative for every q past the
    bound; the bound is exactly its larger root in sqrt(q)."""
    for n in (4, 6, 8):
        b = large_q_bound(n)
        root = clique_count_lower_bound(b, n)
        assert abs(root) < 1e-6  # the bound itself is the root
        for q in (b * 1.01, b * 2, b * 10, b * 1000):
            assert clique_count_lower_bound(q, n) > 0


def test_greedy_clique_frozen_case():
    assert square_clique_greedy(make_field(7, 2), 4) == [0, 1, 9, 17]


def test_greedy_clique_pairwise_property():
    """Each returned set really is a clique: every pairwise difference
    is a nonzero square."""
    for q, n in ((49, 4), (53, 4), (49, 6), (169, 6), (625, 6)):
        p = next(d for d in range(2, q + 1) if q % d == 0)
        m = round(math.log(q, p))
        f = make_field(p, m)
        clique = square_clique_greedy(f, n)
        assert clique is not None and len(clique) == n
        for i in range(n):
            for j in range(i):
                assert f.sign(f.sub(clique[i], clique[j])) == 1


def test_greedy_clique_exhausts_small_field():
    assert square_clique_greedy(make_field(13), 4) is None


def test_th_large_q_code_builds_verified():
    code = th_large_q_code(make_field(7, 2), 4)
    assert (code.length, code.k) == (4, 2)
    assert code.verify()
    assert code.provenance == {"theorem": "large_q", "n": 4}


def test_th_large_q_code_hypothesis_checks():
    with pytest.raises(HypothesisViolated):
        th_large_q_code(make_field(7), 4)  # q = 3 (mod 4)
    with pytest.raises(HypothesisViolated):
        th_large_q_code(make_field(5, 2), 5)  # odd n
    with pytest.raises(HypothesisViolated):
        th_large_q_code(make_field(13), 4)  # below the bound
    with pytest.raises(GreedyFailed):
        th_large_q_code(make_field(13), 4, permissive=True)


def test_odd_prime_powers():
    assert odd_prime_powers(50) == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25,
                                    27, 29, 31, 37, 41, 43, 47, 49]
    assert odd_prime_powers(2) == []


def test_catalog_small_prime():
    entries = catalog(7, 10)
    got = [(e.q, e.n, e.status) for e in entries]
    assert got == [(7, 2, "nonexistent"), (7, 4, "constructed"),
                   (7, 6, "nonexistent"), (7, 8, "constructed"),
                   (7, 10, "nonexistent")]
    by_n = {e.n: e for e in entries}
    assert [p["theorem"] for p in by_n[4].provenance] == ["th10", "th9"]
    assert [p["theorem"] for p in by_n[8].provenance] == ["th4"]
    for e in entries:
        if e.status == "constructed":
            assert e.verified and e.certificate is not None
            assert code_from_obj(e.certificate).verify()
        else:
            assert not e.verified and e.certificate is None
            assert e.provenance == ()


def test_catalog_nonexistence_rule():
    # q = 3 (mod 4) bans exactly n = 2 (mod 4)
    for e in catalog(7, 20) + catalog(11, 20):
        if e.n % 4 == 2:
            assert e.status == "nonexistent"


def test_catalog_square_field_hits_all_even_lengths():
    entries = catalog(25, 12)
    assert all(e.status == "constructed" for e in entries)
    by_n = {e.n: [p["theorem"] for p in e.provenance] for e in entries}
    assert by_n[2][0] == "large_q"
    assert by_n[4][0] == "th1"
    assert "th12" in by_n[4] and "th13" in by_n[4]


def test_catalog_rejects_bad_q():
    for bad in (8, 15, 1):
        with pytest.raises(HypothesisViolated):
            catalog(bad, 4)


def test_catalog_serializations_are_deterministic():
    entries = catalog(7, 8)
    jsonl = catalog_to_jsonl(entries)
    assert jsonl == catalog_to_jsonl(catalog(7, 8))
    lines = jsonl.strip().split("\n")
    assert len(lines) == 4
    first = json.loads(lines[0])
    assert first == {"certificate": None, "n": 2, "provenance": [],
                     "q": 7, "status": "nonexistent", "verified": False}
    assert catalog_to_csv(entries) == (
        "q,n,status,theorem\n"
        "7,2,nonexistent,\n"
        "7,4,constructed,th10\n"
        "7,6,nonexistent,\n"
        "7,8,constructed,th4\n")


def test_catalog_entry_to_obj():
    entry = CatalogEntry(7, 2, "nonexistent")
    assert entry.to_obj() == {"q": 7, "n": 2, "status": "nonexistent",
                              "provenance": [], "certificate": None,
                              "verified": False}
