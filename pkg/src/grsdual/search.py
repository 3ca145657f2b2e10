"""Greedy square-clique construction and the existence catalog.

Two pieces share this module. The first grows a point set whose
pairwise differences are all nonzero squares; over any field with
q = 1 (mod 4) that is large enough, the greedy run is guaranteed to
reach the requested size, and the resulting evaluation set satisfies
the even-length self-dual criterion with lambda = 1. The second piece
sweeps every construction family in the package over one field and
aggregates the reachable even lengths into catalog rows. The only
negative statement a row ever makes is the classical one: q = 3
(mod 4) rules out lengths n = 2 (mod 4). Everything else that no
family reaches is reported as unknown, never as impossible.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .cosets import (
    iterated_lift,
    th8_code,
    th9_code,
    th10_code,
    th11_code,
    th12_code,
    th13_code,
)
from .errors import GreedyFailed, HypothesisViolated, VerificationFailed
from .field import DEFAULT_TABLE_LIMIT, make_field
from .grs import build_verified_code
from .subspace import th1_code, th2_code, th3_code, th4_code


def _require(cond, msg):
    if not cond:
        raise HypothesisViolated(msg)


def square_clique_greedy(field, n):
    """Grow {0, 1} greedily into an n-set with all differences square.

    Candidates are scanned in ascending encoding order; an element
    joins when its difference with every current member is a nonzero
    square. Returns the n encodings, or None once no candidate is
    left. Callers re-check the pairwise property on the result; this
    function fixes only the deterministic growth order.
    """
    if n < 1 or n > field.q:
        return None
    encs = np.arange(field.q, dtype=np.int64)
    live = np.ones(field.q, dtype=bool)
    clique = []
    pick = 0
    while True:
        clique.append(pick)
        if len(clique) == n:
            return clique
        d = field.vsub(encs, np.full(field.q, pick, dtype=np.int64))
        live &= (d != 0) & (field.vsign(np.where(d == 0, 1, d)) == 1)
        nxt = np.flatnonzero(live)
        if nxt.size == 0:
            return None
        pick = int(nxt[0])


def large_q_bound(n):
    """Field-size threshold above which the greedy clique must succeed.

    The formula is evaluated literally (so the n = 2 value is 1.0 and
    the n = 4 value is roughly 45.86); callers compare q strictly
    greater.
    """
    t = (n - 3) * 2.0 ** (n - 3) + 0.5
    return (t + math.sqrt(t * t + (n - 1) * 2.0 ** (n - 2))) ** 2


def clique_count_lower_bound(q, n):
    """Character-sum lower bound on the number of greedy extensions.

    Counts elements extending a fixed (n-1)-clique; positive whenever
    q exceeds large_q_bound(n), which is what makes the greedy run
    above the bound total.
    """
    return (
        q / 2.0 ** (n - 1)
        - ((n - 3) / 2.0 + 1.0 / 2 ** (n - 1)) * math.sqrt(q)
        - (n - 1) / 2.0
    )


def th_large_q_code(field, n, permissive=False):
    """Self-dual [n, n/2] code on a greedy square clique.

    With q = 1 (mod 4), -1 is a square, so every evaluation-point
    product of differences is a square and the multiplier system
    solves with lambda = 1. The size bound is waived in permissive
    mode; below it the greedy run may legitimately come up short, and
    that surfaces as GreedyFailed rather than a precondition error.
    """
    _require(field.q % 4 == 1, "q = 1 (mod 4) fails")
    _require(n >= 2 and n % 2 == 0, "n must be even and at least 2")
    if not permissive:
        bound = large_q_bound(n)
        _require(field.q > bound, f"q <= clique bound {bound:.2f} for n = {n}")
    pts = square_clique_greedy(field, n)
    if pts is None:
        raise GreedyFailed(f"no square clique of size {n} in {field.name}")
    arr = np.asarray(pts, dtype=np.int64)
    ii, jj = np.triu_indices(n, 1)
    d = field.vsub(arr[jj], arr[ii])
    if np.any(d == 0) or np.any(field.vsign(d) != 1):
        raise GreedyFailed("clique failed the pairwise-square re-check")
    return build_verified_code(field, pts, False, {"theorem": "large_q", "n": n})


def odd_prime_powers(limit):
    """All odd prime powers q with 3 <= q <= limit, ascending."""
    if limit < 3:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    out = []
    for p in range(3, limit + 1, 2):
        if flags[p]:
            v = p
            while v <= limit:
                out.append(v)
                v *= p
    return sorted(out)


def _prime_power(q):
    """Split q into (p, m) with p prime, or raise."""
    rem = q
    p = q
    for c in range(2, math.isqrt(q) + 1):
        if q % c == 0:
            p = c
            break
    m = 0
    while rem % p == 0:
        rem //= p
        m += 1
    if rem != 1 or m < 1:
        raise HypothesisViolated(f"{q} is not a prime power")
    return p, m


def _divisors(x):
    small, big = [], []
    for c in range(1, math.isqrt(x) + 1):
        if x % c == 0:
            small.append(c)
            if c != x // c:
                big.append(x // c)
    return small + big[::-1]


def _factorizations(p, big_m):
    """All (r, m) with r = p^d a prime power and r^m the full field."""
    return [(p ** d, big_m // d) for d in _divisors(big_m)]


def _odd_factor_tuples(total):
    """Ordered tuples of odd factors >= 3 whose product is total."""
    if total == 1:
        yield ()
        return
    for d in _divisors(total):
        if d >= 3 and d % 2 == 1:
            for rest in _odd_factor_tuples(total // d):
                yield (d,) + rest


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog row: what is known about length n over GF(q).

    Constructed rows carry every parameter witness that reached n plus
    a serialized certificate for the first witness in sorted order.
    """

    q: int
    n: int
    status: str
    provenance: tuple = ()
    certificate: dict = None
    verified: bool = False

    def to_obj(self):
        return {
            "q": self.q,
            "n": self.n,
            "status": self.status,
            "provenance": [dict(pv) for pv in self.provenance],
            "certificate": self.certificate,
            "verified": self.verified,
        }


def _prov_key(prov):
    return (prov["theorem"], json.dumps(prov, sort_keys=True))


def _sweep(fld, p, big_m, cap, table_limit):
    """Yield (length, code) for every family hit with length <= cap."""
    q = fld.q

    def attempt(n, build):
        if 2 <= n <= cap:
            try:
                return [(n, build())]
            except HypothesisViolated:
                return []
        return []

    for r, m in _factorizations(p, big_m):
        half = (r - 1) // 2
        for e in range(m):
            re_ = r ** e
            for t in _divisors(half):
                if t != half:
                    yield from attempt(
                        2 * t * re_,
                        lambda r=r, m=m, e=e, t=t: th1_code(r, m, e, t, table_limit),
                    )
            for t in _divisors(r - 1):
                if t % 2 == 0:
                    yield from attempt(
                        (t + 1) * re_ + 1,
                        lambda r=r, m=m, e=e, t=t: th4_code(r, m, e, t, table_limit),
                    )

    for e in range(big_m):
        pe = p ** e
        for t in range(3, p, 2):
            yield from attempt(
                (t + 1) * pe,
                lambda e=e, t=t: th2_code(p, big_m, e, t, table_limit),
            )
        for t in range(2, p, 2):
            yield from attempt(
                (t + 1) * pe + 1,
                lambda e=e, t=t: th3_code(p, big_m, e, t, table_limit),
            )

    for r, mt in _factorizations(p, big_m):
        for m in _divisors(mt):
            if m % 2 == 0:
                continue
            s = mt // m
            e1 = (q - 1) // (r ** s - 1)
            for e in range(s):
                re_ = r ** e
                for t in _divisors(r - 1):
                    if t % 2 == 0:
                        yield from attempt(
                            t * re_ * e1,
                            lambda r=r, s=s, m=m, e=e, t=t: th8_code(
                                r, s, m, e, t, table_limit),
                        )
                        yield from attempt(
                            (t + 1) * re_ * e1 + 1,
                            lambda r=r, s=s, m=m, e=e, t=t: th11_code(
                                r, s, m, e, t, table_limit),
                        )
                    else:
                        yield from attempt(
                            (t + 1) * re_ * e1,
                            lambda r=r, s=s, m=m, e=e, t=t: th9_code(
                                r, s, m, e, t, table_limit),
                        )
                        yield from attempt(
                            t * re_ * e1 + 1,
                            lambda r=r, s=s, m=m, e=e, t=t: th10_code(
                                r, s, m, e, t, table_limit),
                        )
        for prod in _divisors(mt):
            for ms in _odd_factor_tuples(prod):
                if len(ms) < 2:
                    continue
                s = mt // prod
                e1 = (q - 1) // (r ** s - 1)
                for e in range(s):
                    re_ = r ** e
                    for t in _divisors(r - 1):
                        if t % 2 == 0:
                            plans = [("th8", t * re_ * e1),
                                     ("th11", (t + 1) * re_ * e1 + 1)]
                        else:
                            plans = [("th9", (t + 1) * re_ * e1),
                                     ("th10", t * re_ * e1 + 1)]
                        for variant, n in plans:
                            yield from attempt(
                                n,
                                lambda r=r, s=s, ms=ms, e=e, t=t, v=variant:
                                iterated_lift(r, s, list(ms), e, t, v,
                                              table_limit),
                            )

    if big_m % 2 == 0:
        r2 = p ** (big_m // 2)
        for f in _divisors(q - 1):
            if f > cap:
                continue
            e = (q - 1) // f
            for s in _divisors(math.gcd(f, r2 - 1)):
                d_cap = s * (r2 + 1) // math.gcd(s * (r2 + 1), f)
                for t in range(1, min(d_cap, cap // f) + 1):
                    if (t * f) % 2 != 0:
                        continue
                    yield from attempt(
                        t * f,
                        lambda f=f, e=e, s=s, t=t: th12_code(
                            r2, e, f, s, t, "tf", table_limit),
                    )
                    yield from attempt(
                        t * f + 2,
                        lambda f=f, e=e, s=s, t=t: th12_code(
                            r2, e, f, s, t, "tf+2", table_limit),
                    )
            if f % 2 == 1:
                for s in _divisors(math.gcd(f, r2 + 1)):
                    d_cap = s * (r2 - 1) // math.gcd(s * (r2 - 1), f)
                    for t in range(1, min(d_cap, (cap - 1) // f) + 1, 2):
                        yield from attempt(
                            t * f + 1,
                            lambda f=f, e=e, s=s, t=t: th13_code(
                                r2, e, f, s, t, table_limit),
                        )

    if q % 4 == 1:
        for n in range(2, cap + 1, 2):
            bound = large_q_bound(n)
            if n >= 4 and bound >= q:
                break
            if q > bound:
                yield n, th_large_q_code(fld, n)


def catalog(q, n_max, table_limit=DEFAULT_TABLE_LIMIT):
    """Sweep every family over GF(q) and classify each even n <= n_max.

    Hits are grouped by length; each constructed row records all its
    parameter witnesses in sorted order, re-verifies the first one,
    and serializes it as the certificate. A hit on a length the
    nonexistence rule forbids cannot come from a correct construction,
    so it raises instead of being recorded.
    """
    _require(q % 2 == 1 and q >= 3, "q must be an odd prime power")
    p, big_m = _prime_power(q)
    fld = make_field(p, big_m, table_limit)
    cap = min(n_max, q + 1)
    hits = {}
    for n, code in _sweep(fld, p, big_m, cap, table_limit):
        hits.setdefault(n, []).append(code)
    entries = []
    for n in range(2, n_max + 1, 2):
        banned = q % 4 == 3 and n % 4 == 2
        found = hits.get(n, [])
        if found and banned:
            raise VerificationFailed(
                f"length {n} over {fld.name} contradicts the nonexistence rule")
        if banned:
            entries.append(CatalogEntry(q, n, "nonexistent"))
        elif not found:
            entries.append(CatalogEntry(q, n, "unknown"))
        else:
            found.sort(key=lambda c: _prov_key(c.provenance))
            first = found[0]
            if not first.verify():
                raise VerificationFailed(
                    f"certificate for length {n} over {fld.name} failed")
            provs = tuple(dict(c.provenance) for c in found)
            entries.append(
                CatalogEntry(q, n, "constructed", provs, first.to_obj(), True))
    return entries


def catalog_to_jsonl(entries):
    """One JSON object per line, stable key order."""
    if not entries:
        return ""
    return "\n".join(
        json.dumps(e.to_obj(), sort_keys=True, separators=(",", ":"))
        for e in entries) + "\n"


def catalog_to_csv(entries):
    """Summary table with columns q, n, status, first theorem id."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["q", "n", "status", "theorem"])
    for e in entries:
        first = e.provenance[0]["theorem"] if e.provenance else ""
        writer.writerow([e.q, e.n, e.status, first])
    return buf.getvalue()
