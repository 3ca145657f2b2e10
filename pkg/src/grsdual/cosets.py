"""Code constructions built on multiplicative coset lifts.

Where the additive engine replaces a point by an affine subspace, the
multiplicative engine replaces it by a coset of a subgroup.  Fix a
decomposition q - 1 = e1 * f1 and write g for a generator of the
multiplicative group, H1 = <g^e1> (order f1) and H2 = <g^f1> (order
e1).  Each base point a in H1 has a unique coordinate v(a) in
0..f1 - 1 with a = g^{v(a) e1}; the lifted set takes the whole coset
g^{v(a)} H2 for every base point.  Lagrange products factor exactly:

    L_S(g^{v(a) + f1 u}) = e1 * g^{v(a)(e1 - 1)} * g^{-f1 u} * L_a(a).

With e1 odd (so f1 is even and the stray powers of g are all squares)
the quadratic character of L transfers unchanged, plainly or in the
extended sense.  coset_points asserts the identity at desk scale.

The same machinery works relative to a subfield: with the ambient
order replaced by a subfield order W, the decomposition e1 * f1 =
W - 1 and g the subfield's canonical generator.  Characters need no
translation because every tower step used here has odd index.

Families built on top (wire ids match the command line):

  th8/th9:   even length T * r^e * (1 + r^s + ... + r^{s(m-1)}) over
             GF(r^{sm}), m odd; T = t (t even) or t + 1 (t odd);
  th10/th11: the extended companions, length T * r^e * (...) + 1;
  cor1-cor4: the same four, iterated up an odd tower of subfields;
  th12:      lengths tf and tf + 2 over GF(r^2) from unions of t
             cosets of the order-f subgroup, scaled by powers of
             beta = theta^{(r-1)/s};
  th13:      length tf + 1 (extended, tf odd) with beta = theta^{(r+1)/s}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BaseNotSelfDual,
    CharacterCondition,
    DuplicatePoints,
    E1NotOdd,
    HypothesisViolated,
    NotInSubgroup,
    TooManyCosets,
    VerificationFailed,
)
from .field import DEFAULT_TABLE_LIMIT, factor_prime_power, make_field
from .grs import (
    build_verified_code,
    lagrange_products,
    products_at,
    solve_extended_multipliers,
    solve_multipliers,
)
from .subspace import (
    DESK_SCALE_Q,
    _check_zero_roots_products,
    extended_subspace_lift,
    lift_in_container,
    roots_of_unity,
    th1_base,
    zero_and_roots,
)


def _require(cond, message):
    if not cond:
        raise HypothesisViolated(message)


@dataclass(frozen=True)
class CosetSpec:
    """Decomposition W - 1 = e1 * f1 of a subfield's cyclic group.

    subfield_order W defaults to the ambient q.  e2 is the alias f1
    carries when it is used as a subgroup index rather than an order.
    """

    field: object
    e1: int
    subfield_order: int = 0

    def __post_init__(self):
        if self.subfield_order == 0:
            object.__setattr__(self, "subfield_order", self.field.q)
        group = self.subfield_order - 1
        if self.e1 < 1 or group % self.e1 != 0:
            raise HypothesisViolated(
                f"e1 = {self.e1} does not divide {group}")
        self.field.subfield_stride(self.subfield_order)  # validates order

    @property
    def f1(self):
        return (self.subfield_order - 1) // self.e1

    @property
    def e2(self):
        return self.f1

    @property
    def stride(self):
        return self.field.subfield_stride(self.subfield_order)

    def gpow(self, exps):
        """Encodings of g**exps for the subfield generator g."""
        exps = np.asarray(exps, dtype=np.int64) % (self.subfield_order - 1)
        return (exps * self.stride) % (self.field.q - 1) + 1

    def v_of(self, enc):
        """Coset coordinate of a subgroup member: enc = g**(v * e1)."""
        enc = int(enc)
        if enc == 0 or (enc - 1) % self.stride != 0:
            raise NotInSubgroup(f"{enc} is not in the subfield group")
        k = (enc - 1) // self.stride
        if k % self.e1 != 0:
            raise NotInSubgroup(f"{enc} is not a power of g**{self.e1}")
        return k // self.e1


def coset_points(spec, base_points, extended=False):
    """Expand base points to full cosets, checking the lift criteria.

    Plain mode takes an even-sized base satisfying the multiplier
    criterion; extended mode an odd-sized base satisfying the extended
    one, plus the character condition on e1 (automatic when q = 1 mod
    4, which is asserted).  Returns the lifted points row-major, base
    point outer and coset step inner, after asserting the product
    transfer identity.
    """
    f = spec.field
    base = np.asarray(base_points, dtype=np.int64)
    if spec.e1 % 2 == 0:
        raise E1NotOdd(f"e1 = {spec.e1} must be odd")
    if extended:
        if base.size % 2 == 0:
            raise HypothesisViolated("extended coset lift needs an odd base")
        if solve_extended_multipliers(f, base) is None:
            raise BaseNotSelfDual("base fails the extended criterion")
        e1_sign = f.sign(f.from_int(spec.e1))
        if f.q % 4 == 1:
            assert e1_sign == 1  # odd divisor of q-1 is then a square
        elif e1_sign != 1:
            raise CharacterCondition(
                f"chi({spec.e1}) = -1 and q is 3 mod 4")
    else:
        if base.size % 2 == 1:
            raise HypothesisViolated("coset lift needs an even base")
        if solve_multipliers(f, base) is None:
            raise BaseNotSelfDual("base fails the multiplier criterion")

    vs = np.array([spec.v_of(x) for x in base.tolist()], dtype=np.int64)
    if len(set(vs.tolist())) != vs.size:
        raise DuplicatePoints("base points repeat a coset")
    u = np.arange(spec.e1, dtype=np.int64)
    pts = spec.gpow(vs[:, None] + spec.f1 * u[None, :]).ravel()

    l_base = lagrange_products(f, base)
    scale = spec.gpow(vs[:, None] * (spec.e1 - 1) - spec.f1 * u[None, :])
    expect = f.vmul(f.from_int(spec.e1),
                    f.vmul(scale, l_base[:, None])).ravel()
    if f.q <= DESK_SCALE_Q:
        ok = np.all(lagrange_products(f, pts) == expect)
    else:
        # all-against-all differencing is quadratic in n; spot-check
        probe = np.linspace(0, pts.size - 1, num=min(64, pts.size),
                            dtype=np.int64)
        ok = np.all(products_at(f, pts, probe) == expect[probe])
    if not ok:
        raise VerificationFailed("coset lift transfer identity failed")
    return pts


def coset_lift(spec, base_points, provenance=None):
    """Even-length self-dual code on a union of cosets."""
    pts = coset_points(spec, base_points, extended=False)
    prov = provenance or {"theorem": "coset_lift", "e1": spec.e1}
    return build_verified_code(spec.field, pts, False, prov)


def extended_coset_lift(spec, base_points, provenance=None):
    """Extended self-dual code on a union of cosets, odd base."""
    pts = coset_points(spec, base_points, extended=True)
    prov = provenance or {"theorem": "extended_coset_lift", "e1": spec.e1}
    return build_verified_code(spec.field, pts, True, prov)


# ----------------------------------------------------------------------
# tower families over GF(r^{sm})

def _tower_sum(base, count):
    """1 + base + ... + base**(count-1)."""
    return (base ** count - 1) // (base - 1)


def _shift_nonzero(field, pts, container_order):
    """Add the smallest container element clearing zero from pts.

    Adding a constant to every point leaves all pairwise differences,
    hence all Lagrange products, unchanged.
    """
    pts = np.asarray(pts, dtype=np.int64)
    for aenc in field.subfield_enc(container_order).tolist():
        shifted = field.vadd(pts, int(aenc))
        if np.all(shifted != 0):
            return shifted
    raise HypothesisViolated("point set covers the whole container")


def _tower_base_points(field, r, s, e, t, variant):
    """Nonzero base points in the container GF(r^s) for th8..th11.

    Validates the variant's hypotheses, builds its point menu, lifts by
    a dim-e subspace inside the container, and shifts off zero.
    """
    container = r ** s
    _require(0 <= e <= s - 1, "e must satisfy 0 <= e <= s-1")
    _require(t >= 1 and (r - 1) % t == 0, "t must divide r-1")
    if variant == "th8":
        _require(t % 2 == 0, "t must be even")
        _require(1 < t < r - 1, "need 1 < t < r-1")
        _require(field.q % 4 == 1, "q = 1 (mod 4) fails")
        assert container % 4 == 1  # forced by q = 1 mod 4 with m odd
        base = th1_base(field, r, t // 2)
        lifted = lift_in_container(field, r, e, base, container)
    elif variant == "th9":
        _require(t % 2 == 1, "t must be odd")
        tval = field.from_int(t)
        _require(field.sign(field.neg(tval)) == 1, "chi(-t) = -1 fails")
        base = zero_and_roots(field, t)
        _check_zero_roots_products(field, base, t)
        lifted = lift_in_container(field, r, e, base, container)
    elif variant == "th10":
        _require(t % 2 == 1, "t must be odd")
        val = field.from_int(t)
        if ((r ** e + 1) // 2) % 2 == 1:
            val = field.neg(val)
        _require(field.sign(val) == 1,
                 "chi((-1)^((r^e+1)/2) t) = -1 fails")
        base = roots_of_unity(field, t)
        lifted = lift_in_container(field, r, e, base, container)
    elif variant == "th11":
        _require(t % 2 == 0, "t must be even")
        _require(1 <= t < r - 1, "need 1 <= t < r-1")
        tval = field.from_int(t)
        branch1 = field.sign(tval) == 1 and field.q % 4 == 1
        branch2 = field.sign(field.neg(tval)) == 1 and e % 2 == 0
        _require(branch1 or branch2,
                 "need chi(t) = chi(-1) = 1, or chi(-t) = 1 with e even")
        base = zero_and_roots(field, t)
        _check_zero_roots_products(field, base, t)
        lifted = lift_in_container(field, r, e, base, container,
                                   extended=True)
    else:
        raise HypothesisViolated(f"unknown tower variant {variant!r}")

    pts = _shift_nonzero(field, np.array(lifted.points), container)
    if variant in ("th10", "th11"):
        if solve_extended_multipliers(field, pts) is None:
            raise VerificationFailed(
                "extended criterion lost in the tower base")
    return pts


_TOWER_EXTENDED = {"th8": False, "th9": False, "th10": True, "th11": True}
_COROLLARY_OF = {"th8": "cor1", "th9": "cor2", "th10": "cor3", "th11": "cor4"}


def _tower_field(r, s, m_total, table_limit):
    p, d = factor_prime_power(r)
    return make_field(p, d * s * m_total, table_limit)


def th8_th9_code(r, s, m, e, t, parity=None,
                 table_limit=DEFAULT_TABLE_LIMIT):
    """Even-length coset family over GF(r^{sm}); t's parity picks the
    variant (even: length t r^e (1+...+r^{s(m-1)}); odd: t+1 in place
    of t)."""
    variant = _tower_variant(t, parity, even_id="th8", odd_id="th9")
    _require(m >= 1 and m % 2 == 1, "m must be odd")
    f = _tower_field(r, s, m, table_limit)
    base = _tower_base_points(f, r, s, e, t, variant)
    spec = CosetSpec(f, _tower_sum(r ** s, m))
    prov = {"theorem": variant, "r": r, "s": s, "m": m, "e": e, "t": t}
    return coset_lift(spec, base, prov)


def th10_th11_code(r, s, m, e, t, parity=None,
                   table_limit=DEFAULT_TABLE_LIMIT):
    """Extended coset family over GF(r^{sm}), length T r^e (1+...) + 1
    with T = t (t odd) or t+1 (t even)."""
    variant = _tower_variant(t, parity, even_id="th11", odd_id="th10")
    _require(m >= 1 and m % 2 == 1, "m must be odd")
    f = _tower_field(r, s, m, table_limit)
    base = _tower_base_points(f, r, s, e, t, variant)
    spec = CosetSpec(f, _tower_sum(r ** s, m))
    prov = {"theorem": variant, "r": r, "s": s, "m": m, "e": e, "t": t}
    return extended_coset_lift(spec, base, prov)


def _tower_variant(t, parity, even_id, odd_id):
    variant = even_id if t % 2 == 0 else odd_id
    if parity is not None:
        stated = even_id if parity == "even" else odd_id
        _require(parity in ("even", "odd"), "parity must be even or odd")
        _require(stated == variant,
                 f"parity {parity!r} contradicts t = {t}")
    return variant


def th8_code(r, s, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """th8_th9_code restricted to even t."""
    _require(t % 2 == 0, "t must be even")
    return th8_th9_code(r, s, m, e, t, "even", table_limit)


def th9_code(r, s, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """th8_th9_code restricted to odd t."""
    _require(t % 2 == 1, "t must be odd")
    return th8_th9_code(r, s, m, e, t, "odd", table_limit)


def th10_code(r, s, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """th10_th11_code restricted to odd t."""
    _require(t % 2 == 1, "t must be odd")
    return th10_th11_code(r, s, m, e, t, "odd", table_limit)


def th11_code(r, s, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """th10_th11_code restricted to even t."""
    _require(t % 2 == 0, "t must be even")
    return th10_th11_code(r, s, m, e, t, "even", table_limit)


def iterated_lift(r, s, ms, e, t, variant, table_limit=DEFAULT_TABLE_LIMIT):
    """Tower family iterated up GF(r^s) < GF(r^{s m1}) < ... one coset
    expansion per factor, innermost first.

    variant is one of th8/th9/th10/th11 and carries that family's
    hypotheses.  A single factor delegates to the one-step builder, so
    the output is identical to it.
    """
    ms = [int(x) for x in ms]
    _require(len(ms) >= 1, "need at least one tower factor")
    _require(all(x >= 1 and x % 2 == 1 for x in ms),
             "all tower factors must be odd")
    if variant not in _TOWER_EXTENDED:
        raise HypothesisViolated(f"unknown tower variant {variant!r}")
    if len(ms) == 1:
        if _TOWER_EXTENDED[variant]:
            return th10_th11_code(r, s, ms[0], e, t,
                                  table_limit=table_limit)
        return th8_th9_code(r, s, ms[0], e, t, table_limit=table_limit)

    extended = _TOWER_EXTENDED[variant]
    f = _tower_field(r, s, math.prod(ms), table_limit)
    pts = _tower_base_points(f, r, s, e, t, variant)
    omega = r ** s
    for stage, mj in enumerate(ms, start=1):
        top = omega ** mj
        spec = CosetSpec(f, _tower_sum(omega, mj), top)
        try:
            pts = coset_points(spec, pts, extended)
        except HypothesisViolated as err:
            raise HypothesisViolated(f"stage {stage}: {err}") from err
        omega = top
    prov = {"theorem": _COROLLARY_OF[variant], "r": r, "s": s,
            "ms": ms, "e": e, "t": t}
    return build_verified_code(f, pts, extended, prov)


# ----------------------------------------------------------------------
# two-decomposition families over GF(r^2)

@dataclass(frozen=True)
class TwoDecomposition:
    """Two factorizations q - 1 = e1 f1 = e2 f2 of the same group.

    Cosets of H = <theta^e1> scaled by powers of beta = theta^e2 are
    distinct exactly when the powers differ modulo D = f2/gcd(f2, f1).
    """

    field: object
    e1: int
    e2: int

    def __post_init__(self):
        group = self.field.q - 1
        for e in (self.e1, self.e2):
            if e < 1 or group % e != 0:
                raise HypothesisViolated(f"{e} does not divide q-1")

    @property
    def f1(self):
        return (self.field.q - 1) // self.e1

    @property
    def f2(self):
        return (self.field.q - 1) // self.e2

    @property
    def coset_modulus(self):
        return self.f2 // math.gcd(self.f2, self.f1)

    def same_coset(self, i, j):
        """Whether beta^i H and beta^j H coincide."""
        return (self.e2 * (i - j)) % self.e1 == 0


def distinct_coset_indices(td, t):
    """Default index choice 0..t-1, checked to give t distinct cosets."""
    if t < 1 or t > td.coset_modulus:
        raise TooManyCosets(
            f"t = {t} exceeds the {td.coset_modulus} distinct cosets")
    idx = list(range(t))
    _assert_distinct(td, idx)
    return idx


def _assert_distinct(td, idx):
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if td.same_coset(idx[a], idx[b]):
                raise TooManyCosets(
                    f"indices {idx[a]} and {idx[b]} repeat a coset")
    mod = td.coset_modulus
    assert len({i % mod for i in idx}) == len(idx)


def _coset_union_points(field, td, indices):
    """Row-major beta^{i} alpha^{j}, i over indices, j over 0..f1-1."""
    i = np.asarray(indices, dtype=np.int64)
    j = np.arange(td.f1, dtype=np.int64)
    exps = (i[:, None] * td.e2 + j[None, :] * td.e1) % (field.q - 1)
    return (exps + 1).ravel()


def _assert_union_identity(field, td, indices, pts):
    """L_S(beta^i alpha^j) = f1 beta^{i(f1-1)} theta^{-j e1} L_a(beta^{i f1})

    with a the f1-th powers of the coset representatives.  Returns the
    L values of a for reuse by the caller's character checks.
    """
    i = np.asarray(indices, dtype=np.int64)
    j = np.arange(td.f1, dtype=np.int64)
    a_pts = (i * td.e2 * td.f1 % (field.q - 1)) + 1
    l_a = lagrange_products(field, a_pts)
    l_s = lagrange_products(field, pts)
    scale_exp = (i[:, None] * td.e2 * (td.f1 - 1)
                 - j[None, :] * td.e1) % (field.q - 1)
    expect = field.vmul(field.from_int(td.f1),
                        field.vmul(scale_exp + 1, l_a[:, None])).ravel()
    if field.q <= DESK_SCALE_Q:
        ok = np.all(l_s == expect)
    else:
        probe = np.linspace(0, pts.size - 1, num=min(64, pts.size),
                            dtype=np.int64)
        ok = np.all(l_s[probe] == expect[probe])
    if not ok:
        raise VerificationFailed("coset union product identity failed")
    return a_pts, l_a


def _square_field(r, table_limit):
    p, d = factor_prime_power(r)
    return make_field(p, 2 * d, table_limit)


def th12_code(r, e, f, s, t, variant, table_limit=DEFAULT_TABLE_LIMIT):
    """Self-dual codes of length tf or tf+2 over GF(r^2).

    S is a union of t cosets of the order-f subgroup, scaled by powers
    of beta = theta^{(r-1)/s}.  variant "tf" builds the plain code on
    S; variant "tf+2" appends 0 and builds the extended code.  The
    parity hypotheses split by variant and, for "tf+2", by whether t
    hits the coset bound D.
    """
    fld = _square_field(r, table_limit)
    q = fld.q
    _require(e >= 1 and f >= 1 and e * f == q - 1, "need ef = q-1")
    _require(s >= 1 and f % s == 0 and (r - 1) % s == 0,
             "s must divide both f and r-1")
    _require(t * f % 2 == 0, "tf must be even")
    td = TwoDecomposition(fld, e, (r - 1) // s)
    d_bound = td.coset_modulus
    assert d_bound == s * (r + 1) // math.gcd(s * (r + 1), f)

    if variant == "tf":
        _require(e % 2 == 0, "e must be even")
        _require(((r - 1 + f * t) // s) % 2 == 0,
                 "(r-1+ft)/s must be even")
        indices = distinct_coset_indices(td, t)
    elif variant == "tf+2":
        if t == d_bound:
            _require((f * t // s) % 2 == 0, "ft/s must be even")
            _require((t - 1) * (r + 1 - f * t // s) % 4 == 0,
                     "((t-1)/2)(r+1-ft/s) must be even")
            indices = distinct_coset_indices(td, t)
        else:
            indices = distinct_coset_indices(td, t)
            if (f // s) % 2 == 0:
                _require((t - 1) * (r + 1) % 4 == 0,
                         "((t-1)/2)(r+1) must be even")
            else:
                _require(t % 2 == 0, "t must be even when f/s is odd")
                if ((r + 1) // 2 + sum(indices)) % 2 == 1:
                    indices[-1] += 1
                    _assert_distinct(td, indices)
    else:
        raise HypothesisViolated(f"unknown variant {variant!r}")

    pts = _coset_union_points(fld, td, indices)
    _assert_union_identity(fld, td, indices, pts)
    prov = {"theorem": "th12", "variant": variant, "r": r, "e": e,
            "f": f, "s": s, "t": t, "indices": list(indices)}
    if variant == "tf":
        return build_verified_code(fld, pts, False, prov)
    full = np.concatenate([pts, np.zeros(1, dtype=np.int64)])
    l_full = lagrange_products(fld, full)
    if fld.sign(fld.neg(int(l_full[-1]))) != 1:
        raise VerificationFailed("chi(-L(0)) = -1 on the appended zero")
    return build_verified_code(fld, full, True, prov)


def th13_code(r, e, f, s, t, table_limit=DEFAULT_TABLE_LIMIT):
    """Extended self-dual code of length tf+1 over GF(r^2), tf odd.

    Same union-of-cosets shape as th12 but scaled by powers of
    beta = theta^{(r+1)/s}, which forces the inner Lagrange products
    into the subfield GF(r) (checked via Frobenius) where they are
    squares.
    """
    fld = _square_field(r, table_limit)
    q = fld.q
    _require(e >= 1 and f >= 1 and e * f == q - 1, "need ef = q-1")
    _require(s >= 1 and f % s == 0 and (r + 1) % s == 0,
             "s must divide both f and r+1")
    _require(t * f % 2 == 1, "tf must be odd")
    assert e % 2 == 0  # q-1 = 0 mod 8 and f odd force e even
    td = TwoDecomposition(fld, e, (r + 1) // s)
    assert td.coset_modulus == s * (r - 1) // math.gcd(s * (r - 1), f)
    indices = distinct_coset_indices(td, t)

    pts = _coset_union_points(fld, td, indices)
    a_pts, l_a = _assert_union_identity(fld, td, indices, pts)
    for val in l_a.tolist():
        if fld.power(val, r) != val or fld.sign(val) != 1:
            raise VerificationFailed(
                "inner product not a subfield square")
    prov = {"theorem": "th13", "r": r, "e": e, "f": f, "s": s, "t": t,
            "indices": list(indices)}
    return build_verified_code(fld, pts, True, prov)
