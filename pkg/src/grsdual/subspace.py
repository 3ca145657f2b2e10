"""Code constructions built on additive subspace lifts.

The engine is one identity.  Take base points b_1..b_T inside a
subfield GF(r), a GF(r)-linear subspace V of dimension e (inside any
intermediate subfield containing it), and a shift zeta outside V.  The
lifted point set W = { b_i * zeta + v : v in V } has T * r^e distinct
points, and its Lagrange products factor through the base:

    L_W(b_i zeta + v) = c * L_b(b_i),
    c = (prod of nonzero V) * (prod_{v in V} (zeta + v))^(T-1).

So the quadratic character of L is constant on W iff it is constant on
b (multiply by lam = c), and the extended criterion transfers up to the
sign chi(prod of nonzero V) = chi(-1)^((r^e - 1)/2), which is +1 when
q = 1 (mod 4) or e is even.  subspace_lift asserts the identity
exactly at desk scale and the character transfer always.

On top of that engine, four construction families (wire ids th1..th4;
see the README catalog for their parameter shapes):

  th1: even length 2 t r^e from roots of unity in GF(r);
  th2: length (t+1) p^e from the run 0..t in GF(p), t odd;
  th3: length (t+1) p^e + 1, extended, t even;
  th4: length (t+1) r^e + 1, extended, from 0 and the t-th roots.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BaseNotSelfDual,
    BasePointsNotInSubfield,
    DuplicatePoints,
    HypothesisViolated,
    ParityCondition,
    ShiftInSubspace,
    VerificationFailed,
)
from .field import (
    DEFAULT_TABLE_LIMIT,
    factor_prime_power,
    make_field,
    span_enc,
)
from .grs import (
    EvalSet,
    build_verified_code,
    lagrange_products,
    products_at,
    solve_extended_multipliers,
    solve_multipliers,
)

# Exact-identity asserts walk all n^2 point pairs; past this order we
# spot-check a fixed sample instead of the full set.
DESK_SCALE_Q = 2000


def subspace_basis(field, r, e, container_order=None):
    """First e of the greedy GF(r)-basis of the container subfield.

    The basis is read off the powers 1, g, g^2, ... of the container's
    canonical generator, keeping each power that is independent of the
    ones already kept.  Deterministic by construction.
    """
    if container_order is None:
        container_order = field.q
    if e == 0:
        return np.zeros(0, dtype=np.int64)
    # theta^stride generates the container's multiplicative group; for
    # the full field the stride is 1 and this is theta itself.
    gen = field.subfield_stride(container_order) + 1
    basis = []
    seen = {0}
    power = 1  # g^0
    while len(basis) < e:
        if power not in seen:
            basis.append(power)
            seen = set(span_enc(field, r, basis).tolist())
        power = field.mul(power, gen)
        if len(basis) < e and power == 1:
            raise HypothesisViolated(
                f"subspace dimension {e} exceeds the container over GF({r})")
    return np.array(basis, dtype=np.int64)


def default_subspace(field, r, e, container_order=None):
    """Span of the first e canonical basis elements, in span order."""
    return span_enc(field, r, subspace_basis(field, r, e, container_order))


def default_shift(field, subspace, container_order=None):
    """Smallest encoding outside the subspace.

    With a container order, smallest encoding among the container
    subfield's elements outside the subspace, so lifted points stay in
    the container.
    """
    taken = set(int(x) for x in subspace)
    if container_order is None or container_order == field.q:
        pool = range(field.q)
    else:
        pool = field.subfield_enc(container_order).tolist()
    for cand in pool:
        if cand not in taken:
            return int(cand)
    raise ShiftInSubspace("subspace covers the whole container")


@dataclass(frozen=True)
class SubspaceLiftSpec:
    """Validated input bundle for subspace_lift."""

    field: object
    r: int
    base_points: tuple
    subspace: tuple
    shift: int

    def __post_init__(self):
        f = self.field
        pts = tuple(int(x) for x in self.base_points)
        sub = tuple(int(x) for x in self.subspace)
        object.__setattr__(self, "base_points", pts)
        object.__setattr__(self, "subspace", sub)
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("base points are not distinct")
        stride = f.subfield_stride(self.r)  # validates r as well
        for x in pts:
            if x != 0 and (x - 1) % stride != 0:
                raise BasePointsNotInSubfield(
                    f"base point {x} is not in GF({self.r})")
        if self.shift in set(sub):
            raise ShiftInSubspace("shift must lie outside the subspace")

    @property
    def e(self):
        size = len(self.subspace)
        e = 0
        while self.r ** e < size:
            e += 1
        return e


def _lift_points(field, base, subspace, shift):
    """Row-major b_i * shift + v_j."""
    base = np.asarray(base, dtype=np.int64)
    sub = np.asarray(subspace, dtype=np.int64)
    scaled = field.vmul(base, shift)
    return field.vadd(scaled[:, None], sub[None, :]).ravel()


def _transfer_scalar(field, subspace, shift, t):
    """c = prod(V setminus 0) * prod(shift + V)^(t-1)."""
    sub = np.asarray(subspace, dtype=np.int64)
    nz = sub[sub != 0]
    c = 1 if nz.size == 0 else int(field.vprod(nz))
    zv = field.vadd(shift, sub)
    if np.any(zv == 0):  # cannot happen with shift outside V
        raise ShiftInSubspace("shift meets the subspace")
    return field.mul(c, field.power(int(field.vprod(zv)), t - 1))


def subspace_lift(spec):
    """Lift base points along cosets of the subspace.

    Returns the lifted EvalSet (points only).  Asserts the Lagrange
    transfer identity L_W(b_i zeta + v) = c * L_b(b_i) on every point
    at desk scale, on a 64-point probe past it.
    """
    f = spec.field
    base = np.asarray(spec.base_points, dtype=np.int64)
    sub = np.asarray(spec.subspace, dtype=np.int64)
    pts = _lift_points(f, base, sub, spec.shift)
    if len(np.unique(pts)) != pts.size:
        raise DuplicatePoints("lift produced a collision")

    c = _transfer_scalar(f, sub, spec.shift, base.size)
    l_base = lagrange_products(f, base)
    expect = f.vmul(c, np.repeat(l_base, sub.size))
    if f.q <= DESK_SCALE_Q:
        l_lift = lagrange_products(f, pts)
        probe = np.arange(pts.size, dtype=np.int64)
    else:
        # all-against-all differencing is quadratic in n; spot-check
        probe = np.linspace(0, pts.size - 1, num=min(64, pts.size), dtype=np.int64)
        l_lift = products_at(f, pts, probe)
    if not np.all(l_lift == expect[probe]):
        raise VerificationFailed("subspace lift transfer identity failed")
    return EvalSet(f, pts)


def extended_subspace_lift(field, r, base_points, subspace, shift=None):
    """Subspace lift that preserves the extended self-dual criterion.

    Requires an odd number of base points satisfying the extended
    criterion, and q = 1 (mod 4) or even subspace dimension so the
    transfer sign chi(-1)^((r^e-1)/2) is +1.  The lifted criterion is
    asserted, not just implied.
    """
    base = np.asarray(base_points, dtype=np.int64)
    if base.size % 2 == 0:
        raise HypothesisViolated("extended lift needs an odd base size")
    if solve_extended_multipliers(field, base) is None:
        raise BaseNotSelfDual("base fails the extended multiplier criterion")
    sub = np.asarray(subspace, dtype=np.int64)
    e = 0
    while r ** e < sub.size:
        e += 1
    if field.q % 4 != 1 and e % 2 != 0:
        raise ParityCondition("need q = 1 (mod 4) or even subspace dimension")
    if shift is None:
        shift = default_shift(field, sub)
    spec = SubspaceLiftSpec(field, r, tuple(base.tolist()), tuple(sub.tolist()), shift)
    lifted = subspace_lift(spec)
    if solve_extended_multipliers(field, np.array(lifted.points)) is None:
        raise VerificationFailed("extended criterion lost in the lift")
    return EvalSet(field, lifted.points, None, True)


# ----------------------------------------------------------------------
# base point menus, each inside an arbitrary container subfield

def _require(cond, message):
    if not cond:
        raise HypothesisViolated(message)


def roots_of_unity(field, order):
    """beta, beta^2, ..., beta^order for beta = theta^((q-1)/order)."""
    _require((field.q - 1) % order == 0, f"{order} does not divide q-1")
    step = (field.q - 1) // order
    ks = (np.arange(1, order + 1, dtype=np.int64) * step) % (field.q - 1)
    return ks + 1


def th1_base(field, sub_order, t):
    """2t root-of-unity points inside GF(sub_order), split by t's parity.

    t odd: the full group of 2t-th roots.  t even: the t-th roots and a
    square-scaled copy of them.  Either way 2t points whose Lagrange
    character is constant (the construction above each asserts it).
    """
    _require((sub_order - 1) % (2 * t) == 0, "2t must divide r-1")
    if t % 2 == 1:
        # q = 1 (mod 4) and 2t = 2 (mod 4) force (q-1)/2t even, so the
        # generating root is a square.
        assert ((field.q - 1) // (2 * t)) % 2 == 0
        base = roots_of_unity(field, 2 * t)
    else:
        base = _scaled_root_pair(field, sub_order, t)
    stride = field.subfield_stride(sub_order)
    assert all(x == 0 or (x - 1) % stride == 0 for x in base.tolist())
    return base


def _scaled_root_pair(field, sub_order, t):
    """beta..beta^t and zeta*beta..zeta*beta^t for even t.

    zeta is the smallest-encoding nonzero square of GF(sub_order)
    outside the group generated by beta, so both cosets are disjoint
    and the character stays constant across them.
    """
    beta_exp = (field.q - 1) // t
    roots = roots_of_unity(field, t)
    root_set = set(roots.tolist())
    stride = field.subfield_stride(sub_order)
    zeta = None
    for j in range(0, sub_order - 1, 2):  # even powers of the generator
        cand = j * stride + 1
        if cand not in root_set:
            zeta = cand
            break
    _require(zeta is not None, "no square outside the root group")
    assert field.sign(zeta) == 1 and beta_exp % 2 == 0
    return np.concatenate([roots, field.vmul(zeta, roots)])


def integer_run(field, t):
    """0, 1, ..., t as field elements."""
    return np.array([field.from_int(i) for i in range(t + 1)], dtype=np.int64)


def zero_and_roots(field, t):
    """0 together with the t-th roots of unity."""
    return np.concatenate([np.zeros(1, dtype=np.int64),
                           roots_of_unity(field, t)])


def lift_in_container(field, r, e, base, container_order, extended=False):
    """Default subspace + shift lift of a base menu, plain or extended.

    The subspace basis and the shift are both drawn from the container
    subfield, so the lifted points never leave it.
    """
    sub = default_subspace(field, r, e, container_order)
    shift = default_shift(field, sub, container_order)
    if extended:
        return extended_subspace_lift(field, r, base, sub, shift)
    spec = SubspaceLiftSpec(field, r, tuple(base.tolist()),
                            tuple(sub.tolist()), shift)
    return subspace_lift(spec)


# ----------------------------------------------------------------------
# the four construction families

def th1_code(r, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """[2 t r^e, t r^e] self-dual over GF(r^m), q = 1 (mod 4)."""
    p, d = factor_prime_power(r)
    f = make_field(p, d * m, table_limit)
    _require(f.q % 4 == 1, "q = 1 (mod 4) fails")
    _require(0 <= e <= m - 1, "e must satisfy 0 <= e <= m-1")
    half = (r - 1) // 2
    _require(t >= 1 and half % t == 0, "t must divide (r-1)/2")
    _require(t != half, "t = (r-1)/2 is excluded")
    base = th1_base(f, r, t)
    lifted = lift_in_container(f, r, e, base, f.q)
    prov = {"theorem": "th1", "r": r, "m": m, "e": e, "t": t}
    return build_verified_code(f, np.array(lifted.points), False, prov)


def th2_code(p, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """[(t+1) p^e, .] self-dual over GF(p^m) from the run 0..t, t odd."""
    f = make_field(p, m, table_limit)
    _require(f.q % 4 == 1, "q = 1 (mod 4) fails")
    _require(t % 2 == 1 and 2 <= t <= p - 1, "t must be odd with 2 <= t <= p-1")
    _require(0 <= e <= m - 1, "e must satisfy 0 <= e <= m-1")
    for i in range(1, (t - 1) // 2 + 1):
        val = f.from_int(i * (t + 1 - i))
        if f.sign(val) != 1:
            raise HypothesisViolated(
                f"chi({i * (t + 1 - i)}) = -1 at i = {i} "
                f"fails the square condition")
    base = integer_run(f, t)
    lifted = lift_in_container(f, p, e, base, f.q)
    prov = {"theorem": "th2", "p": p, "m": m, "e": e, "t": t}
    return build_verified_code(f, np.array(lifted.points), False, prov)


def th3_code(p, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """[(t+1) p^e + 1, .] extended self-dual, t even, q = 1 (mod 4)."""
    f = make_field(p, m, table_limit)
    _require(f.q % 4 == 1, "q = 1 (mod 4) fails")
    _require(t % 2 == 0 and 2 <= t <= p - 1, "t must be even with 2 <= t <= p-1")
    _require(0 <= e <= m - 1, "e must satisfy 0 <= e <= m-1")
    for i in range(1, t // 2 + 1):
        val = f.from_int(i * (t + 1 - i))
        if f.sign(val) != 1:
            raise HypothesisViolated(
                f"chi({i * (t + 1 - i)}) = -1 at i = {i} "
                f"fails the square condition")
    base = integer_run(f, t)
    lifted = lift_in_container(f, p, e, base, f.q, extended=True)
    prov = {"theorem": "th3", "p": p, "m": m, "e": e, "t": t}
    return build_verified_code(f, np.array(lifted.points), True, prov)


def th4_code(r, m, e, t, table_limit=DEFAULT_TABLE_LIMIT):
    """[(t+1) r^e + 1, .] extended self-dual from 0 and the t-th roots."""
    p, d = factor_prime_power(r)
    f = make_field(p, d * m, table_limit)
    _require(t % 2 == 0 and t >= 2 and (r - 1) % t == 0,
             "t must be even and divide r-1")
    _require(0 <= e <= m - 1, "e must satisfy 0 <= e <= m-1")
    t_val = f.from_int(t)
    branch1 = f.sign(t_val) == 1 and f.q % 4 == 1
    branch2 = f.sign(f.neg(t_val)) == 1 and e % 2 == 0
    _require(branch1 or branch2,
             "need chi(t) = chi(-1) = 1, or chi(-t) = 1 with e even")
    base = zero_and_roots(f, t)
    _check_zero_roots_products(f, base, t)
    lifted = lift_in_container(f, r, e, base, f.q, extended=True)
    prov = {"theorem": "th4", "r": r, "m": m, "e": e, "t": t}
    return build_verified_code(f, np.array(lifted.points), True, prov)


def _check_zero_roots_products(field, base, t):
    """On {0} + t-th roots: L is t at each root and -1 at zero."""
    l = lagrange_products(field, base)
    t_enc = field.from_int(t)
    if int(l[0]) != field.neg(1) or not np.all(l[1:] == t_enc):
        raise VerificationFailed("closed form for L on 0 + roots failed")
