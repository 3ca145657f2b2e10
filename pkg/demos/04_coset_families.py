"""Codes built from multiplicative cosets and additive subspace lifts.

The coset families pick evaluation points as unions of cosets of a
subgroup of the multiplicative group; the subspace lift transports a
small self-dual evaluation set into a larger field along cosets of an
additive subspace.  Composing lifts (the cor* ids) multiplies lengths,
which hits the verification scale limit fast; the last section shows
the typed failure instead of an attempt to allocate the world.
"""

from grsdual import (
    EnumerationTooLarge,
    iterated_lift,
    th8_code,
    th9_code,
    th10_code,
    th11_code,
    th12_code,
    th13_code,
)


def show(code, label):
    tag = "extended" if code.eval_set.extended else "plain"
    print(f"  [{code.length:>3},{code.k:>3}] over {code.field.name:<9} "
          f"{tag:<8} verified={code.verify()}   {label}")


def main():
    print("single-coset families")
    show(th8_code(5, 1, 3, 0, 2), "th8(r=5, s=1, m=3, e=0, t=2)")
    show(th9_code(7, 1, 1, 0, 3), "th9(r=7, s=1, m=1, e=0, t=3)")
    show(th10_code(7, 1, 1, 0, 3), "th10(r=7, s=1, m=1, e=0, t=3)")
    show(th11_code(5, 2, 1, 0, 2), "th11(r=5, s=2, m=1, e=0, t=2)")

    print("\ntwo-parameter coset decompositions over GF(25)")
    for t in (1, 2, 3):
        show(th12_code(5, 6, 4, 2, t, "tf"), f"th12(e=6, f=4, s=2, t={t})")
    show(th12_code(5, 6, 4, 2, 1, "tf+2"), "th12(..., t=1, variant=tf+2)")
    for t in (1, 3):
        show(th13_code(5, 8, 3, 3, t), f"th13(e=8, f=3, s=3, t={t})")

    print("\niterated lift: one stage reproduces th8 exactly")
    direct = th8_code(5, 1, 3, 0, 2)
    lifted = iterated_lift(5, 1, [3], 0, 2, "th8")
    print("  same code:", direct.to_json() == lifted.to_json())

    print("\ntwo stages of 3 over GF(5) need a [976562,488281] check:")
    try:
        iterated_lift(5, 1, [3, 3], 0, 2, "th8")
    except EnumerationTooLarge as exc:
        print("  EnumerationTooLarge:", exc)


if __name__ == "__main__":
    main()
