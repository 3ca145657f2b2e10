"""Tour of the table-backed field arithmetic.

Every nonzero element is stored as a discrete log offset: encoding i
stands for theta^(i-1), with 0 reserved for zero.  Multiplication is
then integer addition of exponents and addition runs through a Zech
logarithm table, so all the code paths above this module are pure
numpy integer ops.
"""

from grsdual import make_field, quadratic_character, sqrt, subfield_elements


def show(label, value):
    print(f"  {label:<28} {value}")


def main():
    f = make_field(13)
    val = lambda x: f.poly_value(int(x))  # noqa: E731
    print(f"{f.name}: encodings are powers of theta")
    show("theta enc", int(f.theta))
    show("theta value", val(f.theta))
    three = f.from_int(3)
    show("enc of value 3", three)
    show("log of that element", f.element(three).log())

    a, b = f.element(f.from_int(5)), f.element(f.from_int(11))
    show("5 * 11", val(a * b))
    show("5 + 11", val(a + b))
    show("5 / 11", val(a / b))
    show("-5", val(-a))

    print("\nquadratic characters over GF(13)")
    chars = {v: quadratic_character(f, f.from_int(v)) for v in range(1, 13)}
    squares = sorted(v for v, c in chars.items() if c == 1)
    show("squares", squares)
    show("sqrt of 3 (canonical)", val(sqrt(f, three)))

    g = make_field(3, 4)
    print(f"\n{g.name}: an extension field, q = {g.q}")
    show("modulus (constant first)", list(g.modulus))
    show("chi(-1)", quadratic_character(g, g.vneg(1)))
    sub9 = subfield_elements(g, 9)
    show("GF(9) inside, size", len(sub9))
    show("GF(3) inside, size", len(subfield_elements(g, 3)))

    # closure spot check: sums of subfield elements stay inside
    inside = {int(x) for x in sub9}
    show("closed under +", int(sub9[2] + sub9[5]) in inside)


if __name__ == "__main__":
    main()
