"""Roots from isolated quasi-homogeneous singularities.

For an isolated singularity the Milnor algebra R/(partial f) is a finite
dimensional graded vector space, and the negated shifted support of its
grading lists the roots coming from the singularity, together with -1.
This walks through three classical shapes: a smooth quadric cone, the cone
over an elliptic curve, and a weighted-homogeneous exceptional singularity.
"""

from bs3 import (WeightSystem, format_rational, milnor_profile,
                 parse_polynomial, roots_isolated)


def show(label, text, weights):
    f = parse_polynomial(text)
    w = WeightSystem(weights)
    prof = milnor_profile(f, w)
    print("== %s" % label)
    print("   f = %s, weights %s, wdeg %s"
          % (f, weights, format_rational(prof.wdeg_f)))
    degrees = prof.milnor_algebra_degrees
    table = {format_rational(q): dim for q, dim in
             sorted(degrees.entries.items())}
    print("   Milnor algebra dimensions by degree: %s" % table)
    print("   Milnor number: %d" % degrees.total_dimension())
    print("   roots: %r" % roots_isolated(prof))
    print()


def main():
    show("quadric cone", "x^2+y^2+z^2", (1, 1, 1))
    show("cone over an elliptic curve", "x^3+y^3+z^3", (1, 1, 1))

    # weighted case: the E8 surface singularity, wdeg 30 under (15,10,6)
    show("E8: x^2+y^3+z^5", "x^2+y^3+z^5", (15, 10, 6))

    # the same polynomial under ANY valid weight system gives the same set
    show("E8 rescaled weights", "x^2+y^3+z^5",
         ("1/2", "1/3", "1/5"))


if __name__ == "__main__":
    main()
