#!/usr/bin/env python3
"""Proving homomesy by exact linear algebra.

A statistic f on the order ideals is homomesic under rowmotion whenever it
can be written as a constant plus a linear combination of the signed
toggleability statistics T_p.  Membership in that span is a finite exact
linear-algebra question, and the certificate (the constant and the
coefficients) is unique.  This script decomposes the classical statistics
for several families and shows two ways the method can fail.
"""

from fractions import Fraction

from rowmotion import decompose, named_statistic, q_decompose
from rowmotion.families import (
    chain_of_vs,
    minuscule_E7,
    rectangle,
    root_poset_A,
    root_poset_D4,
    shifted_staircase,
)

print("antichain cardinality across families:")
for P, label in (
    (rectangle(3, 4), "3x4 rectangle"),
    (shifted_staircase(4), "4-staircase"),
    (root_poset_A(4), "type A_4 roots"),
    (minuscule_E7(), "27-element exceptional minuscule poset"),
):
    dec = decompose(P, named_statistic(P, "antichain_card"))
    print(f"  {label:42s} constant {dec.constant}")

print("\nthe rectangle certificate in full, for the 2x2 square:")
P = rectangle(2, 2)
dec = decompose(P, named_statistic(P, "ideal_card"))
print(f"  ideal_card = {dec.constant} + sum of:")
for p, c in enumerate(dec.coeffs):
    print(f"    {c} * T{P.coords[p]}")

print("\nwhere the method fails (statistic not in the span):")
for P, label in (
    (root_poset_D4(), "type D_4 roots (an element covers three)"),
    (chain_of_vs(2), "chain of V's"),
):
    dec = decompose(P, named_statistic(P, "antichain_card"))
    print(f"  {label:42s} {'certificate' if dec else 'NOT IN SPAN'}")

print("\nthe q-analogue, over the field of rational functions in q:")
for a, b in ((2, 2), (2, 3), (3, 4)):
    P = rectangle(a, b)
    dec = q_decompose(P, named_statistic(P, "antichain_card"))
    print(f"  {a}x{b} rectangle: antichain_card = {dec.constant} "
          f"(at q=1: {dec.constant.evaluate(1)})")
