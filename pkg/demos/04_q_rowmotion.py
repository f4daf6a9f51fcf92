#!/usr/bin/env python3
"""q-rowmotion on flavored labelings.

Fix s flavors of 0 and r flavors of 1 and label the poset so that the
0-labeled part is an order ideal; toggling applies a fixed cycle on the
r+s symbols at each active element.  Statistics certified over the
rational-function field are homomesic here with value at q = r/s, for every
choice of the cycle.
"""

import random
from fractions import Fraction

from rowmotion import (
    FlavorAlphabet,
    enumerate_labelings,
    labeling_count,
    named_statistic,
    q_decompose,
    q_homomesy_check,
    q_orbits,
)
from rowmotion.families import rectangle, root_poset_A

A2 = root_poset_A(2)
alphabet = FlavorAlphabet.default(1, 2)
print(f"type A_2 roots with r=1, s=2: {labeling_count(A2, alphabet)} labelings")
orbits = q_orbits(A2, alphabet)
print(f"q-rowmotion orbit sizes: {sorted(len(o) for o in orbits)}")

print("\none full orbit (labels per element, 0/1 = zero flavors, 2 = the one):")
for labels in orbits[0]:
    print(f"  {labels}")

P = rectangle(2, 3)
f = named_statistic(P, "antichain_card")
cert = q_decompose(P, f)
print(f"\n2x3 rectangle: antichain_card has q-certificate constant {cert.constant}")

rng = random.Random(11)
for r, s in ((1, 2), (2, 1), (3, 2)):
    for label, ab in (("default", FlavorAlphabet.default(r, s)),
                      ("random ", FlavorAlphabet.random(r, s, rng))):
        report = q_homomesy_check(P, ab, f, expected=cert.constant)
        print(f"  r={r}, s={s}, {label} cycle: orbit averages all equal "
              f"{report.constant} = c({r}/{s})?  {report.matches_expected}")
