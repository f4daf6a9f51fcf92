#!/usr/bin/env python3
"""A walking tour of rowmotion on the 2x2 square.

Rowmotion sends an order ideal I to the ideal generated by the minimal
elements of its complement.  On the square there are six ideals and two
orbits, and the sizes of the ideal and of its antichain of maximal elements
both average to the same constant on every orbit.
"""

from rowmotion import (
    OrderIdeal,
    enumerate_ideals,
    homomesy_check,
    maximal_elements,
    named_statistic,
    orbit_partition,
    rowmotion,
)
from rowmotion.families import rectangle

P = rectangle(2, 2)
print(f"poset: {P.name} with elements {P.coords}")

ideals = enumerate_ideals(P)
print(f"\n{len(ideals)} order ideals, in the canonical enumeration order:")
for I in ideals:
    boxes = [P.coords[x] for x in I]
    print(f"  {boxes}  with maximal elements {[P.coords[x] for x in maximal_elements(I)]}")

print("\nrowmotion orbits:")
for orbit in orbit_partition(lambda I: rowmotion(P, I), ideals):
    chain = " -> ".join(str([P.coords[x] for x in I]) for I in orbit)
    print(f"  period {orbit.period}: {chain}")

for kind in ("ideal_card", "antichain_card"):
    stat = named_statistic(P, kind)
    report = homomesy_check(stat, lambda I: rowmotion(P, I))
    print(f"\n{kind}: orbit averages {report.orbit_averages}", end="")
    print(f"  -> homomesic with constant {report.constant}")
