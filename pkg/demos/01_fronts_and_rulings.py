#!/usr/bin/env python3
"""Tour of front diagrams and normal ruling enumeration.

A front is a word of events read left to right: left cusps birth two
strands, right cusps kill two adjacent strands, crossings swap neighbours.
A normal ruling picks a set of crossings (switches) whose smoothing
splits the front into disjoint eyes.
"""
from clasplab import (ascii_render, enumerate_rulings, generate_trefoil,
                      generate_unknot, is_normal_ruling, parse, serialize)

unknot = generate_unknot()
print("The simplest closed front, one eye:")
print(ascii_render(unknot))
print("serialized:")
print(serialize(unknot))

trefoil = generate_trefoil()
print("The right-handed trefoil: two stacked eyes, three crossings:")
print(ascii_render(trefoil))

print("Its normal rulings (switch sets):")
for ruling in enumerate_rulings(trefoil):
    print("   ", sorted(ruling))

print()
print("Why {2} alone fails:")
check = is_normal_ruling(trefoil, {2})
print(f"    event {check.event_index}: {check.reason}")

print()
print("Fronts round-trip through the text format:")
text = serialize(trefoil)
assert parse(text).events == trefoil.events
print("    parse(serialize(d)) == d  -- OK")
