#!/usr/bin/env python3
"""The front move calculus and how rulings travel along it.

Every isotopy rewrite carries a bijection between the rulings of its two
sides; births keep the switch set, and a saddle is only compatible with
rulings that pair the two reconnected strands into one eye.
"""
from clasplab import (FrontDiagram, Move, TransportFailure, apply_move,
                      enumerate_applicable_moves, enumerate_rulings,
                      generate_trefoil, generate_unknot)

unknot = generate_unknot()
print("Moves applicable to the unknot:")
for move in enumerate_applicable_moves(unknot):
    print("   ", move)

print()
print("A kink always switches its new crossing:")
kinked, transport = apply_move(unknot, Move("r1", 2, 1, "up"))
print(f"    {unknot}  --r1-->  {kinked}")
print("    image of the empty switch set:", sorted(transport(frozenset())))

print()
print("A saddle pinches one eye into two:")
unlink, transport = apply_move(unknot, Move("h1", 2, 1))
print(f"    {unknot}  --h1-->  {unlink}")
print("    switch set preserved:", sorted(transport(frozenset())))

print()
print("A saddle between different eyes refuses the transport:")
stacked = FrontDiagram(generate_unknot().events)
stacked, _ = apply_move(stacked, Move("h0", 2, 3))  # second eye above
bad, transport = apply_move(stacked, Move("h1", 3, 2))
try:
    transport(frozenset())
except TransportFailure as exc:
    print("    TransportFailure:", exc)

print()
print("Transporting every trefoil ruling across every isotopy move:")
trefoil = generate_trefoil()
rulings = enumerate_rulings(trefoil)
moves = [m for m in enumerate_applicable_moves(trefoil)
         if m.kind not in ("h0", "h1")]
for move in moves[:5]:
    target, transport = apply_move(trefoil, move)
    images = [sorted(transport(r)) for r in rulings]
    print(f"    {str(move):12s}: {[sorted(r) for r in rulings]} -> {images}")
print(f"    ... ({len(moves)} isotopy moves in total, all bijections)")
