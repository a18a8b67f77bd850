#!/usr/bin/env python3
"""Building links from the empty front, and the parity obstruction.

A script of births, saddles and isotopy moves certifies that its final
link bounds a surface built the same way.  Threading the switch set
through the moves gives the script's associated ruling, whose clasp
total is always even.  Contrapositive: a link whose rulings are all odd
admits no such script.
"""
from clasplab import (cobordism_parity_check, generate_torus4,
                      generate_trefoil, generate_unknot, obstruction_verdict,
                      random_script, run_script, search_filling,
                      serialize_script)

print("A random 12-move script and its certificate:")
script = random_script(12, seed=7)
print(serialize_script(script))
certificate = run_script(script)
print("final diagram:", certificate.diagram)
print("associated ruling:", sorted(certificate.ruling))
print("clasp total:", certificate.report.total, f"({certificate.report.parity})")

print()
print("Certificates are always even; sampling 200 seeds:")
worst = max(run_script(random_script(1 + s % 25, s)).report.total
            for s in range(200))
print(f"    largest clasp total seen: {worst} (even, as required)")

print()
print("Obstruction verdicts:")
for name, diagram in [("unknot", generate_unknot()),
                      ("trefoil", generate_trefoil()),
                      ("torus4(0)", generate_torus4(0))]:
    verdict = obstruction_verdict(diagram)
    extras = f", witness {list(verdict.witness)}" if verdict.witness else ""
    print(f"    {name}: {verdict.verdict}{extras}")

print()
print("Searching for filling scripts:")
for name, diagram in [("unknot", generate_unknot()),
                      ("torus4(0)", generate_torus4(0)),
                      ("trefoil (depth 1)", generate_trefoil())]:
    depth = 1 if "depth" in name else 6
    result = search_filling(diagram, depth_bound=depth)
    print(f"    {name}: {result.status}", end="")
    print(f"  {[str(m) for m in result.script]}" if result.script else "")

print()
print("Cobordism parity between unique-ruling links:")
pair = cobordism_parity_check(generate_torus4(0), generate_torus4(1))
print(f"    torus4(0) -> torus4(1): {pair.status} "
      f"({pair.lower.parity}/{pair.upper.parity})")
