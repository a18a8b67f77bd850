#!/usr/bin/env python3
"""Render a small SVG gallery of fronts and resolutions into ./gallery."""
from pathlib import Path

from clasplab import (enumerate_rulings, generate_torus4, generate_trefoil,
                      generate_unknot, svg_render)

out = Path(__file__).resolve().parent / "gallery"
out.mkdir(exist_ok=True)

pictures = {
    "unknot": (generate_unknot(), None),
    "trefoil": (generate_trefoil(), None),
    "trefoil_ruling_1": (generate_trefoil(), frozenset({1})),
    "trefoil_ruling_123": (generate_trefoil(), frozenset({1, 2, 3})),
}
torus = generate_torus4(0)
pictures["torus4_0"] = (torus, None)
(ruling,) = enumerate_rulings(torus)
pictures["torus4_0_resolution"] = (torus, ruling)

for name, (diagram, ruling) in pictures.items():
    path = out / f"{name}.svg"
    path.write_text(svg_render(diagram, ruling))
    print(f"wrote {path}")

print()
print("Resolution pictures color strands per eye; dashed red segments")
print("mark clasps, dotted gray ticks mark switch touch-points.")
