"""
Images of the disk
==================

Writes four SVG panels: the confluent function for b = 3/2 on the unit disk,
for b = 1 and b = 1 + sqrt(3) on the half disk, and the four-parameter
function at (1, sqrt 2, 1, sqrt 3) on the half disk.
"""

import math
import sys
from pathlib import Path

from wrightfn import WrightParams, wright_map
from wrightfn.plot import PlotSpec, write_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)

panels = {
    "a_confluent_b1.5_disk.svg": (WrightParams(1, 1, 1, 1.5), 1.0),
    "b_confluent_b1_half.svg": (WrightParams(1, 1, 1, 1.0), 0.5),
    "c_confluent_b1+sqrt3_half.svg": (WrightParams(1, 1, 1, 1 + math.sqrt(3)), 0.5),
    "d_wright_sqrt2_sqrt3_half.svg": (WrightParams(1, math.sqrt(2), 1, math.sqrt(3)), 0.5),
}
for name, (p, radius) in panels.items():
    path = write_svg(PlotSpec(wright_map(p), radius=radius), out / name)
    print(f"wrote {path}")

# The half-disk image for b = 1 + sqrt(3) is convex, matching the convexity
# threshold psi1(1) = 1 + sqrt(3).
