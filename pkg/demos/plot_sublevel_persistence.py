"""
From a time series to a persistence curve
=========================================

A series is quantized onto the levels 1..101, its sublevel-set persistence
diagram is computed, and the diagram is sampled as a Betti curve and as a
stabilized life curve.
"""

import matplotlib.pyplot as plt
import numpy as np

from tdats import betti_curve, quantize, stabilized_life_curve, sublevel_diagram
from tdats.persistence import oracle_diagram

rng = np.random.default_rng(7)
t = np.linspace(0, 4 * np.pi, 80)
s = np.sin(t) + 0.4 * np.sin(3.3 * t) + 0.15 * rng.normal(size=t.size)

###############################################################################
# Quantization maps the minimum to 1 and the maximum to 101.
q = quantize(s)
print("quantized range:", q.min(), q.max())

###############################################################################
# Each local minimum starts a component; when two meet, the younger one dies.
# The surviving component is closed at the global maximum.
diagram = sublevel_diagram(q)
print(diagram.format())

# the brute-force route gives the same multiset
assert diagram == oracle_diagram(q)

###############################################################################
# Curves are sampled on the integer mesh 1..101.
betti = betti_curve(diagram)
sl = stabilized_life_curve(diagram)

fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))
axes[0].plot(q, color="k")
axes[0].set_title("quantized series")
axes[1].scatter(diagram.births, diagram.deaths)
axes[1].plot([1, 101], [1, 101], color="gray", linewidth=0.8)
axes[1].set_title("persistence diagram")
axes[1].set_xlabel("birth")
axes[1].set_ylabel("death")
axes[2].step(betti.mesh.points, betti.samples / betti.samples.max(), where="post",
             label="Betti (scaled)")
axes[2].step(sl.mesh.points, sl.samples, where="post", label="stabilized life")
axes[2].legend()
axes[2].set_title("persistence curves")
fig.tight_layout()
plt.show()
