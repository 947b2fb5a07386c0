"""
The chain of inequalities, numerically
======================================

For quantized series of equal length, the bottleneck distance between their
diagrams is bounded by their DTW distance, which is bounded by their L1
distance. The same ordering of DTW and L1 holds between their curves.
"""

import numpy as np

from tdats import bottleneck, curve_dist, dist_l1, dtw, quantize, sublevel_diagram
from tdats import EnsembleConfig, topological_transform

rng = np.random.default_rng(0)
cfg = EnsembleConfig(0.0)
rows = []
for _ in range(200):
    n = int(rng.integers(5, 60))
    s, t = quantize(rng.normal(size=n).cumsum()), quantize(rng.normal(size=n).cumsum())
    w = bottleneck(sublevel_diagram(s), sublevel_diagram(t))
    cs, ct = topological_transform(s, cfg), topological_transform(t, cfg)
    rows.append((w, dtw(s, t), dist_l1(s, t), curve_dist(cs, ct, "dtw"), curve_dist(cs, ct, "l1")))

rows = np.array(rows)
print("bottleneck <= dtw:", bool((rows[:, 0] <= rows[:, 1]).all()))
print("dtw <= l1:        ", bool((rows[:, 1] <= rows[:, 2]).all()))
print("curve dtw <= l1:  ", bool((rows[:, 3] <= rows[:, 4] + 1e-9).all()))
print("median ratios bottleneck/dtw, dtw/l1:",
      np.median(rows[:, 0] / np.maximum(rows[:, 1], 1)),
      np.median(rows[:, 1] / np.maximum(rows[:, 2], 1)))
