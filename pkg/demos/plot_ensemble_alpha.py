"""
Sweeping the blend weight
=========================

Both ensemble families are run on the bundled noisy-sinusoid dataset for
alpha in {0, 0.25, 0.5, 0.75, 1}, next to the euclidean and DTW baselines.
The alpha = 1 rows reproduce the plain L1 and DTW nearest-neighbour scores.
"""

import matplotlib.pyplot as plt

from tdats import EnsembleConfig, compare_results, run_benchmark
from tdats.bench import format_results_csv
from tdats.datasets import load_bundled

ds = load_bundled("ToySines")
alphas = [0.0, 0.25, 0.5, 0.75, 1.0]
configs = [EnsembleConfig(a, base=b) for b in ("l1", "dtw") for a in alphas]
res = run_benchmark(ds, configs, include_baselines=True)
print(format_results_csv(res))

###############################################################################
# Residuals against a reference table; here the euclidean baseline stands in
# for published scores.
report = compare_results(res, {ds.name: res.baselines["ed"]}, "sl-l1", 0.5)
print(report.summary())

fig, ax = plt.subplots(figsize=(6, 3.5))
for metric in ("sl-l1", "sl-dtw"):
    ax.plot(alphas, [res.accuracy(metric, a) for a in alphas], marker="o", label=metric)
for name, acc in res.baselines.items():
    ax.axhline(acc, linestyle="--", linewidth=0.8, label=f"{name} baseline")
ax.set_xlabel("alpha")
ax.set_ylabel("1-NN accuracy")
ax.legend()
fig.tight_layout()
plt.show()
