"""Persistence-curve distances and 1-NN benchmarks for time series."""
from ._errors import (BenchError, CurveError, DistanceError, EnsembleError,
                      PersistenceError, SeriesError, TdaTsError)
from .bench import (BenchmarkResult, LabeledDataset, compare_results, knn1_predict,
                    load_ucr, run_benchmark)
from .curves import (DEFAULT_MESH, CurveFunctional, Mesh, PersistenceCurve, betti_curve,
                     curve_eval, life_curve, stabilized_life_curve)
from .distances import bottleneck, curve_dist, dtw, dtw_path
from .ensemble import (EnsembleConfig, ensemble_distance, ensemble_dtw, ensemble_l1,
                       topological_transform)
from .persistence import PersistenceDiagram, oracle_diagram, sublevel_diagram
from .series import MISSING, dist_l1, dist_l2, norm_l1, quantize

__version__ = "0.1.0"
