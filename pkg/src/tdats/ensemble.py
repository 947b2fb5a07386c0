"""Ensemble distances blending raw-series and persistence-curve distances.

For a weight ``alpha`` in [0, 1]::

    d(s, t) = alpha * base(s, t) + (1 - alpha) * base(curve(s), curve(t))

with ``base`` either the L1 distance or DTW. ``curve`` is the topological
transform: quantize, take the sublevel diagram, sample a persistence curve.
At ``alpha = 0`` the result is only a pseudo-metric: distinct series with
equal diagrams are at distance zero.
"""
import threading
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ._errors import EnsembleError
from .curves import DEFAULT_MESH, FUNCTIONALS, Mesh, named_curve
from .distances import curve_dist, dtw
from .persistence import sublevel_diagram
from .series import as_series, dist_l1, fill_missing, quantize

CURVE_ALIASES = {"sl": "stabilized_life", "betti": "betti", "life": "life"}
_SHORT = {v: k for k, v in CURVE_ALIASES.items()}


@dataclass(frozen=True)
class EnsembleConfig:
    """Settings for one ensemble distance.

    ``geom`` selects the operand of the geometric term: the raw series with
    missing values filled by 0 (``"raw"``) or the quantized series.
    ``window`` constrains the raw-series DTW only; curve DTW is windowless.
    """

    alpha: float
    base: str = "l1"
    curve_kind: str = "stabilized_life"
    include_essential: bool = True
    geom: str = "raw"
    window: Optional[int] = None
    mesh: Mesh = field(default=DEFAULT_MESH, compare=False)

    def __post_init__(self):
        alpha = float(self.alpha)
        if not 0.0 <= alpha <= 1.0:
            raise EnsembleError(f"alpha must lie in [0, 1], got {self.alpha}")
        object.__setattr__(self, "alpha", alpha)
        if self.base not in ("l1", "dtw"):
            raise EnsembleError(f"unknown base distance {self.base!r}; choose 'l1' or 'dtw'")
        kind = CURVE_ALIASES.get(self.curve_kind, self.curve_kind)
        if kind not in FUNCTIONALS:
            raise EnsembleError(f"unknown curve kind {self.curve_kind!r}")
        object.__setattr__(self, "curve_kind", kind)
        if self.geom not in ("raw", "quantized"):
            raise EnsembleError(f"geom must be 'raw' or 'quantized', got {self.geom!r}")

    @property
    def metric_id(self):
        """Short label such as ``"sl-l1"``."""
        return f"{_SHORT[self.curve_kind]}-{self.base}"

    @classmethod
    def from_metric_id(cls, metric_id, alpha, **kwargs):
        try:
            short, base = metric_id.rsplit("-", 1)
            kind = CURVE_ALIASES[short]
        except (ValueError, KeyError):
            raise EnsembleError(
                f"unknown metric {metric_id!r}; expected one of "
                + ", ".join(f"{c}-{b}" for c in CURVE_ALIASES for b in ("l1", "dtw"))) from None
        return cls(alpha, base=base, curve_kind=kind, **kwargs)


class CurveCache:
    """Memo of topological transforms keyed by series content and settings.

    Writes are serialized; concurrent reads are safe.
    """

    def __init__(self):
        self._store = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._store)

    def get_or_compute(self, key, compute):
        try:
            return self._store[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._store.setdefault(key, value)


def topological_transform(series, cfg, cache=None):
    """Quantize ``series``, compute its sublevel diagram and sample the curve."""
    def compute():
        diagram = sublevel_diagram(quantize(series))
        return named_curve(cfg.curve_kind, diagram, cfg.mesh, cfg.include_essential)

    if cache is None:
        return compute()
    s = as_series(series)
    key = (s.tobytes(), s.size, cfg.curve_kind, cfg.include_essential, cfg.mesh.points.tobytes())
    return cache.get_or_compute(key, compute)


def geometric_operand(series, geom="raw"):
    if geom == "quantized":
        return quantize(series).astype(np.float64)
    return fill_missing(series)


def blend(alpha, geometric, topological):
    return alpha * geometric + (1.0 - alpha) * topological


def ensemble_l1(cfg, s, t, cache=None):
    s_op, t_op = geometric_operand(s, cfg.geom), geometric_operand(t, cfg.geom)
    if s_op.size != t_op.size:
        raise EnsembleError("ensemble_l1 requires equal-length series; use ensemble_dtw")
    geometric = dist_l1(s_op, t_op)
    topological = curve_dist(topological_transform(s, cfg, cache),
                             topological_transform(t, cfg, cache), "l1")
    return blend(cfg.alpha, geometric, topological)


def ensemble_dtw(cfg, s, t, cache=None):
    geometric = dtw(geometric_operand(s, cfg.geom), geometric_operand(t, cfg.geom), cfg.window)
    topological = curve_dist(topological_transform(s, cfg, cache),
                             topological_transform(t, cfg, cache), "dtw")
    return blend(cfg.alpha, geometric, topological)


def ensemble_distance(cfg, s, t, cache=None):
    """Dispatch to :func:`ensemble_l1` or :func:`ensemble_dtw` by ``cfg.base``."""
    if cfg.base == "l1":
        return ensemble_l1(cfg, s, t, cache)
    return ensemble_dtw(cfg, s, t, cache)
