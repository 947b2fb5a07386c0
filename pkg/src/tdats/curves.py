"""Persistence curves: vectorizing a diagram by sampling it on a mesh.

A curve is built from a per-point function ``psi(birth, death, x)`` and a
statistic ``T``. At each mesh level ``x`` the statistic is applied to the
``psi`` values of the pairs alive at ``x``, i.e. those with
``birth <= x < death``. An empty collection yields 0.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ._errors import CurveError
from .persistence import PersistenceDiagram, _fmt
from .series import QMAX, QMIN


@dataclass(frozen=True, eq=False)
class Mesh:
    """Strictly increasing sample levels."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.ndim != 1 or pts.size == 0:
            raise CurveError("mesh must be a non-empty 1-D sequence")
        if not np.isfinite(pts).all() or (np.diff(pts) <= 0).any():
            raise CurveError("mesh points must be finite and strictly increasing")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @classmethod
    def integer(cls, lo=QMIN, hi=QMAX):
        if hi < lo:
            raise CurveError(f"empty mesh: min {lo} > max {hi}")
        return cls(np.arange(lo, hi + 1))

    def __len__(self):
        return self.points.size

    def __eq__(self, other):
        return isinstance(other, Mesh) and np.array_equal(self.points, other.points)

    __hash__ = None

    @property
    def bounds(self):
        return _fmt(self.points[0]), _fmt(self.points[-1])

    def is_integer_range(self):
        p = self.points
        return bool(p[0].is_integer() and np.array_equal(p, np.arange(p[0], p[0] + p.size)))

    def covers(self, values):
        return bool(np.isin(np.asarray(values, dtype=np.float64), self.points).all())


DEFAULT_MESH = Mesh.integer()


@dataclass(frozen=True, eq=False)
class PersistenceCurve:
    samples: np.ndarray
    mesh: Mesh
    kind: str = "custom"

    def __post_init__(self):
        s = np.array(self.samples, dtype=np.float64)
        if s.shape != self.mesh.points.shape:
            raise CurveError(f"{s.size} samples for a mesh of {len(self.mesh)} points")
        if not np.isfinite(s).all():
            raise CurveError("curve samples must be finite")
        s.flags.writeable = False
        object.__setattr__(self, "samples", s)

    def __len__(self):
        return self.samples.size

    def __eq__(self, other):
        return (
            isinstance(other, PersistenceCurve)
            and self.kind == other.kind
            and self.mesh == other.mesh
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None

    def to_csv(self):
        """One CSV line: kind, mesh min, mesh max, then the samples."""
        if not self.mesh.is_integer_range():
            raise CurveError("only contiguous integer meshes can be serialized")
        lo, hi = self.mesh.bounds
        fields = [self.kind, lo, hi] + [_fmt(x) for x in self.samples]
        return ",".join(fields) + "\n"

    @classmethod
    def from_csv(cls, line):
        fields = [f.strip() for f in line.strip().split(",")]
        if len(fields) < 4:
            raise CurveError("curve line needs kind, mesh bounds and samples")
        kind = fields[0]
        try:
            lo, hi = int(fields[1]), int(fields[2])
            samples = [float(x) for x in fields[3:]]
        except ValueError as exc:
            raise CurveError(f"malformed curve line: {exc}") from None
        return cls(samples, Mesh.integer(lo, hi), kind)


def _sum(vals, box):
    return np.where(box, vals, 0.0).sum(axis=1)


def _mean(vals, box):
    count = box.sum(axis=1)
    return np.divide(_sum(vals, box), count, out=np.zeros(count.shape), where=count > 0)


def _max(vals, box):
    out = np.where(box, vals, -np.inf).max(axis=1, initial=-np.inf)
    return np.where(np.isneginf(out), 0.0, out)


STATISTICS = {"sum": _sum, "mean": _mean, "max": _max}


@dataclass(frozen=True)
class CurveFunctional:
    """``psi`` and statistic defining a persistence curve.

    ``psi`` receives broadcast arrays ``(birth, death, x)`` and must vanish
    when ``birth == death``. ``normalizer``, if given, maps the ``(k, 2)``
    array of pairs to a scalar that divides every ``psi`` value; a zero
    normalizer produces the zero curve.
    """

    psi: Callable
    statistic: str = "sum"
    normalizer: Optional[Callable] = None
    kind: str = "custom"

    def __post_init__(self):
        if self.statistic not in STATISTICS:
            raise CurveError(f"unknown statistic {self.statistic!r}; choose from {sorted(STATISTICS)}")


def _indicator(b, d, x):
    return np.broadcast_to((b != d).astype(np.float64), np.broadcast_shapes(b.shape, x.shape))


def _lifetime(b, d, x):
    return np.broadcast_to(d - b, np.broadcast_shapes(b.shape, x.shape))


def _total_lifetime(points):
    return float((points[:, 1] - points[:, 0]).sum())


BETTI = CurveFunctional(_indicator, "sum", kind="betti")
LIFE = CurveFunctional(_lifetime, "sum", kind="life")
STABILIZED_LIFE = CurveFunctional(_lifetime, "sum", _total_lifetime, kind="stabilized_life")

FUNCTIONALS = {f.kind: f for f in (BETTI, LIFE, STABILIZED_LIFE)}


def curve_eval(diagram, functional, mesh=DEFAULT_MESH, include_essential=True):
    """Sample the persistence curve of ``diagram`` on ``mesh``.

    The mesh must contain every birth and death of the pairs used, otherwise
    the discretized curve would miss level changes.
    """
    if not isinstance(diagram, PersistenceDiagram):
        raise CurveError(f"expected a PersistenceDiagram, got {type(diagram).__name__}")
    pts = diagram.points if include_essential else diagram.without_essential().points
    if not mesh.covers(pts.ravel()):
        missing = sorted(set(pts.ravel().tolist()) - set(mesh.points.tolist()))
        raise CurveError(f"mesh too coarse: levels {missing[:5]} are not mesh points")
    x = mesh.points[:, None]
    b = pts[:, 0][None, :]
    d = pts[:, 1][None, :]
    box = (b <= x) & (x < d)
    vals = np.asarray(functional.psi(b, d, x), dtype=np.float64)
    if functional.normalizer is not None:
        z = functional.normalizer(pts)
        if z == 0:
            return PersistenceCurve(np.zeros(len(mesh)), mesh, functional.kind)
        vals = vals / z
    samples = STATISTICS[functional.statistic](vals, box)
    return PersistenceCurve(samples, mesh, functional.kind)


def betti_curve(diagram, mesh=DEFAULT_MESH, include_essential=True):
    """Number of pairs alive at each mesh level."""
    return curve_eval(diagram, BETTI, mesh, include_essential)


def life_curve(diagram, mesh=DEFAULT_MESH, include_essential=True):
    return curve_eval(diagram, LIFE, mesh, include_essential)


def stabilized_life_curve(diagram, mesh=DEFAULT_MESH, include_essential=True):
    """Sum of normalized lifetimes of the pairs alive at each mesh level.

    Lifetimes are divided by the total lifetime of the diagram, so samples
    lie in [0, 1]. A diagram with zero total lifetime gives the zero curve.

    >>> d = PersistenceDiagram([(2, 3)], (1, 4))
    >>> stabilized_life_curve(d, Mesh.integer(1, 5)).samples.tolist()
    [0.75, 1.0, 0.75, 0.0, 0.0]
    """
    return curve_eval(diagram, STABILIZED_LIFE, mesh, include_essential)


def named_curve(kind, diagram, mesh=DEFAULT_MESH, include_essential=True):
    try:
        functional = FUNCTIONALS[kind]
    except KeyError:
        raise CurveError(f"unknown curve kind {kind!r}; choose from {sorted(FUNCTIONALS)}") from None
    return curve_eval(diagram, functional, mesh, include_essential)
