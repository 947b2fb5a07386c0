"""Time-series values, missing-value handling, quantization and norms.

A time series is a 1-D float array. Missing entries are stored as NaN
(:data:`MISSING`); every other entry must be finite.
"""
import numpy as np

from ._errors import SeriesError

MISSING = float("nan")

#: Quantized series take integer values in ``[QMIN, QMAX]``.
QMIN = 1
QMAX = 101


def as_series(values):
    """Validate ``values`` and return them as a float64 array.

    NaN entries are accepted as missing; infinities are rejected.
    """
    s = np.asarray(values, dtype=np.float64)
    if s.ndim != 1:
        raise SeriesError(f"expected a 1-D series, got shape {s.shape}")
    if s.size == 0:
        raise SeriesError("empty input")
    if np.isinf(s).any():
        raise SeriesError("series contains infinite values")
    return s


def fill_missing(values, fill=0.0):
    """Return a copy of the series with missing entries replaced by ``fill``."""
    s = as_series(values)
    return np.where(np.isnan(s), fill, s)


def round_half_away(x):
    """Round to the nearest integer, ties away from zero."""
    x = np.asarray(x, dtype=np.float64)
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def quantize(values):
    """Map a series onto the integer levels 1..101.

    Missing entries are filled with 0 first; the fill value takes part in the
    min/max normalisation. Each entry ``v`` then becomes
    ``round(1 + 100 * (v - min) / (max - min))`` with ties rounded away from
    zero. A constant series maps to all ones.

    >>> quantize([0, 5, 10]).tolist()
    [1, 51, 101]
    """
    s = fill_missing(values)
    lo, hi = s.min(), s.max()
    if hi == lo:
        return np.full(s.shape, QMIN, dtype=np.int64)
    # (s - lo) / (hi - lo) first: keeps the result exactly invariant under
    # affine rescaling whenever the products are exact.
    scaled = 1.0 + ((s - lo) / (hi - lo)) * (QMAX - QMIN)
    return round_half_away(scaled).astype(np.int64)


def norm_l1(values):
    return float(np.abs(np.asarray(values, dtype=np.float64)).sum())


def _pair(s, t):
    s = np.asarray(s, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    if s.shape != t.shape:
        raise SeriesError(f"length mismatch: {s.shape[0]} vs {t.shape[0]}")
    return s, t


def dist_l1(s, t):
    """Sum of absolute differences of two equal-length vectors."""
    s, t = _pair(s, t)
    return float(np.abs(s - t).sum())


def dist_l2(s, t):
    """Euclidean distance of two equal-length vectors."""
    s, t = _pair(s, t)
    return float(np.sqrt(((s - t) ** 2).sum()))


def dist_linf(s, t):
    s, t = _pair(s, t)
    return float(np.abs(s - t).max()) if s.size else 0.0
