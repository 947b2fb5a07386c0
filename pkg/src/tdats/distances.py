"""Dynamic time warping, curve distances and the bottleneck distance."""
import numpy as np
from numba import njit
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ._errors import DistanceError
from .curves import PersistenceCurve
from .series import dist_l1


def _as_vector(x, name):
    v = np.ascontiguousarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DistanceError(f"{name} must be 1-D, got shape {v.shape}")
    if v.size == 0:
        raise DistanceError(f"empty input ({name})")
    if not np.isfinite(v).all():
        raise DistanceError(f"{name} contains missing or infinite values")
    return v


def _check_window(n, m, window):
    if window is None:
        return -1
    window = int(window)
    if window < abs(n - m):
        raise DistanceError(
            f"infeasible window: half-width {window} < length difference {abs(n - m)}")
    return window


@njit(cache=True, nogil=True)
def _dtw_value(s, t, window):
    n, m = s.size, t.size
    prev = np.full(m + 1, np.inf)
    cur = np.full(m + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, n + 1):
        cur[:] = np.inf
        lo, hi = 1, m
        if window >= 0:
            lo = max(1, i - window)
            hi = min(m, i + window)
        for j in range(lo, hi + 1):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = abs(s[i - 1] - t[j - 1]) + best
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True, nogil=True)
def _dtw_table(s, t, window):
    n, m = s.size, t.size
    acc = np.full((n + 1, m + 1), np.inf)
    acc[0, 0] = 0.0
    for i in range(1, n + 1):
        lo, hi = 1, m
        if window >= 0:
            lo = max(1, i - window)
            hi = min(m, i + window)
        for j in range(lo, hi + 1):
            best = min(acc[i - 1, j - 1], acc[i - 1, j], acc[i, j - 1])
            acc[i, j] = abs(s[i - 1] - t[j - 1]) + best
    return acc


def dtw(s, t, window=None):
    """DTW distance with cost ``|s_i - t_j|``.

    ``window`` is an optional Sakoe-Chiba half-width: only cells with
    ``|i - j| <= window`` are admissible. ``None`` searches the full grid.
    """
    s, t = _as_vector(s, "s"), _as_vector(t, "t")
    return float(_dtw_value(s, t, _check_window(s.size, t.size, window)))


def dtw_path(s, t, window=None):
    """DTW distance and one optimal warping path.

    The path is a tuple of 0-based ``(i, j)`` pairs from ``(0, 0)`` to
    ``(n - 1, m - 1)``. Backtracking prefers the diagonal step, then a step
    in ``s`` alone, then a step in ``t`` alone.
    """
    s, t = _as_vector(s, "s"), _as_vector(t, "t")
    acc = _dtw_table(s, t, _check_window(s.size, t.size, window))
    i, j = s.size, t.size
    path = [(i - 1, j - 1)]
    while (i, j) != (1, 1):
        options = ((i - 1, j - 1), (i - 1, j), (i, j - 1))
        i, j = min(options, key=lambda ij: acc[ij])
        path.append((i - 1, j - 1))
    return float(acc[-1, -1]), tuple(path[::-1])


def path_cost(s, t, path):
    """Summed ``|s_i - t_j|`` along a warping path, validating its steps."""
    s, t = _as_vector(s, "s"), _as_vector(t, "t")
    if path[0] != (0, 0) or path[-1] != (s.size - 1, t.size - 1):
        raise DistanceError("warping path must run from (0, 0) to (n-1, m-1)")
    for (a, b), (c, d) in zip(path, path[1:]):
        if (c - a, d - b) not in ((1, 0), (1, 1), (0, 1)):
            raise DistanceError(f"illegal warping step ({a}, {b}) -> ({c}, {d})")
    ii, jj = np.array(path).T
    return float(np.abs(s[ii] - t[jj]).sum())


def _offdiagonal(diagram):
    pts = diagram.points if hasattr(diagram, "points") else np.asarray(diagram, dtype=np.float64)
    pts = np.asarray(pts, dtype=np.float64).reshape(-1, 2)
    return pts[pts[:, 0] != pts[:, 1]]


def _perfect_matching_exists(cross, half1, half2, eps):
    n, m = cross.shape
    adj = np.zeros((n + m, m + n), dtype=bool)
    adj[:n, :m] = cross <= eps
    adj[np.arange(n), m + np.arange(n)] = half1 <= eps
    adj[n + np.arange(m), np.arange(m)] = half2 <= eps
    adj[n:, m:] = True
    match = maximum_bipartite_matching(csr_matrix(adj), perm_type="column")
    return bool((match >= 0).all())


def bottleneck(d1, d2):
    """Bottleneck distance between two finite diagrams.

    Points may be matched to each other at sup-norm cost or sent to the
    diagonal at half their lifetime. The answer is the smallest candidate
    cost admitting a perfect matching of the diagonal-augmented diagrams,
    found by binary search; it is exact for integer coordinates. Essential
    pairs, when present, are treated like any other finite pair.
    """
    a, b = _offdiagonal(d1), _offdiagonal(d2)
    if a.size == 0 and b.size == 0:
        return 0.0
    cross = np.maximum(np.abs(a[:, None, 0] - b[None, :, 0]),
                       np.abs(a[:, None, 1] - b[None, :, 1]))
    half1 = (a[:, 1] - a[:, 0]) / 2
    half2 = (b[:, 1] - b[:, 0]) / 2
    candidates = np.unique(np.concatenate([cross.ravel(), half1, half2, [0.0]]))
    lo, hi = 0, candidates.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _perfect_matching_exists(cross, half1, half2, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def curve_dist(c1, c2, kind="l1", window=None):
    """L1 or DTW distance between the sample vectors of two curves."""
    if not isinstance(c1, PersistenceCurve) or not isinstance(c2, PersistenceCurve):
        raise DistanceError("curve_dist expects two PersistenceCurve objects")
    if kind == "l1":
        if c1.mesh != c2.mesh:
            raise DistanceError("mesh mismatch: l1 curve distance needs identical meshes")
        return dist_l1(c1.samples, c2.samples)
    if kind == "dtw":
        return dtw(c1.samples, c2.samples, window)
    raise DistanceError(f"unknown curve distance {kind!r}; choose 'l1' or 'dtw'")
