"""Zero-dimensional sublevel-set persistence of piecewise-linear series.

The sublevel sets of the linear interpolation of a series are unions of
intervals, so only connected components (H0) carry information. Two
routes are provided:

* :func:`sublevel_diagram` sweeps the values in increasing order with a
  union-find over indices and applies the elder rule at merges.
* :func:`oracle_diagram` counts persistent Betti numbers level by level and
  recovers the pairs by inclusion-exclusion. It is quadratic in the number
  of distinct levels and meant for cross-checking.

The component that never dies (the essential class) is closed at the global
maximum so every lifetime is finite.
"""
from dataclasses import dataclass, field

import numpy as np

from ._errors import PersistenceError


def _scalar(x):
    x = x.item() if hasattr(x, "item") else x
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def _fmt(x):
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _parse_number(token):
    try:
        return int(token)
    except ValueError:
        return float(token)


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of finite (birth, death) pairs plus an optional essential pair.

    ``pairs`` holds the ordinary pairs in sorted order; ``essential`` is the
    closed-off class that never merges, or ``None`` for diagrams built by hand
    without one. Diagonal points are implicit.
    """

    pairs: tuple = ()
    essential: tuple = None
    _points: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pairs = tuple(sorted((_scalar(b), _scalar(d)) for b, d in self.pairs))
        for b, d in pairs:
            if b > d:
                raise PersistenceError(f"birth {b} exceeds death {d}")
        object.__setattr__(self, "pairs", pairs)
        ess = self.essential
        if ess is not None:
            ess = (_scalar(ess[0]), _scalar(ess[1]))
            if ess[0] > ess[1]:
                raise PersistenceError(f"birth {ess[0]} exceeds death {ess[1]}")
            object.__setattr__(self, "essential", ess)
        pts = ([ess] if ess is not None else []) + list(pairs)
        arr = np.array(pts, dtype=np.float64).reshape(-1, 2)
        arr.flags.writeable = False
        object.__setattr__(self, "_points", arr)

    @property
    def points(self):
        """All pairs as a ``(k, 2)`` array, essential pair first."""
        return self._points

    @property
    def births(self):
        return self._points[:, 0]

    @property
    def deaths(self):
        return self._points[:, 1]

    @property
    def lifetimes(self):
        return self._points[:, 1] - self._points[:, 0]

    def __len__(self):
        return len(self._points)

    def without_essential(self):
        return PersistenceDiagram(self.pairs, None)

    def format(self):
        """Serialize as one ``"birth death"`` line per pair, essential marked ``*``."""
        lines = []
        if self.essential is not None:
            b, d = self.essential
            lines.append(f"{_fmt(b)} {_fmt(d)} *")
        lines.extend(f"{_fmt(b)} {_fmt(d)}" for b, d in self.pairs)
        return "".join(line + "\n" for line in lines)

    @classmethod
    def parse(cls, text):
        pairs, essential = [], None
        for lineno, line in enumerate(text.splitlines(), 1):
            tokens = line.split()
            if not tokens:
                continue
            star = tokens[-1] == "*"
            if star:
                tokens = tokens[:-1]
            if len(tokens) != 2:
                raise PersistenceError(f"line {lineno}: expected 'birth death [*]', got {line!r}")
            try:
                b, d = (_parse_number(t) for t in tokens)
            except ValueError:
                raise PersistenceError(f"line {lineno}: non-numeric pair {line!r}") from None
            if star:
                if essential is not None:
                    raise PersistenceError(f"line {lineno}: second essential pair")
                essential = (b, d)
            else:
                pairs.append((b, d))
        return cls(tuple(pairs), essential)


def _values(values):
    v = np.asarray(values)
    if v.ndim != 1:
        raise PersistenceError(f"expected a 1-D series, got shape {v.shape}")
    if v.size == 0:
        raise PersistenceError("empty input")
    if not np.issubdtype(v.dtype, np.integer):
        v = v.astype(np.float64)
        if not np.isfinite(v).all():
            raise PersistenceError("series must be finite; quantize or fill missing values first")
    return v


def collapse_plateaus(values):
    """Drop every entry equal to its left neighbour."""
    v = np.asarray(values)
    if v.size == 0:
        return v
    keep = np.empty(v.size, dtype=bool)
    keep[0] = True
    np.not_equal(v[1:], v[:-1], out=keep[1:])
    return v[keep]


def count_local_minima(values):
    """Number of local minima (endpoints included) after plateau collapsing."""
    v = collapse_plateaus(_values(values))
    if v.size == 1:
        return 1
    left = np.r_[True, v[1:] < v[:-1]]
    right = np.r_[v[:-1] < v[1:], True]
    return int((left & right).sum())


def sublevel_diagram(values):
    """H0 persistence diagram of the sublevel filtration of a series.

    Components are born at local minima. When two meet, the one with the
    larger birth dies; on equal births the one further to the right dies.

    >>> print(sublevel_diagram([1, 3, 2, 4]).format(), end="")
    1 4 *
    2 3
    """
    v = collapse_plateaus(_values(values))
    n = v.size
    parent = np.full(n, -1, dtype=np.int64)
    birth = v.copy()
    leftmost = np.arange(n)

    def find(i):
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    pairs = []
    for i in np.lexsort((np.arange(n), v)):
        parent[i] = i
        for j in (i - 1, i + 1):
            if j < 0 or j >= n or parent[j] < 0:
                continue
            ri, rj = find(i), find(j)
            if ri == rj:
                continue
            if (birth[ri], leftmost[ri]) > (birth[rj], leftmost[rj]):
                young, old = ri, rj
            else:
                young, old = rj, ri
            # a regular vertex joining a lower neighbour is a zero-length bar
            if birth[young] < v[i]:
                pairs.append((birth[young], v[i]))
            parent[young] = old
            leftmost[old] = min(leftmost[old], leftmost[young])

    root = find(0)
    return PersistenceDiagram(tuple(pairs), (birth[root], v.max()))


def _component_labels(v, level):
    """Label maximal runs of indices with ``v <= level``; -1 elsewhere."""
    inside = v <= level
    starts = inside & ~np.r_[False, inside[:-1]]
    labels = np.cumsum(starts) - 1
    return np.where(inside, labels, -1)


def count_sublevel_components(values, level):
    """Number of connected components of the sublevel set at ``level``."""
    inside = np.asarray(values) <= level
    return int((inside & ~np.r_[False, inside[:-1]]).sum())


def persistent_betti(values):
    """Persistent Betti numbers over the distinct values of a series.

    Returns ``(levels, beta)`` where ``beta[i, j]`` (``i <= j``) is the number
    of components of the sublevel set at ``levels[j]`` that contain a point of
    the sublevel set at ``levels[i]``. Entries below the diagonal are zero.
    """
    v = _values(values)
    levels = np.unique(v)
    k = levels.size
    beta = np.zeros((k, k), dtype=np.int64)
    for j, lj in enumerate(levels):
        labels = _component_labels(v, lj)
        for i in range(j + 1):
            beta[i, j] = np.unique(labels[v <= levels[i]]).size
    return levels, beta


def oracle_diagram(values):
    """Brute-force H0 diagram by inclusion-exclusion on persistent Betti numbers.

    The multiplicity of ``(levels[i], levels[j])`` is
    ``beta[i, j-1] - beta[i-1, j-1] + beta[i-1, j] - beta[i, j]`` with
    ``beta[-1, .] = 0``. Classes still alive at the top level are essential.
    """
    levels, beta = persistent_betti(values)
    k = levels.size

    def b(i, j):
        return beta[i, j] if i >= 0 else 0

    pairs, essential = [], None
    for i in range(k):
        for j in range(i + 1, k):
            mu = b(i, j - 1) - b(i - 1, j - 1) + b(i - 1, j) - b(i, j)
            pairs.extend([(levels[i], levels[j])] * int(mu))
        if b(i, k - 1) - b(i - 1, k - 1) > 0:
            essential = (levels[i], levels[-1])
    return PersistenceDiagram(tuple(pairs), essential)
