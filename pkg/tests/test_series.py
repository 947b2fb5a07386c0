import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdats.series import (MISSING, as_series, dist_l1, dist_l2, dist_linf, fill_missing,
                          norm_l1, quantize, round_half_away)


def _formula(values):
    # direct transcription of the quantization map, one entry at a time
    filled = [0.0 if math.isnan(v) else v for v in values]
    lo, hi = min(filled), max(filled)
    out = []
    for v in filled:
        x = 1 + (v - lo) / (hi - lo) * 100
        out.append(int(math.floor(x + 0.5)))
    return out


@pytest.mark.parametrize("values, expected", [
    ([0, 5, 10], [1, 51, 101]),
    ([3, 3, 3], [1, 1, 1]),
    ([2, MISSING, 4], [51, 1, 101]),
])
def test_quantize_examples(values, expected):
    assert quantize(values).tolist() == expected


def test_quantize_matches_formula():
    assert _formula([0, 5, 10]) == [1, 51, 101]
    assert _formula([2, MISSING, 4]) == [51, 1, 101]
    rng = np.random.default_rng(3)
    for _ in range(200):
        s = rng.normal(size=rng.integers(2, 30))
        assert quantize(s).tolist() == _formula(s.tolist())


def test_quantize_errors():
    with pytest.raises(ValueError, match="empty input"):
        quantize([])
    with pytest.raises(ValueError, match="infinite"):
        quantize([1.0, math.inf])


def test_round_half_away_from_zero():
    assert round_half_away([0.5, 1.5, 2.5, -0.5, -2.5, 2.4999]).tolist() == [1, 2, 3, -1, -3, 2]


def test_fill_missing_is_a_copy():
    s = np.array([1.0, np.nan])
    assert fill_missing(s).tolist() == [1.0, 0.0]
    assert np.isnan(s[1])


def test_as_series_rejects_2d():
    with pytest.raises(ValueError):
        as_series([[1, 2]])


ints = st.lists(st.integers(-1000, 1000), min_size=2, max_size=30)


@given(ints, st.integers(1, 64), st.integers(-1000, 1000))
def test_quantize_affine_invariance(s, a, b):
    s = np.array(s, dtype=float)
    assert quantize(a * s + b).tolist() == quantize(s).tolist()


@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=30), st.sampled_from([0.25, 2.0, 8.0]))
def test_quantize_power_of_two_scaling(s, a):
    assert quantize(a * np.array(s)).tolist() == quantize(s).tolist()


@given(ints)
def test_quantize_range(s):
    q = quantize(s)
    assert q.dtype.kind == "i"
    if min(s) == max(s):
        assert (q == 1).all()
    else:
        assert q.min() == 1 and q.max() == 101


@pytest.mark.parametrize("values, expected", [([1, -2, 3], 6), ([0, 0], 0), ([101], 101)])
def test_norm_l1(values, expected):
    assert norm_l1(values) == expected


@pytest.mark.parametrize("s, t, expected", [
    ([1, 2, 3], [1, 2, 3], 0),
    ([1, 2, 3], [2, 3, 4], 3),
    ([5], [1], 4),
])
def test_dist_l1(s, t, expected):
    assert dist_l1(s, t) == expected


def test_dist_l2():
    assert dist_l2([0, 0], [3, 4]) == 5
    assert dist_l2([1.5, -2], [1.5, -2]) == 0
    assert dist_l2([1, 1], [2, 2]) == pytest.approx(math.sqrt(2), abs=0)


def test_length_mismatch():
    with pytest.raises(ValueError, match="length mismatch"):
        dist_l1([1, 2], [1])
    with pytest.raises(ValueError, match="length mismatch"):
        dist_l2([1, 2], [1])


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=1, max_size=20))
def test_l1_dominates_linf(pairs):
    s, t = zip(*pairs)
    assert dist_l1(s, t) >= dist_linf(s, t)
