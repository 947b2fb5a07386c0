import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sublevel_components
from tdats.distances import bottleneck
from tdats.persistence import (PersistenceDiagram, count_local_minima, oracle_diagram,
                               persistent_betti, sublevel_diagram)

quantized = st.lists(st.integers(1, 10), min_size=1, max_size=20)


@pytest.mark.parametrize("q, pairs, essential", [
    ([1, 3, 2, 4], [(2, 3)], (1, 4)),
    ([1, 2, 3], [], (1, 3)),
    ([5], [], (5, 5)),
    ([2, 2, 2], [], (2, 2)),
    ([3, 1, 3, 1, 3], [(1, 3)], (1, 3)),
])
def test_examples(q, pairs, essential):
    expected = PersistenceDiagram(pairs, essential)
    assert sublevel_diagram(q) == expected
    assert oracle_diagram(q) == expected


def test_empty_input():
    for fn in (sublevel_diagram, oracle_diagram):
        with pytest.raises(ValueError, match="empty input"):
            fn([])


def test_missing_values_rejected():
    with pytest.raises(ValueError, match="finite"):
        sublevel_diagram([1.0, np.nan])


def test_real_valued_series():
    d = sublevel_diagram([0.5, 2.25, -1.0, 3.0, 1.5, 4.0])
    assert d == oracle_diagram([0.5, 2.25, -1.0, 3.0, 1.5, 4.0])
    assert d.essential == (-1.0, 4)


def test_essential_flag_matters():
    assert PersistenceDiagram([(1, 3)], (1, 4)) != PersistenceDiagram([(1, 4)], (1, 3))
    assert PersistenceDiagram([(2, 3), (1, 2)], None) == PersistenceDiagram([(1, 2), (2, 3)])


def test_birth_after_death_rejected():
    with pytest.raises(ValueError):
        PersistenceDiagram([(3, 1)])


def test_format_and_parse():
    d = sublevel_diagram([1, 3, 2, 4])
    assert d.format() == "1 4 *\n2 3\n"
    assert PersistenceDiagram.parse(d.format()) == d
    d2 = PersistenceDiagram([(0.5, 2.25)], (-1.0, 4.0))
    assert PersistenceDiagram.parse(d2.format()) == d2
    with pytest.raises(ValueError, match="line 1"):
        PersistenceDiagram.parse("1 x\n")


@given(quantized)
def test_oracle_equivalence(q):
    assert sublevel_diagram(q) == oracle_diagram(q)


@given(quantized)
def test_point_count_is_number_of_local_minima(q):
    assert len(sublevel_diagram(q)) == count_local_minima(q)


@given(quantized)
def test_reversal_invariance(q):
    assert sublevel_diagram(q) == sublevel_diagram(q[::-1])


@given(quantized)
def test_essential_spans_range(q):
    d = sublevel_diagram(q)
    assert d.essential == (min(q), max(q))
    assert all(1 <= b < e <= 10 for b, e in d.pairs)


@given(quantized)
def test_betti_recovery(q):
    d = sublevel_diagram(q)
    for x in range(min(q), max(q)):
        alive = sum(b <= x < e for b, e in d.points.tolist())
        assert alive == sublevel_components(q, x)


@given(quantized)
def test_persistent_betti_monotone(q):
    levels, beta = persistent_betti(q)
    k = levels.size
    for b in range(k):
        for d in range(b, k):
            if b + 1 <= d:
                assert beta[b, d] <= beta[b + 1, d]
            if d + 1 < k:
                assert beta[b, d] >= beta[b, d + 1]
        assert beta[b, b] == sublevel_components(q, levels[b])


@given(quantized, st.integers(0, 19), st.integers(1, 3), st.booleans())
def test_single_entry_stability(q, idx, delta, up):
    q = np.array(q)
    p = q.copy()
    p[idx % q.size] += delta if up else -delta
    assert bottleneck(sublevel_diagram(q), sublevel_diagram(p)) <= delta
