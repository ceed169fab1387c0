import itertools
from math import comb

import pytest

from twistcenter.cartan import build_type, parse_type
from twistcenter.errors import DomainError, OutOfRange, ResourceLimit
from twistcenter.pbw import PartitionTable, count_table, enumerate_partitions, par, pbw_alphabet
from twistcenter.roots import ImaginaryRoot, RealRoot, imaginary_multiplicity, leq, real_roots_upto, scale


def _box(bound):
    return itertools.product(*(range(b + 1) for b in bound))


def test_trivial_values(any_type):
    cat = real_roots_upto(any_type, 1)
    zero = (0,) * len(any_type.index_set)
    assert par(any_type, zero, cat) == 1
    for i in any_type.index_set:
        v = tuple(int(j == i) for j in any_type.index_set)
        assert par(any_type, v, cat) == 1


def test_a2_delta():
    t = parse_type("A2_2")
    cat = real_roots_upto(t, 1)
    alphabet = pbw_alphabet(cat, t.marks)
    assert set(alphabet) == {
        RealRoot((0, 1), 1),
        RealRoot((1, 0), 4),
        RealRoot((1, 1), 1),
        ImaginaryRoot(1, 1),
    }
    parts = enumerate_partitions(t, t.marks, cat)
    assert (ImaginaryRoot(1, 1),) in parts
    assert par(t, t.marks, cat) == len(parts) == 3


def test_two_alpha_i():
    t = parse_type("A2_2")
    cat = real_roots_upto(t, 0)
    assert enumerate_partitions(t, (0, 2), cat) == [(RealRoot((0, 1), 1), RealRoot((0, 1), 1))]
    assert enumerate_partitions(t, (0, 0), cat) == [()]


@pytest.mark.parametrize("spec", ["A2_2", "A4_2", "D3_2", "D4_3"])
def test_dp_equals_enumeration(spec):
    t = parse_type(spec)
    cat = real_roots_upto(t, 2)
    bound = (2,) + (4,) * t.n
    table = PartitionTable(cat, bound)
    for eta in _box(bound):
        parts = enumerate_partitions(t, eta, cat)
        assert len(set(parts)) == len(parts)
        assert table(eta) == len(parts)


def test_cutoff_monotonicity(any_type):
    eta = scale(2, any_type.marks)
    small = real_roots_upto(any_type, 2)
    big = real_roots_upto(any_type, 4)
    assert par(any_type, eta, small) == par(any_type, eta, big)


def _series_oracle(t, cat, bound):
    """Coefficients of prod (1-x^v)^-1 * prod (1-x^{rδ})^{-#I^r}, truncated at bound."""
    series = {(0,) * len(bound): 1}

    def times(series, weight, exponent):
        # (1 - x^w)^-c = sum_j C(j+c-1, j) x^{jw}
        out = {}
        for mono, c in series.items():
            j, cur = 0, mono
            while leq(cur, bound):
                out[cur] = out.get(cur, 0) + c * comb(j + exponent - 1, j)
                j += 1
                cur = tuple(a + b for a, b in zip(cur, weight))
        return out

    for a in cat.reals:
        if leq(a.v, bound):
            series = times(series, a.v, 1)
    r = 1
    while leq(scale(r, t.marks), bound):
        series = times(series, scale(r, t.marks), imaginary_multiplicity(t, r))
        r += 1
    return series


@pytest.mark.parametrize("spec,bound", [("A2_2", (3, 6)), ("D3_2", (3, 3, 3)), ("A4_2", (2, 4, 4))])
def test_generating_function(spec, bound):
    t = parse_type(spec)
    cat = real_roots_upto(t, bound[0])
    table = PartitionTable(cat, bound)
    series = _series_oracle(t, cat, bound)
    for eta in _box(bound):
        assert table(eta) == series.get(eta, 0)


def test_count_table_distinct_letters():
    # two letters of weight (1,) count separately
    assert count_table([(1,), (1,)], (3,))[3] == 4


def test_domain_errors():
    t = parse_type("A2_2")
    cat = real_roots_upto(t, 1)
    with pytest.raises(DomainError):
        par(t, (-1, 0), cat)
    with pytest.raises(OutOfRange):
        par(t, (2, 0), cat)
    with pytest.raises(DomainError):
        par(t, (0, 0, 0), cat)


def test_negative_argument_is_zero():
    t = parse_type("A2_2")
    table = PartitionTable(real_roots_upto(t, 1), (1, 2))
    assert table((0, -1)) == 0


def test_enumeration_limit():
    t = parse_type("A4_2")
    cat = real_roots_upto(t, 2)
    with pytest.raises(ResourceLimit):
        enumerate_partitions(t, (2, 4, 4), cat, limit=10)
