import random
from math import comb

import pytest

from arlideals.errors import HypothesisError
from arlideals.hilbert import (
    count_generators,
    drop_equals_generator_count,
    hilbert_function,
    hilbert_report,
    hilbert_values,
    quotient_slice_dimension,
    stabilized_value,
)
from arlideals.ideal import colon_by_last_variable, lift, make_ideal
from helpers import (
    TWO_VAR,
    THREE_VAR,
    THREE_VAR_K1,
    FROBERG_335,
    brute_hilbert,
    brute_hilbert_values,
    random_arl_chain,
    random_strongly_stable,
)


def test_froberg_ideal_values():
    assert hilbert_values(FROBERG_335, 10) == [1, 3, 6, 8, 9, 8, 6, 3, 1, 0, 0]


def test_intermediate_ideal_values():
    assert hilbert_values(THREE_VAR_K1, 7) == [1, 3, 6, 8, 9, 9, 6, 6]


def test_three_variable_values():
    assert hilbert_values(THREE_VAR, 10) == [1, 3, 6, 8, 9, 9, 6, 5, 5, 5, 5]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_zero_ideal_gives_binomials(n):
    zero = make_ideal(n, [])
    assert hilbert_values(zero, 12) == [comb(n - 1 + d, d) for d in range(13)]
    assert hilbert_function(make_ideal(3, []), 4) == 15


def test_unit_ideal():
    unit = make_ideal(3, [(0, 0, 0)])
    assert hilbert_values(unit, 4) == [0, 0, 0, 0, 0]
    assert hilbert_function(FROBERG_335, -1) == 0


@pytest.mark.parametrize("seed", range(25))
def test_matches_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    gens = [
        tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(0, 5))
    ]
    gens = [g for g in gens if sum(g) > 0]
    ideal = make_ideal(n, gens)
    assert hilbert_values(ideal, 10) == brute_hilbert_values(ideal, 10)


def test_quotient_slice_examples():
    assert quotient_slice_dimension(FROBERG_335, 8) == 1
    assert quotient_slice_dimension(TWO_VAR, 4) == 1
    with pytest.raises(HypothesisError):
        quotient_slice_dimension(make_ideal(3, [(0, 0, 1)]), 0)
    with pytest.raises(HypothesisError):
        quotient_slice_dimension(lift(TWO_VAR), 3)


@pytest.mark.parametrize("ideal", [FROBERG_335, THREE_VAR, THREE_VAR_K1, TWO_VAR])
def test_slice_counts_generators(ideal):
    for d in range(14):
        assert quotient_slice_dimension(ideal, d) == count_generators(
            ideal, max_idx=ideal.n, degree=d + 1
        )


def test_stabilized_value_examples():
    assert stabilized_value(lift(TWO_VAR)) == (5, 9)
    assert stabilized_value(make_ideal(2, [(4, 0)])) == (4, 4)
    # x2 itself in the ideal: the quotient is k[x3]
    ideal = make_ideal(3, [(1, 0, 0), (0, 1, 0)])
    assert stabilized_value(ideal) == (1, 1)
    assert hilbert_values(ideal, 5) == [1] * 6
    with pytest.raises(HypothesisError):
        stabilized_value(FROBERG_335)


def test_stabilized_value_on_chains():
    rng = random.Random(14)
    for _ in range(20):
        _, base = random_arl_chain(rng, rng.randint(2, 4))
        t, value = stabilized_value(base)
        values = brute_hilbert_values(base, t + 4)
        assert values[t:] == [value] * 5


def test_drop_examples():
    report = drop_equals_generator_count(FROBERG_335, 9)
    assert (report.previous, report.current, report.generator_count) == (1, 0, 1)
    assert report
    early = drop_equals_generator_count(FROBERG_335, 4)
    assert (early.previous, early.current, early.threshold) == (8, 9, 5)
    assert early.grows and early
    final = drop_equals_generator_count(THREE_VAR, 6)
    assert final.first_drop == final.threshold == 5
    assert final


def test_drop_hypotheses():
    with pytest.raises(HypothesisError):
        drop_equals_generator_count(lift(TWO_VAR), 3)
    with pytest.raises(ValueError):
        drop_equals_generator_count(FROBERG_335, 0)


def _with_last_variable(ideal):
    unit = tuple(1 if j == ideal.n - 1 else 0 for j in range(ideal.n))
    return make_ideal(ideal.n, list(ideal.generators) + [unit])


def test_four_term_exactness():
    rng = random.Random(9)
    checked = 0
    while checked < 30:
        ideal = random_strongly_stable(rng, rng.randint(2, 4))
        try:
            quotient_slice_dimension(ideal, 0)
        except HypothesisError:
            continue
        checked += 1
        plus = _with_last_variable(ideal)
        for d in range(1, 12):
            lhs = brute_hilbert(ideal, d) - brute_hilbert(ideal, d - 1)
            rhs = brute_hilbert(plus, d) - quotient_slice_dimension(ideal, d - 1)
            assert lhs == rhs
            colon = colon_by_last_variable(ideal)
            assert quotient_slice_dimension(ideal, d) == brute_hilbert(ideal, d) - brute_hilbert(colon, d)


def test_adding_generators_never_raises_values():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(3)]
        gens = [g for g in gens if sum(g)]
        extra = tuple(rng.randint(0, 4) for _ in range(n))
        small = make_ideal(n, gens)
        big = make_ideal(n, gens + [extra])
        for a, b in zip(hilbert_values(small, 10), hilbert_values(big, 10)):
            assert b <= a


def test_report_json():
    data = hilbert_report(lift(TWO_VAR), 6).to_json()
    assert data == {"values": [1, 3, 6, 8, 9, 9, 9], "max_degree": 6, "stabilized": {"t": 5, "value": 9}}
    assert hilbert_report(FROBERG_335, 2).to_json()["stabilized"] is None
