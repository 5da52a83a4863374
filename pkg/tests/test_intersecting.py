"""Pairwise agreement levels and the indicator-degree link."""
import itertools
from math import factorial

import numpy as np
import pytest

from snfair.errors import EmptySetError
from snfair.intersecting import (
    intersection_profile,
    stabilizer_set,
    verify_indicator_degree,
)
from snfair.sets import OrderingSet


def t_max_oracle(members):
    """Quadratic loop over unordered pairs, no vectorization."""
    words = [tuple(int(x) for x in row) for row in members.matrix()]
    if len(words) == 1:
        return members.n
    best = members.n
    for a, b in itertools.combinations(words, 2):
        best = min(best, sum(x == y for x, y in zip(a, b)))
    return best


def test_slot1_stabilizer_in_s3():
    members = stabilizer_set(3, [(1, 1)])
    profile = intersection_profile(members)
    assert profile.t_max == 1
    assert profile.common_pairs == ((1, 1),)
    assert profile.size == 2
    assert profile.size_gate  # 2 >= (3-1)! is exactly met


def test_full_group_s3_agreement_zero():
    profile = intersection_profile(OrderingSet.full_group(3))
    assert profile.t_max == 0
    assert profile.common_pairs == ()


def test_singleton_convention():
    profile = intersection_profile(OrderingSet(4, (7,)))
    assert profile.t_max == 4
    assert len(profile.common_pairs) == 4
    assert profile.size_gate


def test_profile_matches_quadratic_oracle():
    rng = np.random.default_rng(17)
    for n in (3, 4, 5):
        for trial in range(12):
            size = int(rng.integers(1, min(9, factorial(n) + 1)))
            ranks = rng.choice(factorial(n), size=size, replace=False)
            members = OrderingSet.from_ranks(n, ranks)
            assert intersection_profile(members).t_max == t_max_oracle(members)


def test_common_pairs_require_unanimity():
    # {id, (3 4)-swap} share slots 1 and 2 only.
    members = OrderingSet.from_ranks(4, [0, 1])
    profile = intersection_profile(members)
    assert profile.common_pairs == ((1, 1), (2, 2))
    assert profile.t_max == 2


def test_empty_set_rejected():
    with pytest.raises(EmptySetError):
        intersection_profile(OrderingSet(3, ()))


def test_size_gate_boundary():
    # Two orderings agreeing on 2 of 4 slots: gate needs (4-2)! = 2 members.
    members = OrderingSet.from_ranks(4, [0, 1])
    assert intersection_profile(members).size_gate
    # A lone pair agreeing nowhere still beats (4-0)! = 24? No: gate off.
    spread = OrderingSet.from_ranks(4, [0, 23])
    profile = intersection_profile(spread)
    assert profile.t_max == 0
    assert not profile.size_gate


def test_indicator_degree_two_pin_stabilizer():
    members = stabilizer_set(4, [(1, 1), (2, 2)])
    assert len(members) == 2
    report = verify_indicator_degree(members)
    assert report.t_max == 2
    assert report.deg_indicator == 2
    assert report.claim_holds


def test_indicator_degree_one_pin_s5():
    report = verify_indicator_degree(stabilizer_set(5, [(1, 1)]))
    assert report.t_max == 1
    assert report.deg_indicator == 1
    assert report.claim_holds


def test_indicator_degree_full_group_vacuous():
    report = verify_indicator_degree(OrderingSet.full_group(4))
    assert report.t_max == 0
    assert report.deg_indicator == 0
    assert report.claim_holds


def test_indicator_degree_singleton_clamps_to_max_degree():
    report = verify_indicator_degree(OrderingSet(4, (11,)))
    assert report.t_max == 4
    assert report.deg_indicator == 3  # point masses carry every shape
    assert report.claim_holds


def test_stabilizer_sizes():
    assert len(stabilizer_set(4, [(1, 1)])) == 6
    assert len(stabilizer_set(4, [(1, 2), (2, 1)])) == 2
    assert len(stabilizer_set(5, [(3, 3)])) == 24


def test_stabilizer_members_satisfy_pins():
    members = stabilizer_set(4, [(2, 3), (4, 1)])
    for p in members.permutations():
        assert p(2) == 3 and p(4) == 1
    assert len(members) == 2


def test_stabilizer_no_pairs_is_full_group():
    assert stabilizer_set(4, []) == OrderingSet.full_group(4)


def test_stabilizer_validation():
    with pytest.raises(ValueError):
        stabilizer_set(4, [(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        stabilizer_set(4, [(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        stabilizer_set(4, [(5, 1)])
    with pytest.raises(ValueError):
        stabilizer_set(4, [(1, 0)])
