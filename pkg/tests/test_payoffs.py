"""Payoff generators against slow per-ordering reference implementations."""
from math import factorial

import numpy as np
import pytest

from snfair.errors import CapacityError, ModelValidityError
from snfair.payoffs import (
    CfmmModel,
    JuntaTerm,
    LiquidationModel,
    cfmm_payoff,
    indicator_payoff,
    junta_payoff,
    liquidatable_set,
    liquidation_payoff,
    random_payoff,
)
from snfair.permutations import enumerate_group
from snfair.sets import OrderingSet


def cfmm_oracle(model, p):
    """One ordering, one trade at a time, bookkeeping price explicitly."""
    price = model.p0
    total = 0.0
    for slot in range(1, model.n + 1):
        size = model.deltas[p(slot) - 1]
        total += model.beta * size * size * price
        price *= 1.0 + model.gamma * size
    return total


def liquidation_oracle(model, p):
    level = 0
    for slot in range(1, model.n + 1):
        level += model.moves[p(slot) - 1]
        if level <= -model.c:
            return 1.0
    return 0.0


FROZEN_CFMM = CfmmModel(deltas=(1.0, 2.0, -1.0, -2.0), p0=100.0, gamma=0.001, beta=1.0)


def test_cfmm_matches_per_ordering_oracle():
    f = cfmm_payoff(FROZEN_CFMM)
    for p in enumerate_group(4):
        assert f.values[p.rank()] == pytest.approx(cfmm_oracle(FROZEN_CFMM, p), rel=1e-14)


def test_cfmm_argmax_leads_with_positive_trades():
    f = cfmm_payoff(FROZEN_CFMM)
    best = list(enumerate_group(4))[int(np.argmax(f.values))]
    # Positive-size trades (labels 1 and 2) occupy the two leading slots:
    # early buys raise the price every later extraction is booked against.
    assert {best(1), best(2)} == {1, 2}
    assert f.values.max() == pytest.approx(
        max(cfmm_oracle(FROZEN_CFMM, p) for p in enumerate_group(4)), rel=1e-14
    )


def test_cfmm_zero_impact_is_constant():
    model = CfmmModel(deltas=(1.0, 2.0, -1.0), p0=100.0, gamma=0.0, beta=1.0)
    f = cfmm_payoff(model)
    np.testing.assert_allclose(f.values, 600.0, atol=1e-10)


def test_cfmm_zero_extraction_is_zero():
    model = CfmmModel(deltas=(1.0, -1.0, 2.0), beta=0.0)
    assert np.abs(cfmm_payoff(model).values).max() == 0.0


def test_cfmm_rejects_price_crashing_trade():
    with pytest.raises(ModelValidityError):
        CfmmModel(deltas=(1.0, -1001.0), gamma=0.001)
    with pytest.raises(ModelValidityError):
        CfmmModel(deltas=(), p0=100.0)
    with pytest.raises(ModelValidityError):
        CfmmModel(deltas=(1.0,), p0=-5.0)
    with pytest.raises(ModelValidityError):
        CfmmModel(deltas=(1.0,), gamma=-0.1)


def test_liquidation_support_16_of_24():
    f = liquidation_payoff(LiquidationModel(k=2, c=1))
    assert set(np.unique(f.values)) <= {0.0, 1.0}
    assert int(f.values.sum()) == 16
    assert len(f.values) == 24


def test_liquidation_boundary_depth_4_of_24():
    # c = k: only orderings sending both down-moves first can reach -2.
    f = liquidation_payoff(LiquidationModel(k=2, c=2))
    assert int(f.values.sum()) == 4


def test_liquidation_matches_prefix_walk_oracle():
    for k, c in ((2, 1), (2, 2), (3, 2)):
        model = LiquidationModel(k=k, c=c)
        f = liquidation_payoff(model)
        for p in enumerate_group(2 * k):
            assert f.values[p.rank()] == liquidation_oracle(model, p)


def test_liquidation_depth_validation():
    with pytest.raises(ModelValidityError):
        LiquidationModel(k=2, c=3)
    with pytest.raises(ModelValidityError):
        LiquidationModel(k=2, c=0)
    with pytest.raises(ModelValidityError):
        LiquidationModel(k=0, c=1)
    LiquidationModel(k=2, c=2)  # boundary is reachable, hence allowed


def test_liquidatable_set_is_payoff_support():
    model = LiquidationModel(k=2, c=1)
    support = liquidatable_set(model)
    f = liquidation_payoff(model)
    assert support.mask().tolist() == (f.values == 1.0).tolist()
    assert len(support) == 16


def test_junta_single_constraint_support():
    f = junta_payoff([JuntaTerm(((1, 1),))], 4)
    assert int(f.values.sum()) == 6
    for p in enumerate_group(4):
        assert f.values[p.rank()] == (1.0 if p(1) == 1 else 0.0)


def test_junta_two_constraint_support():
    f = junta_payoff([JuntaTerm(((1, 1), (2, 2)))], 4)
    assert int(f.values.sum()) == 2


def test_junta_terms_add_with_coefficients():
    t1 = JuntaTerm(((1, 1),), coefficient=2.0)
    t2 = JuntaTerm(((2, 3),), coefficient=0.5)
    f = junta_payoff([t1, t2], 4)
    for p in enumerate_group(4):
        expect = 2.0 * (p(1) == 1) + 0.5 * (p(2) == 3)
        assert f.values[p.rank()] == pytest.approx(expect)


def test_junta_validation():
    with pytest.raises(ValueError):
        JuntaTerm(((1, 1), (1, 2)))  # slot repeated
    with pytest.raises(ValueError):
        JuntaTerm(((1, 2), (3, 2)))  # item repeated
    with pytest.raises(ValueError):
        JuntaTerm(((0, 1),))
    with pytest.raises(ValueError):
        junta_payoff([JuntaTerm(((1, 5),))], 4)


def test_indicator_payoff_edges():
    n = 3
    assert np.all(indicator_payoff(OrderingSet.full_group(n)).values == 1.0)
    assert np.all(indicator_payoff(OrderingSet(n, ())).values == 0.0)
    singleton = indicator_payoff(OrderingSet(n, (0,)))
    assert singleton.values.tolist() == [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]


def test_random_uniform_range_and_determinism():
    f = random_payoff(4, seed=7)
    assert f.values.shape == (24,)
    assert np.all((f.values >= 0.0) & (f.values <= 1.0))
    again = random_payoff(4, seed=7)
    np.testing.assert_array_equal(f.values, again.values)
    other = random_payoff(4, seed=8)
    assert np.abs(f.values - other.values).max() > 0.0


def test_random_sparse_support():
    f = random_payoff(4, seed=1, dist="sparse", nonzero=5)
    support = f.values[f.values != 0.0]
    assert support.size == 5
    assert np.all((support > 0.0) & (support <= 1.0))
    single = random_payoff(3, seed=2, dist="sparse", nonzero=1)
    assert np.count_nonzero(single.values) == 1


def test_random_sparse_validation():
    with pytest.raises(ValueError):
        random_payoff(3, seed=0, dist="sparse")
    with pytest.raises(ValueError):
        random_payoff(3, seed=0, dist="sparse", nonzero=7)
    with pytest.raises(ValueError):
        random_payoff(3, seed=0, dist="triangular")


def test_capacity_guards():
    with pytest.raises(CapacityError):
        random_payoff(9, seed=0)
    with pytest.raises(CapacityError):
        junta_payoff([JuntaTerm(((1, 1),))], 9)
    random_payoff(9, seed=0, max_n=9)  # explicit override widens the guard
