"""Operators D and U, the q-polynomial families, and object weights."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from snake_atlas import fixtures as fx
from snake_atlas.forests import enumerate_forests
from snake_atlas.qcalculus import (BiPoly, Operator, QPoly, forest_step_weights,
                                   op_D, op_U, qpoly_P, qpoly_Q, qpoly_R,
                                   tree_step_weights, weight_forest,
                                   weight_tree, weighted_sum_forests,
                                   weighted_sum_trees)
from snake_atlas.trees import enumerate_trees
from snake_atlas.triangles import hoffman_P, hoffman_Q, hoffman_R


def bipoly(d):
    m = max(d, default=-1)
    return BiPoly.make([QPoly.make(d.get(i, ())) for i in range(m + 1)])


bipolys = st.dictionaries(
    st.integers(0, 6),
    st.lists(st.integers(-4, 4), max_size=4).map(tuple),
    max_size=5).map(bipoly)


def q_scale(f):
    return BiPoly.make([QPoly.q_power(1) * c for c in f.t_coeffs])


def test_q_integers():
    assert QPoly.q_integer(0) == QPoly.zero()
    assert QPoly.q_integer(1) == QPoly.one()
    assert QPoly.q_integer(3) == QPoly((1, 1, 1))
    assert QPoly.q_integer(4)(1) == 4


def test_operator_basics():
    assert op_D(BiPoly.t_power(2)) == BiPoly((QPoly.zero(), QPoly.q_integer(2)))
    assert op_D(BiPoly.one()) == BiPoly.zero()
    assert op_U(BiPoly.one()) == BiPoly.t_power(1)


@given(bipolys)
def test_commutation_relation(f):
    # DU - qUD = identity
    assert op_D(op_U(f)) - q_scale(op_U(op_D(f))) == f


def test_operator_words_compose():
    uud = Operator(("UUD",))
    assert uud(BiPoly.t_power(1)) == BiPoly.t_power(2)
    both = Operator(("D",)) + Operator(("UUD",))
    assert both(BiPoly.t_power(1)) == BiPoly.one() + BiPoly.t_power(2)


def test_zeroth_polynomials():
    assert qpoly_P(0) == BiPoly.t_power(1)
    assert qpoly_Q(0) == BiPoly.one()
    assert qpoly_R(0) == BiPoly.one()


@pytest.mark.parametrize("n", range(1, 4))
def test_q_lists(n):
    assert qpoly_P(n) == bipoly(fx.P_Q_LIST[n])
    assert qpoly_Q(n) == bipoly(fx.Q_Q_LIST[n])
    assert qpoly_R(n) == bipoly(fx.R_Q_LIST[n])


@pytest.mark.parametrize("n", range(0, 9))
def test_specializations_at_q1(n):
    assert qpoly_P(n).at_q1() == hoffman_P(n)
    assert qpoly_Q(n).at_q1() == hoffman_Q(n)
    assert qpoly_R(n).at_q1() == hoffman_R(n)


def test_weights_of_smallest_objects():
    assert weight_tree((1,)) == 0
    assert weight_tree((1, "e", "e")) == 0
    assert weight_forest((("white", 1, "e"),)) == 0
    assert weight_forest((("black", 1, "e"),)) == 1


def test_published_weight_sequences_are_attained():
    assert sum(fx.TREE_WEIGHT_EXAMPLE) == 7
    assert fx.TREE_WEIGHT_EXAMPLE in {tree_step_weights(t)
                                      for t in enumerate_trees(5)}
    assert sum(fx.FOREST_WEIGHT_EXAMPLE) == 8
    assert fx.FOREST_WEIGHT_EXAMPLE in {forest_step_weights(f)
                                        for f in enumerate_forests(6)}


@pytest.mark.parametrize("n", range(1, 6))
def test_weighted_sums_equal_operator_polynomials(n):
    assert weighted_sum_trees(n) == qpoly_P(n)
    assert weighted_sum_forests(n) == qpoly_R(n)
    assert weighted_sum_forests(n, white_only=True) == qpoly_Q(n)


def test_weighted_sum_base_cases():
    assert weighted_sum_forests(1) == bipoly({1: (1, 1)})        # (1+q)t
    assert weighted_sum_forests(2, white_only=True) == bipoly({0: (1,), 2: (1, 1)})


def test_bipoly_json_round_trip():
    f = qpoly_R(3)
    assert BiPoly.from_json(f.to_json()) == f
    assert qpoly_Q(2).to_json() == {"t": [[1], [], [1, 1]]}
