"""
Tests for payoffs, excess, the core check and the marginal-vector family.
"""

from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from errors import BadMixture, InvalidPermutation, InvalidPlayer, LengthMismatch, LimitExceeded, NotAnImputation
from models import Coalition, Imputation, Permutation, make_imputation, new_game
from sampling import random_game, random_permutation
from solutions import (
    Blocked,
    InCore,
    banzhaf,
    blocks,
    coalition_payoff,
    core_check,
    core_imputation,
    excess,
    individually_rational,
    marginal_vector,
    marginal_vector_by_differences,
    shapley,
    weber_mix,
)
from verify import TableGame

F = Fraction
P = Coalition.of


def imp_of(*payoffs):
    return Imputation(tuple(payoffs))


# -- Payoffs and excess ------------------------------------------------------

def test_coalition_payoff():
    imp = imp_of(2, 4, 24)
    assert coalition_payoff(imp, P([2, 3])) == 28
    assert coalition_payoff(imp, Coalition.empty()) == 0
    assert coalition_payoff(imp_of(F(5, 2), F(7, 2)), P([1, 2])) == 6
    with pytest.raises(InvalidPlayer):
        coalition_payoff(imp, P([4]))


def test_excess(game_235):
    assert excess(game_235, imp_of(10, 10, 10), P([2, 3])) == -5
    assert excess(game_235, imp_of(28, 1, 1), P([2])) == 2
    for imp in [imp_of(10, 10, 10), imp_of(28, 1, 1), imp_of(F(1, 3), F(2, 3), 29)]:
        assert excess(game_235, imp, Coalition.grand(3)) == 0
        assert excess(game_235, imp, Coalition.empty()) == 0


def test_excess_length_mismatch(game_235):
    with pytest.raises(LengthMismatch):
        excess(game_235, imp_of(15, 15), P([1]))


def test_blocks(game_235):
    assert blocks(game_235, imp_of(28, 1, 1), P([2]))
    assert not blocks(game_235, imp_of(10, 10, 10), P([2, 3]))
    assert not blocks(game_235, imp_of(28, 1, 1), Coalition.empty())


def test_blocks_iff_positive_excess(game_235):
    imp = imp_of(28, 1, 1)
    for mask in range(8):
        c = Coalition.from_mask(mask)
        assert blocks(game_235, imp, c) == (excess(game_235, imp, c) > 0)


# -- Marginal vectors --------------------------------------------------------

@pytest.mark.parametrize("order, expected", [
    ((1, 2, 3), (2, 4, 24)),
    ((3, 2, 1), (15, 10, 5)),
    ((2, 3, 1), (15, 3, 12)),
])
def test_marginal_vector(game_235, order, expected):
    assert marginal_vector(game_235, Permutation(order)).payoffs == expected


def test_marginal_vector_single_player():
    assert marginal_vector(new_game([2]), (1,)).payoffs == (2,)


def test_marginal_vector_rejects_bad_permutations(game_235):
    with pytest.raises(InvalidPermutation):
        marginal_vector(game_235, (1, 2))
    with pytest.raises(InvalidPermutation):
        marginal_vector(game_235, (1, 1, 3))


def test_core_imputation_uses_identity(game_235):
    assert core_imputation(game_235).payoffs == (2, 4, 24)


def test_product_formula_matches_differences():
    rng = np.random.default_rng(7)
    for _ in range(30):
        game = random_game(rng, int(rng.integers(1, 11)), 2, 50)
        for _ in range(5):
            pi = random_permutation(rng, game.n)
            assert marginal_vector(game, pi) == marginal_vector_by_differences(game, pi)


def test_marginal_vectors_are_efficient_and_positive():
    rng = np.random.default_rng(11)
    for n in (1, 2, 10, 100, 1000):
        game = random_game(rng, n)
        imp = marginal_vector(game, random_permutation(rng, n))
        assert imp.total() == game.grand_value()
        assert min(imp.payoffs) >= 1


def test_differences_work_on_tables():
    table = TableGame.from_mapping(2, {0: 0, 1: 1, 2: 1, 3: 1})
    assert marginal_vector_by_differences(table, (1, 2)).payoffs == (1, 0)
    assert marginal_vector_by_differences(table, (2, 1)).payoffs == (0, 1)


# -- Core check --------------------------------------------------------------

def test_core_check_verdicts(game_235):
    assert core_check(game_235, imp_of(2, 4, 24)) == InCore()
    assert core_check(game_235, imp_of(28, 1, 1)) == Blocked(P([2]), F(2))
    assert core_check(game_235, imp_of(10, 10, 10)) == InCore()


def test_core_check_reports_first_blocker_in_mask_order(game_235):
    # {1} (mask 1) is blocked before {2} (mask 2) and {1,2} (mask 3)
    verdict = core_check(game_235, imp_of(1, 1, 28))
    assert verdict.witness == P([1])
    assert verdict.excess == 1
    assert not verdict.in_core


def test_core_check_handles_fractions(game_23):
    assert core_check(game_23, imp_of(F(5, 2), F(7, 2))).in_core
    verdict = core_check(game_23, imp_of(F(3, 2), F(9, 2)))
    assert verdict == Blocked(P([1]), F(1, 2))


def test_core_check_rejects_inefficient_payoffs(game_235):
    with pytest.raises(NotAnImputation):
        core_check(game_235, imp_of(1, 1, 1))


def test_core_check_limit(game_235):
    with pytest.raises(LimitExceeded) as info:
        core_check(game_235, imp_of(2, 4, 24), limit=2)
    assert info.value.n == 3
    assert info.value.exit_code == 3


def test_every_marginal_vector_is_in_the_core():
    rng = np.random.default_rng(3)
    for _ in range(20):
        game = random_game(rng, int(rng.integers(1, 9)), 2, 1000)
        for _ in range(5):
            assert core_check(game, marginal_vector(game, random_permutation(rng, game.n))).in_core


def test_individually_rational(game_235):
    assert individually_rational(game_235, imp_of(2, 4, 24)) is None
    assert individually_rational(game_235, imp_of(28, 1, 1)) == 2


# -- Shapley and Banzhaf -----------------------------------------------------

@pytest.mark.parametrize("weights, expected", [
    ([2, 3], (F(5, 2), F(7, 2))),
    ([2, 2], (2, 2)),
    ([2, 3, 5], (7, 10, 13)),
])
def test_shapley(weights, expected):
    assert shapley(new_game(weights)).payoffs == expected


def test_shapley_is_the_average_marginal_vector(game_235):
    vectors = [marginal_vector(game_235, order) for order in permutations((1, 2, 3))]
    average = tuple(sum(col, F(0)) / 6 for col in zip(*(v.payoffs for v in vectors)))
    assert shapley(game_235).payoffs == average


def test_shapley_symmetry_and_core():
    weights = [2, 7, 3, 7, 5]
    value = shapley(new_game(weights))
    assert value.payoffs[1] == value.payoffs[3]
    assert value.total() == new_game(weights).grand_value()
    assert core_check(new_game(weights), value).in_core
    sigma = [4, 0, 2, 1, 3]
    permuted = shapley(new_game([weights[s] for s in sigma]))
    assert permuted.payoffs == tuple(value.payoffs[s] for s in sigma)


def test_shapley_limit():
    with pytest.raises(LimitExceeded):
        shapley(new_game([2] * 4), limit=3)


@pytest.mark.parametrize("weights, expected", [
    ([2, 3, 5], (F(25, 4), F(37, 4), F(49, 4))),
    ([2, 2], (2, 2)),
    ([2], (2,)),
])
def test_banzhaf(weights, expected):
    assert banzhaf(new_game(weights)) == expected


def test_banzhaf_is_not_efficient(game_235):
    assert sum(banzhaf(game_235)) != game_235.grand_value()


# -- Weber set ---------------------------------------------------------------

def test_weber_mix(game_235, game_23):
    half = F(1, 2)
    assert weber_mix(game_235, [((1, 2, 3), half), ((3, 2, 1), half)]).payoffs == (F(17, 2), 7, F(29, 2))
    assert weber_mix(game_235, [((1, 2, 3), 1)]).payoffs == (2, 4, 24)
    assert weber_mix(game_23, [((1, 2), half), ((2, 1), half)]) == shapley(game_23)


def test_weber_mix_lands_in_the_core(game_235):
    point = weber_mix(game_235, [((1, 2, 3), F(1, 6)), ((2, 3, 1), F(1, 3)), ((3, 1, 2), F(1, 2))])
    assert point.total() == 30
    assert core_check(game_235, point).in_core


@pytest.mark.parametrize("mix", [
    [],
    [((1, 2, 3), F(1, 2))],
    [((1, 2, 3), F(3, 2)), ((3, 2, 1), F(-1, 2))],
])
def test_weber_mix_rejects_bad_coefficients(game_235, mix):
    with pytest.raises(BadMixture):
        weber_mix(game_235, mix)


def test_imputation_efficiency_helper(game_235):
    assert make_imputation(game_235, weber_mix(game_235, [((2, 1, 3), 1)]).payoffs).total() == 30
