"""
Solution concepts for cooperative product games.

Handles payoffs, excesses, core membership, marginal contribution vectors,
Weber-set mixtures and the brute-force Shapley and Banzhaf values. All
quantities are exact: ints for CPG values, Fractions for payoffs.

The product-formula marginal vector costs one running product, i.e. n-1
big-integer multiplications. Its bit complexity still grows with the digit
count of the product, which reaches thousands of digits for large n.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import ClassVar, List, Optional, Sequence, Tuple, Union

from config import check_limit
from errors import BadMixture, LengthMismatch, NotAnImputation
from models import (
    Coalition,
    CpGame,
    GameView,
    Imputation,
    Payoff,
    Permutation,
    as_permutation,
    to_payoff,
)

logger = logging.getLogger(__name__)

PermutationLike = Union[Permutation, Sequence[int]]


@dataclass(frozen=True)
class InCore:
    in_core: ClassVar[bool] = True


@dataclass(frozen=True)
class Blocked:
    """The first blocking coalition in mask order and its positive excess"""

    witness: Coalition
    excess: Fraction
    in_core: ClassVar[bool] = False


CoreVerdict = Union[InCore, Blocked]


def _check_length(imp: Imputation, n: int) -> None:
    if imp.n != n:
        raise LengthMismatch(n, imp.n)


def coalition_payoff(imp: Imputation, coalition: Coalition) -> Fraction:
    """p(C), the total paid to the members of C"""
    coalition.validate(imp.n)
    return sum((imp.payoffs[i - 1] for i in coalition), Fraction(0))


def excess(game: GameView, imp: Imputation, coalition: Coalition) -> Fraction:
    """e(C) = v(C) - p(C); may be negative"""
    _check_length(imp, game.n)
    coalition.validate(game.n)
    return Fraction(game.coalition_value(coalition)) - coalition_payoff(imp, coalition)


def blocks(game: GameView, imp: Imputation, coalition: Coalition) -> bool:
    return excess(game, imp, coalition) > 0


def marginal_vector(game: CpGame, pi: PermutationLike) -> Imputation:
    """
    Marginal contributions along pi from one running product:
    m(x1) = w(x1) and m(xi) = w(x1)...w(x(i-1)) * (w(xi) - 1).
    Entry k of the result belongs to player k, not to position k of pi.
    """
    pi = as_permutation(pi, game.n)
    contributions = [0] * game.n
    running = None
    for player in pi:
        w = game.weights[player - 1]
        if running is None:
            contributions[player - 1] = w
            running = w
        else:
            contributions[player - 1] = running * (w - 1)
            running *= w
    return Imputation(tuple(Fraction(m) for m in contributions))


def core_imputation(game: CpGame) -> Imputation:
    """A core imputation; any permutation works, the identity is used"""
    return marginal_vector(game, Permutation.identity(game.n))


def marginal_vector_by_differences(game: GameView, pi: PermutationLike) -> Imputation:
    """v({x1..xi}) - v({x1..x(i-1)}) evaluated on the characteristic function"""
    pi = as_permutation(pi, game.n)
    contributions: List[Payoff] = [Fraction(0)] * game.n
    mask = 0
    before = game.value_of_mask(0)
    for player in pi:
        mask |= 1 << (player - 1)
        after = game.value_of_mask(mask)
        contributions[player - 1] = Fraction(after - before)
        before = after
    return Imputation(tuple(contributions))


def _common_scale(payoffs: Sequence[Fraction]) -> int:
    scale = 1
    for p in payoffs:
        scale = math.lcm(scale, p.denominator)
    return scale


def core_check(game: GameView, imp: Imputation, limit: Optional[int] = None) -> CoreVerdict:
    """
    InCore iff no coalition has positive excess. Coalitions are visited in
    increasing mask order, so the reported blocker is the first one there.
    """
    n = game.n
    _check_length(imp, n)
    check_limit(n, limit, 'subsets', 'core check')

    total = imp.total()
    expected = game.grand_value()
    if total != expected:
        raise NotAnImputation(total, expected)

    values = game.values_by_mask()
    scale = _common_scale(imp.payoffs)
    scaled = [p.numerator * (scale // p.denominator) for p in imp.payoffs]

    # paid[mask] * scale is p(C); compared against v(C) * scale
    paid = [0] * (1 << n)
    for mask in range(1 << n):
        if mask:
            low = mask & -mask
            paid[mask] = paid[mask ^ low] + scaled[low.bit_length() - 1]
        if values[mask] * scale > paid[mask]:
            witness = Coalition.from_mask(mask)
            gap = Fraction(values[mask]) - Fraction(paid[mask], scale)
            logger.debug("imputation blocked by %s with excess %s", witness, gap)
            return Blocked(witness, gap)
    return InCore()


def individually_rational(game: GameView, imp: Imputation) -> Optional[int]:
    """The first player paid less than it earns alone, or None"""
    _check_length(imp, game.n)
    for index in range(1, game.n + 1):
        if imp.payoffs[index - 1] < game.value_of_mask(1 << (index - 1)):
            return index
    return None


def shapley(game: GameView, limit: Optional[int] = None) -> Imputation:
    """Exact average of the marginal vectors of all n! permutations"""
    n = game.n
    check_limit(n, limit, 'permutations', 'shapley')
    values = game.values_by_mask()
    totals = [0] * n
    for order in permutations(range(n)):
        mask = 0
        for player in order:
            grown = mask | (1 << player)
            totals[player] += values[grown] - values[mask]
            mask = grown
    count = math.factorial(n)
    return Imputation(tuple(Fraction(t) / count for t in totals))


def banzhaf(game: GameView, limit: Optional[int] = None) -> Tuple[Fraction, ...]:
    """
    Raw Banzhaf value: each player's average marginal contribution over the
    2^(n-1) coalitions without it. Not efficient in general.
    """
    n = game.n
    check_limit(n, limit, 'subsets', 'banzhaf')
    values = game.values_by_mask()
    totals = [0] * n
    for player in range(n):
        bit = 1 << player
        for mask in range(1 << n):
            if not mask & bit:
                totals[player] += values[mask | bit] - values[mask]
    count = 1 << (n - 1)
    return tuple(Fraction(t) / count for t in totals)


def weber_mix(game: GameView,
              mix: Sequence[Tuple[PermutationLike, Union[Fraction, int, str]]]) -> Imputation:
    """Convex combination of marginal vectors; lies in the core of a convex game"""
    if not mix:
        raise BadMixture("no permutations given")
    weighted = []
    for pi, coefficient in mix:
        coefficient = to_payoff(coefficient)
        if coefficient < 0:
            raise BadMixture(f"negative coefficient {coefficient}")
        weighted.append((as_permutation(pi, game.n), coefficient))
    total = sum((c for _, c in weighted), Fraction(0))
    if total != 1:
        raise BadMixture(f"coefficients sum to {total}, not 1")

    vector_of = marginal_vector if isinstance(game, CpGame) else marginal_vector_by_differences
    payoffs = [Fraction(0)] * game.n
    for pi, coefficient in weighted:
        if coefficient == 0:
            continue
        for k, m in enumerate(vector_of(game, pi)):
            payoffs[k] += coefficient * m
    return Imputation(tuple(payoffs))
