"""
Brute-force property oracles over tabulated characteristic functions.

The oracles confirm monotonicity, superadditivity, convexity and the absence
of dummy players on small games, and find counterexamples on games that are
not CPGs. Every oracle runs on any GameView: a CpGame or a TableGame.

Monotonicity is checked on pairs (C minus one player, C) only. Any longer
chain C' ⊂ C decomposes into such steps, so a violation anywhere implies a
violation on some single-player step.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, FrozenSet, Mapping, Optional, Sequence, Tuple, Union

from config import check_limit
from errors import InvalidTable
from models import Coalition, CpGame, GameView, Value, to_payoff

logger = logging.getLogger(__name__)

MONOTONE = 'monotone'
SUPERADDITIVE = 'superadditive'
CONVEX = 'convex'
DUMMIES = 'dummies'
PROPERTIES = (MONOTONE, SUPERADDITIVE, CONVEX, DUMMIES)


def _exact(v) -> Value:
    """Integral entries are stored as ints"""
    f = to_payoff(v)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True)
class TableGame:
    """A TU game given by its full table of 2^n exact values, indexed by mask"""

    n: int
    values: Tuple[Value, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidTable(f"player count {self.n} < 1")
        if len(self.values) != 1 << self.n:
            raise InvalidTable(f"{len(self.values)} entries for n={self.n}, need {1 << self.n}")
        object.__setattr__(self, 'values', tuple(_exact(v) for v in self.values))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Union[int, Coalition], Value]) -> "TableGame":
        values = [None] * (1 << n)
        for key, value in mapping.items():
            mask = key.validate(n).mask if isinstance(key, Coalition) else key
            if not 0 <= mask < len(values):
                raise InvalidTable(f"mask {mask} out of range for n={n}")
            if values[mask] is not None:
                raise InvalidTable(f"coalition {Coalition.from_mask(mask)} given twice")
            values[mask] = value
        missing = [mask for mask, v in enumerate(values) if v is None]
        if missing:
            raise InvalidTable(f"no value for coalition {Coalition.from_mask(missing[0])}")
        return cls(n, tuple(values))

    def value_of_mask(self, mask: int) -> Value:
        if not 0 <= mask < len(self.values):
            raise InvalidTable(f"mask {mask} out of range for n={self.n}")
        return self.values[mask]

    def coalition_value(self, coalition: Coalition) -> Value:
        return self.values[coalition.validate(self.n).mask]

    def grand_value(self) -> Value:
        return self.values[-1]

    def values_by_mask(self) -> Sequence[Value]:
        return self.values


def to_table(game: CpGame, limit: Optional[int] = None) -> TableGame:
    check_limit(game.n, limit, 'subsets', 'to_table')
    return TableGame(game.n, tuple(game.values_by_mask()))


@dataclass(frozen=True)
class Pass:
    prop: str
    holds: ClassVar[bool] = True


@dataclass(frozen=True)
class Witness:
    """
    A counterexample to `lhs <= rhs`, the inequality the property demands.
    monotone: v(C') <= v(C); superadditive: v(A) + v(B) <= v(A ∪ B);
    convex: v(A) + v(B) - v(A ∩ B) <= v(A ∪ B).
    """

    prop: str
    first: Coalition
    second: Coalition
    lhs: Fraction
    rhs: Fraction
    holds: ClassVar[bool] = False

    def reproduces(self, view: GameView) -> bool:
        lhs, rhs = _sides(self.prop, view, self.first.mask, self.second.mask)
        return lhs == self.lhs and rhs == self.rhs and lhs > rhs


OracleResult = Union[Pass, Witness]


def _sides(prop: str, view: GameView, a: int, b: int) -> Tuple[Fraction, Fraction]:
    v = view.value_of_mask
    if prop == MONOTONE:
        return Fraction(v(a)), Fraction(v(b))
    if prop == SUPERADDITIVE:
        return Fraction(v(a) + v(b)), Fraction(v(a | b))
    if prop == CONVEX:
        return Fraction(v(a) + v(b) - v(a & b)), Fraction(v(a | b))
    raise ValueError(f"no witness form for {prop!r}")


def _witness(prop: str, view: GameView, a: int, b: int) -> Witness:
    lhs, rhs = _sides(prop, view, a, b)
    logger.debug("%s violated by %s, %s", prop, Coalition.from_mask(a), Coalition.from_mask(b))
    return Witness(prop, Coalition.from_mask(a), Coalition.from_mask(b), lhs, rhs)


def check_monotone(view: GameView, limit: Optional[int] = None) -> OracleResult:
    """C in mask order, then C minus each member in increasing player order"""
    n = view.n
    check_limit(n, limit, 'subsets', 'check_monotone')
    values = view.values_by_mask()
    for mask in range(1, 1 << n):
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if values[mask ^ low] > values[mask]:
                return _witness(MONOTONE, view, mask ^ low, mask)
    return Pass(MONOTONE)


def check_superadditive(view: GameView, limit: Optional[int] = None) -> OracleResult:
    """Disjoint nonempty A, B: A in mask order, B over subsets of the complement"""
    n = view.n
    check_limit(n, limit, 'pairs', 'check_superadditive')
    values = view.values_by_mask()
    full = (1 << n) - 1
    for a in range(1, 1 << n):
        complement = full & ~a
        b = complement & -complement  # smallest nonempty submask
        while b:
            if values[a] + values[b] > values[a | b]:
                return _witness(SUPERADDITIVE, view, a, b)
            b = (b - complement) & complement
    return Pass(SUPERADDITIVE)


def check_convex(view: GameView, limit: Optional[int] = None) -> OracleResult:
    """Every pair A, B (nested, overlapping and empty included) in double mask order"""
    n = view.n
    check_limit(n, limit, 'pairs', 'check_convex')
    values = view.values_by_mask()
    size = 1 << n
    logger.debug("checking %d coalition pairs for convexity", size * size)
    for a in range(size):
        va = values[a]
        for b in range(size):
            if va + values[b] - values[a & b] > values[a | b]:
                return _witness(CONVEX, view, a, b)
    return Pass(CONVEX)


def convexity_gap(view: GameView, a: Coalition, b: Coalition) -> Fraction:
    """v(A ∪ B) - v(A) - v(B) + v(A ∩ B); convexity is this being >= 0 everywhere"""
    a_mask = a.validate(view.n).mask
    b_mask = b.validate(view.n).mask
    v = view.value_of_mask
    return Fraction(v(a_mask | b_mask) - v(a_mask) - v(b_mask) + v(a_mask & b_mask))


def find_dummies(view: GameView, limit: Optional[int] = None) -> FrozenSet[int]:
    """Players whose marginal contribution is never strictly positive"""
    n = view.n
    check_limit(n, limit, 'subsets', 'find_dummies')
    values = view.values_by_mask()
    dummies = set()
    for player in range(n):
        bit = 1 << player
        if all(values[mask | bit] <= values[mask] for mask in range(1 << n) if not mask & bit):
            dummies.add(player + 1)
    return frozenset(dummies)
