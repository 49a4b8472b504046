"""
Cooperative Product Game Models
Games, coalitions, permutations and imputations, all in exact arithmetic.

Players are numbered 1..n everywhere outside this module's bit masks;
a coalition's mask has bit i-1 set for player i.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Iterator, List, Protocol, Sequence, Tuple, Union

from errors import (
    DuplicatePlayer,
    EmptyGame,
    InvalidPermutation,
    InvalidPlayer,
    InvalidWeight,
    LengthMismatch,
    NotAnImputation,
    PlayerInCoalition,
)

logger = logging.getLogger(__name__)

# Values of CpGames are ints; TableGames may hold Fractions.
Value = Union[int, Fraction]
Payoff = Fraction


@dataclass(frozen=True)
class Coalition:
    """A set of players held in canonical form (strictly increasing indices)"""

    members: Tuple[int, ...] = ()

    def __post_init__(self):
        members = self.members
        for index in members:
            if isinstance(index, bool) or not isinstance(index, Integral) or index < 1:
                raise InvalidPlayer(index)
        for prev, cur in zip(members, members[1:]):
            if cur == prev:
                raise DuplicatePlayer(cur)
            if cur < prev:
                raise ValueError("use Coalition.of() for unsorted members")

    @classmethod
    def of(cls, members: Iterable[int]) -> "Coalition":
        """Canonicalize any duplicate-free collection of player indices"""
        items = list(members)
        seen = set()
        for index in items:
            if index in seen:
                raise DuplicatePlayer(index)
            seen.add(index)
        for index in items:
            if isinstance(index, bool) or not isinstance(index, Integral) or index < 1:
                raise InvalidPlayer(index)
        return cls(tuple(sorted(int(i) for i in items)))

    @classmethod
    def empty(cls) -> "Coalition":
        return cls(())

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mask(cls, mask: int) -> "Coalition":
        members = []
        index = 1
        while mask:
            if mask & 1:
                members.append(index)
            mask >>= 1
            index += 1
        return cls(tuple(members))

    @property
    def mask(self) -> int:
        bits = 0
        for index in self.members:
            bits |= 1 << (index - 1)
        return bits

    def validate(self, n: int) -> "Coalition":
        if self.members and self.members[-1] > n:
            raise InvalidPlayer(self.members[-1], n)
        return self

    def union(self, other: "Coalition") -> "Coalition":
        return Coalition.from_mask(self.mask | other.mask)

    def intersection(self, other: "Coalition") -> "Coalition":
        return Coalition.from_mask(self.mask & other.mask)

    def difference(self, other: "Coalition") -> "Coalition":
        return Coalition.from_mask(self.mask & ~other.mask)

    def with_player(self, index: int) -> "Coalition":
        if index in self.members:
            raise PlayerInCoalition(index)
        return Coalition.of(self.members + (index,))

    def is_empty(self) -> bool:
        return not self.members

    def __contains__(self, index: object) -> bool:
        return index in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        if not self.members:
            return "∅"
        return "{" + ",".join(str(i) for i in self.members) + "}"

    def to_list(self) -> List[int]:
        return list(self.members)


class GameView(Protocol):
    """Anything with a player count and an exact characteristic function"""

    @property
    def n(self) -> int: ...

    def value_of_mask(self, mask: int) -> Value: ...

    def coalition_value(self, coalition: Coalition) -> Value: ...

    def grand_value(self) -> Value: ...

    def values_by_mask(self) -> Sequence[Value]: ...


def _check_weight(position: int, weight) -> int:
    if isinstance(weight, bool) or not isinstance(weight, Integral):
        raise InvalidWeight(position, weight)
    if weight < 2:
        raise InvalidWeight(position, weight)
    return int(weight)


@dataclass(frozen=True)
class CpGame:
    """
    A cooperative product game: v(C) is the product of the members'
    weights, and v(∅) = 0 rather than the empty product.
    """

    weights: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) == 0:
            raise EmptyGame()
        checked = tuple(_check_weight(i, w) for i, w in enumerate(self.weights, start=1))
        object.__setattr__(self, 'weights', checked)

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight(self, index: int) -> int:
        if not 1 <= index <= self.n:
            raise InvalidPlayer(index, self.n)
        return self.weights[index - 1]

    def value_of_mask(self, mask: int) -> int:
        if mask == 0:
            return 0
        if mask >> self.n:
            raise InvalidPlayer(mask.bit_length(), self.n)
        value = 1
        index = 0
        while mask:
            if mask & 1:
                value *= self.weights[index]
            mask >>= 1
            index += 1
        return value

    def coalition_value(self, coalition: Coalition) -> int:
        coalition.validate(self.n)
        if coalition.is_empty():
            return 0
        value = 1
        for index in coalition:
            value *= self.weights[index - 1]
        return value

    def grand_value(self) -> int:
        value = 1
        for w in self.weights:
            value *= w
        return value

    def marginal_contribution(self, coalition: Coalition, index: int) -> int:
        """v(C ∪ {i}) - v(C); strictly positive for every CPG"""
        if not 1 <= index <= self.n:
            raise InvalidPlayer(index, self.n)
        coalition.validate(self.n)
        if index in coalition:
            raise PlayerInCoalition(index)
        return self.coalition_value(coalition.with_player(index)) - self.coalition_value(coalition)

    def values_by_mask(self) -> List[int]:
        """v for every mask 0..2^n-1, one multiplication per coalition"""
        size = 1 << self.n
        logger.debug("tabulating %d coalition values", size)
        products = [1] * size
        for mask in range(1, size):
            low = mask & -mask
            products[mask] = products[mask ^ low] * self.weights[low.bit_length() - 1]
        products[0] = 0
        return products

    def to_dict(self) -> dict:
        return {"n": self.n, "weights": [str(w) for w in self.weights]}


def new_game(weights: Iterable[int]) -> CpGame:
    return CpGame(tuple(weights))


def coalition_value(game: GameView, coalition: Coalition) -> Value:
    return game.coalition_value(coalition)


def grand_value(game: GameView) -> Value:
    return game.grand_value()


def marginal_contribution(game: CpGame, coalition: Coalition, index: int) -> int:
    return game.marginal_contribution(coalition, index)


@dataclass(frozen=True)
class Permutation:
    """An ordering (x1, ..., xn) of the players 1..n"""

    order: Tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        n = len(order)
        if sorted(order) != list(range(1, n + 1)) or any(isinstance(i, bool) for i in order):
            raise InvalidPermutation(order, n)
        object.__setattr__(self, 'order', tuple(int(i) for i in order))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.order)

    def validate(self, n: int) -> "Permutation":
        if self.n != n:
            raise InvalidPermutation(self.order, n)
        return self

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.order)


def as_permutation(pi: Union[Permutation, Sequence[int]], n: int) -> Permutation:
    if not isinstance(pi, Permutation):
        try:
            pi = Permutation(tuple(pi))
        except InvalidPermutation:
            raise InvalidPermutation(pi, n) from None
    return pi.validate(n)


def to_payoff(x) -> Payoff:
    if isinstance(x, bool) or not isinstance(x, (Rational, str)):
        raise TypeError(f"payoffs must be exact rationals, got {x!r}")
    return Fraction(x)


@dataclass(frozen=True)
class Imputation:
    """Exact payoffs (p1, ..., pn); efficiency is checked by make_imputation"""

    payoffs: Tuple[Payoff, ...]

    def __post_init__(self):
        object.__setattr__(self, 'payoffs', tuple(to_payoff(p) for p in self.payoffs))

    @property
    def n(self) -> int:
        return len(self.payoffs)

    def total(self) -> Fraction:
        return sum(self.payoffs, Fraction(0))

    def payoff(self, index: int) -> Payoff:
        if not 1 <= index <= self.n:
            raise InvalidPlayer(index, self.n)
        return self.payoffs[index - 1]

    def __iter__(self) -> Iterator[Payoff]:
        return iter(self.payoffs)

    def __len__(self) -> int:
        return len(self.payoffs)


def make_imputation(game: GameView, payoffs: Iterable) -> Imputation:
    imp = Imputation(tuple(payoffs))
    if imp.n != game.n:
        raise LengthMismatch(game.n, imp.n)
    total = imp.total()
    expected = game.grand_value()
    if total != expected:
        raise NotAnImputation(total, expected)
    return imp
