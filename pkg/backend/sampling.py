"""
Seeded random games, permutations and Weber-set points.
numpy supplies the generator; everything returned is exact.
"""

import logging
from fractions import Fraction
from typing import List, Union

import numpy as np

from models import CpGame, Imputation, Permutation, new_game
from solutions import weber_mix

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.Generator, None]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_game(rng: np.random.Generator, n: int, low: int = 2, high: int = 10 ** 6) -> CpGame:
    """n weights drawn uniformly from [low, high]"""
    weights = rng.integers(low, high, size=n, endpoint=True)
    return new_game(int(w) for w in weights)


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation(tuple(int(i) + 1 for i in rng.permutation(n)))


def sample_weber_point(game: CpGame, rng: np.random.Generator, k: int = 3,
                       resolution: int = 1000) -> Imputation:
    """
    A random convex combination of k random marginal vectors. The
    coefficients are integer draws normalised to exact fractions.
    """
    perms = [random_permutation(rng, game.n) for _ in range(k)]
    draws = [int(d) for d in rng.integers(1, resolution, size=k, endpoint=True)]
    total = sum(draws)
    mix = [(pi, Fraction(d, total)) for pi, d in zip(perms, draws)]
    logger.debug("weber point from %d permutations", k)
    return weber_mix(game, mix)


def sample_weber_points(game: CpGame, count: int, seed: SeedLike = None, k: int = 3) -> List[Imputation]:
    rng = make_rng(seed)
    return [sample_weber_point(game, rng, k) for _ in range(count)]
