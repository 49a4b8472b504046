"""
Simple Example Usage of the Cooperative Product Game solver
Walks through a three-player game step-by-step
"""

from fractions import Fraction

from models import Coalition, Imputation, new_game
from sampling import sample_weber_points
from solutions import banzhaf, core_check, core_imputation, excess, marginal_vector, shapley, weber_mix
from verify import TableGame, check_convex, find_dummies, to_table
from formats import format_vector


def print_section(title):
    """Print a section header"""
    print("\n" + "=" * 70)
    print(f"  {title}")
    print("=" * 70 + "\n")


def example_1_basic_game():
    """Example 1: values, marginal vectors and the core"""

    print_section("EXAMPLE 1: A Three-Player Product Game")

    game = new_game([2, 3, 5])
    print(f"Weights: {list(game.weights)}")
    print(f"v(P) = {game.grand_value()}")
    print(f"v({{2,3}}) = {game.coalition_value(Coalition.of([2, 3]))}")

    print("\nCore imputation from the identity permutation:")
    imp = core_imputation(game)
    print(f"   {format_vector(imp.payoffs)} -> {type(core_check(game, imp)).__name__}")

    print("\nReverse permutation:")
    print(f"   {format_vector(marginal_vector(game, (3, 2, 1)).payoffs)}")

    print("\nAn imputation player 2 walks away from:")
    bad = Imputation((28, 1, 1))
    verdict = core_check(game, bad)
    print(f"   blocked by {verdict.witness}, excess {verdict.excess}")
    print(f"   e({{2,3}}) = {excess(game, bad, Coalition.of([2, 3]))}")


def example_2_values():
    """Example 2: Shapley, Banzhaf and the Weber set"""

    print_section("EXAMPLE 2: Shapley, Banzhaf and Weber Mixtures")

    game = new_game([2, 3, 5])
    print(f"Shapley: {format_vector(shapley(game).payoffs)}")
    print(f"Banzhaf: {format_vector(banzhaf(game))}")

    half = Fraction(1, 2)
    mix = weber_mix(game, [((1, 2, 3), half), ((3, 2, 1), half)])
    print(f"Half identity + half reverse: {format_vector(mix.payoffs)}")

    for point in sample_weber_points(game, 3, seed=1):
        print(f"   random Weber point {format_vector(point.payoffs)} in core: {core_check(game, point).in_core}")


def example_3_oracles():
    """Example 3: convexity holds for products, fails for weight-one players"""

    print_section("EXAMPLE 3: Property Oracles")

    game = new_game([2, 3, 5, 7])
    print(f"(2,3,5,7) convex: {check_convex(to_table(game)).holds}, dummies: {set(find_dummies(game)) or 'none'}")

    flat = TableGame.from_mapping(2, {0: 0, 1: 1, 2: 1, 3: 1})
    witness = check_convex(flat)
    print(f"weight-one table convex: {witness.holds}, witness {witness.first} {witness.second}")


if __name__ == "__main__":
    example_1_basic_game()
    example_2_values()
    example_3_oracles()
