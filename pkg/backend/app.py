"""
Cooperative Product Game command line
Parses game, table and imputation files and dispatches the solvers and oracles.

Exit codes: 0 success / property holds / in core, 1 property violated /
blocked, 2 usage or parse error, 3 enumeration limit exceeded.
"""

import logging
import sys
from typing import List, Optional, Sequence

import click

from config import get_config
from errors import CpgError, ParseError
from formats import (
    Report,
    format_number,
    format_vector,
    parse_coalition,
    parse_imputation,
    parse_mix,
    parse_permutation,
    parse_view,
    view_inputs,
)
from models import CpGame, GameView, Imputation, Permutation
from sampling import sample_weber_points
from solutions import (
    Blocked,
    banzhaf,
    blocks,
    core_check,
    excess,
    marginal_vector,
    marginal_vector_by_differences,
    shapley,
    weber_mix,
)
from verify import (
    CONVEX,
    DUMMIES,
    MONOTONE,
    PROPERTIES,
    SUPERADDITIVE,
    Witness,
    check_convex,
    check_monotone,
    check_superadditive,
    find_dummies,
    to_table,
)

logger = logging.getLogger(__name__)

ORACLES = {
    MONOTONE: check_monotone,
    SUPERADDITIVE: check_superadditive,
    CONVEX: check_convex,
}


def _read(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not UTF-8 text (byte {exc.start})") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc


def _load(path: str) -> GameView:
    view = parse_view(_read(path))
    logger.debug("loaded %s with n=%d", path, view.n)
    return view


def _load_imputation(view: GameView, path: Optional[str], inline: Optional[str]) -> Imputation:
    if (path is None) == (inline is None):
        raise click.UsageError("give exactly one of --imputation FILE or --inline TEXT")
    return parse_imputation(_read(path) if path is not None else inline, view)


def _vector_of(view: GameView, pi: Permutation) -> Imputation:
    if isinstance(view, CpGame):
        return marginal_vector(view, pi)
    return marginal_vector_by_differences(view, pi)


def _emit(report: Report, fmt: str) -> int:
    click.echo(report.render(fmt), nl=False)
    return report.exit_code


def _payoff_report(command: str, view: GameView, payoffs: Sequence, **extra) -> Report:
    values = [format_number(p) for p in payoffs]
    return Report(command, {**view_inputs(view), **extra}, "ok",
                  {"payoffs": values}, [format_vector(payoffs)])


format_option = click.option('--format', 'fmt', type=click.Choice(['plain', 'json']),
                             default='plain', show_default=True, help='Report rendering')
game_argument = click.argument('game', type=click.Path(exists=True, dir_okay=False))
imputation_options = [
    click.option('--imputation', 'imputation_path', type=click.Path(exists=True, dir_okay=False),
                 help='File with n exact payoffs'),
    click.option('--inline', 'inline', help='The payoffs themselves, e.g. "28 1 1"'),
]


def with_imputation(f):
    for option in reversed(imputation_options):
        f = option(f)
    return f


@click.group()
@click.option('--verbose', is_flag=True, help='Log debugging detail to stderr')
def cli(verbose: bool):
    """Exact solver for cooperative product games."""
    cfg = get_config()
    level = logging.DEBUG if verbose else getattr(logging, cfg.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format=cfg.LOG_FORMAT, stream=sys.stderr, force=True)


@cli.command()
@game_argument
@click.option('--coalition', required=True, help='Comma-separated players; "" is the empty coalition')
@format_option
def value(game: str, coalition: str, fmt: str) -> int:
    """Value of a coalition."""
    view = _load(game)
    c = parse_coalition(coalition, view.n)
    v = view.coalition_value(c)
    report = Report('value', {**view_inputs(view), "coalition": c.to_list()}, "ok",
                    {"value": format_number(v)}, [format_number(v)])
    return _emit(report, fmt)


@cli.command()
@game_argument
@click.option('--permutation', help='Comma-separated player order (default 1,...,n)')
@format_option
def imputation(game: str, permutation: Optional[str], fmt: str) -> int:
    """Core imputation: the marginal vector of a permutation."""
    view = _load(game)
    pi = parse_permutation(permutation, view.n) if permutation is not None else Permutation.identity(view.n)
    imp = _vector_of(view, pi)
    return _emit(_payoff_report('imputation', view, imp.payoffs, permutation=list(pi.order)), fmt)


@cli.command('core-check')
@game_argument
@with_imputation
@format_option
def core_check_command(game: str, imputation_path: Optional[str], inline: Optional[str], fmt: str) -> int:
    """Is an imputation in the core? Reports the first blocking coalition."""
    view = _load(game)
    imp = _load_imputation(view, imputation_path, inline)
    verdict = core_check(view, imp)
    inputs = {**view_inputs(view), "imputation": [format_number(p) for p in imp]}
    if isinstance(verdict, Blocked):
        excess_text = format_number(verdict.excess)
        report = Report('core-check', inputs, 'blocked',
                        {"in_core": False, "witness": verdict.witness.to_list(), "excess": excess_text},
                        [f"blocked: {verdict.witness} excess {excess_text}"], exit_code=1)
    else:
        report = Report('core-check', inputs, 'in-core', {"in_core": True}, ["in-core"])
    return _emit(report, fmt)


@cli.command('excess')
@game_argument
@with_imputation
@click.option('--coalition', required=True, help='Comma-separated players; "" is the empty coalition')
@format_option
def excess_command(game: str, imputation_path: Optional[str], inline: Optional[str],
                   coalition: str, fmt: str) -> int:
    """Excess v(C) - p(C) of a coalition."""
    view = _load(game)
    imp = _load_imputation(view, imputation_path, inline)
    c = parse_coalition(coalition, view.n)
    e = excess(view, imp, c)
    inputs = {**view_inputs(view), "imputation": [format_number(p) for p in imp], "coalition": c.to_list()}
    report = Report('excess', inputs, "ok",
                    {"excess": format_number(e), "blocks": blocks(view, imp, c)}, [format_number(e)])
    return _emit(report, fmt)


@cli.command('shapley')
@game_argument
@format_option
def shapley_command(game: str, fmt: str) -> int:
    """Exact Shapley value (all n! permutations)."""
    view = _load(game)
    return _emit(_payoff_report('shapley', view, shapley(view).payoffs), fmt)


@cli.command('banzhaf')
@game_argument
@format_option
def banzhaf_command(game: str, fmt: str) -> int:
    """Exact raw Banzhaf value (all 2^(n-1) coalitions per player)."""
    view = _load(game)
    return _emit(_payoff_report('banzhaf', view, banzhaf(view)), fmt)


@cli.command('weber')
@game_argument
@click.option('--mix', required=True, help='"PERM@COEF;PERM@COEF;..." with coefficients summing to 1')
@format_option
def weber_command(game: str, mix: str, fmt: str) -> int:
    """Convex combination of marginal vectors."""
    view = _load(game)
    imp = weber_mix(view, parse_mix(mix, view.n))
    return _emit(_payoff_report('weber', view, imp.payoffs, mix=mix), fmt)


@cli.command('sample')
@game_argument
@click.option('--count', default=1, show_default=True, type=click.IntRange(min=1))
@click.option('--seed', default=0, show_default=True, type=int)
@format_option
def sample_command(game: str, count: int, seed: int, fmt: str) -> int:
    """Random points of the Weber set (seeded)."""
    view = _load(game)
    points = sample_weber_points(view, count, seed)
    report = Report('sample', {**view_inputs(view), "count": count, "seed": seed}, "ok",
                    {"points": [[format_number(p) for p in imp] for imp in points]},
                    [format_vector(imp.payoffs) for imp in points])
    return _emit(report, fmt)


def _property_list(text: Optional[str]) -> List[str]:
    if text is None:
        return list(PROPERTIES)
    names = [part.strip() for part in text.split(',') if part.strip()]
    unknown = [name for name in names if name not in PROPERTIES]
    if unknown or not names:
        raise click.BadParameter(f"choose from {', '.join(PROPERTIES)}", param_hint='--properties')
    return names


@cli.command('verify')
@game_argument
@click.option('--properties', help=f"Comma-separated subset of {','.join(PROPERTIES)} (default all)")
@click.option('--limit', type=click.IntRange(min=0), help='Override every enumeration limit')
@format_option
def verify_command(game: str, properties: Optional[str], limit: Optional[int], fmt: str) -> int:
    """Brute-force property checks on a game or table."""
    names = _property_list(properties)
    view = _load(game)
    inputs = {**view_inputs(view), "properties": names}
    if isinstance(view, CpGame):
        view = to_table(view, limit)

    lines, result, failed = [], {}, False
    for name in names:
        if name == DUMMIES:
            dummies = sorted(find_dummies(view, limit))
            holds = not dummies
            result[name] = {"holds": holds, "players": dummies}
            shown = "{" + ",".join(str(i) for i in dummies) + "}"
            lines.append(f"{name}: pass" if holds else f"{name}: fail {shown}")
        else:
            outcome = ORACLES[name](view, limit)
            holds = outcome.holds
            if isinstance(outcome, Witness):
                result[name] = {"holds": False,
                                "witness": [outcome.first.to_list(), outcome.second.to_list()],
                                "lhs": format_number(outcome.lhs), "rhs": format_number(outcome.rhs)}
                lines.append(f"{name}: fail {outcome.first} {outcome.second}")
            else:
                result[name] = {"holds": True}
                lines.append(f"{name}: pass")
        failed = failed or not holds

    report = Report('verify', inputs, "fail" if failed else "pass",
                    result, lines, exit_code=1 if failed else 0)
    return _emit(report, fmt)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code instead of exiting"""
    try:
        code = cli.main(args=list(argv) if argv is not None else None,
                        prog_name='cpg', standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except CpgError as exc:
        logger.debug("command failed", exc_info=True)
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    return code if isinstance(code, int) else 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
