"""
Text formats: game files, table files, imputations, command-line lists,
and the reports the command line prints.

Game file:   "cpg 1", then n, then n integer weights (any line layout).
Table file:  "tug 1", then n, then 2^n lines "MASK VALUE".
Lines starting with "#" are comments in both.
"""

import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from errors import (
    BadMagic,
    BadMixture,
    BadRational,
    CountMismatch,
    EmptyGame,
    InvalidPermutation,
    InvalidPlayer,
    InvalidTable,
    InvalidWeight,
    NotAnInteger,
    NotEfficient,
)
from models import Coalition, CpGame, GameView, Imputation, Permutation, Value
from verify import TableGame

GAME_MAGIC = "cpg 1"
TABLE_MAGIC = "tug 1"

_INTEGER = re.compile(r"-?[0-9]+")
_RATIONAL = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")

# weights and values have unbounded decimal length
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

Token = Tuple[str, int, int]  # text, line, column


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, line))
    return lines


def _tokens(lineno: int, line: str) -> Iterator[Token]:
    for match in re.finditer(r"\S+", line):
        yield match.group(), lineno, match.start() + 1


def _parse_int(token: Token) -> int:
    text, line, column = token
    if not _INTEGER.fullmatch(text):
        raise NotAnInteger(text, line=line, column=column)
    return int(text)


def parse_rational(text: str, line: Optional[int] = None, column: Optional[int] = None) -> Fraction:
    """'p' or 'p/q' with an optional leading '-'; q must be nonzero"""
    match = _RATIONAL.fullmatch(text.strip())
    if not match:
        raise BadRational(text, line=line, column=column)
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise BadRational(text, line=line, column=column)
    return Fraction(int(numerator), int(denominator or 1))


def _header(lines: List[Tuple[int, str]], magic: str) -> Tuple[int, List[Tuple[int, str]]]:
    """Check the magic line and read the player count that follows it"""
    if not lines:
        raise BadMagic(magic, "", line=1, column=1)
    lineno, first = lines[0]
    if first.strip() != magic:
        raise BadMagic(magic, first.strip(), line=lineno, column=1)
    if len(lines) < 2:
        raise CountMismatch(1, 0, "player count lines", line=lineno + 1)
    lineno, second = lines[1]
    count_tokens = list(_tokens(lineno, second))
    if len(count_tokens) != 1:
        raise CountMismatch(1, len(count_tokens), "player count values", line=lineno)
    n = _parse_int(count_tokens[0])
    if n < 1:
        raise EmptyGame(line=lineno, column=count_tokens[0][2])
    return n, lines[2:]


def parse_game(text: str) -> CpGame:
    lines = _content_lines(text)
    n, body = _header(lines, GAME_MAGIC)
    tokens = [tok for lineno, line in body for tok in _tokens(lineno, line)]
    weights = [_parse_int(tok) for tok in tokens]
    if len(weights) != n:
        where = tokens[-1][1] if tokens else (lines[1][0])
        raise CountMismatch(n, len(weights), "weights", line=where)
    for position, (weight, (_, line, column)) in enumerate(zip(weights, tokens), start=1):
        if weight < 2:
            raise InvalidWeight(position, weight, line=line, column=column)
    return CpGame(tuple(weights))


def render_game(game: CpGame) -> str:
    return f"{GAME_MAGIC}\n{game.n}\n" + " ".join(str(w) for w in game.weights) + "\n"


def parse_table(text: str) -> TableGame:
    lines = _content_lines(text)
    n, body = _header(lines, TABLE_MAGIC)
    where = body[-1][0] if body else lines[1][0]
    # no body can hold 2^n entries once n exceeds its length in bits
    if n > len(body).bit_length():
        raise CountMismatch(f"2^{n}", len(body), "table entries", line=where)
    size = 1 << n
    if len(body) != size:
        raise CountMismatch(size, len(body), "table entries", line=where)
    values: List[Optional[Fraction]] = [None] * size
    for lineno, line in body:
        tokens = list(_tokens(lineno, line))
        if len(tokens) != 2:
            raise CountMismatch(2, len(tokens), "fields (MASK VALUE)", line=lineno)
        mask = _parse_int(tokens[0])
        if not 0 <= mask < size:
            raise InvalidTable(f"mask {mask} out of range for n={n}", line=lineno, column=tokens[0][2])
        if values[mask] is not None:
            raise InvalidTable(f"mask {mask} given twice", line=lineno, column=tokens[0][2])
        text_value, _, column = tokens[1]
        values[mask] = parse_rational(text_value, lineno, column)
    return TableGame(n, tuple(values))


def render_table(table: TableGame) -> str:
    rows = [f"{mask} {format_number(v)}" for mask, v in enumerate(table.values)]
    return f"{TABLE_MAGIC}\n{table.n}\n" + "\n".join(rows) + "\n"


def parse_view(text: str) -> Union[CpGame, TableGame]:
    """A game or table file, told apart by its magic line"""
    lines = _content_lines(text)
    if lines and lines[0][1].strip() == TABLE_MAGIC:
        return parse_table(text)
    return parse_game(text)


def parse_imputation(text: str, game: GameView) -> Imputation:
    tokens = [tok for lineno, line in _content_lines(text) for tok in _tokens(lineno, line)]
    payoffs = [parse_rational(t, line, column) for t, line, column in tokens]
    if len(payoffs) != game.n:
        raise CountMismatch(game.n, len(payoffs), "payoffs")
    total = sum(payoffs, Fraction(0))
    expected = game.grand_value()
    if total != expected:
        raise NotEfficient(total, expected)
    return Imputation(tuple(payoffs))


def _index_list(text: str, n: int) -> List[int]:
    text = text.strip()
    if not text:
        return []
    indices = []
    for part in text.split(","):
        part = part.strip()
        if not _INTEGER.fullmatch(part):
            raise NotAnInteger(part)
        index = int(part)
        if not 1 <= index <= n:
            raise InvalidPlayer(index, n)
        indices.append(index)
    return indices


def parse_coalition(text: str, n: int) -> Coalition:
    """Comma-separated 1-based players; the empty string is ∅"""
    return Coalition.of(_index_list(text, n))


def parse_permutation(text: str, n: int) -> Permutation:
    try:
        indices = _index_list(text, n)
    except InvalidPlayer:
        raise InvalidPermutation(text.split(","), n) from None
    try:
        return Permutation(tuple(indices)).validate(n)
    except InvalidPermutation:
        raise InvalidPermutation(indices, n) from None


def parse_mix(text: str, n: int) -> List[Tuple[Permutation, Fraction]]:
    """'PERM@COEF;PERM@COEF;...' with PERM comma-separated and COEF rational"""
    mix = []
    for entry in text.split(";"):
        entry = entry.strip()
        if not entry:
            continue
        if entry.count("@") != 1:
            raise BadMixture(f"entry {entry!r} is not PERM@COEF")
        perm_text, coef_text = entry.split("@")
        mix.append((parse_permutation(perm_text, n), parse_rational(coef_text)))
    return mix


def format_number(x: Value) -> str:
    """Integers plainly, other rationals reduced as p/q"""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_vector(values: Sequence[Value]) -> str:
    return " ".join(format_number(v) for v in values)


@dataclass
class Report:
    """What a command prints: plain lines, or one JSON object"""

    command: str
    inputs: Dict[str, Any]
    outcome: str
    result: Dict[str, Any] = field(default_factory=dict)
    plain: List[str] = field(default_factory=list)
    exit_code: int = 0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "result": self.result,
        }

    def render(self, fmt: str = "plain") -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), ensure_ascii=False) + "\n"
        return "".join(line + "\n" for line in self.plain)


def view_inputs(view: GameView) -> Dict[str, Any]:
    if isinstance(view, CpGame):
        return view.to_dict()
    return {"n": view.n, "table": True}
