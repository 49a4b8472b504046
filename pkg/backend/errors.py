"""
Error types for the cooperative product game solver.

Every error carries an exit code for the command line front-end and an
optional source position set by the file parsers.
"""

from typing import Optional, Union


class CpgError(Exception):
    """Base class for all solver errors"""

    exit_code = 2

    def __init__(self, message: str, *, line: Optional[int] = None,
                 column: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class ConfigError(CpgError):
    """Invalid configuration value"""


class EmptyGame(CpgError):
    def __init__(self, **position):
        super().__init__("a game needs at least one player", **position)


class InvalidWeight(CpgError):
    """A weight below 2; monotonicity and the core guarantees need w >= 2"""

    def __init__(self, position: int, value, **where):
        super().__init__(f"weight of player {position} is {value}, must be an integer >= 2", **where)
        self.position = position
        self.value = value


class InvalidPlayer(CpgError):
    def __init__(self, index, n: Optional[int] = None, **where):
        bound = f" (players are 1..{n})" if n is not None else ""
        super().__init__(f"invalid player {index}{bound}", **where)
        self.index = index


class DuplicatePlayer(CpgError):
    def __init__(self, index: int, **where):
        super().__init__(f"player {index} listed twice", **where)
        self.index = index


class PlayerInCoalition(CpgError):
    def __init__(self, index: int):
        super().__init__(f"player {index} already belongs to the coalition")
        self.index = index


class InvalidPermutation(CpgError):
    def __init__(self, order, n: int, **where):
        super().__init__(f"{list(order)} is not a permutation of 1..{n}", **where)
        self.order = tuple(order)


class LengthMismatch(CpgError):
    def __init__(self, expected: int, found: int):
        super().__init__(f"expected {expected} payoffs, got {found}")
        self.expected = expected
        self.found = found


class NotAnImputation(CpgError):
    """Payoffs do not sum to the grand coalition value"""

    def __init__(self, total, expected, **where):
        super().__init__(f"payoffs sum to {total}, grand coalition value is {expected}", **where)
        self.total = total
        self.expected = expected


class BadMixture(CpgError):
    def __init__(self, reason: str, **where):
        super().__init__(f"bad mixture: {reason}", **where)
        self.reason = reason


class InvalidTable(CpgError):
    def __init__(self, reason: str, **where):
        super().__init__(f"invalid table: {reason}", **where)
        self.reason = reason


class LimitExceeded(CpgError):
    """Brute-force enumeration refused beyond its configured limit"""

    exit_code = 3

    def __init__(self, n: int, limit: int, operation: str):
        super().__init__(f"{operation} enumerates too much for n={n} (limit {limit})")
        self.n = n
        self.limit = limit
        self.operation = operation


class ParseError(CpgError):
    """Malformed input text"""


class BadMagic(ParseError):
    def __init__(self, expected: str, found: str, **where):
        super().__init__(f"expected header {expected!r}, found {found!r}", **where)
        self.expected = expected
        self.found = found


class CountMismatch(ParseError):
    def __init__(self, expected: Union[int, str], found: int, what: str = "values", **where):
        super().__init__(f"expected {expected} {what}, found {found}", **where)
        self.expected = expected
        self.found = found


class NotAnInteger(ParseError):
    def __init__(self, token: str, **where):
        super().__init__(f"{token!r} is not an integer", **where)
        self.token = token


class BadRational(ParseError):
    def __init__(self, token: str, **where):
        super().__init__(f"{token!r} is not an exact rational", **where)
        self.token = token


class NotEfficient(NotAnImputation, ParseError):
    """An imputation file whose entries miss the grand coalition value"""
