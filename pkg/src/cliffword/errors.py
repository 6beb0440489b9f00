"""Exception hierarchy.

Parse-level problems (:class:`ParseError` subclasses) map to CLI exit code 2,
everything else deriving from :class:`CliffwordError` maps to exit code 1.
"""


class CliffwordError(ValueError):
    """Base class for all domain errors raised by this package."""


class ParseError(CliffwordError):
    """Malformed textual input."""


class BadCharacter(ParseError):
    def __init__(self, line, col, char=None):
        self.line = line
        self.col = col
        self.char = char
        super().__init__(f"bad character {char!r} at line {line}, column {col}")


class RaggedRows(ParseError):
    def __init__(self, line=None, expected=None, got=None):
        self.line = line
        self.expected = expected
        self.got = got
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"ragged rows{where}: expected length {expected}, got {got}")


class Empty(ParseError):
    def __init__(self, what="basis"):
        super().__init__(f"empty {what}")


class NotABasis(CliffwordError):
    """Rows ``i`` and ``j`` commute (or coincide)."""

    def __init__(self, i, j, detail=""):
        self.i = i
        self.j = j
        msg = f"rows {i} and {j} do not anticommute"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NotGammaBasis(NotABasis):
    """One of the two unions fed to :func:`cliffword.constructions.combine` is not a basis."""

    def __init__(self, which, i, j):
        self.which = which
        super().__init__(i, j, f"in {which}")


class B1Empty(CliffwordError):
    def __init__(self):
        super().__init__("B1 must be non-empty")


class B2Empty(CliffwordError):
    def __init__(self):
        super().__init__("B2 must be non-empty")


class B1B2NotCommuting(CliffwordError):
    def __init__(self, i, j):
        self.i = i
        self.j = j
        super().__init__(f"B1[{i}] and B2[{j}] anticommute")


class NonEuclidean(CliffwordError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} has an odd number of A letters")


class ATransmutation(CliffwordError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} contains A and cannot be transmuted")


class EmptyResult(CliffwordError):
    def __init__(self):
        super().__init__("every column is erasable")


class CapExceeded(CliffwordError):
    def __init__(self, m, cap):
        self.m = m
        self.cap = cap
        super().__init__(f"word length {m} exceeds cap {cap}")
