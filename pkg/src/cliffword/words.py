"""Characters, words and word matrices over the alphabet {I, X, Z, A}.

A word of length ``m`` stands for the tensor product of ``m`` real 2x2
matrices; all (anti)commutation questions are answered letter by letter
without touching any matrix.  Words are packed two bits per letter with the
first letter in the most significant position, using the fixed order
``I < X < Z < A`` so that integer comparison of codes of equal length is
lexicographic comparison of the letter strings.
"""
from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import BadCharacter, Empty, NotABasis, RaggedRows

LETTERS = "IXZA"


class Char(enum.IntEnum):
    I = 0
    X = 1
    Z = 2
    A = 3

    @property
    def square_sign(self) -> int:
        return -1 if self is Char.A else 1

    def anticommutes(self, other: "Char") -> bool:
        return char_anticommutes(self, other)

    def __str__(self) -> str:
        return self.name


def char_anticommutes(c1: Char, c2: Char) -> bool:
    """True iff the two letters are distinct and neither is ``I``."""
    return c1 != c2 and c1 != Char.I and c2 != Char.I


def _low_mask(m: int) -> int:
    # 0b0101...01 with m pairs
    return int("01" * m, 2) if m else 0


def pack(letters: Iterable[int]) -> int:
    code = 0
    for c in letters:
        code = (code << 2) | int(c)
    return code


def unpack(code: int, m: int) -> tuple[int, ...]:
    return tuple((code >> (2 * (m - 1 - i))) & 3 for i in range(m))


def nonidentity_mask(code: int, m: int) -> int:
    return (code | (code >> 1)) & _low_mask(m)


def a_count(code: int, m: int) -> int:
    return ((code & (code >> 1)) & _low_mask(m)).bit_count()


def anticommute_codes(a: int, b: int, m: int) -> bool:
    """Parity rule on packed codes of equal length ``m``."""
    low = _low_mask(m)
    diff = a ^ b
    both = (a | (a >> 1)) & (b | (b >> 1)) & (diff | (diff >> 1)) & low
    return bool(both.bit_count() & 1)


class Word:
    """An immutable word of ``m >= 1`` letters."""

    __slots__ = ("code", "m")

    def __init__(self, letters: Union[str, "Word", Sequence[int]]):
        if isinstance(letters, Word):
            code, m = letters.code, letters.m
        elif isinstance(letters, str):
            code = 0
            for col, ch in enumerate(letters):
                idx = LETTERS.find(ch)
                if idx < 0:
                    raise BadCharacter(1, col + 1, ch)
                code = (code << 2) | idx
            m = len(letters)
        else:
            letters = list(letters)
            if any(not 0 <= int(c) <= 3 for c in letters):
                raise ValueError(f"letter codes must lie in 0..3, got {letters}")
            code, m = pack(letters), len(letters)
        if m < 1:
            raise Empty("word")
        object.__setattr__(self, "code", code)
        object.__setattr__(self, "m", m)

    @classmethod
    def from_code(cls, code: int, m: int) -> "Word":
        w = cls.__new__(cls)
        object.__setattr__(w, "code", code)
        object.__setattr__(w, "m", m)
        return w

    @classmethod
    def identity(cls, m: int) -> "Word":
        """``I^(m)``"""
        return cls.from_code(0, m)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @property
    def letters(self) -> tuple[Char, ...]:
        return tuple(Char(c) for c in unpack(self.code, self.m))

    def __len__(self) -> int:
        return self.m

    def __iter__(self) -> Iterator[Char]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(str(self)[i])
        if i < 0:
            i += self.m
        if not 0 <= i < self.m:
            raise IndexError(i)
        return Char((self.code >> (2 * (self.m - 1 - i))) & 3)

    def __add__(self, other: "Word") -> "Word":
        other = Word(other)
        return Word.from_code((self.code << (2 * other.m)) | other.code, self.m + other.m)

    def __str__(self) -> str:
        return "".join(LETTERS[c] for c in unpack(self.code, self.m))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = Word(other)
        if not isinstance(other, Word):
            return NotImplemented
        return self.code == other.code and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.code, self.m))

    def __lt__(self, other: "Word") -> bool:
        return (self.m, self.code) < (other.m, other.code)

    def __le__(self, other: "Word") -> bool:
        return (self.m, self.code) <= (other.m, other.code)

    @property
    def a_count(self) -> int:
        return a_count(self.code, self.m)

    @property
    def i_count(self) -> int:
        return self.m - nonidentity_mask(self.code, self.m).bit_count()

    @property
    def square_sign(self) -> int:
        return word_square_sign(self)

    def anticommutes(self, other: "Word") -> bool:
        return words_anticommute(self, other)


WordLike = Union[Word, str]


def word_square_sign(w: WordLike) -> int:
    """``(-1) ** (number of A letters)``."""
    w = Word(w)
    return -1 if w.a_count & 1 else 1


def words_anticommute(w1: WordLike, w2: WordLike) -> bool:
    """Odd number of anticommuting letter positions.

    Raises :class:`RaggedRows` when the lengths differ.
    """
    w1, w2 = Word(w1), Word(w2)
    if w1.m != w2.m:
        raise RaggedRows(expected=w1.m, got=w2.m)
    return anticommute_codes(w1.code, w2.code, w1.m)


class WordMatrix:
    """``p`` words of common length ``m``, kept in the given order.

    Duplicate rows are allowed here and rejected by :func:`verify_gamma_basis`.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[WordLike]):
        rows = tuple(Word(r) for r in rows)
        if not rows:
            raise Empty()
        m = rows[0].m
        for k, r in enumerate(rows):
            if r.m != m:
                raise RaggedRows(k + 1, m, r.m)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("WordMatrix is immutable")

    @property
    def p(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self.rows[0].m

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(r.code for r in self.rows)

    def letter_rows(self) -> list[tuple[int, ...]]:
        m = self.m
        return [unpack(r.code, m) for r in self.rows]

    def column(self, j: int) -> tuple[Char, ...]:
        return tuple(r[j] for r in self.rows)

    def has_a(self) -> bool:
        return any(r.a_count for r in self.rows)

    def sorted(self) -> "WordMatrix":
        return WordMatrix(sorted(self.rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.rows)

    def __getitem__(self, i) -> Word:
        return self.rows[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)

    def __repr__(self) -> str:
        return "WordMatrix([" + ", ".join(repr(str(r)) for r in self.rows) + "])"


def as_matrix(obj) -> WordMatrix:
    """Coerce a WordMatrix, an iterable of words/strings or a whitespace separated
    string into a :class:`WordMatrix`."""
    if isinstance(obj, WordMatrix):
        return obj
    if isinstance(obj, str):
        obj = obj.split()
    return WordMatrix(obj)


class Signature(NamedTuple):
    p: int
    q: int

    @property
    def euclidean(self) -> bool:
        return self.q == 0


def verify_gamma_basis(M) -> Signature:
    """Check pairwise anticommutation of all rows and return the signature.

    Raises :class:`NotABasis` for the first commuting (or repeated) pair in
    row-major order.
    """
    M = as_matrix(M)
    m = M.m
    codes = M.codes
    for i, j in itertools.combinations(range(len(codes)), 2):
        if not anticommute_codes(codes[i], codes[j], m):
            raise NotABasis(i, j)
    q = sum(1 for c in codes if a_count(c, m) & 1)
    return Signature(len(codes) - q, q)


def is_gamma_basis(M) -> bool:
    try:
        verify_gamma_basis(M)
    except NotABasis:
        return False
    return True


def all_words(m: int, alphabet: int = 3) -> Iterator[Word]:
    """Every word of length ``m`` over the first ``alphabet`` letters of IXZA, ascending."""
    for letters in itertools.product(range(alphabet), repeat=m):
        yield Word.from_code(pack(letters), m)


def is_maximally_extended(M, alphabet: int = 3) -> tuple[bool, list[Word]]:
    """Return ``(maximal, extensions)``.

    ``extensions`` lists every word over the 3- or 4-letter alphabet, not already
    a row, that anticommutes with every row.  ``maximal`` is True iff it is empty.
    """
    if alphabet not in (3, 4):
        raise ValueError("alphabet must be 3 or 4")
    M = as_matrix(M)
    verify_gamma_basis(M)
    m = M.m
    rows = set(M.codes)
    extensions = [
        w
        for w in all_words(m, alphabet)
        if w.code not in rows and all(anticommute_codes(w.code, r, m) for r in rows)
    ]
    return not extensions, extensions


def is_simple(M) -> bool:
    """No column is erasable (every column holds both X and Z, or an A)."""
    M = as_matrix(M)
    return not erasable_columns(M)


def erasable_columns(M) -> list[int]:
    """Columns whose letter set lies within {I, X} or within {I, Z}."""
    M = as_matrix(M)
    out = []
    for j in range(M.m):
        col = set(M.column(j))
        if Char.A in col:
            continue
        if not (Char.X in col and Char.Z in col):
            out.append(j)
    return out
