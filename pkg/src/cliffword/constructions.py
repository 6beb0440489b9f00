"""Generative constructions of Euclidean gamma bases.

All builders validate their inputs and re-verify their outputs, so a returned
:class:`~cliffword.words.WordMatrix` is always a gamma basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import B1B2NotCommuting, B1Empty, B2Empty, NonEuclidean, NotABasis, NotGammaBasis, RaggedRows
from .words import Word, WordMatrix, as_matrix, verify_gamma_basis, words_anticommute

RADON_HURWITZ = (1, 2, 4, 4, 8, 8, 8, 8)


def extend_simple(M) -> WordMatrix:
    """``{g_i X} + {I..I Z}``: one more generator, one more letter."""
    M = as_matrix(M)
    verify_gamma_basis(M)
    out = [w + Word("X") for w in M] + [Word.identity(M.m) + Word("Z")]
    result = WordMatrix(out)
    verify_gamma_basis(result)
    return result


def _word_set(words: Iterable) -> tuple[Word, ...]:
    if isinstance(words, str):
        words = words.split()
    seen = []
    for w in words:
        w = Word(w)
        if w not in seen:
            seen.append(w)
    return tuple(seen)


@dataclass(frozen=True)
class CombineInput:
    """Three word sets of a common length; ``a`` may be empty."""

    a: tuple[Word, ...] = field(default=())
    b1: tuple[Word, ...] = field(default=())
    b2: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        for name in ("a", "b1", "b2"):
            object.__setattr__(self, name, _word_set(getattr(self, name)))

    @property
    def m(self) -> int:
        return (self.a + self.b1 + self.b2)[0].m

    def validate(self) -> None:
        if not self.b1:
            raise B1Empty()
        if not self.b2:
            raise B2Empty()
        m = self.m
        for w in self.a + self.b1 + self.b2:
            if w.m != m:
                raise RaggedRows(expected=m, got=w.m)
        for name, part in (("C1", self.b1), ("C2", self.b2)):
            union = list(self.a) + [w for w in part if w not in self.a]
            try:
                verify_gamma_basis(union)
            except NotABasis as exc:
                raise NotGammaBasis(name, exc.i, exc.j) from None
        for i, u in enumerate(self.b1):
            for j, v in enumerate(self.b2):
                if words_anticommute(u, v):
                    raise B1B2NotCommuting(i, j)


def combine(a=(), b1=(), b2=()) -> WordMatrix:
    """``{A I, B1 X, B2 Z}``.

    Accepts a :class:`CombineInput` as the first argument or the three sets.
    """
    inp = a if isinstance(a, CombineInput) else CombineInput(a, b1, b2)
    inp.validate()
    x, z, i = Word("X"), Word("Z"), Word("I")
    rows = [w + i for w in inp.a] + [w + x for w in inp.b1] + [w + z for w in inp.b2]
    result = WordMatrix(rows)
    verify_gamma_basis(result)
    return result


_SUBSTITUTION = {"I": "II", "X": "XX", "Z": "ZX", "A": "IZ"}


def eliminate_A(M) -> WordMatrix:
    """Replace A-carrying columns, leftmost first, by I->II, X->XX, Z->ZX, A->IZ."""
    M = as_matrix(M)
    for k, w in enumerate(M):
        if w.a_count & 1:
            raise NonEuclidean(k)
    verify_gamma_basis(M)
    rows = [str(w) for w in M]
    while True:
        cols = [j for j in range(len(rows[0])) if any(r[j] == "A" for r in rows)]
        if not cols:
            break
        j = cols[0]
        rows = [r[:j] + _SUBSTITUTION[r[j]] + r[j + 1:] for r in rows]
    result = WordMatrix(rows)
    verify_gamma_basis(result)
    return result


def _rotations(s: str) -> list[str]:
    return [s[k:] + s[:k] for k in range(len(s))]


def cyclic_parts(n: int) -> CombineInput:
    if n < 1:
        raise ValueError("n must be >= 1")
    b1 = _rotations("I" + "ZX" * n)
    b2 = _rotations("I" + "XZ" * n)
    a = ["Z" + "ZZ" * n, "X" + "XX" * n] if n % 2 else []
    return CombineInput(a, b1, b2)


def cyclic_basis(n: int) -> WordMatrix:
    """Cyclic prescription: ``(2n+2)``-letter basis with ``p = 4(n+1)`` (n odd) or ``4n+2`` (n even)."""
    return combine(cyclic_parts(n))


def concat_product(C1, pick: int, C2) -> WordMatrix:
    """``{g C2, (C1 minus g) I^(m2)}`` with ``g = C1[pick]``."""
    C1, C2 = as_matrix(C1), as_matrix(C2)
    if not 0 <= pick < C1.p:
        raise IndexError(f"pick {pick} out of range for p={C1.p}")
    verify_gamma_basis(C1)
    verify_gamma_basis(C2)
    g = C1[pick]
    pad = Word.identity(C2.m)
    rows = [g + w for w in C2] + [w + pad for k, w in enumerate(C1) if k != pick]
    result = WordMatrix(rows)
    verify_gamma_basis(result)
    return result


def min_length_4char(p: int) -> int:
    """Minimal word length of a 4-letter Euclidean presentation of ``p`` generators.

    ``p = 8r + k + 2`` with ``r >= 0`` and ``0 <= k <= 7``; the length is
    ``log2 G(k+1) + 4r + 1`` with ``G`` the Radon-Hurwitz table.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    r, k = divmod(p - 2, 8)
    return RADON_HURWITZ[k].bit_length() - 1 + 4 * r + 1
