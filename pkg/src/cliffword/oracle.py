"""Exact integer realization of words as 2^m x 2^m signed permutation matrices.

Only used to cross-check the letter-level rules in :mod:`cliffword.words`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, RaggedRows
from .words import Word, as_matrix

DEFAULT_CAP = 8


@dataclass(frozen=True)
class SignedPerm:
    """Matrix with entry ``sign[i]`` at ``(i, perm[i])`` and zeros elsewhere."""

    perm: tuple[int, ...]
    sign: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(n)), (1,) * n)

    def __matmul__(self, other: "SignedPerm") -> "SignedPerm":
        # (AB)[i, pb[pa[i]]] = sa[i] * sb[pa[i]]
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        pb, sb = other.perm, other.sign
        return SignedPerm(
            tuple(pb[j] for j in self.perm),
            tuple(s * sb[j] for s, j in zip(self.sign, self.perm)),
        )

    def __neg__(self) -> "SignedPerm":
        return SignedPerm(self.perm, tuple(-s for s in self.sign))

    def kron(self, other: "SignedPerm") -> "SignedPerm":
        nb = other.n
        perm, sign = [], []
        for pa, sa in zip(self.perm, self.sign):
            for pb, sb in zip(other.perm, other.sign):
                perm.append(pa * nb + pb)
                sign.append(sa * sb)
        return SignedPerm(tuple(perm), tuple(sign))

    def scaled_identity(self) -> int:
        """Return ``s`` if the matrix equals ``s * identity`` (s = +-1), else 0."""
        if any(p != i for i, p in enumerate(self.perm)):
            return 0
        first = self.sign[0]
        return first if all(s == first for s in self.sign) else 0

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=np.int64)
        out[np.arange(self.n), list(self.perm)] = self.sign
        return out


LETTER_MATRICES = {
    0: SignedPerm((0, 1), (1, 1)),  # I: identity
    1: SignedPerm((1, 0), (1, 1)),  # X: [[0,1],[1,0]]
    2: SignedPerm((0, 1), (1, -1)),  # Z: [[1,0],[0,-1]]
    3: SignedPerm((1, 0), (1, -1)),  # A: [[0,1],[-1,0]]
}


def realize(w, cap: int = DEFAULT_CAP) -> SignedPerm:
    """Left-to-right Kronecker product of the per-letter 2x2 matrices."""
    w = Word(w)
    if w.m > cap:
        raise CapExceeded(w.m, cap)
    out = SignedPerm.identity(1)
    for c in w.letters:
        out = out.kron(LETTER_MATRICES[int(c)])
    return out


def matrices_anticommute(a: SignedPerm, b: SignedPerm) -> bool:
    return a @ b == -(b @ a)


def check_clifford(M, cap: int = DEFAULT_CAP) -> bool:
    """``g_i g_j + g_j g_i == 2 eta_ij 1`` with eta read off the row square signs."""
    M = as_matrix(M)
    mats = [realize(w, cap) for w in M]
    for i, a in enumerate(mats):
        if (a @ a).scaled_identity() != M[i].square_sign:
            return False
        for b in mats[i + 1:]:
            if not matrices_anticommute(a, b):
                return False
    return True


def oracle_anticommute(w1, w2, cap: int = DEFAULT_CAP) -> bool:
    w1, w2 = Word(w1), Word(w2)
    if w1.m != w2.m:
        raise RaggedRows(expected=w1.m, got=w2.m)
    return matrices_anticommute(realize(w1, cap), realize(w2, cap))


def oracle_square_sign(w, cap: int = DEFAULT_CAP) -> int:
    r = realize(w, cap)
    return (r @ r).scaled_identity()
