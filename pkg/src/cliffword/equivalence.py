"""Alphabetic equivalence group: moves, simplification, invariants, canonical forms.

The group acting on a ``p x m`` word matrix is generated by row permutations,
column permutations and per-column X<->Z transmutations.  For matrices that
contain ``A`` the transmutations are restricted to A-free columns.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ATransmutation, EmptyResult
from .words import Char, Word, WordMatrix, as_matrix, erasable_columns, unpack, verify_gamma_basis

_SWAP = (0, 2, 1, 3)


@dataclass(frozen=True)
class RowPermutation:
    """Row ``i`` of the result is row ``perm[i]`` of the input."""

    perm: tuple[int, ...]


@dataclass(frozen=True)
class ColumnPermutation:
    """Column ``j`` of the result is column ``perm[j]`` of the input."""

    perm: tuple[int, ...]


@dataclass(frozen=True)
class ColumnTransmutation:
    column: int


GroupMove = Union[RowPermutation, ColumnPermutation, ColumnTransmutation]


def _check_perm(perm: Sequence[int], n: int) -> None:
    if len(perm) != n:
        raise IndexError(f"permutation of length {len(perm)} applied to {n} indices")
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")


def apply_move(M, g: GroupMove) -> WordMatrix:
    M = as_matrix(M)
    rows = M.letter_rows()
    if isinstance(g, RowPermutation):
        _check_perm(g.perm, M.p)
        return WordMatrix(M.rows[i] for i in g.perm)
    if isinstance(g, ColumnPermutation):
        _check_perm(g.perm, M.m)
        return WordMatrix([r[j] for j in g.perm] for r in rows)
    if isinstance(g, ColumnTransmutation):
        j = g.column
        if not 0 <= j < M.m:
            raise IndexError(f"column {j} out of range for m={M.m}")
        if any(r[j] == Char.A for r in rows):
            raise ATransmutation(j)
        out = []
        for r in rows:
            r = list(r)
            r[j] = _SWAP[r[j]]
            out.append(r)
        return WordMatrix(out)
    raise TypeError(f"not a group move: {g!r}")


def simplify(M) -> WordMatrix:
    """Delete every erasable column (letter set within {I,X} or {I,Z}).

    Columns containing ``A`` are never erased.  Deleting columns does not
    change the letter sets of the remaining ones, so one pass reaches the
    fixed point.
    """
    M = as_matrix(M)
    verify_gamma_basis(M)
    drop = set(erasable_columns(M))
    if len(drop) == M.m:
        raise EmptyResult()
    keep = [j for j in range(M.m) if j not in drop]
    return WordMatrix([r[j] for j in keep] for r in M.letter_rows())


# --- invariants -------------------------------------------------------------

Multiset = tuple[tuple[int, int], ...]


def _value_multiplicities(values) -> tuple:
    return tuple(sorted(Counter(values).items(), reverse=True))


@dataclass(frozen=True)
class InvariantProfile:
    """Invariants as (value, multiplicity) pairs, values descending.

    ``ver_hat`` holds ``((n_I, n_XZ), multiplicity)`` pairs ordered
    descending-lexicographically by the pair.
    """

    hor: Multiset
    ver: Multiset
    ver_tilde: Multiset
    ver_hat: tuple[tuple[tuple[int, int], int], ...]
    n_i: int

    @staticmethod
    def _fmt(name, pairs) -> str:
        def val(v):
            return f"({v[0]},{v[1]})" if isinstance(v, tuple) else str(v)

        return f"{name}(" + ",".join(f"{h}_{val(k)}" for k, h in pairs) + ")"

    def format(self) -> str:
        """Subscript notation, e.g. ``hor(1_1,2_0); ver(1_1,1_0); ...``."""
        return "; ".join(
            [
                self._fmt("hor", self.hor),
                self._fmt("ver", self.ver),
                self._fmt("ver~", self.ver_tilde),
                self._fmt("ver^", self.ver_hat),
                f"N_I={self.n_i}",
            ]
        )

    def to_dict(self) -> dict:
        return {
            "hor": [list(x) for x in self.hor],
            "ver": [list(x) for x in self.ver],
            "ver_tilde": [list(x) for x in self.ver_tilde],
            "ver_hat": [[list(k), h] for k, h in self.ver_hat],
            "n_i": self.n_i,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantProfile":
        return cls(
            hor=tuple((int(k), int(h)) for k, h in d["hor"]),
            ver=tuple((int(k), int(h)) for k, h in d["ver"]),
            ver_tilde=tuple((int(k), int(h)) for k, h in d["ver_tilde"]),
            ver_hat=tuple(((int(k[0]), int(k[1])), int(h)) for k, h in d["ver_hat"]),
            n_i=int(d["n_i"]),
        )


def invariant_profile(M) -> InvariantProfile:
    M = as_matrix(M)
    rows = M.letter_rows()
    cols = list(zip(*rows))
    row_i = [r.count(0) for r in rows]
    col_i = [c.count(0) for c in cols]
    col_xz = [abs(c.count(1) - c.count(2)) for c in cols]
    return InvariantProfile(
        hor=_value_multiplicities(row_i),
        ver=_value_multiplicities(col_i),
        ver_tilde=_value_multiplicities(col_xz),
        ver_hat=_value_multiplicities(zip(col_i, col_xz)),
        n_i=sum(row_i),
    )


# --- canonical form ---------------------------------------------------------
#
# The canonical form is min over column moves g of sorted(g(M)) compared as
# tuples of packed codes.  It is built row by row: the columns are kept as an
# ordered partition into cells (columns a placed row cannot tell apart) plus a
# per-column transmutation that is either fixed or still free.  The next row
# is the one with the smallest best-case image; ties branch.


class _Smaller(Exception):
    pass


def _image(row, cells, trans) -> int:
    v = 0
    for cell in cells:
        if len(cell) == 1:
            c = cell[0]
            l = row[c]
            t = trans[c]
            if t is None:
                l = 1 if l else 0
            elif t:
                l = _SWAP[l]
            v = (v << 2) | l
        else:
            ls = []
            for c in cell:
                l = row[c]
                t = trans[c]
                if t is None:
                    l = 1 if l else 0
                elif t:
                    l = _SWAP[l]
                ls.append(l)
            ls.sort()
            for l in ls:
                v = (v << 2) | l
    return v


def _refine(row, cells, trans):
    trans = list(trans)
    out = []
    for cell in cells:
        if len(cell) == 1:
            c = cell[0]
            if trans[c] is None and row[c]:
                trans[c] = row[c] == 2
            out.append(cell)
            continue
        buckets = ([], [], [], [])
        for c in cell:
            l = row[c]
            t = trans[c]
            if t is None:
                if l:
                    trans[c] = l == 2
                    l = 1
            elif t:
                l = _SWAP[l]
            buckets[l].append(c)
        out.extend(tuple(b) for b in buckets if b)
    return out, trans


def _canon_search(rows, m: int, frozen: Sequence[int] = (), target=None):
    """Return the minimal sorted code tuple.

    With ``target`` (a sorted code tuple of the same rows) raise ``_Smaller``
    as soon as something smaller than ``target`` is found.
    """
    p = len(rows)
    best = list(target) if target is not None else None
    path: list[int] = []
    trans0 = [0 if c in frozen else None for c in range(m)]

    def rec(remaining, cells, trans, tight):
        nonlocal best
        k = len(path)
        imgs = [_image(rows[r], cells, trans) for r in remaining]
        mn = min(imgs)
        if tight:
            b = best[k]
            if mn > b:
                return
            if mn < b:
                if target is not None:
                    raise _Smaller
                tight = False
        path.append(mn)
        if k == p - 1:
            if not tight:
                best = list(path)
            path.pop()
            return
        ties = [r for r, v in zip(remaining, imgs) if v == mn]
        for r in ties:
            c2, t2 = _refine(rows[r], cells, trans)
            rest = [x for x in remaining if x != r]
            rec(rest, c2, t2, best is not None and path == best[: k + 1])
        path.pop()

    rec(list(range(p)), [tuple(range(m))], trans0, best is not None)
    return tuple(best)


def _a_columns(rows, m):
    return [j for j in range(m) if any(r[j] == 3 for r in rows)]


def canonical_codes(codes: Sequence[int], m: int) -> tuple[int, ...]:
    rows = [unpack(c, m) for c in codes]
    return _canon_search(rows, m, _a_columns(rows, m))


def is_canonical_codes(codes: Sequence[int], m: int) -> bool:
    """True iff the ascending code tuple ``codes`` is its own canonical form."""
    rows = [unpack(c, m) for c in codes]
    try:
        _canon_search(rows, m, _a_columns(rows, m), target=codes)
    except _Smaller:
        return False
    return True


@dataclass(frozen=True)
class CanonicalForm:
    matrix: WordMatrix
    alphabet: int

    @property
    def codes(self) -> tuple[int, ...]:
        return self.matrix.codes


def canonical_form(M) -> CanonicalForm:
    """Least row-major letter string over the equivalence class, rows ascending.

    Equal for two matrices iff they are related by group moves.
    """
    if isinstance(M, CanonicalForm):
        M = M.matrix
    M = as_matrix(M)
    m = M.m
    codes = canonical_codes(M.codes, m)
    return CanonicalForm(WordMatrix(Word.from_code(c, m) for c in codes), 4 if M.has_a() else 3)


def equivalent(M1, M2) -> bool:
    M1, M2 = as_matrix(M1), as_matrix(M2)
    if (M1.p, M1.m) != (M2.p, M2.m):
        return False
    return canonical_form(M1) == canonical_form(M2)
