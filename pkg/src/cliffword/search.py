"""Isomorph-free enumeration of simple, maximally extended 3-letter bases.

A Euclidean 3-letter basis of ``m``-letter words is a clique of the
anticommutation graph on the ``3^m - 1`` non-identity words, and maximal
extension is clique maximality.  Classes are generated orderly: a clique is
only grown from its own canonical prefix, words are appended in ascending
code order, and every prefix of a canonical form is itself canonical, so each
class is produced exactly once, as its canonical form.
"""
from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import __version__
from .equivalence import InvariantProfile, _canon_search, _Smaller, canonical_codes, invariant_profile
from .errors import CapExceeded
from .words import Word, WordMatrix, _low_mask, anticommute_codes, pack, unpack

log = logging.getLogger(__name__)

MAX_LETTERS = 8
THREADS_ENV = "CLIFFWORD_THREADS"


@dataclass(frozen=True)
class AnticommutationGraph:
    m: int
    codes: tuple[int, ...]
    adj: tuple[int, ...]  # bitsets over vertex indices
    letters: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def n_vertices(self) -> int:
        return len(self.codes)

    @property
    def n_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, word) -> int:
        w = Word(word)
        return self.adj[self.codes.index(w.code)].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def words(self) -> list[Word]:
        return [Word.from_code(c, self.m) for c in self.codes]


def _bits(x: int) -> list[int]:
    out = []
    while x:
        b = x & -x
        out.append(b.bit_length() - 1)
        x ^= b
    return out


def _check_m(m: int, cap: int) -> None:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > cap:
        raise CapExceeded(m, cap)


@lru_cache(maxsize=None)
def build_graph(m: int, cap: int = MAX_LETTERS) -> AnticommutationGraph:
    _check_m(m, cap)
    codes = tuple(
        sorted(pack(t) for t in itertools.product(range(3), repeat=m) if any(t))
    )
    n = len(codes)
    adj = [0] * n
    for i in range(n):
        ci = codes[i]
        for j in range(i + 1, n):
            if anticommute_codes(ci, codes[j], m):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return AnticommutationGraph(m, codes, tuple(adj), tuple(unpack(c, m) for c in codes))


# --- catalog ----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogClass:
    representative: WordMatrix
    profile: InvariantProfile

    @property
    def p(self) -> int:
        return self.representative.p


@dataclass
class ClassCatalog:
    m: int
    classes: list[CatalogClass]
    alphabet: int = 3
    provenance: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def max_p(self) -> int:
        return max((c.p for c in self.classes), default=0)

    def p_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.classes:
            out[c.p] = out.get(c.p, 0) + 1
        return dict(sorted(out.items(), reverse=True))

    def classify(self, M) -> Optional[int]:
        """Index of the class equivalent to ``M``, or None."""
        from .equivalence import canonical_form

        key = canonical_form(M).codes
        for k, c in enumerate(self.classes):
            if c.representative.codes == key:
                return k
        return None


def _provenance(m: int, method: str) -> dict:
    return {
        "tool": "cliffword",
        "version": __version__,
        "search": {"m": m, "method": method, "letter_order": "IXZ"},
    }


def catalog_from_canonical(m: int, keys, method: str) -> ClassCatalog:
    keys = sorted(set(keys), key=lambda k: (-len(k), k))
    classes = []
    for k in keys:
        M = WordMatrix(Word.from_code(c, m) for c in k)
        classes.append(CatalogClass(M, invariant_profile(M)))
    return ClassCatalog(m, classes, 3, _provenance(m, method))


# --- orderly generation -----------------------------------------------------


def _is_simple_codes(codes, m: int) -> bool:
    low = _low_mask(m)
    xs = zs = 0
    for c in codes:
        xs |= c & ~(c >> 1) & low
        zs |= (c >> 1) & ~c & low
    return xs & zs == low


def _grow(graph: AnticommutationGraph, letters, S: tuple, rows: list, last: int, P: int, out: list) -> None:
    if not P:
        if _is_simple_codes(S, graph.m):
            out.append(S)
        return
    m = graph.m
    cand = (P >> (last + 1)) << (last + 1)
    while cand:
        b = cand & -cand
        v = b.bit_length() - 1
        cand ^= b
        T = S + (graph.codes[v],)
        rows.append(letters[v])
        try:
            _canon_search(rows, m, (), target=T)
        except _Smaller:
            pass
        else:
            _grow(graph, letters, T, rows, v, P & graph.adj[v], out)
        rows.pop()


def _seeds(graph: AnticommutationGraph):
    """Canonical cliques of size 2 with their candidate sets, in code order."""
    m = graph.m
    letters = graph.letters
    full = (1 << graph.n_vertices) - 1
    for v0 in range(graph.n_vertices):
        S0 = (graph.codes[v0],)
        if canonical_codes(S0, m) != S0:
            continue
        P0 = full & graph.adj[v0]
        for v1 in _bits(P0 >> (v0 + 1) << (v0 + 1)):
            S1 = S0 + (graph.codes[v1],)
            try:
                _canon_search([letters[v0], letters[v1]], m, (), target=S1)
            except _Smaller:
                continue
            yield S1, v1, P0 & graph.adj[v1]


_WORKER_GRAPH: Optional[AnticommutationGraph] = None


def _init_worker(m: int, cap: int) -> None:
    global _WORKER_GRAPH
    _WORKER_GRAPH = build_graph(m, cap)


def _run_seed(seed) -> list:
    graph = _WORKER_GRAPH
    return _grow_seed(graph, seed)


def _grow_seed(graph, seed) -> list:
    S, last, P = seed
    m = graph.m
    out: list = []
    _grow(graph, graph.letters, S, [unpack(c, m) for c in S], last, P, out)
    return out


def resolve_threads(threads: Optional[int] = None) -> int:
    """Explicit argument wins, then ``CLIFFWORD_THREADS``, then 1. ``0`` means all CPUs."""
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        threads = int(env) if env else 1
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def enumerate_classes(m: int, threads: Optional[int] = None, cap: int = MAX_LETTERS) -> ClassCatalog:
    """All classes of simple, maximally extended 3-letter bases of ``m``-letter words."""
    graph = build_graph(m, cap)
    threads = resolve_threads(threads)
    seeds = list(_seeds(graph))
    log.info("m=%d: %d seeds, %d worker(s)", m, len(seeds), threads)
    if threads == 1 or len(seeds) < 2:
        parts = [_grow_seed(graph, s) for s in seeds]
    else:
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(m, cap)) as ex:
            parts = list(ex.map(_run_seed, seeds, chunksize=1))
    keys = [k for part in parts for k in part]
    return catalog_from_canonical(m, keys, "orderly-generation")


# --- unreduced reference path ------------------------------------------------


def _degeneracy_order(adj: list[int]) -> list[int]:
    n = len(adj)
    deg = [a.bit_count() for a in adj]
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        v = min(_bits(alive), key=lambda u: (deg[u], u))
        order.append(v)
        alive ^= 1 << v
        for u in _bits(adj[v] & alive):
            deg[u] -= 1
    return order


def maximal_cliques(graph: AnticommutationGraph):
    """Yield every maximal clique (as sorted vertex index tuples) by pivoting Bron-Kerbosch."""
    adj = graph.adj

    def bk(R, P, X):
        if not P and not X:
            yield tuple(sorted(R))
            return
        px = P | X
        pivot = max(_bits(px), key=lambda u: (P & adj[u]).bit_count())
        for v in _bits(P & ~adj[pivot]):
            yield from bk(R + [v], P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    P = (1 << graph.n_vertices) - 1
    X = 0
    for v in _degeneracy_order(list(adj)):
        yield from bk([v], P & adj[v], X & adj[v])
        P &= ~(1 << v)
        X |= 1 << v


def enumerate_classes_exhaustive(m: int, cap: int = 5) -> ClassCatalog:
    """Enumerate every maximal clique, then reduce by canonical form. Slow; for cross-checks."""
    graph = build_graph(m, cap)
    keys = []
    for clique in maximal_cliques(graph):
        codes = tuple(graph.codes[v] for v in clique)
        if _is_simple_codes(codes, m):
            keys.append(canonical_codes(codes, m))
    return catalog_from_canonical(m, keys, "exhaustive")


# --- derived quantities -----------------------------------------------------

_MAX_P: dict[int, int] = {}


def max_p(m: int, threads: Optional[int] = None, cap: int = MAX_LETTERS) -> int:
    """Largest number of generators of a 3-letter Euclidean basis of ``m``-letter words."""
    _check_m(m, cap)
    if m not in _MAX_P:
        _MAX_P[m] = enumerate_classes(m, threads, cap).max_p
    return _MAX_P[m]


def min_length_3char(p: int, m_cap: int = 6, threads: Optional[int] = None) -> Optional[int]:
    """Smallest ``m <= m_cap`` admitting ``p`` generators, or None when unknown within the cap."""
    if p < 2:
        raise ValueError("p must be >= 2")
    for m in range(1, m_cap + 1):
        if max_p(m, threads) >= p:
            return m
    return None
