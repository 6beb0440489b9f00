"""scikit-learn style wrappers.

Inputs ``X`` are sequences of bases; each basis may be a WordMatrix, a list
of words or a whitespace separated string.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .equivalence import canonical_form, invariant_profile
from .search import ClassCatalog, catalog_from_canonical, enumerate_classes
from .words import WordMatrix, as_matrix


def check_bases(X, m=None) -> list[WordMatrix]:
    """Coerce ``X`` into a list of WordMatrix; optionally require word length ``m``."""
    if isinstance(X, (str, WordMatrix)):
        raise TypeError("X must be a sequence of bases, not a single basis")
    out = [as_matrix(x) for x in X]
    if m is not None:
        bad = [k for k, M in enumerate(out) if M.m != m]
        if bad:
            raise ValueError(f"bases {bad} do not have word length {m}")
    return out


class InvariantProfiler(TransformerMixin, BaseEstimator):
    """Stateless transformer mapping each basis to its :class:`InvariantProfile`.

    With ``as_array=True`` the output is a numeric array of summary columns
    ``(p, m, N_I, len(hor), len(ver), len(ver_hat))``.
    """

    def __init__(self, as_array: bool = False):
        self.as_array = as_array

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        bases = check_bases(X)
        profiles = [invariant_profile(M) for M in bases]
        if not self.as_array:
            return profiles
        rows = []
        for M, prof in zip(bases, profiles):
            rows.append((M.p, M.m, prof.n_i, len(prof.hor), len(prof.ver), len(prof.ver_hat)))
        return np.asarray(rows, dtype=np.int64).reshape(len(rows), 6)


class Canonicalizer(TransformerMixin, BaseEstimator):
    """Stateless transformer returning canonical representatives."""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        return [canonical_form(M).matrix for M in check_bases(X)]


class ClassIdentifier(ClassifierMixin, BaseEstimator):
    """Assigns bases to equivalence classes of a catalog.

    ``fit()`` without data runs the exhaustive search at ``letters``;
    ``fit(X)`` builds the catalog from the classes present in ``X``.
    ``predict`` returns class indices, ``-1`` for bases outside the catalog.
    """

    def __init__(self, letters: int = 3, threads=None):
        self.letters = letters
        self.threads = threads

    def fit(self, X=None, y=None):
        if X is None:
            self.catalog_ = enumerate_classes(self.letters, self.threads)
        else:
            bases = check_bases(X, self.letters)
            keys = [canonical_form(M).codes for M in bases]
            self.catalog_ = catalog_from_canonical(self.letters, keys, "fitted")
        self._index = {c.representative.codes: k for k, c in enumerate(self.catalog_.classes)}
        self.classes_ = np.arange(len(self.catalog_))
        return self

    @classmethod
    def from_catalog(cls, catalog: ClassCatalog) -> "ClassIdentifier":
        est = cls(letters=catalog.m)
        est.catalog_ = catalog
        est._index = {c.representative.codes: k for k, c in enumerate(catalog.classes)}
        est.classes_ = np.arange(len(catalog))
        return est

    def predict(self, X):
        check_is_fitted(self, "catalog_")
        out = []
        for M in check_bases(X):
            if M.m != self.catalog_.m:
                out.append(-1)
                continue
            out.append(self._index.get(canonical_form(M).codes, -1))
        return np.asarray(out, dtype=np.int64)
