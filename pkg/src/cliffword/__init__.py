"""Alphabetic presentations of Clifford algebras.

Gamma bases are written as equal-length words over ``I, X, Z, A`` (each word
an implicit tensor product of four real 2x2 matrices).  The package verifies
such bases, classifies them up to the alphabetic equivalence group, runs the
known constructions and enumerates all classes of simple, maximally extended
3-letter bases at a fixed word length.
"""

__version__ = "0.1.0"

from .words import (  # noqa: E402
    Char,
    Signature,
    Word,
    WordMatrix,
    as_matrix,
    char_anticommutes,
    is_maximally_extended,
    is_simple,
    verify_gamma_basis,
    word_square_sign,
    words_anticommute,
)
from .equivalence import (  # noqa: E402
    CanonicalForm,
    ColumnPermutation,
    ColumnTransmutation,
    InvariantProfile,
    RowPermutation,
    apply_move,
    canonical_form,
    equivalent,
    invariant_profile,
    simplify,
)
from .constructions import (  # noqa: E402
    CombineInput,
    combine,
    concat_product,
    cyclic_basis,
    eliminate_A,
    extend_simple,
    min_length_4char,
)
from .search import (  # noqa: E402
    ClassCatalog,
    build_graph,
    enumerate_classes,
    max_p,
    min_length_3char,
)

__all__ = [
    "Char", "Signature", "Word", "WordMatrix", "as_matrix", "char_anticommutes",
    "is_maximally_extended", "is_simple", "verify_gamma_basis", "word_square_sign",
    "words_anticommute", "CanonicalForm", "ColumnPermutation", "ColumnTransmutation",
    "InvariantProfile", "RowPermutation", "apply_move", "canonical_form", "equivalent",
    "invariant_profile", "simplify", "CombineInput", "combine", "concat_product",
    "cyclic_basis", "eliminate_A", "extend_simple", "min_length_4char", "ClassCatalog",
    "build_graph", "enumerate_classes", "max_p", "min_length_3char",
]
