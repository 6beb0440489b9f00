"""Basis files, catalog files and text rendering."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .equivalence import InvariantProfile
from .errors import BadCharacter, Empty, ParseError, RaggedRows
from .search import CatalogClass, ClassCatalog
from .words import LETTERS, Word, WordMatrix, as_matrix


def parse_basis(text: str) -> WordMatrix:
    """One word per line; ``#`` comments and blank lines are skipped."""
    words = []
    m = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for col, ch in enumerate(line, start=1):
            if ch not in LETTERS:
                raise BadCharacter(lineno, col, ch)
        if m is None:
            m = len(line)
        elif len(line) != m:
            raise RaggedRows(lineno, m, len(line))
        words.append(Word(line))
    if not words:
        raise Empty()
    return WordMatrix(words)


def format_basis(M) -> str:
    return "".join(f"{w}\n" for w in as_matrix(M))


def read_basis(path: Union[str, Path]) -> WordMatrix:
    return parse_basis(Path(path).read_text(encoding="utf-8"))


# --- catalogs ---------------------------------------------------------------


def catalog_to_dict(c: ClassCatalog) -> dict:
    return {
        "m": c.m,
        "alphabet": c.alphabet,
        "provenance": c.provenance,
        "classes": [
            {
                "p": k.p,
                "representative": [str(w) for w in k.representative],
                "invariants": k.profile.to_dict(),
            }
            for k in c.classes
        ],
    }


def catalog_from_dict(d: dict) -> ClassCatalog:
    try:
        classes = []
        for entry in d["classes"]:
            M = WordMatrix(entry["representative"])
            if M.p != entry["p"]:
                raise ParseError(f"class lists p={entry['p']} but has {M.p} words")
            classes.append(CatalogClass(M, InvariantProfile.from_dict(entry["invariants"])))
        return ClassCatalog(int(d["m"]), classes, int(d["alphabet"]), dict(d.get("provenance", {})))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed catalog: {exc}") from None


def serialize_catalog(c: ClassCatalog) -> str:
    """Deterministic JSON, one class per line."""
    d = catalog_to_dict(c)
    head = [
        "{",
        f'  "m": {json.dumps(d["m"])},',
        f'  "alphabet": {json.dumps(d["alphabet"])},',
        f'  "provenance": {json.dumps(d["provenance"], sort_keys=True)},',
    ]
    if not d["classes"]:
        return "\n".join(head + ['  "classes": []', "}"]) + "\n"
    body = ",\n".join("    " + json.dumps(k, separators=(",", ":")) for k in d["classes"])
    return "\n".join(head + ['  "classes": [', body, "  ]", "}"]) + "\n"


def parse_catalog(text: str) -> ClassCatalog:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"catalog is not valid JSON: {exc}") from None
    return catalog_from_dict(d)


def render_text(c: ClassCatalog) -> str:
    counts = " ".join(f"{p}:{n}" for p, n in c.p_counts().items())
    lines = [f"# m={c.m} alphabet={LETTERS[:c.alphabet]} classes={len(c)}"]
    if counts:
        lines.append(f"# classes per p: {counts}")
    for k, cls in enumerate(c.classes, start=1):
        lines.append("")
        lines.append(f"[{k}] p={cls.p}  [{cls.profile.format()}]")
        lines.extend(f"    {w}" for w in cls.representative)
    return "\n".join(lines) + "\n"


def render_catalog(c: ClassCatalog, format: str = "text") -> str:
    if format == "text":
        return render_text(c)
    if format == "structured":
        return serialize_catalog(c)
    raise ValueError(f"unknown format {format!r}")


def golden_path(m: int) -> Path:
    return Path(str(resources.files("cliffword") / "data" / f"catalog_m{m}.json"))


def load_bundled_catalog(m: int) -> Optional[ClassCatalog]:
    path = golden_path(m)
    if not path.exists():
        return None
    return parse_catalog(path.read_text(encoding="utf-8"))
