"""Command line interface.

Exit codes: 0 success, 1 domain error (or "not equivalent" for ``equiv``),
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .constructions import combine, concat_product, cyclic_basis, eliminate_A, extend_simple, min_length_4char
from .equivalence import canonical_form, equivalent, invariant_profile, simplify
from .errors import CliffwordError, ParseError
from .io import format_basis, golden_path, load_bundled_catalog, parse_basis, render_catalog, serialize_catalog
from .oracle import check_clifford
from .search import enumerate_classes, resolve_threads
from .words import is_maximally_extended, is_simple, verify_gamma_basis

TABLE_P = range(2, 19)


def _read(path: str):
    if path == "-":
        return parse_basis(sys.stdin.read())
    return parse_basis(Path(path).read_text(encoding="utf-8"))


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_verify(args) -> int:
    M = _read(args.file)
    sig = verify_gamma_basis(M)
    alphabet = args.alphabet or (4 if M.has_a() else 3)
    maximal, ext = is_maximally_extended(M, alphabet)
    lines = [
        f"signature: ({sig.p},{sig.q})",
        f"euclidean: {'yes' if sig.euclidean else 'no'}",
        f"p={M.p} m={M.m}",
        f"simple: {'yes' if is_simple(M) else 'no'}",
        f"maximally extended ({alphabet}-char): {'yes' if maximal else 'no'}",
    ]
    if ext:
        lines.append("extensions: " + " ".join(str(w) for w in ext))
    if args.oracle:
        ok = check_clifford(M)
        lines.append(f"matrix oracle: {'agrees' if ok else 'DISAGREES'}")
        if not ok:
            _emit("\n".join(lines))
            return 1
    _emit("\n".join(lines))
    return 0


def cmd_invariants(args) -> int:
    prof = invariant_profile(_read(args.file))
    if args.format == "structured":
        _emit(json.dumps(prof.to_dict()))
    else:
        _emit(prof.format())
    return 0


def cmd_canon(args) -> int:
    _emit(format_basis(canonical_form(_read(args.file)).matrix))
    return 0


def cmd_equiv(args) -> int:
    same = equivalent(_read(args.file1), _read(args.file2))
    _emit("equivalent" if same else "not equivalent")
    return 0 if same else 1


def cmd_simplify(args) -> int:
    _emit(format_basis(simplify(_read(args.file))))
    return 0


def cmd_search(args) -> int:
    cat = enumerate_classes(args.letters, threads=resolve_threads(args.threads))
    text = render_catalog(cat, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        _emit(f"wrote {len(cat)} classes to {args.out}")
    else:
        _emit(text)
    return 0


def cmd_extend(args) -> int:
    _emit(format_basis(extend_simple(_read(args.file))))
    return 0


def cmd_combine(args) -> int:
    a = _read(args.a) if args.a else ()
    _emit(format_basis(combine(a, _read(args.b1), _read(args.b2))))
    return 0


def cmd_cyclic(args) -> int:
    _emit(format_basis(cyclic_basis(args.n)))
    return 0


def cmd_concat(args) -> int:
    _emit(format_basis(concat_product(_read(args.file1), args.pick, _read(args.file2))))
    return 0


def cmd_eliminate_a(args) -> int:
    _emit(format_basis(eliminate_A(_read(args.file))))
    return 0


def _max_p_table(cap: int, recompute: bool, threads) -> dict[int, int]:
    out = {}
    for m in range(1, cap + 1):
        cat = None if recompute else load_bundled_catalog(m)
        if cat is None:
            cat = enumerate_classes(m, threads)
        out[m] = cat.max_p
    return out


def _min_from_max_p(p: int, max_ps: dict[int, int]):
    for m in sorted(max_ps):
        if max_ps[m] >= p:
            return m
    return None


def cmd_minlen(args) -> int:
    if args.p < 2:
        raise CliffwordError("p must be >= 2")
    if args.chars == 4:
        _emit(str(min_length_4char(args.p)))
        return 0
    m = _min_from_max_p(args.p, _max_p_table(args.cap, args.recompute, resolve_threads(args.threads)))
    _emit("Unknown" if m is None else str(m))
    return 0


def _length_table(max_ps: dict[int, int]) -> str:
    def row(label, values):
        return f"{label:<3}|" + "".join(f"{v:>4}" for v in values)

    return "\n".join(
        [
            row("p", TABLE_P),
            row("m", [min_length_4char(p) for p in TABLE_P]),
            row("m~", [_min_from_max_p(p, max_ps) or "?" for p in TABLE_P]),
        ]
    )


def cmd_tables(args) -> int:
    cap = args.max_letters
    threads = resolve_threads(args.threads)
    status = 0
    max_ps = {}
    for m in range(1, cap + 1):
        golden = golden_path(m)
        if args.reproduce:
            cat = enumerate_classes(m, threads)
            fresh = serialize_catalog(cat)
            if not golden.exists():
                verdict = "no golden file"
                status = 1
            elif golden.read_text(encoding="utf-8") == fresh:
                verdict = "matches golden"
            else:
                verdict = "DIFFERS from golden"
                status = 1
        else:
            cat = load_bundled_catalog(m)
            if cat is None:
                raise CliffwordError(f"no bundled catalog for m={m}")
            verdict = "bundled"
        max_ps[m] = cat.max_p
        counts = " ".join(f"{p}:{n}" for p, n in cat.p_counts().items())
        _emit(f"m={m}: {len(cat)} classes (p:count {counts}), max p={cat.max_p} [{verdict}]")
        if m in (3, 4):
            _emit(render_catalog(cat, "text"))
    _emit("")
    _emit(_length_table(max_ps))
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cliffword", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="signature, simplicity, maximal extension")
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true", help="cross-check with explicit matrices")
    s.add_argument("--alphabet", type=int, choices=(3, 4))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("invariants", help="the five equivalence invariants")
    s.add_argument("file")
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("canon", help="canonical representative")
    s.add_argument("file")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("equiv", help="exit 0 iff the two bases are equivalent")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("simplify", help="erase erasable columns")
    s.add_argument("file")
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("search", help="enumerate classes at fixed word length")
    s.add_argument("--letters", type=int, required=True)
    s.add_argument("--out")
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.add_argument("--threads", type=int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("extend", help="g_i X plus I..IZ")
    s.add_argument("file")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("combine", help="{A I, B1 X, B2 Z}")
    s.add_argument("--a", help="file with the A words (omit for empty A, '-' for stdin)")
    s.add_argument("--b1", required=True)
    s.add_argument("--b2", required=True)
    s.set_defaults(func=cmd_combine)

    s = sub.add_parser("cyclic", help="cyclic prescription for a given n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_cyclic)

    s = sub.add_parser("concat", help="{g C2, (C1 - g) I..I}")
    s.add_argument("file1")
    s.add_argument("--pick", type=int, required=True)
    s.add_argument("file2")
    s.set_defaults(func=cmd_concat)

    s = sub.add_parser("eliminate-a", help="rewrite a Euclidean basis without A")
    s.add_argument("file")
    s.set_defaults(func=cmd_eliminate_a)

    s = sub.add_parser("minlen", help="minimal word length for p generators")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--chars", type=int, choices=(3, 4), default=4)
    s.add_argument("--cap", type=int, default=6)
    s.add_argument("--recompute", action="store_true", help="search instead of using bundled catalogs")
    s.add_argument("--threads", type=int)
    s.set_defaults(func=cmd_minlen)

    s = sub.add_parser("tables", help="classification and minimal-length tables")
    s.add_argument("--reproduce", action="store_true", help="re-run the searches and diff against golden files")
    s.add_argument("--max-letters", type=int, choices=(4, 5, 6), default=4)
    s.add_argument("--threads", type=int)
    s.set_defaults(func=cmd_tables)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CliffwordError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
