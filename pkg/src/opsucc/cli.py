"""``opsucc`` command line.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .catalog import UnknownPresentation, available, catalog, is_catalog_name, stored_map
from .linalg import format_rational
from .matrix_alg import (DEND_ON_ZINBIEL_MATRICES, AlgebraError, FiniteAlgebra,
                         algebra_relation_check, matrix_relation_check, shuffle_zinbiel,
                         transpose_law_check, zinbiel_2dim)
from .notation import format_sum, glyph_map
from .presentation import Presentation, PresentationError, equivalent, generator_orbits
from .properties import presentation_properties
from .report import Report
from .rota_baxter import verify_successor_rb
from .successor import Kind, iterate
from .symmetry import all_sigma_automorphisms, group_morphism_check, verify_automorphism
from .trees import DEFAULT_ARITY_LIMIT, ResourceLimitError, TreeError, parse_cycles

BUILTIN_ALGEBRAS = {"zinbiel2": zinbiel_2dim}


class UsageError(Exception):
    pass


def resolve(name_or_file: str) -> Presentation:
    """Catalog names win over file paths."""
    if is_catalog_name(name_or_file):
        return catalog(name_or_file)
    path = Path(name_or_file)
    if path.is_file():
        return formats.load(path)
    raise UsageError(f"{name_or_file!r} is neither a catalog name nor a presentation file; "
                     f"catalog: {', '.join(available())}")


def resolve_algebra(name_or_file: str) -> FiniteAlgebra:
    if name_or_file in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[name_or_file]()
    if name_or_file.startswith("shuffle"):
        try:
            return shuffle_zinbiel(int(name_or_file[len("shuffle"):] or 4))
        except ValueError:
            raise UsageError(f"bad shuffle algebra name {name_or_file!r}") from None
    path = Path(name_or_file)
    if path.is_file():
        try:
            return FiniteAlgebra.from_json(json.loads(path.read_text(encoding="utf-8")))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: not JSON ({exc})") from None
    raise UsageError(f"unknown algebra {name_or_file!r}; built-in: zinbiel2, shuffleN, or a JSON file")


def format_presentation(p: Presentation) -> str:
    glyphs = glyph_map(p.generators, p.glyphs)
    mode = "symmetric" if p.symmetric else "nonsymmetric"
    orbits = generator_orbits(p)
    lines = [f"{p.name} ({mode}, {len(p.generators)} generators in {len(orbits)} orbits, "
             f"{len(p.relations)} relations)"]
    for g in p.generators:
        shown = glyphs[g].strip()
        act = ""
        if p.symmetric:
            img = " + ".join(f"{format_rational(c)}*{h}" if c != 1 else h
                             for h, c in sorted(p.action[g].items()))
            act = f"   (12): {img}"
        lines.append(f"  {g}  [{shown}]{act}")
    for i, r in enumerate(p.relations, 1):
        lines.append(f"  R{i}: {format_sum(r, glyphs)}")
    for i, why in sorted(p.flagged.items()):
        lines.append(f"  flagged transcription {i}: {why}")
    return "\n".join(lines)


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _report(args, rep: Report) -> int:
    _emit(args, rep.dumps() if args.json else rep.format_text())
    return 0 if rep.passed else 1


def _kind(args) -> Kind:
    return Kind.BI if args.kind == "bi" else Kind.TRI


# commands -----------------------------------------------------------------

def cmd_show(args) -> int:
    p = resolve(_need_target(args))
    _emit(args, formats.dumps(p) if args.json else format_presentation(p))
    return 0


def cmd_succ(args) -> int:
    p = resolve(_need_target(args))
    q = iterate(p, _kind(args), args.n)
    _emit(args, formats.dumps(q) if args.json else format_presentation(q))
    return 0


def cmd_equiv(args) -> int:
    left = args.source or args.target
    right = args.dest
    if not left or not right:
        raise UsageError("equiv needs --from NAME and --to NAME")
    p, q = resolve(left), resolve(right)
    if args.map:
        f = formats.map_from_json_text(Path(args.map).read_text(encoding="utf-8"))
    else:
        f = stored_map(p, q)
        if f is None:
            raise UsageError(f"no stored map between {p.name} and {q.name}; pass --map FILE")
    return _report(args, equivalent(p, q, f, limit=args.arity_limit))


def cmd_check_rb(args) -> int:
    p = resolve(_need_target(args))
    return _report(args, verify_successor_rb(p, _kind(args), args.weight))


def cmd_check_symmetry(args) -> int:
    p = resolve(_need_target(args))
    kind, n = _kind(args), args.n
    if args.perm:
        try:
            sigma = parse_cycles(args.perm, n)
        except (TreeError, ValueError) as exc:
            raise UsageError(f"bad permutation {args.perm!r}: {exc}") from None
        if len(sigma) != n:
            raise UsageError(f"permutation {args.perm!r} does not act on {n} decorations")
        rep = verify_automorphism(p, kind, n, sigma)
    else:
        rep = all_sigma_automorphisms(p, kind, n)
        if n <= 3:
            rep.extend(group_morphism_check(p, kind, n), prefix="group: ")
    return _report(args, rep)


def cmd_check_matrix(args) -> int:
    a = resolve_algebra(args.target or "zinbiel2")
    against = resolve(args.against)
    rep = Report("check-matrix", {"algebra": args.target or "zinbiel2", "presentation": against.name,
                                  "size": args.size, "trials": args.trials, "seed": args.seed})
    rep.extend(algebra_relation_check(a, against, args.trials, args.seed), prefix="algebra: ")
    if args.map:
        raw = json.loads(Path(args.map).read_text(encoding="utf-8"))
        ns = resolve(raw.get("presentation", "Dend"))
        op_map = {g: [(t[0], t[1], bool(t[2])) for t in terms] for g, terms in raw["operations"].items()}
    else:
        ns, op_map = catalog("Dend"), DEND_ON_ZINBIEL_MATRICES
    rep.extend(matrix_relation_check(ns, a, op_map, args.size, args.trials, args.seed),
               prefix="matrices: ")
    if "dot" in a.operations:
        rep.extend(transpose_law_check(a, args.size, args.trials, args.seed), prefix="transpose: ")
    return _report(args, rep)


def cmd_props(args) -> int:
    p = resolve(_need_target(args))
    kind = _kind(args) if args.kind else None
    return _report(args, presentation_properties(p, kind))


def _need_target(args) -> str:
    if not args.target:
        raise UsageError(f"{args.command} needs a presentation NAME or FILE")
    return args.target


COMMANDS = {
    "show": cmd_show, "succ": cmd_succ, "equiv": cmd_equiv, "check-rb": cmd_check_rb,
    "check-symmetry": cmd_check_symmetry, "check-matrix": cmd_check_matrix, "props": cmd_props,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="opsucc", description="Successors of binary operads.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("target", nargs="?", metavar="NAME|FILE")
    ap.add_argument("--kind", choices=("bi", "tri"))
    ap.add_argument("--n", type=int, default=1, help="number of successor iterations")
    ap.add_argument("--weight", type=int, choices=(0, 1))
    ap.add_argument("--perm", help='permutation in cycle notation, e.g. "(12)"')
    ap.add_argument("--map", help="generator map JSON file")
    ap.add_argument("--from", dest="source")
    ap.add_argument("--to", dest="dest")
    ap.add_argument("--against", default="Zinbiel", help="presentation the algebra should satisfy")
    ap.add_argument("--size", type=int, default=2)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--arity-limit", type=int, default=DEFAULT_ARITY_LIMIT)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("-o", "--output")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_intermixed_args(argv)
    if args.kind is None and args.command not in ("props", "show", "equiv", "check-matrix"):
        args.kind = "bi"
    if args.n < 1 or args.size < 1 or args.trials < 1:
        ap.error("--n, --size and --trials must be positive")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, UnknownPresentation, PresentationError, AlgebraError,
            ResourceLimitError, TreeError, OSError, ValueError) as exc:
        print(f"opsucc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
