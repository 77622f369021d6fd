"""Command-line front end: ``wmat <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import algebra, enumeration, primitives, verify
from .words import (
    WordError,
    admissible_cuts,
    as_packed,
    factor_irreducible,
    format_word,
    pack,
    parse_word,
)

SEED_ENV = "WMAT_SEED"
PRIMITIVES_GRADE_CAP = 5


class UsageError(Exception):
    pass


def _packed_arg(text: str):
    w = parse_word(text)
    try:
        return as_packed(w)
    except WordError as exc:
        raise UsageError(f"{exc}; run `wmat pack {text}` first") from None


def _emit(args, text: str, payload) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _element_json(e: algebra.Element) -> list:
    return [[format_word(w), algebra.format_scalar(c)] for w, c in e.items()]


def _tensor_json(t: algebra.Tensor) -> list:
    return [[[format_word(w) for w in key], algebra.format_scalar(c)] for key, c in t.items()]


# ------------------------------------------------------------------ commands


def cmd_pack(args) -> int:
    w = pack(parse_word(args.word))
    _emit(args, format_word(w), {"word": format_word(w)})
    return 0


def cmd_mul(args) -> int:
    u, v = _packed_arg(args.u), _packed_arg(args.v)
    e = algebra.basis(u) * algebra.basis(v)
    _emit(args, str(e), {"element": _element_json(e)})
    return 0


def cmd_coproduct(args) -> int:
    t = algebra.coproduct(_packed_arg(args.word))
    _emit(args, str(t), {"tensor": _tensor_json(t)})
    return 0


def cmd_antipode(args) -> int:
    e = algebra.antipode(_packed_arg(args.word))
    _emit(args, str(e), {"element": _element_json(e)})
    return 0


def cmd_factor(args) -> int:
    factors = factor_irreducible(_packed_arg(args.word))
    rendered = [format_word(f) for f in factors]
    _emit(args, " * ".join(rendered), {"factors": rendered})
    return 0


def cmd_enumerate(args) -> int:
    n, k = args.n, args.sup
    if n < 0 or (k is not None and k < 0):
        raise UsageError("n and --sup must be >= 0")

    def stream():
        words = enumeration.generate_packed(n) if k is None else enumeration.generate_packed_with_sup(n, k)
        if args.irreducible:
            words = (w for w in words if w and not admissible_cuts(w))
        return words

    if args.count_only:
        if args.irreducible and k is None:
            count = enumeration.count_in(n) if n else 0
        elif args.irreducible:
            count = sum(1 for _ in stream())
        elif k is None:
            count = enumeration.count_dn(n)
        else:
            count = enumeration.count_dnk(n, k) if k <= n else 0
        _emit(args, str(count), {"count": count})
        return 0
    if args.format == "json":
        print(json.dumps({"words": [format_word(w) for w in stream()]}))
    else:
        for w in stream():
            print(format_word(w))
    return 0


def cmd_table(args) -> int:
    N = args.max_n
    if N < 0:
        raise UsageError("--max-n must be >= 0")
    fmt = args.format
    if args.kind == "dnk":
        table = enumeration.dnk_table(N)
        if fmt == "json":
            print(json.dumps({"kind": "dnk", "rows": table}))
        elif fmt == "pretty":
            width = max(len(str(x)) for row in table for x in row)
            lines = ["n\\k " + " ".join(f"{k:>{width}}" for k in range(N + 1))]
            for n, row in enumerate(table):
                lines.append(f"{n:>3} " + " ".join(f"{x:>{width}}" for x in row))
            print("\n".join(lines))
        else:
            print("n,k,d")
            for n, row in enumerate(table):
                for k, x in enumerate(row):
                    print(f"{n},{k},{x}")
        return 0
    values = enumeration.dn_table(N) if args.kind == "dn" else enumeration.in_table(N)
    col = "d" if args.kind == "dn" else "i"
    if fmt == "json":
        print(json.dumps({"kind": args.kind, "values": values}))
    elif fmt == "pretty":
        width = max(len(str(x)) for x in values + [N])
        print("n   " + " ".join(f"{n:>{width}}" for n in range(N + 1)))
        print(f"{col}_n " + " ".join(f"{x:>{width}}" for x in values))
    else:
        print(f"n,{col}")
        for n, x in enumerate(values):
            print(f"{n},{x}")
    return 0


def cmd_primitives(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("grade must be >= 1")
    if n > PRIMITIVES_GRADE_CAP:
        if not args.max_grade_override:
            raise UsageError(
                f"grade {n} exceeds the default cap {PRIMITIVES_GRADE_CAP}; pass --max-grade-override"
            )
        print(
            f"warning: grade {n} has {enumeration.count_dn(n)} columns; this may use a lot of memory",
            file=sys.stderr,
        )
    pb = primitives.primitive_basis(n)
    header = f"grade={n} dim={pb.dim} rows={pb.rows} cols={pb.cols}"
    if args.format == "json":
        print(
            json.dumps(
                {
                    "grade": n,
                    "dim": pb.dim,
                    "rows": pb.rows,
                    "cols": pb.cols,
                    "basis": [_element_json(v) for v in pb.vectors],
                },
                sort_keys=True,
            )
        )
    else:
        print(header)
        for v in pb.vectors:
            print(v)
    return 0


def cmd_verify(args) -> int:
    if args.max_len < 1 or args.trials < 1:
        raise UsageError("--max-len and --trials must be >= 1")
    try:
        laws = verify.resolve_laws(args.laws)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    report = verify.run_verify(args.max_len, args.trials, args.seed, laws, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(report.to_text(timing=args.timing))
    return 0 if report.ok else 1


# -------------------------------------------------------------------- parser


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmat", description="Hopf algebra of packed words")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("pack", cmd_pack, "pack a word")
    p.add_argument("word")

    p = add("mul", cmd_mul, "shifted-concatenation product of two packed words")
    p.add_argument("u")
    p.add_argument("v")

    p = add("coproduct", cmd_coproduct, "selection-quotient coproduct of a packed word")
    p.add_argument("word")

    p = add("antipode", cmd_antipode, "antipode of a packed word")
    p.add_argument("word")

    p = add("factor", cmd_factor, "factor a packed word into irreducibles")
    p.add_argument("word")

    p = add("enumerate", cmd_enumerate, "list or count packed words of length n")
    p.add_argument("n", type=int)
    p.add_argument("--sup", type=int, default=None, help="only words with this largest letter")
    p.add_argument("--irreducible", action="store_true", help="only irreducible words")
    p.add_argument("--count-only", action="store_true", help="print the count instead of the words")

    p = add("table", cmd_table, "count tables d(n,k), d_n, i_n", formats=("csv", "pretty", "json"))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--kind", choices=("dnk", "dn", "in"), default="dnk")

    p = add("primitives", cmd_primitives, "basis of the primitive elements of length n")
    p.add_argument("n", type=int)
    p.add_argument(
        "--max-grade-override",
        action="store_true",
        help=f"allow grades above {PRIMITIVES_GRADE_CAP}",
    )

    p = add("verify", cmd_verify, "check the Hopf algebra laws exhaustively and on random words")
    p.add_argument("--max-len", type=int, default=7)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default: ${SEED_ENV} or 0)")
    p.add_argument(
        "--laws",
        nargs="+",
        default=["all"],
        help="comma or space separated: " + ", ".join(verify.LAWS) + ", all",
    )
    p.add_argument("--jobs", type=int, default=1, help="worker processes for random trials")
    p.add_argument("--timing", action="store_true", help="include elapsed times in the report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return args.func(args)
    except (UsageError, WordError) as exc:
        print(f"wmat {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
