"""Command line interface.

Subcommands: enumerate, product, act, descent-table, mult-table, verify.
All output is deterministic JSON on stdout.  Exit codes: 0 success,
1 verification/validation failure, 2 usage or parse error, 3 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coxfaces, descent_algebra, torusfaces, weyl
from .errors import (
    BudgetExceededError,
    SteintorusError,
    ValidationError,
)
from .weyl import ColorSet, Family


class _ParseError(Exception):
    pass


def _load_json_arg(text: str):
    """Inline JSON, or @path to read it from a file."""
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise _ParseError(f"cannot read {text[1:]}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _ParseError(f"invalid JSON: {exc}") from None


def _family(args) -> Family:
    return Family(args.family, args.rank)


def _color(args, family):
    if args.color is None:
        return None
    indices = _load_json_arg(args.color)
    if not isinstance(indices, list) or not all(isinstance(i, int) for i in indices):
        raise _ParseError("--color must be a JSON list of integers")
    return ColorSet(family, frozenset(indices))


def _emit(payload):
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _cmd_enumerate(args):
    family = _family(args)
    color = _color(args, family)
    if args.object == "group":
        if color is not None:
            raise ValidationError("--color applies to faces and torus objects")
        items = [list(w.values) for w in weyl.enumerate_group(family)]
    elif args.object == "faces":
        items = [
            coxfaces.to_wire(F) for F in coxfaces.enumerate_faces(family, color)
        ]
    elif args.object == "torus":
        items = [
            torusfaces.to_wire(N)
            for N in torusfaces.enumerate_torus_faces(family, color)
        ]
    else:  # pragma: no cover - argparse restricts choices
        raise ValidationError(f"unknown object {args.object!r}")
    if args.count:
        print(len(items))
    else:
        _emit(
            {
                "family": family.tag,
                "rank": family.rank,
                "object": args.object,
                "count": len(items),
                "items": items,
            }
        )
    return 0


def _cmd_product(args):
    family = _family(args)
    left = coxfaces.from_wire(family, _load_json_arg(args.left))
    right = coxfaces.from_wire(family, _load_json_arg(args.right))
    _emit(coxfaces.to_wire(coxfaces.tits_product(left, right)))
    return 0


def _cmd_act(args):
    family = _family(args)
    necklace = torusfaces.from_wire(family, _load_json_arg(args.torus))
    face = coxfaces.from_wire(family, _load_json_arg(args.face))
    _emit(torusfaces.to_wire(torusfaces.module_action(necklace, face)))
    return 0


def _cmd_descent_table(args):
    family = _family(args)
    rows = []
    for w in weyl.enumerate_group(family):
        row = {"w": list(w.values), "descents": weyl.descent_set(w).sorted()}
        if args.affine:
            row["affine_descents"] = weyl.affine_descent_set(w).sorted()
        rows.append(row)
    _emit(
        {
            "family": family.tag,
            "rank": family.rank,
            "affine": bool(args.affine),
            "rows": rows,
        }
    )
    return 0


def _cmd_mult_table(args):
    family = _family(args)
    if args.kind == "solomon":
        _emit(descent_algebra.solomon_table(family))
    else:
        _emit(descent_algebra.module_table(family))
    return 0


def _cmd_verify(args):
    family = _family(args)
    report = descent_algebra.verify(args.suite, family, seed=args.seed)
    _emit(report)
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steintorus",
        description=(
            "Face monoids of finite Coxeter complexes (types A and C), the "
            "Steinberg torus as a module over them, and descent-algebra "
            "verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--family", required=True, choices=("A", "C"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled property checks")

    p = sub.add_parser("enumerate", help="list faces, torus faces or group elements")
    common(p)
    p.add_argument("--object", required=True, choices=("faces", "torus", "group"))
    p.add_argument("--color", help="JSON list of simple-root indices to filter by")
    p.add_argument("--count", action="store_true", help="emit only the total")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("product", help="Tits product of two finite faces")
    common(p)
    p.add_argument("--left", required=True, help="face JSON (inline or @file)")
    p.add_argument("--right", required=True, help="face JSON (inline or @file)")
    p.set_defaults(run=_cmd_product)

    p = sub.add_parser("act", help="act by a finite face on a torus face")
    common(p)
    p.add_argument("--torus", required=True, help="necklace JSON (inline or @file)")
    p.add_argument("--face", required=True, help="face JSON (inline or @file)")
    p.set_defaults(run=_cmd_act)

    p = sub.add_parser("descent-table", help="descent sets of every group element")
    common(p)
    p.add_argument("--affine", action="store_true",
                   help="include affine descent sets")
    p.set_defaults(run=_cmd_descent_table)

    p = sub.add_parser("mult-table", help="structure constants table")
    common(p)
    p.add_argument("--kind", required=True, choices=("solomon", "module"))
    p.set_defaults(run=_cmd_mult_table)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument(
        "--suite",
        required=True,
        choices=("all", "solomon", "module", "psi", "oracle", "lrb", "euler",
                 "counts"),
    )
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except _ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except SteintorusError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
