"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .hexgrid import BenzelDomainError, HexRegion, benzel
from .ribbons import (
    RibbonError, compress, compress_inverse, ribbon_tableaux,
    ribbon_tilings, sw, sw_inverse,
)
from .render import RenderSpec, render
from .tiler import count_tilings, enumerate_tilings, parse_kinds, tiling_stats
from .transfer import SquareRegion, transfer_region, untransfer_region
from .verify import Budget, SUITES, run_suite
from .young import (
    AbacusWord, Partition, abacus_word, band_index, k_quotient, lambda_n,
    partition_of, young_region,
)

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _benzel(a: int, b: int) -> HexRegion:
    try:
        return benzel(a, b)
    except BenzelDomainError as exc:
        raise UsageError(str(exc)) from None


def _load_region(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    data = json.loads(text)
    if "cells" in data:
        return HexRegion.from_json(data)
    if "boxes" in data:
        return SquareRegion.from_json(data)
    raise UsageError("region JSON needs a 'cells' or 'boxes' list")


def _region_from_args(args):
    chosen = [x for x in (args.benzel, args.partition, args.region) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --benzel, --partition, --region")
    if args.benzel is not None:
        region = _benzel(*args.benzel)
        return transfer_region(region) if getattr(args, "square", False) else region
    if args.partition is not None:
        return young_region(args.partition)
    return _load_region(args.region)


def _add_region_flags(p: argparse.ArgumentParser, square_flag: bool = True) -> None:
    p.add_argument("--benzel", type=_pair, metavar="A,B", help="the (a,b)-benzel")
    p.add_argument("--partition", type=_partition, metavar="P", help="Young diagram, e.g. 5,5,3,3,2")
    p.add_argument("--region", metavar="FILE", help="region JSON file ('-' for stdin)")
    if square_flag:
        p.add_argument("--square", action="store_true", help="transfer a benzel to the square grid first")


def _tiles_arg(p: argparse.ArgumentParser, default: str = "RS,LS,VB,RB,FB") -> None:
    p.add_argument("--tiles", default=default, help=f"allowed prototiles (default {default})")


def _kinds(text: str):
    try:
        return parse_kinds(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --- subcommands ------------------------------------------------------------

def cmd_benzel(args) -> int:
    region = _benzel(args.a, args.b)
    if args.square:
        region = transfer_region(region)
    _emit(render(region, spec=RenderSpec(args.format, args.scale)), args.output)
    return 0


def cmd_transfer(args) -> int:
    region = _load_region(args.input)
    if isinstance(region, HexRegion):
        out = transfer_region(region).to_json()
    else:
        try:
            out = untransfer_region(region).to_json()
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    print(json.dumps(out))
    return 0


def cmd_abacus(args) -> int:
    if args.what == "word":
        print(abacus_word(args.partition).format())
        return 0
    if args.what == "decode":
        try:
            print(partition_of(AbacusWord.parse(args.text)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return 0
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    data = k_quotient(args.partition, args.k)
    quotient = "(" + ", ".join(f"({q})" if q else "∅" for q in data.quotient) + ")"
    charges = "(" + ",".join(str(c) for c in data.charges) + ")"
    core = str(data.core)
    if args.json:
        print(json.dumps({"quotient": [list(q) for q in data.quotient],
                          "charges": list(data.charges), "core": list(data.core)}))
    elif args.what == "quotient":
        print(f"quotient {quotient}")
        print(f"charges {charges}")
        print(f"core {core}")
    elif args.what == "charges":
        print(charges)
    else:
        print(core)
    return 0


def _partition_or_lambda(args) -> Partition:
    return args.partition if args.partition is not None else lambda_n(args.n)


def cmd_sw(args) -> int:
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    p = _partition_or_lambda(args)
    tableaux = ribbon_tableaux(p, args.k)
    for _ in range(args.index):
        next(tableaux, None)
    t = next(tableaux, None)
    if t is None:
        print(f"{p} has fewer than {args.index + 1} {args.k}-ribbon tableaux", file=sys.stderr)
        return 1
    data = k_quotient(p, args.k)
    T = sw(t, args.k)
    back = sw_inverse(T, data.charges, args.k)
    out = {
        "partition": list(p), "k": args.k, "core": list(data.core),
        "charges": list(data.charges),
        "tableau": [[list(b.as_pair()) for b in sorted(tile)] for tile in t.tiles],
        "tuple_tableau": [[list(row) for row in rows] for rows in T.fillings],
        "round_trip": back == t,
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(f"partition {p}, k = {args.k}, core {data.core}")
        print(render(young_region(p), t.tiles), end="")
        for j, rows in enumerate(T.fillings):
            shown = " / ".join(" ".join(map(str, r)) for r in rows) or "∅"
            print(f"slot {j}: {shown}")
        print(f"inverse recovers the tableau: {out['round_trip']}")
    return 0 if out["round_trip"] else 1


def cmd_compress(args) -> int:
    if args.k < 3 or not 0 <= args.j < args.k:
        raise UsageError("compress needs k >= 3 and 0 <= j < k")
    p = _partition_or_lambda(args)
    data = k_quotient(p, args.k)
    if any(data.charges) or data.quotient[args.j]:
        raise UsageError(f"{p} needs zero {args.k}-charges and an empty slot {args.j}; "
                         f"it has charges {data.charges} and quotient {tuple(map(str, data.quotient))}")
    tilings = ribbon_tilings(p, args.k)
    for _ in range(args.index):
        next(tilings, None)
    t = next(tilings, None)
    if t is None:
        print(f"{p} has fewer than {args.index + 1} {args.k}-ribbon tilings", file=sys.stderr)
        return 1
    d = compress(t, args.k, args.j)
    lifted = compress_inverse(d, args.k, args.j)
    if args.json:
        print(json.dumps({"partition": list(p), "k": args.k, "j": args.j,
                          "tiling": t.to_json(), "compressed": d.to_json(),
                          "round_trip": lifted == t}))
    else:
        print(f"{args.k}-ribbon tiling of {p}:")
        print(render(young_region(p), t.ordered()), end="")
        print(f"after removing slot {args.j}:")
        print(render(d.region, d.ordered()), end="")
        print(f"lift recovers the tiling: {lifted == t}")
    return 0 if lifted == t else 1


def cmd_count(args) -> int:
    region = _region_from_args(args)
    kinds = _kinds(args.tiles)
    if isinstance(region, SquareRegion) and any(k.value == "VB" for k in kinds):
        print("note: the vertical bone is disconnected in the square grid", file=sys.stderr)
    print(count_tilings(region, kinds, method=args.method))
    return 0


def cmd_enumerate(args) -> int:
    region = _region_from_args(args)
    kinds = _kinds(args.tiles)
    out_dir = Path(args.emit) if args.emit else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    n = 0
    for n, tiling in enumerate(enumerate_tilings(region, kinds, limit=args.limit), 1):
        placements = sorted(tiling, key=lambda p: _sort_key(p.anchor))
        record = {"tiles": [p.to_json() for p in placements],
                  "stats": vars(tiling_stats(tiling))}
        if out_dir:
            (out_dir / f"tiling_{n:06d}.json").write_text(json.dumps(record) + "\n", encoding="utf-8")
        elif not args.quiet:
            print(json.dumps(record))
    print(f"{n} tilings", file=sys.stderr)
    return 0


def _sort_key(anchor):
    return getattr(anchor, "key", None) or anchor.as_pair()


def cmd_verify(args) -> int:
    try:
        budget = Budget.from_env()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = run_suite(args.suite, budget, args.max_sum)
    for r in reports:
        if args.json:
            print(json.dumps(r.to_json()))
        else:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args) -> int:
    region = _region_from_args(args)
    tiles, kinds = [], []
    if args.tiling:
        tilings = enumerate_tilings(region, _kinds(args.tiles), limit=args.tiling)
        chosen = None
        for chosen in tilings:
            pass
        if chosen is None:
            print("region has no tiling with these prototiles", file=sys.stderr)
            return 1
        placements = sorted(chosen, key=lambda p: _sort_key(p.anchor))
        tiles = [p.cells for p in placements]
        kinds = [p.kind for p in placements]
    green = None
    if args.green:
        green = _pair(args.green)
    red = band_index(args.red) if args.red else None
    spec = RenderSpec(args.format, args.scale, green=green, red=red)
    _emit(render(region, tiles, kinds, spec), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="benzels", description="Benzels, ribbon tilings and abacus bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("benzel", help="construct a benzel")
    bsub = p.add_subparsers(dest="action", required=True)
    g = bsub.add_parser("gen", help="print the (a,b)-benzel")
    g.add_argument("a", type=int)
    g.add_argument("b", type=int)
    g.add_argument("--square", action="store_true", help="show the square-grid image instead")
    g.add_argument("--format", default="json", choices=("json", "ascii", "svg"))
    g.add_argument("--scale", type=float, default=12.0)
    g.add_argument("--output")
    g.set_defaults(func=cmd_benzel)

    p = sub.add_parser("transfer", help="map a region JSON between the hex and square grids")
    p.add_argument("input", nargs="?", default="-", help="JSON file with 'cells' or 'boxes' (default stdin)")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("abacus", help="abacus words, quotients, charges and cores")
    p.add_argument("what", choices=("word", "quotient", "core", "charges", "decode"))
    p.add_argument("text", help="partition like 5,5,3,3,2 (or a word for decode)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_abacus)

    for name, func, helptext in (("sw", cmd_sw, "abacus bijection on one ribbon tableau"),
                                 ("compress", cmd_compress, "Compress on one ribbon tiling")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("action", choices=("demo",))
        p.add_argument("--partition", type=_partition)
        p.add_argument("--n", type=int, default=2, help="use lambda_n when no partition is given")
        p.add_argument("--k", type=int, default=3)
        if name == "compress":
            p.add_argument("--j", type=int, default=1)
        p.add_argument("--index", type=int, default=0, help="which tableau/tiling to show")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("count", help="count tilings")
    _add_region_flags(p)
    _tiles_arg(p)
    p.add_argument("--method", choices=("memo", "backtrack"), default="memo")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list tilings as JSON")
    _add_region_flags(p)
    _tiles_arg(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--emit", metavar="DIR", help="write one JSON file per tiling")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("suite", choices=("all",) + tuple(SUITES))
    p.add_argument("--max-sum", type=int, help="cap a+b for every check")
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a region, optionally with a tiling")
    _add_region_flags(p)
    _tiles_arg(p)
    p.add_argument("--tiling", type=int, metavar="N", help="draw the N-th tiling (1-based)")
    p.add_argument("--format", default="svg", choices=("svg", "ascii", "json"))
    p.add_argument("--scale", type=float, default=12.0)
    p.add_argument("--green", metavar="K,J", help="shade columns r = j mod k")
    p.add_argument("--red", type=int, metavar="N", help="draw red borders of lambda_N")
    p.add_argument("--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "command", None) == "abacus":
        if args.what == "decode":
            args.partition = None
        else:
            try:
                args.partition = Partition.parse(args.text)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
    try:
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError, RibbonError, BenzelDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
