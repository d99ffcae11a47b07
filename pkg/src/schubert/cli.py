"""
Command line interface.  One subcommand per operation; results go to
stdout, diagnostics to stderr.  Every command takes --format {text,json};
the SCHUB_FORMAT environment variable sets the default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from .calc import lr_coefficients, schubert, skew, skew_expansion
from .chains import chain_to_json_obj, chain_type, increasing_chains
from .perms import Perm, embed, perm_from_str, perm_to_str
from .poly import Poly, poly_to_json_obj, poly_to_text
from .rcgraphs import enumerate_rcgraphs, render_ascii, rcgraph_to_json_obj
from .verify import SUITES, run_suite


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=os.environ.get("SCHUB_FORMAT", "text"),
        help="output format (default from SCHUB_FORMAT, else text)",
    )
    parser = argparse.ArgumentParser(
        prog="schub",
        description="Schubert polynomials, rc-graphs, labeled Bruhat chains, "
                    "and Littlewood-Richardson coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_, parents=[common])

    p = add_parser("schubert", "Schubert polynomial of a permutation")
    p.add_argument("perm")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--method", choices=("chain", "rcgraph"), default="chain")

    p = add_parser("skew", "skew Schubert polynomial of w over u")
    p.add_argument("w")
    p.add_argument("u")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--method", choices=("normalform", "chains", "lr"),
                   default="normalform")
    p.add_argument("--expand", action="store_true",
                   help="print the Schubert-basis expansion instead")

    p = add_parser("lr", "Littlewood-Richardson coefficients of S_u * S_v")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None,
                   help="append records to this cache file instead of stdout")

    p = add_parser("rcgraphs", "enumerate the rc-graphs of w")
    p.add_argument("w")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--render", choices=("json", "ascii"), default=None,
                   help="per-graph rendering (default follows --format)")

    p = add_parser("chains", "enumerate increasing chains from u to w")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--type", dest="type_", default=None,
                   help="keep only chains of this type, e.g. 1,2,0")

    p = add_parser("verify", "run self-verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _resolve(perms: Sequence[str], n: int | None) -> tuple[list[Perm], int]:
    parsed = [perm_from_str(s) for s in perms]
    size = max(len(p) for p in parsed)
    if n is None:
        n = size
    if n < size:
        raise ValueError(f"--n {n} is smaller than the permutation size {size}")
    return [embed(p, n) for p in parsed], n


def _print_poly(p: Poly, n: int, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(poly_to_json_obj(p, n)))
    else:
        print(poly_to_text(p, n))


def cmd_schubert(args: argparse.Namespace) -> int:
    (w,), n = _resolve([args.perm], args.n)
    _print_poly(schubert(w, n, method=args.method), n, args.format)
    return 0


def cmd_skew(args: argparse.Namespace) -> int:
    (w, u), n = _resolve([args.w, args.u], args.n)
    if args.expand:
        expansion = skew_expansion(w, u, n)
        print(json.dumps(expansion.to_json_obj(), sort_keys=True,
                         separators=(",", ":")))
    else:
        _print_poly(skew(w, u, n, method=args.method), n, args.format)
    return 0


def cmd_lr(args: argparse.Namespace) -> int:
    (u, v), n = _resolve([args.u, args.v], args.n)
    expansion = lr_coefficients(u, v, n)
    records = [
        {"n": n, "u": perm_to_str(u), "v": perm_to_str(v),
         "w": perm_to_str(w), "c": c}
        for w, c in sorted(expansion.terms.items(),
                           key=lambda wc: perm_to_str(wc[0]))
    ]
    if args.out:
        with open(args.out, "a", encoding="utf-8", newline="\n") as fh:
            for rec in records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        print(f"appended {len(records)} records to {args.out}", file=sys.stderr)
        return 0
    for rec in records:
        if args.format == "json":
            print(json.dumps(rec, sort_keys=True))
        else:
            print(f"{rec['w']} {rec['c']}")
    return 0


def load_lr_table(path: str) -> dict[tuple[int, str, str, str], int]:
    """Load a cache file, deduplicating repeated records."""
    table: dict[tuple[int, str, str, str], int] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            key = (int(rec["n"]), rec["u"], rec["v"], rec["w"])
            c = int(rec["c"])
            if table.get(key, c) != c:
                raise ValueError(f"conflicting records for {key}")
            table[key] = c
    return table


def cmd_rcgraphs(args: argparse.Namespace) -> int:
    (w,), n = _resolve([args.w], args.n)
    render = args.render or ("json" if args.format == "json" else "ascii")
    first = True
    for graph in enumerate_rcgraphs(w):
        if render == "json":
            print(json.dumps(rcgraph_to_json_obj(graph)))
        else:
            if not first:
                print()
            print(render_ascii(graph))
            first = False
    return 0


def _chain_text(chain) -> str:
    parts = [perm_to_str(chain.start)]
    for lab, p in zip(chain.labels, chain.perms[1:]):
        parts.append(f"--({lab[0]},{lab[1]})--> {perm_to_str(p)}")
    return " ".join(parts)


def cmd_chains(args: argparse.Namespace) -> int:
    (u, w), n = _resolve([args.u, args.w], args.n)
    wanted = None
    if args.type_ is not None:
        wanted = tuple(int(x) for x in args.type_.split(","))
        wanted = wanted + (0,) * (n - 1 - len(wanted))
        if len(wanted) != n - 1:
            raise ValueError(f"type needs at most {n - 1} parts")
    for chain in increasing_chains(u, w):
        if wanted is not None and chain_type(chain) != wanted:
            continue
        if args.format == "json":
            print(json.dumps(chain_to_json_obj(chain)))
        else:
            print(_chain_text(chain))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    all_ok = True
    for suite in suites:
        report = run_suite(suite, n=args.n, seed=args.seed)
        all_ok = all_ok and report.passed
        if args.format == "json":
            print(json.dumps({
                "suite": report.suite, "n": report.n, "seed": report.seed,
                "checks": report.checks, "passed": report.passed,
                "failures": report.failures[:20],
            }, sort_keys=True))
        else:
            status = "PASS" if report.passed else "FAIL"
            print(f"{report.suite}: {status} ({report.checks} checks)")
        for failure in report.failures[:20]:
            print(f"  {failure}", file=sys.stderr)
    return 0 if all_ok else 1


_COMMANDS = {
    "schubert": cmd_schubert,
    "skew": cmd_skew,
    "lr": cmd_lr,
    "rcgraphs": cmd_rcgraphs,
    "chains": cmd_chains,
    "verify": cmd_verify,
}


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
