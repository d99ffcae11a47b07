#!/usr/bin/env python3
"""
Build a Littlewood-Richardson table for a whole symmetric group and append
it to an NDJSON cache file (the same format the `schub lr --out` command
writes).  Zero coefficients are never stored.
"""

import argparse
import json
import sys

from schubert.calc import lr_coefficients
from schubert.perms import all_perms, length, perm_to_str


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--out", default=None,
                        help="cache file to append to (default: stdout)")
    parser.add_argument("--max-length", type=int, default=None,
                        help="skip pairs with length(u) + length(v) above this")
    args = parser.parse_args()

    cap = args.max_length if args.max_length is not None else args.n * (args.n - 1) // 2
    sink = open(args.out, "a", encoding="utf-8", newline="\n") if args.out else sys.stdout
    written = 0
    try:
        for u in all_perms(args.n):
            for v in all_perms(args.n):
                if length(u) + length(v) > cap:
                    continue
                for w, c in sorted(lr_coefficients(u, v, args.n).terms.items()):
                    record = {"n": args.n, "u": perm_to_str(u), "v": perm_to_str(v),
                              "w": perm_to_str(w), "c": c}
                    sink.write(json.dumps(record, sort_keys=True) + "\n")
                    written += 1
    finally:
        if args.out:
            sink.close()
    print(f"wrote {written} records", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
