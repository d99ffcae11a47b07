#!/usr/bin/env python3
"""
Timing experiment for the chain tree search: samples permutations per rank,
times the full enumeration of increasing chains to w0, and reports the unit
cost time / (n * l * c) next to the raw numbers.  A flat unit-cost column is
what the O(n*l*c) bound predicts.
"""

import argparse
import random

from schubert.chains import increasing_chains_to_w0
from schubert.perms import all_perms, length, perm_to_str
from schubert.verify import measure_enumeration


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ns", default="5,6,7",
                        help="comma-separated ambient sizes (default 5,6,7)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--per-n", type=int, default=3,
                        help="samples kept per size (largest chain counts)")
    parser.add_argument("--pool", type=int, default=40,
                        help="random candidates drawn per size")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for n in (int(x) for x in args.ns.split(",")):
        pool = rng.sample(list(all_perms(n)), min(args.pool, 1 << 20))
        eligible = []
        for w in pool:
            steps = n * (n - 1) // 2 - length(w)
            if steps < 3:
                continue
            eligible.append((sum(1 for _ in increasing_chains_to_w0(w)), w))
        eligible.sort(reverse=True)
        for _, w in eligible[: args.per_n]:
            rows.append(measure_enumeration(w, repeats=args.repeats))

    print(f"{'w':>16} {'n':>3} {'l':>4} {'c':>7} {'time_ms':>9} {'unit_ns':>8}")
    for r in rows:
        print(f"{perm_to_str(r['w']):>16} {r['n']:>3} {r['l']:>4} {r['c']:>7} "
              f"{r['time'] * 1e3:>9.3f} {r['unit'] * 1e9:>8.1f}")
    units = [r["unit"] for r in rows]
    if units:
        print(f"unit-cost spread: {max(units) / min(units):.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
