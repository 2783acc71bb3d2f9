"""Verify the closed forms over a parameter grid and write a markdown table.

    python3 scripts/sweep_table.py --p 3,5 --e 2,4 --lmax 8 --out sweep.md
"""

import argparse
import itertools
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from cwecodes import CodeSpec, ParameterError, verify


def ints(text):
    return [int(t) for t in text.split(",")]


def cell(t):
    try:
        spec = CodeSpec(*t)
    except ParameterError:
        return None
    t0 = time.perf_counter()
    rep = verify(spec)
    return {
        "spec": t,
        "regime": "m/s odd" if spec.parity else "m/s even",
        "params": str(rep.params),
        "weights": len(rep.brute_wd.nonzero_weights),
        "griesmer": rep.griesmer.classification,
        "ok": rep.ok and rep.wd_match and rep.pless.ok,
        "seconds": time.perf_counter() - t0,
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=ints, default=[3, 5, 7])
    ap.add_argument("--e", type=ints, default=[2, 4])
    ap.add_argument("--lmax", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default=None, help="markdown file (default stdout)")
    args = ap.parse_args()

    grid = list(itertools.product(args.p, args.e, range(1, args.lmax + 1)))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(cell, grid))
    else:
        rows = [cell(t) for t in grid]
    rows = [r for r in rows if r]

    lines = [
        "| (p,e,l) | regime | [n,k,d] | weights | Griesmer | verified | s |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in rows:
        lines.append(
            f"| {r['spec']} | {r['regime']} | {r['params']} | {r['weights']} "
            f"| {r['griesmer']} | {'yes' if r['ok'] else 'NO'} | {r['seconds']:.2f} |"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
