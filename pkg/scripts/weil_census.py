"""Value census of S(alpha, beta) over a field, split by the case of alpha.

Every sum is evaluated by enumeration and by the closed form; the script
reports how often each rational value occurs and stops on the first disagreement.

    python3 scripts/weil_census.py --p 3 --e 4 --l 1
"""

import argparse
import sys
from collections import Counter

from cwecodes import CodeSpec, make_field
from cwecodes.charsums import weil_sum_case, weil_sum_closed, weil_sum_counts
from cwecodes.cyclotomic import CycInt


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--e", type=int, default=4)
    ap.add_argument("--l", type=int, default=1)
    args = ap.parse_args()

    spec = CodeSpec(args.p, args.e, args.l)
    ctx = make_field(spec)
    counts = weil_sum_counts(ctx, spec.l)
    census = {True: Counter(), False: Counter()}
    for a in range(1, ctx.q):
        case = weil_sum_case(ctx, spec.l, a)
        for b in range(ctx.q):
            brute = CycInt.from_counts(spec.p, counts[a, b])
            if weil_sum_closed(ctx, spec.l, a, b) != brute:
                print(f"disagreement at alpha={a} beta={b}: {brute}")
                return 1
            val = brute.as_rational_integer()
            census[case][val if val is not None else str(brute)] += 1

    print(f"F_{ctx.q}, l={spec.l}, m={spec.m}, s={spec.s}: closed form agrees on all {(ctx.q - 1) * ctx.q} pairs")
    for case, label in ((False, "permutation"), (True, "non-permutation")):
        total = sum(census[case].values())
        print(f"{label} alpha ({total // ctx.q} of them):")
        for val, k in sorted(census[case].items(), key=lambda t: str(t[0])):
            print(f"  {str(val):>30}  x{k}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
