"""Reproduce the three worked examples and check them against the closed forms.

    python3 scripts/reproduce_examples.py [--jobs N]
"""

import argparse
import sys
import time

from cwecodes import CodeSpec, verify

EXAMPLES = {
    (3, 2, 1): "1 + 12z^6 + 54z^8 + 8z^9 + 6z^12",
    (3, 4, 1): "1 + 12z^486 + 6534z^648 + 8z^729 + 6z^972",
    (3, 4, 2): "1 + 110z^486 + 6318z^540 + 100z^567 + 30z^648 + 2z^810",
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    ok = True
    for t, expected in EXAMPLES.items():
        t0 = time.perf_counter()
        rep = verify(CodeSpec(*t), jobs=args.jobs)
        dt = time.perf_counter() - t0
        got = str(rep.brute_wd)
        good = rep.ok and got == expected
        ok &= good
        print(f"(p,e,l)={t}  {rep.params}  {dt:.2f}s  {'ok' if good else 'MISMATCH'}")
        print(f"  enumerated: {got}")
        print(f"  predicted:  {rep.predicted_wd}")
        print(f"  Griesmer bound {rep.griesmer.bound}, {rep.griesmer.classification}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
