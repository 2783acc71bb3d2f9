"""Command-line frontend.

    cwecodes construct --p 3 --e 2 --l 1 --format json
    cwecodes verify    --p 3 --e 4 --l 1
    cwecodes weilsum   --p 3 --e 2 --l 1 --alpha 1 --beta 0
    cwecodes sweep     --p 3 --e 2,4 --l 1,2,3,5,6,7 --jobs 4

Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error.
Field elements are addressed by their enumeration index.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .charsums import artin_map, solve_artin, weil_sum, weil_sum_case, weil_sum_closed
from .codes import code_params, cwe_bruteforce, griesmer_classify, weight_distribution
from .field import CodeSpec, ParameterError, make_field
from .theorem import verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _color(text: str, code: str) -> str:
    if sys.stdout.isatty() and "NO_COLOR" not in os.environ:
        return f"\033[{code}m{text}\033[0m"
    return text


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _modulus(text: str) -> tuple[int, ...]:
    """Coefficients low-to-high, e.g. '2,2,1' for X^2 + 2X + 2."""
    return tuple(_int_list(text))


def _params_payload(spec: CodeSpec, ctx) -> dict:
    return {
        "p": spec.p,
        "e": spec.e,
        "l": spec.l,
        "m": spec.m,
        "s": spec.s,
        "modulus": list(ctx.modulus),
    }


def _element_payload(ctx, idx: int) -> dict:
    return {"index": idx, "coeffs": list(ctx.element(idx).coeffs)}


def construct_record(spec: CodeSpec, modulus=None, jobs: int = 1) -> dict:
    ctx = make_field(spec, modulus)
    cwe = cwe_bruteforce(ctx, spec.l, jobs=jobs)
    wd = weight_distribution(cwe, cwe.n)
    n, k, d = code_params(wd, cwe.n, spec.p, spec.e)
    gr = griesmer_classify(n, k, d, spec.p)
    return {
        "parameters": _params_payload(spec, ctx),
        "n": n,
        "k": k,
        "d": d,
        "weight_distribution": [{"weight": w, "multiplicity": a} for w, a in wd.items()],
        "cwe": cwe.to_json(),
        "griesmer": {"bound": gr.bound, "classification": gr.classification},
    }


def verify_record(spec: CodeSpec, modulus=None, jobs: int = 1) -> dict:
    report = verify(spec, modulus=modulus, jobs=jobs)
    ctx = make_field(spec, modulus)
    n, k, d = report.params
    return {
        "parameters": _params_payload(spec, ctx),
        "n": n,
        "k": k,
        "d": d,
        "weight_distribution": [
            {"weight": w, "multiplicity": a} for w, a in report.brute_wd.items()
        ],
        "cwe": report.brute_cwe.to_json(),
        "griesmer": {
            "bound": report.griesmer.bound,
            "classification": report.griesmer.classification,
        },
        "verification": {
            "verified": report.ok,
            "length_match": report.length_match,
            "wd_match": report.wd_match,
            "cwe_match": report.cwe_match,
            "n_rho_match": report.n_rho_match,
            "pless": list(report.pless.passed),
            "findings": report.findings,
            "mismatches": [
                {
                    "a": _element_payload(ctx, a),
                    "b": _element_payload(ctx, b),
                    "predicted": list(pred),
                    "actual": list(act),
                }
                for a, b, pred, act in report.per_codeword_mismatches
            ],
        },
    }


def _weight_csv(record: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "multiplicity"])
    for row in record["weight_distribution"]:
        w.writerow([row["weight"], row["multiplicity"]])
    return buf.getvalue()


def _code_text(record: dict) -> str:
    par = record["parameters"]
    lines = [
        f"(p, e, l) = ({par['p']}, {par['e']}, {par['l']})  m={par['m']} s={par['s']}"
        f"  modulus={par['modulus']}",
        f"[n, k, d] = [{record['n']}, {record['k']}, {record['d']}]",
        "weight enumerator: "
        + " + ".join(
            str(r["multiplicity"]) if r["weight"] == 0 else f"{r['multiplicity']}z^{r['weight']}"
            for r in record["weight_distribution"]
        ),
        "complete weight enumerator:",
    ]
    for term in record["cwe"]:
        mono = " ".join(f"w{i}^{t}" for i, t in enumerate(term["composition"]))
        lines.append(f"  {term['multiplicity']:>8}  {mono}")
    g = record["griesmer"]
    lines.append(f"Griesmer: bound {g['bound']}, {g['classification']}")
    return "\n".join(lines) + "\n"


def _emit(record: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(record, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_weight_csv(record))
    else:
        sys.stdout.write(text)


def _spec(args) -> CodeSpec:
    return CodeSpec(args.p, args.e, args.l)


def cmd_construct(args) -> int:
    spec = _spec(args)
    t0 = time.perf_counter()
    record = construct_record(spec, args.modulus, args.jobs)
    if args.timing:
        record["seconds"] = round(time.perf_counter() - t0, 3)
    _emit(record, args.format, _code_text(record))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _spec(args)
    t0 = time.perf_counter()
    record = verify_record(spec, args.modulus, args.jobs)
    if args.timing:
        record["seconds"] = round(time.perf_counter() - t0, 3)
    v = record["verification"]
    text = _code_text(record)
    verdict = _color("VERIFIED", "32") if v["verified"] else _color("MISMATCH", "31")
    text += (
        f"{verdict}: length={v['length_match']} weights={v['wd_match']} "
        f"cwe={v['cwe_match']} per-codeword={v['n_rho_match']} pless={v['pless']}\n"
    )
    for mm in v["mismatches"][:20]:
        text += (
            f"  a={mm['a']['coeffs']} b={mm['b']['coeffs']}: "
            f"predicted {mm['predicted']} actual {mm['actual']}\n"
        )
    for f in v["findings"]:
        text += f"  finding: {f}\n"
    _emit(record, args.format, text)
    return EXIT_OK if v["verified"] else EXIT_MISMATCH


def cmd_weilsum(args) -> int:
    spec = _spec(args)
    ctx = make_field(spec, args.modulus)
    for name in ("alpha", "beta"):
        if not 0 <= getattr(args, name) < ctx.q:
            raise ParameterError(f"{name} index must lie in 0..{ctx.q - 1}")
    brute = weil_sum(ctx, spec.l, args.alpha, args.beta)
    record = {
        "parameters": _params_payload(spec, ctx),
        "alpha": _element_payload(ctx, args.alpha),
        "beta": _element_payload(ctx, args.beta),
        "brute_force": {"coeffs": list(brute.coeffs), "integer": brute.as_rational_integer()},
    }
    if args.alpha == 0:
        if args.require_closed:
            raise ParameterError("closed form requires alpha != 0")
        record["closed_form"] = None
        record["diagnosis"] = "n/a (alpha = 0)"
    else:
        closed = weil_sum_closed(ctx, spec.l, args.alpha, args.beta)
        sols = solve_artin(ctx, spec.l, args.alpha, args.beta)
        kernel = artin_map(ctx, spec.l, args.alpha).kernel_size
        if not sols:
            diag = "no solution"
        elif kernel == 1:
            diag = "unique solution (permutation case)"
        else:
            diag = f"{len(sols)} solutions (kernel size {kernel})"
        record["closed_form"] = {
            "coeffs": list(closed.coeffs),
            "integer": closed.as_rational_integer(),
        }
        record["non_permutation_case"] = weil_sum_case(ctx, spec.l, args.alpha)
        record["solutions"] = len(sols)
        record["diagnosis"] = diag
        record["match"] = closed == brute
    if args.format == "json":
        sys.stdout.write(json.dumps(record, indent=2, sort_keys=True) + "\n")
    else:

        def show(v):
            if v is None:
                return "n/a"
            return str(v["integer"]) if v["integer"] is not None else str(v["coeffs"])

        sys.stdout.write(
            f"S(alpha={args.alpha}, beta={args.beta}) over F_{ctx.q}, l={spec.l}\n"
            f"  brute force: {show(record['brute_force'])}\n"
            f"  closed form: {show(record['closed_form'])}\n"
            f"  {record['diagnosis']}\n"
        )
    return EXIT_OK


def _sweep_cell(args) -> dict:
    (p, e, l), modulus = args
    try:
        spec = CodeSpec(p, e, l)
    except ParameterError as exc:
        return {"p": p, "e": e, "l": l, "status": "skipped", "reason": str(exc)}
    try:
        rec = verify_record(spec, modulus)
    except ParameterError as exc:
        return {"p": p, "e": e, "l": l, "status": "skipped", "reason": str(exc)}
    ok = rec["verification"]["verified"]
    return {
        "p": p,
        "e": e,
        "l": l,
        "status": "pass" if ok else "fail",
        "n": rec["n"],
        "k": rec["k"],
        "d": rec["d"],
        "weights": len(rec["weight_distribution"]) - 1,
    }


def cmd_sweep(args) -> int:
    cells = [(c, args.modulus) for c in itertools.product(args.p, args.e, args.l)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(c) for c in cells]
    ran = [r for r in rows if r["status"] != "skipped"]
    if args.format == "json":
        sys.stdout.write(json.dumps({"cells": rows}, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "e", "l", "status", "n", "k", "d"])
        for r in rows:
            w.writerow([r["p"], r["e"], r["l"], r["status"], r.get("n", ""), r.get("k", ""), r.get("d", "")])
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            if r["status"] == "skipped":
                sys.stdout.write(f"({r['p']},{r['e']},{r['l']})  skipped: {r['reason']}\n")
            else:
                mark = _color("pass", "32") if r["status"] == "pass" else _color("FAIL", "31")
                sys.stdout.write(
                    f"({r['p']},{r['e']},{r['l']})  [{r['n']},{r['k']},{r['d']}]"
                    f"  {r['weights']} weights  {mark}\n"
                )
        sys.stdout.write(
            f"{sum(r['status'] == 'pass' for r in ran)}/{len(ran)} verified,"
            f" {len(rows) - len(ran)} skipped\n"
        )
    if not ran:
        sys.stderr.write("no parameter cell satisfies the hypotheses\n")
        return EXIT_USAGE
    return EXIT_OK if all(r["status"] == "pass" for r in ran) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwecodes", description="Complete weight enumerators of defining-set trace codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, multi=False):
        kind = _int_list if multi else int
        sp.add_argument("--p", type=kind, required=True, help="odd prime")
        sp.add_argument("--e", type=kind, required=True, help="even extension degree")
        sp.add_argument("--l", type=kind, required=True, help="exponent parameter")
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        sp.add_argument("--modulus", type=_modulus, default=None,
                        help="irreducible modulus, coefficients low-to-high incl. the leading 1")
        sp.add_argument("--jobs", type=int, default=1)

    for name, fn, hlp in [
        ("construct", cmd_construct, "enumerate the code"),
        ("verify", cmd_verify, "compare enumeration with the closed forms"),
    ]:
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--timing", action="store_true", help="include wall time in output")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("weilsum", help="evaluate S(alpha, beta)")
    common(sp)
    sp.add_argument("--alpha", type=int, required=True, help="element index")
    sp.add_argument("--beta", type=int, required=True, help="element index")
    sp.add_argument("--require-closed", action="store_true",
                    help="treat alpha = 0 (no closed form) as an error")
    sp.set_defaults(func=cmd_weilsum)

    sp = sub.add_parser("sweep", help="verify over a grid of parameters")
    common(sp, multi=True)
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
