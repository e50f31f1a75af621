"""Command-line front end: ``agdecode <subcommand> ...``.

Exit status is 0 on success, 1 on a usage error and 2 when the input is
well formed but invalid (a curve that fails validation, a word of the wrong
length, a radius no multiplicity reaches, ...).  Everything written to
stdout depends only on argv, so equal arguments and seeds give equal output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import cost, selftest
from .code import build_code, encode
from .curvefile import load_curve
from .decoder import a_priori_radius, list_decode
from .errors import CurveError, InvariantError, SearchSpaceTooLarge
from .field import CostCounter
from .interpolation import interpolate

__all__ = ["main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _codes(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _check_codes(F, vals, n, what):
    if n is not None and len(vals) != n:
        raise ValueError(f"{what} has length {len(vals)}, expected {n}")
    bad = [v for v in vals if not 0 <= v < F.q]
    if bad:
        raise ValueError(f"{what} contains codes outside 0..{F.q - 1}: {bad}")


def _fmt(vals) -> str:
    return ",".join(str(v) for v in vals)


def _load(args):
    return load_curve(args.curve)


def _code(args):
    cd = _load(args)
    return cd, build_code(cd.curve, cd.places, args.u, cd.f)


def cmd_curve_info(args, out):
    cd = _load(args)
    c = cd.curve
    print(f"name: {cd.name}", file=out)
    print(f"field: GF({c.field.q}) modulus {list(c.field.modulus)}", file=out)
    print(f"weights: {list(c.weights)}", file=out)
    print(f"genus: {c.genus}", file=out)
    print(f"gaps: {list(c.semigroup.gaps)}", file=out)
    for j, (b, L, y) in enumerate(c.apery_data()):
        print(f"y_{j}: {y}  (pole order {b}, exponents {list(L)})", file=out)
    print(f"places: {len(cd.places)}", file=out)
    print(f"f: {cd.f}", file=out)
    return 0


def cmd_validate(args, out):
    cd = _load(args)
    print(f"ok: {cd.name} ({len(cd.places)} places, f = {cd.f})", file=out)
    return 0


def cmd_encode(args, out):
    _, code = _code(args)
    msg = _codes(args.msg, "--msg")
    _check_codes(code.field, msg, code.k, "message")
    print(_fmt(encode(code, msg)), file=out)
    return 0


def cmd_corrupt(args, out):
    cd = _load(args)
    F = cd.curve.field
    word = _codes(args.word, "--word")
    _check_codes(F, word, len(cd.places), "word")
    if not 0 <= args.errors <= len(word):
        raise ValueError(f"--errors must lie in 0..{len(word)}")
    rng = random.Random(args.seed)
    for i in rng.sample(range(len(word)), args.errors):
        word[i] = F.add(word[i], rng.randrange(1, F.q))
    print(_fmt(word), file=out)
    return 0


def cmd_interpolate(args, out):
    _, code = _code(args)
    r = _codes(args.received, "--received")
    _check_codes(code.field, r, code.n, "received word")
    counter = CostCounter()
    Q = interpolate(code, r, args.m, args.ell, counter)
    for line in Q.lines():
        print(line, file=out)
    print(f"weight: {Q.weight()}", file=out)
    print(f"multiplications: {counter.mults}", file=out)
    return 0


def cmd_decode(args, out):
    _, code = _code(args)
    F = code.field
    extra = {}
    candidates = None
    if args.candidates:
        candidates = [_codes(t, "--candidates") for t in args.candidates.split(";")]
        for c in candidates:
            _check_codes(F, c, code.k, "candidate message")
    if args.received is not None:
        r = _codes(args.received, "--received")
        _check_codes(F, r, code.n, "received word")
    else:
        if args.seed is None:
            raise UsageError("decode needs --received, or --seed for a random trial")
        rng = random.Random(args.seed)
        if args.errors is not None:
            t = args.errors
        else:
            t = args.tau if args.tau is not None else a_priori_radius(code, args.m).tau
        if not 0 <= t <= code.n:
            raise ValueError(f"cannot place {t} errors in a word of length {code.n}")
        msg = [rng.randrange(F.q) for _ in range(code.k)]
        r = encode(code, msg)
        for i in rng.sample(range(code.n), t):
            r[i] = F.add(r[i], rng.randrange(1, F.q))
        extra = {"sent": msg, "received": r, "errors": t}
        if candidates is None:
            candidates = [msg]
    res = list_decode(code, r, m=args.m, tau=args.tau, verify_only=args.verify_only,
                      candidates=candidates, ell=args.ell)
    report = {
        "curve": args.curve, "n": code.n, "k": code.k, "u": code.u,
        **res.to_dict(), **extra,
    }
    report["candidates"] = [
        {"message": list(c["message"]), "codeword": list(c["codeword"]), "distance": c["distance"]}
        for c in report["candidates"]]
    print(json.dumps(report, indent=2, sort_keys=True), file=out)
    return 0


def cmd_bench(args, out):
    _, code = _code(args)
    if args.m < 1 or args.ell < args.m:
        raise ValueError("need m >= 1 and ell >= m")
    tau = args.tau if args.tau is not None else a_priori_radius(code, args.m).tau
    measured = None
    if args.measure:
        rng = random.Random(args.seed)
        counter = CostCounter()
        interpolate(code, [rng.randrange(code.field.q) for _ in range(code.n)],
                    args.m, args.ell, counter)
        measured = counter.mults
    rows, extra = cost.compare_report(code, args.m, args.ell, tau, measured)
    print(f"{args.bench}: n={code.n} u={code.u} m={args.m} ell={args.ell} tau={tau} "
          f"A={extra['A']}", file=out)
    print(cost.format_table(rows), file=out)
    print(cost.report_json(rows, {"m": args.m, "ell": args.ell, "tau": tau, "u": code.u,
                                  "n": code.n, **extra}), file=out)
    return 0


def cmd_selftest(args, out):
    return 0 if selftest.run(out) == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="agdecode", description="List decoding of one-point AG codes by "
                "module Groebner basis interpolation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_curve(sp, u=True):
        sp.add_argument("--curve", required=True,
                        help="curve JSON file, or a bundled name (klein.json, hermitian4.json)")
        if u:
            sp.add_argument("--u", type=int, required=True, help="code parameter: C = C_L(D, uQ)")

    sp = sub.add_parser("curve-info", help="print curve data")
    with_curve(sp, u=False)
    sp.set_defaults(func=cmd_curve_info)

    sp = sub.add_parser("validate", help="validate a curve file")
    with_curve(sp, u=False)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("encode", help="encode a message")
    with_curve(sp)
    sp.add_argument("--msg", required=True)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("corrupt", help="add a seeded random error pattern to a word")
    with_curve(sp, u=False)
    sp.add_argument("--word", required=True)
    sp.add_argument("--errors", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_corrupt)

    sp = sub.add_parser("interpolate", help="compute the interpolation polynomial Q")
    with_curve(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--received", required=True)
    sp.set_defaults(func=cmd_interpolate)

    sp = sub.add_parser("decode", help="list decode and report JSON")
    with_curve(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--tau", type=int)
    sp.add_argument("--ell", type=int, help="Z-degree bound (default from the radius search)")
    sp.add_argument("--received")
    sp.add_argument("--verify-only", action="store_true")
    sp.add_argument("--candidates", help="messages to verify, ';'-separated")
    sp.add_argument("--seed", type=int, help="without --received: run a random trial")
    sp.add_argument("--errors", type=int, help="errors in a random trial (default: tau)")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("bench", help="operation-count comparison")
    sp.add_argument("bench", choices=["example4"])
    sp.add_argument("--curve", default="klein.json")
    sp.add_argument("--u", type=int, default=12)
    sp.add_argument("--m", type=int, default=40)
    sp.add_argument("--ell", type=int, default=54)
    sp.add_argument("--tau", type=int)
    sp.add_argument("--measure", action="store_true", help="also run and count one interpolation")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("selftest", help="run invariant checks on the bundled fixtures")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    except CurveError as exc:
        for issue in exc.issues:
            print(f"error [{issue.kind}] {issue.where}: {issue.message}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, InvariantError, SearchSpaceTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
