"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 scale exceeded.  JSON and CSV output is byte-deterministic; numeric
values are rendered as decimal strings so arbitrary precision survives
any JSON consumer.
"""

import argparse
import json
import os
import sys

from .characters import (ScaleExceededError, kronecker_coeff,
                         kronecker_product, set_oracle_cap)
from .families import (bij_family1, bij_family2, bij_family3, family1,
                       family2, family3, format_coloured_partition,
                       parse_coloured_partition)
from .partitions import format_partition, parse_partition
from .planepart import count_pp, lemma2_transform, macmahon_series
from .reduced import reduced_kron, stabilization_sequence
from .series import f_series, family_quasipoly, g_series
from .tableaux import count_kron_tableaux, enumerate_kron_tableaux
from .verify import SUITES, report_lines, run_suite

SCALE_MARKER = "scale-exceeded"


def _jdump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser():
    top = argparse.ArgumentParser(
        prog="redkron",
        description="Exact Kronecker and reduced Kronecker coefficient families")
    top.add_argument("--format", choices=("pretty", "json", "csv"),
                     default="pretty", help="output format")
    top.add_argument("--threads", type=int, default=None,
                     help="worker threads for the verify suites "
                          "(default: REDKRON_THREADS or 1)")
    top.add_argument("--oracle-cap", type=int, default=None,
                     help="largest n the character oracle accepts")
    top.add_argument("--out", default=None, help="write output to a file")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kron", help="Kronecker coefficient of three partitions")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")

    p = sub.add_parser("kronprod", help="full Kronecker product expansion")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = sub.add_parser("rkron", help="reduced Kronecker coefficient")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.add_argument("--sweep", nargs=2, type=int, metavar=("LO", "HI"),
                   help="padded coefficients for each n in [LO, HI]")

    p = sub.add_parser("ktab", help="Kronecker tableaux of a shape/type pair")
    p.add_argument("--outer", required=True, help="shape partition")
    p.add_argument("--type", required=True, dest="type_", help="type partition")
    p.add_argument("--alpha", required=True, help="inner partition")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the count (default)")
    mode.add_argument("--list", action="store_true", help="print one JSON row per tableau")

    p = sub.add_parser("family", help="coefficient family values")
    p.add_argument("--id", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--krange", nargs=2, type=int, metavar=("LO", "HI"))
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.add_argument("--csv", action="store_true", help="shorthand for --format csv")
    p.add_argument("--plot", default=None, metavar="FILE",
                   help="also render the sequence to an image file")

    p = sub.add_parser("bij", help="coloured partition to Kronecker tableau")
    p.add_argument("--family", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="weight bound (family 3)")
    p.add_argument("--i", type=int, default=0, help="shift (family 2)")
    p.add_argument("--beta", required=True,
                   help="coloured parts, e.g. '2,1~' or '2~~ 1'")

    p = sub.add_parser("pp", help="plane partition counting and series")
    p.add_argument("--count", nargs=3, type=int, metavar=("K", "R", "S"),
                   help="plane partitions of weight K in an R x S rectangle")
    p.add_argument("--box", nargs=3, type=int, metavar=("R", "S", "T"),
                   help="box generating function (with --series N)")
    p.add_argument("--series", type=int, default=None, metavar="N",
                   help="truncation order for --box")
    p.add_argument("--lemma2", default=None, metavar="CSV",
                   help="apply the floor transform to a comma-separated sequence")

    p = sub.add_parser("series", help="family generating function coefficients")
    p.add_argument("--family", type=int, choices=(1, 3), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--plot", default=None, metavar="FILE")

    p = sub.add_parser("quasipoly", help="extracted quasipolynomial")
    p.add_argument("--family", type=int, choices=(1, 3), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = sub.add_parser("verify", help="run a cross-validation suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                   help="worker threads (also accepted before the subcommand)")

    return top


def _cmd_kron(args, fmt):
    g = kronecker_coeff(parse_partition(args.lam), parse_partition(args.mu),
                        parse_partition(args.nu))
    if fmt == "json":
        return 0, _jdump({"coefficient": str(g)})
    return 0, str(g)


def _cmd_kronprod(args, fmt):
    expansion = kronecker_product(parse_partition(args.mu),
                                  parse_partition(args.nu))
    items = sorted(expansion.items())
    if fmt == "json":
        return 0, _jdump({format_partition(lam): str(g) for lam, g in items})
    if fmt == "csv":
        return 0, "\n".join(f"{format_partition(lam)},{g}" for lam, g in items)
    return 0, "\n".join(f"{format_partition(lam)}: {g}" for lam, g in items)


def _cmd_rkron(args, fmt):
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    gamma = parse_partition(args.gamma)
    if args.sweep:
        lo, hi = args.sweep
        seq = stabilization_sequence(alpha, beta, gamma, lo, hi)
        if fmt == "json":
            return 0, _jdump({"sweep": [str(v) for v in seq],
                              "n_lo": lo, "n_hi": hi})
        return 0, ",".join(str(v) for v in seq)
    g = reduced_kron(alpha, beta, gamma)
    if fmt == "json":
        return 0, _jdump({"coefficient": str(g)})
    return 0, str(g)


def _cmd_ktab(args, fmt):
    lam = parse_partition(args.outer)
    nu = parse_partition(args.type_)
    alpha = parse_partition(args.alpha)
    if args.list:
        lines = []
        for t in enumerate_kron_tableaux(lam, nu, alpha):
            lines.append(_jdump({"shape": format_partition(t.outer),
                                 "inner": format_partition(t.inner),
                                 "rows": [list(r) for r in t.rows]}))
        return 0, "\n".join(lines)
    count = count_kron_tableaux(lam, nu, alpha)
    if fmt == "json":
        return 0, _jdump({"count": str(count)})
    return 0, str(count)


def _resolve_b(args):
    if args.b is not None:
        return args.b
    return args.a + 1 if args.id == 3 else args.a


def _family_value(args, k):
    b = _resolve_b(args)
    if args.id == 1:
        return family1(args.a, b, k)
    if args.id == 2:
        return family2(args.a, b, k, args.i)
    return family3(args.a, b, k, args.i)


def _cmd_family(args, fmt):
    if args.k is None and args.krange is None:
        raise ValueError("family needs --k or --krange")
    ks = [args.k] if args.krange is None else list(range(args.krange[0],
                                                         args.krange[1] + 1))
    values = []
    for k in ks:
        try:
            values.append(_family_value(args, k))
        except ScaleExceededError:
            values.append(None)
    if args.plot:
        from .plotting import save_sequence_plot
        save_sequence_plot(ks, values, f"family {args.id}, a={args.a}",
                           "k", "coefficient", args.plot)
    rendered = [SCALE_MARKER if v is None else str(v) for v in values]
    code = 3 if any(v is None for v in values) else 0
    if fmt == "json":
        meta = {"id": args.id, "a": args.a, "b": _resolve_b(args),
                "i": args.i,
                "values": dict(zip(map(str, ks), rendered))}
        return code, _jdump(meta)
    if fmt == "csv":
        return code, "\n".join(f"{k},{v}" for k, v in zip(ks, rendered))
    return code, ",".join(rendered)


def _cmd_bij(args, fmt):
    beta = parse_coloured_partition(args.beta)
    if args.family == 1:
        t = bij_family1(beta, args.a)
    elif args.family == 2:
        t = bij_family2(beta, args.a, args.i)
    else:
        if args.k is None:
            raise ValueError("family 3 needs --k")
        t = bij_family3(beta, args.a, args.k)
    payload = {"beta": format_coloured_partition(beta),
               "alpha": format_partition(t.inner),
               "shape": format_partition(t.outer),
               "type": format_partition(t.type_partition()),
               "rows": [list(r) for r in t.rows]}
    if fmt == "json" or fmt == "csv":
        return 0, _jdump(payload)
    lines = [f"alpha: {payload['alpha']}", f"shape: {payload['shape']}",
             f"type:  {payload['type']}"]
    lines += [" ".join(map(str, r)) if r else "(empty row)" for r in t.rows]
    return 0, "\n".join(lines)


def _cmd_pp(args, fmt):
    chosen = [x is not None and x is not False
              for x in (args.count, args.box, args.lemma2)]
    if sum(chosen) != 1:
        raise ValueError("pp needs exactly one of --count, --box, --lemma2")
    if args.count:
        k, r, s = args.count
        val = count_pp(k, r, s)
        return 0, (_jdump({"count": str(val)}) if fmt == "json" else str(val))
    if args.box:
        if args.series is None:
            raise ValueError("--box needs --series N")
        r, s, t = args.box
        coeffs = macmahon_series(r, s, t, args.series)
        if fmt == "json":
            return 0, _jdump({"coefficients": [str(c) for c in coeffs]})
        return 0, ",".join(str(c) for c in coeffs)
    seq = [int(tok) for tok in args.lemma2.split(",") if tok.strip() != ""]
    out = lemma2_transform(seq)
    if fmt == "json":
        return 0, _jdump({"transformed": [str(c) for c in out]})
    return 0, ",".join(str(c) for c in out)


def _cmd_series(args, fmt):
    if args.terms < 1:
        raise ValueError("--terms must be >= 1")
    fn = f_series if args.family == 1 else g_series
    coeffs = fn(args.a, args.terms - 1)
    if args.plot:
        from .plotting import save_sequence_plot
        save_sequence_plot(list(range(len(coeffs))), coeffs,
                           f"family {args.family} series, a={args.a}",
                           "n", "coefficient", args.plot)
    if fmt == "json":
        return 0, _jdump({"coefficients": [str(c) for c in coeffs]})
    return 0, ",".join(str(c) for c in coeffs)


def _cmd_quasipoly(args, fmt):
    qp = family_quasipoly(args.family, args.a)
    payload = {"period": qp.period, "degree": qp.degree,
               "residues": [[str(c) for c in poly] for poly in qp.residue_polys]}
    if fmt == "json":
        return 0, _jdump(payload)
    lines = [f"period {qp.period}, degree {qp.degree}"]
    for r, poly in enumerate(qp.residue_polys):
        terms = " + ".join(f"{c}*n^{e}" if e else str(c)
                           for e, c in enumerate(poly))
        lines.append(f"n = {r} mod {qp.period}: {terms}")
    return 0, "\n".join(lines)


def _cmd_verify(args, fmt, threads):
    report = run_suite(args.suite, threads=threads)
    if fmt == "json":
        body = {"suite": report.suite,
                "passed": report.passed,
                "checks": [{"description": c.description,
                            "passed": c.passed,
                            "expected": repr(c.expected),
                            "actual": repr(c.actual)}
                           for c in report.checks]}
        return (0 if report.passed else 1), _jdump(body)
    return (0 if report.passed else 1), "\n".join(report_lines(report))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    if getattr(args, "json", False):
        fmt = "json"
    elif getattr(args, "csv", False):
        fmt = "csv"
    if args.oracle_cap is not None:
        set_oracle_cap(args.oracle_cap)
    try:
        if args.command == "kron":
            code, text = _cmd_kron(args, fmt)
        elif args.command == "kronprod":
            code, text = _cmd_kronprod(args, fmt)
        elif args.command == "rkron":
            code, text = _cmd_rkron(args, fmt)
        elif args.command == "ktab":
            code, text = _cmd_ktab(args, fmt)
        elif args.command == "family":
            code, text = _cmd_family(args, fmt)
        elif args.command == "bij":
            code, text = _cmd_bij(args, fmt)
        elif args.command == "pp":
            code, text = _cmd_pp(args, fmt)
        elif args.command == "series":
            code, text = _cmd_series(args, fmt)
        elif args.command == "quasipoly":
            code, text = _cmd_quasipoly(args, fmt)
        else:
            threads = args.threads
            if threads is None:
                threads = int(os.environ.get("REDKRON_THREADS", "1"))
            code, text = _cmd_verify(args, fmt, max(1, threads))
    except ScaleExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
