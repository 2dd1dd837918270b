"""Command-line front end.

Subcommands: catalog, check, classify, functor, roundtrip, hilbert, torsion,
center, signlemma, report.  Files use the structure-constants format
(se fileformat); "-" means stdin/stdout.  Exit codes: 0 clean, 1 a check or
round trip reported violations, 2 parse/validation errors.

All numeric output is exact (rationals as p/q); the only floating-point
number ever printed is the growth heuristic, explicitly labeled as such.
Set OPERADALG_COLOR=1/0 to force colored or plain pass/fail markers.
"""

import argparse
import os
import sys

from .algebra import (
    GradedAlgebra,
    algebra_torsion_left,
    algebra_torsion_right,
    check_associativity,
    check_gperm,
    check_pgc,
    check_pgperm,
)
from .catalog import (
    build_com,
    build_ex63_algebra,
    build_ex64_algebra,
    build_ex64_operad,
    build_free_gperm,
    build_massey_algebra,
    build_massey_operad,
    build_ope,
)
from .errors import FormatError, OperadAlgError
from .fields import field_from_name
from .fileformat import dump, load
from .linalg import unit_vector
from .functors import f_a_triv, forget_F, g_a_triv, g_sigma_sign, g_sigma_triv, roundtrip_report
from .operad import (
    TruncatedOperad,
    bullet_right_torsion,
    check_axioms,
    classify_symmetry,
    is_central,
    left_torsion,
    right_torsion,
)
from .series import gk_estimate, gk_heuristic, hilbert, rational_fit
from .symgroup import verify_sign_lemma


def _use_color():
    env = os.environ.get("OPERADALG_COLOR")
    if env is not None:
        return env not in ("0", "false", "no", "off")
    return sys.stdout.isatty()


def _mark(ok):
    word = "ok" if ok else "FAIL"
    if _use_color():
        return "\x1b[32mok\x1b[0m" if ok else "\x1b[31mFAIL\x1b[0m"
    return word


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as fh:
        return fh.read()


def _write(path, text):
    if path == "-" or path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_file(path):
    return load(_read(path))


def _emit(args, records, human_lines):
    """records: (key, value) pairs for machine format; human_lines otherwise."""
    if args.format == "machine":
        for k, v in records:
            print("%s=%s" % (k, v))
    else:
        for line in human_lines:
            print(line)


# -- subcommands -------------------------------------------------------------


def cmd_catalog(args):
    field = field_from_name(args.field)
    name = args.name
    if name == "com":
        obj = build_com(args.max_arity, field=field)
    elif name == "ope":
        obj = build_ope(args.max_arity, field=field)
    elif name == "massey":
        obj = build_massey_algebra(args.a, args.b, args.max_degree, field=field)
    elif name == "massey-operad":
        obj = build_massey_operad(args.a, args.b, args.max_arity, field=field)
    elif name == "ex63":
        obj = build_ex63_algebra(args.max_degree, field=field)
    elif name == "ex64":
        obj = build_ex64_algebra(args.max_degree, field=field)
    elif name == "ex64-operad":
        obj = build_ex64_operad(args.max_arity, field=field)
    elif name == "free-gperm":
        degrees = [int(t) for t in args.degrees.split(",") if t]
        obj = build_free_gperm(degrees, args.max_degree, field=field)
    else:
        raise OperadAlgError("unknown catalog object %r" % name)
    _write(args.output, dump(obj))
    return 0


def _checker_for(obj, which):
    if isinstance(obj, TruncatedOperad):
        if which not in ("auto", "axioms"):
            raise OperadAlgError("checker %r does not apply to an operad" % which)
        return [("axioms", check_axioms)]
    if which == "auto":
        checks = [("associativity", check_associativity)]
        checks.append(("pgperm", check_pgperm) if obj.typed else ("gperm", check_gperm))
        return checks
    table = {"assoc": [("associativity", check_associativity)],
             "gperm": [("gperm", check_gperm)],
             "pgperm": [("pgperm", check_pgperm)],
             "pgc": [("pgc", check_pgc)]}
    if which not in table:
        raise OperadAlgError("checker %r does not apply to an algebra" % which)
    return table[which]


def cmd_check(args):
    obj = _load_file(args.file)
    total = 0
    records, lines = [], []
    for label, fn in _checker_for(obj, args.checker):
        violations = fn(obj)
        total += len(violations)
        records.append(("check.%s.violations" % label, len(violations)))
        lines.append("%s: %s (%d violations)"
                     % (label, _mark(not violations), len(violations)))
        for v in violations[:args.limit]:
            records.append(("violation", "%s %r" % (v.axiom, v.where)))
            lines.append("  %s" % v)
        if len(violations) > args.limit:
            lines.append("  ... %d more" % (len(violations) - args.limit))
    _emit(args, records, lines)
    return 0 if total == 0 else 1


def cmd_classify(args):
    obj = _load_file(args.file)
    if not isinstance(obj, TruncatedOperad):
        raise OperadAlgError("classify needs an operad file")
    rep = classify_symmetry(obj)
    records = [("arity.%d" % n, kind) for n, kind in sorted(rep.per_arity.items())]
    records += [("sigma_trivial", rep.sigma_trivial), ("sigma_sign", rep.sigma_sign),
                ("a_trivial", rep.a_trivial),
                ("almost_sigma_trivial_window", rep.almost_sigma_trivial),
                ("almost_a_trivial_window", rep.almost_a_trivial)]
    lines = ["arity %d: %s" % (n, kind) for n, kind in sorted(rep.per_arity.items())]
    lines += rep.flag_lines()
    _emit(args, records, lines)
    return 0


FUNCTORS = {
    "forget_F": (forget_F, TruncatedOperad),
    "g_sigma_triv": (g_sigma_triv, GradedAlgebra),
    "g_a_triv": (g_a_triv, GradedAlgebra),
    "f_a_triv": (f_a_triv, TruncatedOperad),
    "g_sigma_sign": (g_sigma_sign, GradedAlgebra),
}


def cmd_functor(args):
    obj = _load_file(args.file)
    fn, wants = FUNCTORS[args.name]
    if not isinstance(obj, wants):
        raise OperadAlgError(
            "%s needs an %s file" % (args.name,
                                     "operad" if wants is TruncatedOperad else "algebra"))
    out = fn(obj)
    _write(args.output, dump(out))
    return 0


def cmd_roundtrip(args):
    obj = _load_file(args.file)
    diff = roundtrip_report(obj, args.pair)
    records = [("roundtrip.pair", args.pair), ("roundtrip.differences", len(diff))]
    lines = ["round trip %d: %s (%d differences)"
             % (args.pair, _mark(not diff), len(diff))]
    for d in diff:
        records.append(("difference", d))
        lines.append("  %s" % d)
    _emit(args, records, lines)
    return 0 if not diff else 1


def cmd_hilbert(args):
    obj = _load_file(args.file)
    coeffs = hilbert(obj)
    records = [("hilbert.coeff.%d" % i, c) for i, c in enumerate(coeffs)]
    lines = ["coefficients: %s" % " ".join(str(c) for c in coeffs)]
    series = None
    if args.fit is not None:
        series = rational_fit(coeffs, args.fit)
        if series is None:
            records.append(("fit", "none"))
            lines.append("fit: no recurrence of order <= %d explains every "
                         "coefficient" % args.fit)
        else:
            records.append(("fit.num", list(series.num)))
            records.append(("fit.den", list(series.den)))
            lines.append("fit: %s" % series)
    if args.gk:
        if series is None:
            raise OperadAlgError("--gk needs a successful --fit")
        gk = gk_estimate(series)
        records.append(("gk", gk))
        lines.append("GK dimension (pole order at t=1): %d" % gk)
    if args.heuristic:
        h = gk_heuristic(coeffs)
        records.append(("gk_heuristic", "%.3f" % h))
        lines.append("growth heuristic (floating point, least-squares "
                     "slope): %.3f" % h)
    if args.plot:
        _plot_series(coeffs, series, args.plot)
        lines.append("wrote %s" % args.plot)
        records.append(("plot", args.plot))
    _emit(args, records, lines)
    return 0


def cmd_torsion(args):
    obj = _load_file(args.file)
    if isinstance(obj, TruncatedOperad):
        table = {"l": left_torsion, "r": right_torsion, "br": bullet_right_torsion}
        tor = table[args.side](obj, args.window)
        what = "arity"
    else:
        if args.side == "br":
            raise OperadAlgError("bullet-right torsion is an operad notion")
        table = {"l": algebra_torsion_left, "r": algebra_torsion_right}
        tor = table[args.side](obj, args.window)
        what = "degree"
    records = [("torsion.side", args.side), ("torsion.window", args.window)]
    lines = ["side=%s window=%d (over-approximation within the stored window)"
             % (args.side, args.window)]
    for k in sorted(tor):
        records.append(("torsion.dim.%d" % k, tor[k].dim))
        lines.append("%s %d: dim %d" % (what, k, tor[k].dim))
    _emit(args, records, lines)
    return 0


def cmd_center(args):
    obj = _load_file(args.file)
    if not isinstance(obj, TruncatedOperad):
        raise OperadAlgError("center needs an operad file")
    records, lines = [], []
    for n in obj.arities():
        for a in range(obj.dims[n]):
            ok, witness = is_central(obj, n, unit_vector(obj.field, obj.dims[n], a))
            records.append(("central.%d.%d" % (n, a), ok))
            if ok:
                lines.append("arity %d basis %d: central (within truncation)" % (n, a))
            else:
                m, b, i, j = witness
                lines.append("arity %d basis %d: not central "
                             "(against arity %d basis %d, slots %d/%d)"
                             % (n, a, m, b, i, j))
    _emit(args, records, lines)
    return 0


def cmd_signlemma(args):
    rep = verify_sign_lemma(args.m, args.n)
    records = [("signlemma.case.%s.checked" % c.name, c.checked) for c in rep.cases]
    records += [("signlemma.case.%s.failures" % c.name, len(c.failures)) for c in rep.cases]
    records.append(("signlemma.all_passed", rep.all_passed))
    lines = rep.lines()
    lines.append("all identities hold: %s" % _mark(rep.all_passed))
    _emit(args, records, lines)
    return 0 if rep.all_passed else 1


def _plot_series(coeffs, series, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 3.5))
    xs = list(range(len(coeffs)))
    ax.bar(xs, [float(c) for c in coeffs], color="#4878d0", label="dimensions")
    if series is not None:
        ys = [float(x) for x in series.expand(len(coeffs))]
        ax.plot(xs, ys, "o-", color="#d65f5f", markersize=3,
                label="fit %s" % series)
    ax.set_xlabel("arity / degree")
    ax.set_ylabel("dimension")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _plot_growth(coeffs, path):
    import math

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    partial, total = [], 0
    for c in coeffs:
        total += c
        partial.append(total)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ns = [n for n, s in enumerate(partial, start=1) if n >= 2 and s > 0]
    ss = [partial[n - 1] for n in ns]
    ax.plot([math.log(n) for n in ns], [math.log(s) for s in ss], "o-",
            color="#4878d0", label="log partial sums")
    slope = gk_heuristic(coeffs)
    ax.set_title("growth heuristic slope %.3f (floating point)" % slope, fontsize=9)
    ax.set_xlabel("log n")
    ax.set_ylabel("log sum of dims")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_report(args):
    obj = _load_file(args.file)
    os.makedirs(args.output, exist_ok=True)
    coeffs = hilbert(obj)
    kind = "operad" if isinstance(obj, TruncatedOperad) else "algebra"
    series = rational_fit(coeffs, args.fit) if args.fit is not None else None

    rows = ["index\tdim\tpartial_sum"]
    total = 0
    for i, c in enumerate(coeffs):
        total += c
        rows.append("%d\t%d\t%d" % (i, c, total))
    _write(os.path.join(args.output, "series.csv"), "\n".join(rows) + "\n")

    report = ["kind=%s" % kind,
              "field=%r" % obj.field,
              "size=%d" % (obj.max_arity if kind == "operad" else obj.max_degree),
              "dims=%s" % ",".join(str(c) for c in coeffs)]
    if series is not None:
        report.append("fit=%s" % series)
        report.append("gk=%d" % gk_estimate(series))
    report.append("gk_heuristic_float=%.3f" % gk_heuristic(coeffs))
    if kind == "operad":
        rep = classify_symmetry(obj)
        report += rep.flag_lines()
    _write(os.path.join(args.output, "report.txt"), "\n".join(report) + "\n")

    _plot_series(coeffs, series, os.path.join(args.output, "hilbert.png"))
    _plot_growth(coeffs, os.path.join(args.output, "growth.png"))
    print("wrote report.txt, series.csv, hilbert.png, growth.png to %s" % args.output)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="operadalg",
        description="Exact computer algebra for truncated symmetric operads "
                    "and graded Perm-type algebras.")
    ap.add_argument("--format", choices=("human", "machine"), default="human",
                    help="machine prints line-oriented key=value records")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a named object as a structure-constants file")
    p.add_argument("name", choices=("com", "ope", "massey", "massey-operad",
                                    "ex63", "ex64", "ex64-operad", "free-gperm"))
    p.add_argument("--max-arity", type=int, default=7)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--degrees", default="1,1",
                   help="comma-separated generator degrees for free-gperm")
    p.add_argument("--field", default="Q", help="Q or Fp:<prime>")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("check", help="run the appropriate checker on a file")
    p.add_argument("file")
    p.add_argument("--checker", default="auto",
                   choices=("auto", "axioms", "assoc", "gperm", "pgperm", "pgc"))
    p.add_argument("--limit", type=int, default=20, help="violations to print")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="symmetry classification of an operad")
    p.add_argument("file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("functor", help="apply a construction and write the result")
    p.add_argument("name", choices=sorted(FUNCTORS))
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_functor)

    p = sub.add_parser("roundtrip", help="compare a file against its functor round trip")
    p.add_argument("file")
    p.add_argument("--pair", type=int, choices=(42, 56), required=True)
    p.set_defaults(fn=cmd_roundtrip)

    p = sub.add_parser("hilbert", help="series coefficients, optional fit and GK")
    p.add_argument("file")
    p.add_argument("--fit", type=int, default=None, metavar="ORDER")
    p.add_argument("--gk", action="store_true")
    p.add_argument("--heuristic", action="store_true",
                   help="also print the labeled floating-point growth slope")
    p.add_argument("--plot", default=None, metavar="PATH.png")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("torsion", help="truncated torsion dimensions")
    p.add_argument("file")
    p.add_argument("--side", choices=("l", "r", "br"), required=True)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(fn=cmd_torsion)

    p = sub.add_parser("center", help="per-basis centrality report for an operad")
    p.add_argument("file")
    p.set_defaults(fn=cmd_center)

    p = sub.add_parser("signlemma", help="exhaustive verification of the sign identities")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_signlemma)

    p = sub.add_parser("report", help="write a delimited report plus figures to a directory")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--fit", type=int, default=None, metavar="ORDER")
    p.set_defaults(fn=cmd_report)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OperadAlgError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
