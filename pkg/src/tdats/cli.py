"""``tda-ts`` command line.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""
import argparse
import re
import sys
from pathlib import Path

from . import bench
from ._errors import TdaTsError
from .curves import Mesh, PersistenceCurve, named_curve
from .distances import curve_dist, dtw
from .ensemble import CURVE_ALIASES, EnsembleConfig, ensemble_distance
from .persistence import sublevel_diagram
from .series import QMAX, QMIN, as_series, dist_l1, dist_l2, fill_missing, quantize

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def parse_series_text(text):
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        return as_series([float("nan") if t.lower() == "nan" else float(t) for t in tokens])
    except ValueError as exc:
        if isinstance(exc, TdaTsError):
            raise
        raise UsageError(f"series values must be numbers or NaN ({exc})") from None


def _read_series(args, values_attr="values", file_attr="file"):
    values, path = getattr(args, values_attr, None), getattr(args, file_attr, None)
    if values is not None and path is not None:
        raise UsageError(f"give only one of --{values_attr} and --{file_attr}")
    if values is not None:
        return parse_series_text(values)
    if path is None or path == "-":
        return parse_series_text(sys.stdin.read())
    return parse_series_text(Path(path).read_text())


def _mesh(args):
    return Mesh.integer(args.mesh_min, args.mesh_max)


def _add_curve_options(p):
    p.add_argument("--mesh-min", type=int, default=QMIN)
    p.add_argument("--mesh-max", type=int, default=QMAX)
    p.add_argument("--essential", choices=("include", "exclude"), default="include",
                   help="whether the essential pair enters the curve")


def _add_ensemble_options(p):
    _add_curve_options(p)
    p.add_argument("--geom", choices=("raw", "quantized"), default="raw",
                   help="operand of the geometric term")
    p.add_argument("--window", type=int, default=None,
                   help="Sakoe-Chiba half-width for raw-series DTW (default: none)")


def _config(args, metric, alpha):
    return EnsembleConfig.from_metric_id(
        metric, alpha, include_essential=args.essential == "include", geom=args.geom,
        window=args.window, mesh=_mesh(args))


def cmd_diagram(args, out):
    s = _read_series(args)
    s = quantize(s) if args.quantize else s
    out.write(sublevel_diagram(s).format())


def cmd_curve(args, out):
    kind = CURVE_ALIASES[args.kind]
    diagram = sublevel_diagram(quantize(_read_series(args)))
    out.write(named_curve(kind, diagram, _mesh(args), args.essential == "include").to_csv())


def _read_curve(path):
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"{path}: expected one curve line, found {len(lines)}")
    return PersistenceCurve.from_csv(lines[0])


def cmd_dist(args, out):
    metric = args.metric
    if args.from_curves:
        base = metric.rsplit("-", 1)[-1]
        if base not in ("l1", "dtw"):
            raise UsageError("--from-curves needs a metric ending in -l1 or -dtw")
        value = curve_dist(_read_curve(args.a), _read_curve(args.b), base)
    else:
        s = parse_series_text(Path(args.a).read_text())
        t = parse_series_text(Path(args.b).read_text())
        if metric == "l1":
            value = dist_l1(fill_missing(s), fill_missing(t))
        elif metric == "l2":
            value = dist_l2(fill_missing(s), fill_missing(t))
        elif metric == "dtw":
            value = dtw(fill_missing(s), fill_missing(t), args.window)
        else:
            value = ensemble_distance(_config(args, metric, args.alpha), s, t)
    out.write(f"{value!r}\n")


def cmd_bench(args, out):
    configs = [_config(args, m, a) for m in args.metrics.split(",") for a in args.alphas]
    results = []
    for directory in bench.find_datasets(args.data):
        dataset = bench.load_ucr(directory)
        results.append(bench.run_benchmark(dataset, configs, args.baselines, args.jobs))
        for row in results[-1].rows:
            if row.skipped:
                print(f"tda-ts bench: {row.dataset} {row.metric} skipped: {row.reason}", file=sys.stderr)
    text = bench.format_results_csv(results, timings=args.timings)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)


def cmd_compare(args, out):
    ours = bench.read_results_csv(args.results)
    reference = bench.read_reference_csv(args.reference)
    report = bench.compare_results(ours, reference, args.metric, args.alpha)
    if args.out:
        Path(args.out).write_text(report.to_csv())
    else:
        out.write(report.to_csv())
    if args.svg:
        bench.residual_svg(report, args.svg)
    print(report.summary(), file=sys.stderr)


def build_parser():
    parser = _Parser(prog="tda-ts", description="Topological distances for time series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagram", help="print the sublevel persistence diagram of a series")
    p.add_argument("--values", help="comma-separated values")
    p.add_argument("--file", help="file of values ('-' for stdin)")
    p.add_argument("--quantize", action="store_true", help="quantize to levels 1..101 first")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("curve", help="print the persistence curve of a quantized series as CSV")
    p.add_argument("--values")
    p.add_argument("--file")
    p.add_argument("--kind", choices=sorted(CURVE_ALIASES), default="sl")
    _add_curve_options(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("dist", help="distance between two series (or two curves)")
    p.add_argument("--metric", required=True,
                   help="l1, l2, dtw, or an ensemble metric such as sl-l1, sl-dtw, betti-l1")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--a", required=True, help="first series (or curve) file")
    p.add_argument("--b", required=True, help="second series (or curve) file")
    p.add_argument("--from-curves", action="store_true",
                   help="--a and --b hold curve CSV lines; print their curve distance")
    _add_ensemble_options(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bench", help="1-NN benchmark over UCR-format datasets")
    p.add_argument("--data", required=True, help="dataset directory or archive root")
    p.add_argument("--alphas", type=_float_list, default=[0.0, 0.25, 0.5, 0.75, 1.0])
    p.add_argument("--metrics", default="sl-l1,sl-dtw")
    p.add_argument("--baselines", action="store_true", help="add euclidean and DTW 1-NN rows")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the results CSV here instead of stdout")
    p.add_argument("--timings", action="store_true",
                   help="fill elapsed_seconds (makes output non-reproducible)")
    _add_ensemble_options(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("compare", help="residuals of benchmark results against a reference")
    p.add_argument("--results", required=True, help="results CSV from 'bench'")
    p.add_argument("--reference", required=True, help="CSV with columns dataset,accuracy")
    p.add_argument("--metric", required=True)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--out", help="write the residual CSV here instead of stdout")
    p.add_argument("--svg", help="also save a residual bar chart")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"tda-ts {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TdaTsError, OSError) as exc:
        print(f"tda-ts {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
