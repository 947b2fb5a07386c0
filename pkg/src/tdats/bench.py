"""UCR-style dataset loading, 1-NN classification and result reporting."""
import csv
import io
import logging
import math
import re
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._errors import BenchError, TdaTsError
from .distances import _dtw_value
from .ensemble import CurveCache, blend, geometric_operand, topological_transform
from .persistence import _fmt
from .series import as_series, dist_l1, dist_l2, fill_missing

log = logging.getLogger(__name__)

RESULT_HEADER = ("dataset", "metric", "alpha", "accuracy", "elapsed_seconds")
RESIDUAL_HEADER = ("dataset", "ours", "reference", "residual", "outcome")
TIE_TOLERANCE = 1e-9


@dataclass
class LabeledDataset:
    name: str
    train: list
    test: list

    def __post_init__(self):
        if not self.train:
            raise BenchError(f"{self.name}: empty training split")
        if not self.test:
            raise BenchError(f"{self.name}: empty test split")
        unseen = {label for label, _ in self.test} - {label for label, _ in self.train}
        if unseen:
            warnings.warn(f"{self.name}: test labels {sorted(map(str, unseen))} never occur in training")

    @property
    def equal_length(self):
        return len({s.size for _, s in self.train + self.test}) == 1


def _parse_label(token):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        x = float(token)
    except ValueError:
        return token
    return int(x) if x.is_integer() else x


def _parse_value(token):
    if token.lower() == "nan":
        return math.nan
    return float(token)


def read_split(path):
    """Parse one UCR split: a label then the values on each line.

    Tabs separate fields (commas or spaces are accepted for older files);
    ``NaN`` marks a missing value.
    """
    path = Path(path)
    if not path.is_file():
        raise BenchError(f"missing file {path}")
    rows = []
    with path.open() as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            tokens = line.split("\t") if "\t" in line else re.split(r"[,\s]+", line)
            if len(tokens) < 2:
                raise BenchError(f"{path}:{lineno}: row has a label but no values")
            try:
                values = [_parse_value(tok) for tok in tokens[1:]]
            except ValueError as exc:
                raise BenchError(f"{path}:{lineno}: non-numeric value ({exc})") from None
            try:
                series = as_series(values)
            except TdaTsError as exc:
                raise BenchError(f"{path}:{lineno}: {exc}") from None
            rows.append((_parse_label(tokens[0].strip()), series))
    if not rows:
        raise BenchError(f"{path}: file contains no rows")
    return rows


def load_ucr(path):
    """Load ``<Name>_TRAIN.tsv`` and ``<Name>_TEST.tsv`` from a dataset directory."""
    path = Path(path)
    if not path.is_dir():
        raise BenchError(f"dataset directory {path} does not exist")
    name = path.name
    train = path / f"{name}_TRAIN.tsv"
    if not train.exists():
        found = sorted(path.glob("*_TRAIN.tsv"))
        if len(found) != 1:
            raise BenchError(f"{path}: expected exactly one *_TRAIN.tsv file, found {len(found)}")
        train = found[0]
        name = train.name[: -len("_TRAIN.tsv")]
    test = path / f"{name}_TEST.tsv"
    return LabeledDataset(name, read_split(train), read_split(test))


def find_datasets(root):
    """Dataset directories under ``root``: itself if it holds a split, else its children."""
    root = Path(root)
    if not root.is_dir():
        raise BenchError(f"data directory {root} does not exist")
    if any(root.glob("*_TRAIN.tsv")):
        return [root]
    dirs = sorted(p for p in root.iterdir() if p.is_dir() and any(p.glob("*_TRAIN.tsv")))
    if not dirs:
        raise BenchError(f"no *_TRAIN.tsv files in {root} or its subdirectories")
    return dirs


def write_split(path, rows):
    with open(path, "w") as fh:
        for label, series in rows:
            fh.write("\t".join([str(label)] + ["NaN" if math.isnan(x) else repr(float(x)) for x in series]))
            fh.write("\n")


def knn1_predict(distance, train, query):
    """Label of the nearest training item; ties go to the earliest item."""
    if not train:
        raise BenchError("empty training set")
    dists = [distance(series, query) for _, series in train]
    return train[int(np.argmin(dists))][0]


def pairwise(queries, refs, func, jobs=1):
    """Matrix ``D[i, j] = func(queries[i], refs[j])``, rows spread over threads."""
    def row(q):
        return [func(q, r) for r in refs]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(row, queries))
    else:
        rows = [row(q) for q in queries]
    return np.array(rows, dtype=np.float64).reshape(len(queries), len(refs))


def _dtw_fn(window):
    w = -1 if window is None else int(window)

    def fn(a, b):
        if w >= 0 and w < abs(a.size - b.size):
            raise BenchError(f"infeasible window {w} for lengths {a.size} and {b.size}")
        return float(_dtw_value(a, b, w))

    return fn


def _checked_l1(a, b):
    if a.size != b.size:
        raise BenchError("l1 requires equal-length series; use a dtw metric")
    return dist_l1(a, b)


def _checked_l2(a, b):
    if a.size != b.size:
        raise BenchError("euclidean baseline requires equal-length series")
    return dist_l2(a, b)


def accuracy_from_distances(dmat, train_labels, test_labels):
    """1-NN predictions and accuracy from a ``(test, train)`` distance matrix."""
    nearest = np.argmin(dmat, axis=1)
    preds = [train_labels[k] for k in nearest]
    correct = sum(p == y for p, y in zip(preds, test_labels))
    return preds, correct / len(test_labels)


@dataclass
class BenchmarkRow:
    dataset: str
    metric: str
    alpha: float = None
    accuracy: float = None
    elapsed_seconds: float = 0.0
    reason: str = None

    @property
    def skipped(self):
        return self.accuracy is None

    def sort_key(self):
        return (self.dataset, self.metric, -1.0 if self.alpha is None else self.alpha)


@dataclass
class BenchmarkResult:
    dataset: str
    rows: list = field(default_factory=list)
    baselines: dict = field(default_factory=dict)
    predictions: dict = field(default_factory=dict)

    def accuracy(self, metric, alpha=None):
        for row in self.rows:
            if row.metric == metric and row.alpha == alpha:
                return row.accuracy
        raise KeyError((metric, alpha))


def _group_key(cfg):
    return (cfg.base, cfg.curve_kind, cfg.include_essential, cfg.geom, cfg.window,
            cfg.mesh.points.tobytes())


def run_benchmark(dataset, configs, include_baselines=False, jobs=1, use_cache=True):
    """Classify every test item of ``dataset`` by 1-NN under each config.

    Configs that differ only in ``alpha`` share their geometric and
    topological distance matrices; each row's elapsed time covers the shared
    matrices plus its own blend. A config that cannot run on the data (L1 on
    variable-length series, say) yields a skipped row with a reason.
    """
    configs = list(configs)
    if not configs:
        raise BenchError("no configurations given")
    train_labels = [label for label, _ in dataset.train]
    test_labels = [label for label, _ in dataset.test]
    result = BenchmarkResult(dataset.name)

    groups = {}
    for cfg in configs:
        groups.setdefault(_group_key(cfg), []).append(cfg)

    for members in groups.values():
        cfg0 = members[0]
        t0 = time.perf_counter()
        try:
            geo_train = [geometric_operand(s, cfg0.geom) for _, s in dataset.train]
            geo_test = [geometric_operand(s, cfg0.geom) for _, s in dataset.test]
            cache = CurveCache() if use_cache else None
            top_train = [topological_transform(s, cfg0, cache).samples for _, s in dataset.train]
            top_test = [topological_transform(s, cfg0, cache).samples for _, s in dataset.test]
            if cfg0.base == "l1":
                geo = pairwise(geo_test, geo_train, _checked_l1, jobs)
                top = pairwise(top_test, top_train, dist_l1, jobs)
            else:
                geo = pairwise(geo_test, geo_train, _dtw_fn(cfg0.window), jobs)
                top = pairwise(top_test, top_train, _dtw_fn(None), jobs)
        except TdaTsError as exc:
            reason = str(exc)
            log.warning("%s: skipping %s: %s", dataset.name, cfg0.metric_id, reason)
            for cfg in members:
                result.rows.append(BenchmarkRow(dataset.name, cfg.metric_id, cfg.alpha, reason=reason))
            continue
        shared = time.perf_counter() - t0
        for cfg in members:
            t1 = time.perf_counter()
            preds, acc = accuracy_from_distances(blend(cfg.alpha, geo, top), train_labels, test_labels)
            elapsed = shared + time.perf_counter() - t1
            result.rows.append(BenchmarkRow(dataset.name, cfg.metric_id, cfg.alpha, acc, elapsed))
            result.predictions[(cfg.metric_id, cfg.alpha)] = preds

    if include_baselines:
        raw_train = [fill_missing(s) for _, s in dataset.train]
        raw_test = [fill_missing(s) for _, s in dataset.test]
        for metric, fn in (("ed", _checked_l2), ("dtw", _dtw_fn(None))):
            t0 = time.perf_counter()
            try:
                preds, acc = accuracy_from_distances(
                    pairwise(raw_test, raw_train, fn, jobs), train_labels, test_labels)
            except TdaTsError as exc:
                result.rows.append(BenchmarkRow(dataset.name, metric, reason=str(exc)))
                continue
            result.rows.append(BenchmarkRow(dataset.name, metric, None, acc, time.perf_counter() - t0))
            result.baselines[metric] = acc
            result.predictions[(metric, None)] = preds

    result.rows.sort(key=BenchmarkRow.sort_key)
    return result


def format_results_csv(results, timings=False):
    """Results as CSV text, rows sorted by dataset, metric and alpha.

    Elapsed times are left blank unless ``timings`` is set so that repeated
    runs produce identical files. Skipped rows have a blank accuracy.
    """
    if isinstance(results, BenchmarkResult):
        results = [results]
    rows = sorted((r for res in results for r in res.rows), key=BenchmarkRow.sort_key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESULT_HEADER)
    for r in rows:
        writer.writerow([
            r.dataset,
            r.metric,
            "" if r.alpha is None else _fmt(r.alpha),
            "" if r.accuracy is None else repr(r.accuracy),
            f"{r.elapsed_seconds:.6f}" if timings and not r.skipped else "",
        ])
    return buf.getvalue()


def read_results_csv(path):
    """Parse a results CSV back into one :class:`BenchmarkResult` per dataset."""
    out = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != RESULT_HEADER:
            raise BenchError(f"{path}: expected header {','.join(RESULT_HEADER)}")
        for lineno, rec in enumerate(reader, 2):
            try:
                row = BenchmarkRow(
                    rec["dataset"], rec["metric"],
                    float(rec["alpha"]) if rec["alpha"] else None,
                    float(rec["accuracy"]) if rec["accuracy"] else None,
                    float(rec["elapsed_seconds"]) if rec["elapsed_seconds"] else 0.0,
                )
            except ValueError as exc:
                raise BenchError(f"{path}:{lineno}: {exc}") from None
            out.setdefault(row.dataset, BenchmarkResult(row.dataset)).rows.append(row)
    return list(out.values())


def read_reference_csv(path):
    """Reference accuracies from a ``dataset,accuracy`` CSV."""
    ref = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if not reader.fieldnames or not {"dataset", "accuracy"} <= set(reader.fieldnames):
            raise BenchError(f"{path}: expected columns dataset,accuracy")
        for lineno, rec in enumerate(reader, 2):
            try:
                ref[rec["dataset"]] = float(rec["accuracy"])
            except ValueError:
                raise BenchError(f"{path}:{lineno}: accuracy {rec['accuracy']!r} is not a number") from None
    return ref


@dataclass
class ResidualReport:
    metric: str
    alpha: float
    rows: list = field(default_factory=list)
    uncompared: list = field(default_factory=list)
    unused_reference: list = field(default_factory=list)

    def _count(self, outcome):
        return sum(r[4] == outcome for r in self.rows)

    @property
    def wins(self):
        return self._count("win")

    @property
    def ties(self):
        return self._count("tie")

    @property
    def losses(self):
        return self._count("loss")

    def summary(self):
        alpha = "" if self.alpha is None else f" alpha={_fmt(self.alpha)}"
        text = (f"{self.metric}{alpha}: {self.wins} wins, {self.ties} ties, "
                f"{self.losses} losses out of {len(self.rows)}")
        if self.uncompared:
            text += f"; uncompared: {', '.join(self.uncompared)}"
        return text

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(RESIDUAL_HEADER)
        for name, ours, ref, residual, outcome in self.rows:
            writer.writerow([name, repr(ours), repr(ref), repr(residual), outcome])
        return buf.getvalue()


def compare_results(ours, reference, metric, alpha=None):
    """Per-dataset accuracy residuals ``ours - reference`` with win/tie/loss."""
    if isinstance(ours, BenchmarkResult):
        ours = [ours]
    report = ResidualReport(metric, alpha)
    seen = set()
    for res in sorted(ours, key=lambda r: r.dataset):
        try:
            acc = res.accuracy(metric, alpha)
        except KeyError:
            continue
        if acc is None:
            continue
        seen.add(res.dataset)
        if res.dataset not in reference:
            report.uncompared.append(res.dataset)
            continue
        residual = acc - reference[res.dataset]
        if abs(residual) <= TIE_TOLERANCE:
            outcome = "tie"
        else:
            outcome = "win" if residual > 0 else "loss"
        report.rows.append((res.dataset, acc, reference[res.dataset], residual, outcome))
    report.unused_reference = sorted(set(reference) - seen)
    return report


def residual_svg(report, path):
    """Bar chart of residuals per dataset, saved as SVG."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r[0] for r in report.rows]
    residuals = [r[3] for r in report.rows]
    fig, ax = plt.subplots(figsize=(max(4, 0.3 * len(names) + 2), 3.5))
    colors = ["tab:green" if r > TIE_TOLERANCE else "tab:red" if r < -TIE_TOLERANCE else "tab:gray"
              for r in residuals]
    ax.bar(range(len(names)), residuals, color=colors)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=90, fontsize=7)
    ax.set_ylabel("accuracy difference")
    ax.set_title(report.summary().split(";")[0], fontsize=9)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
