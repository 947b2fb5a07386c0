import io
import subprocess
import sys

import pytest

from tdats.cli import main
from tdats.curves import PersistenceCurve
from tdats.datasets import bundled_path
from tdats.distances import curve_dist
from tdats.ensemble import EnsembleConfig, topological_transform
from tdats.series import dist_l1


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_diagram_values():
    assert run("diagram", "--values", "1,3,2,4") == (0, "1 4 *\n2 3\n")


def test_diagram_file_and_quantize(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("0 5\n10\n")
    assert run("diagram", "--file", str(f), "--quantize") == (0, "1 101 *\n")


def test_diagram_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("3,1,3,1,3"))
    assert run("diagram") == (0, "1 3 *\n1 3\n")


def test_curve_output():
    code, out = run("curve", "--values", "0,5,10,3")
    fields = out.strip().split(",")
    assert code == 0 and fields[:3] == ["stabilized_life", "1", "101"] and len(fields) == 104
    code, out = run("curve", "--values", "1,2,3", "--kind", "betti")
    assert out.startswith("betti,1,101,1,1,")


@pytest.fixture
def pair(tmp_path):
    a, b = tmp_path / "f1.txt", tmp_path / "f2.txt"
    a.write_text("0.3,1.7,-0.2,2.2,0.9")
    b.write_text("1.0,0.1,NaN,2.5,-0.7")
    return a, b


def test_dist_alpha_one_is_raw_l1(pair):
    a, b = pair
    code, out = run("dist", "--metric", "sl-l1", "--alpha", "1", "--a", str(a), "--b", str(b))
    assert code == 0
    assert float(out) == dist_l1([0.3, 1.7, -0.2, 2.2, 0.9], [1.0, 0.1, 0.0, 2.5, -0.7])
    code, out = run("dist", "--metric", "l1", "--a", str(a), "--b", str(b))
    assert float(out) == dist_l1([0.3, 1.7, -0.2, 2.2, 0.9], [1.0, 0.1, 0.0, 2.5, -0.7])


def test_curve_round_trip_through_dist(tmp_path, pair):
    a, b = pair
    ca, cb = tmp_path / "ca.csv", tmp_path / "cb.csv"
    ca.write_text(run("curve", "--file", str(a))[1])
    cb.write_text(run("curve", "--file", str(b))[1])
    cfg = EnsembleConfig(0.0)
    sa = topological_transform([0.3, 1.7, -0.2, 2.2, 0.9], cfg)
    sb = topological_transform([1.0, 0.1, float("nan"), 2.5, -0.7], cfg)
    assert PersistenceCurve.from_csv(ca.read_text()) == sa
    for metric, kind in (("sl-l1", "l1"), ("sl-dtw", "dtw")):
        code, out = run("dist", "--metric", metric, "--from-curves", "--a", str(ca), "--b", str(cb))
        assert code == 0 and float(out) == curve_dist(sa, sb, kind)


def test_bench_rows_and_determinism(tmp_path):
    data = str(bundled_path("ToySines"))
    args = ("bench", "--data", data, "--alphas", "0,0.25,0.5,0.75,1", "--metrics", "sl-l1,sl-dtw")
    code, first = run(*args)
    assert code == 0
    lines = first.splitlines()
    assert lines[0] == "dataset,metric,alpha,accuracy,elapsed_seconds"
    assert len(lines) == 1 + 10
    assert run(*args, "--jobs", "2")[1] == first
    out = tmp_path / "r.csv"
    assert run(*args, "--out", str(out)) == (0, "")
    assert out.read_text() == first


def test_bench_archive_root_and_baselines():
    code, out = run("bench", "--data", str(bundled_path("ToySines").parent), "--alphas", "1",
                    "--metrics", "sl-dtw", "--baselines")
    names = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert code == 0 and sorted(set(names)) == ["ToySines", "ToyTranslation"]
    assert len(names) == 2 * 3


def test_compare(tmp_path):
    results, ref = tmp_path / "r.csv", tmp_path / "ref.csv"
    run("bench", "--data", str(bundled_path("ToySines")), "--alphas", "0.5", "--metrics", "sl-l1",
        "--out", str(results))
    ref.write_text("dataset,accuracy\nToySines,0.5\n")
    svg = tmp_path / "r.svg"
    code, out = run("compare", "--results", str(results), "--reference", str(ref),
                    "--metric", "sl-l1", "--alpha", "0.5", "--svg", str(svg))
    assert code == 0
    assert out.splitlines()[0] == "dataset,ours,reference,residual,outcome"
    assert out.splitlines()[1].startswith("ToySines,")
    assert svg.exists()


def test_exit_codes(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["diagram", "--bogus"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    assert run("diagram", "--values", "1,x")[0] == 1
    assert run("diagram", "--values", "1,NaN")[0] == 2
    assert "persistence:" in capsys.readouterr().err
    assert run("curve", "--values", "1,2", "--mesh-max", "50")[0] == 2
    assert run("bench", "--data", str(tmp_path / "missing"))[0] == 2
    assert run("dist", "--metric", "sl-l1", "--a", str(tmp_path / "x"), "--b", str(tmp_path / "y"))[0] == 2
    err = capsys.readouterr().err
    assert "bench:" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "tdats.cli", "diagram", "--values", "1,3,2,4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 4 *\n2 3\n"
