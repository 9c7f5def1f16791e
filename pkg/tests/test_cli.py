import json

import pytest

from hardy_embed.cli import main
from hardy_embed.svg import line_plot_svg


def run(args):
    return main([str(a) for a in args])


def test_check_identity_passes(tmp_path, capsys):
    csv_path = tmp_path / "id.csv"
    code = run(["check-identity", "--n", 10, "--trials", 5, "--seed", 0, "--out-csv", csv_path])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS" in out
    assert csv_path.read_text().startswith("trial,N,quadrature_sq,quadratic_form,deviation\n")


def test_check_identity_fails_on_impossible_tolerance(capsys):
    code = run(["check-identity", "--n", 10, "--trials", 2, "--tol", "1e-1"])
    assert code == 0
    # an unmeetable tail budget surfaces as a nonzero exit, not a traceback
    code = run(["check-identity", "--n", 10, "--trials", 2, "--tol", "1e-300"])
    assert code == 1
    assert "ERROR" in capsys.readouterr().err


def test_bound_command(capsys):
    code = run(["bound", "--n", 30, "--trials", 10, "--seed", 1])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("PASS") == 3


def test_spectral_command(tmp_path, capsys):
    svg_path = tmp_path / "growth.svg"
    code = run(["spectral", "--n-grid", "1,2,10", "--out-svg", svg_path])
    out = capsys.readouterr().out
    assert code == 0
    assert "lambda_max=1.000000000000" in out
    assert svg_path.read_text().startswith("<svg")


def test_extremal_bound_only(capsys):
    code = run(["extremal", "--eps", "0.5", "--no-rayleigh"])
    out = capsys.readouterr().out
    assert code == 0
    assert "ratio=0.63032901" in out


def test_extremal_with_rayleigh(tmp_path):
    json_path = tmp_path / "sweep.json"
    code = run(["extremal", "--eps-grid", "0.5,0.3", "--n-grid", "1,10", "--out-json", json_path])
    assert code == 0
    payload = json.loads(json_path.read_text())
    kinds = [row["kind"] for row in payload["rows"]]
    assert kinds == ["rayleigh", "rayleigh", "bound"] * 2


def test_local_sweep_with_coefficient_file(tmp_path, capsys):
    coeffs = tmp_path / "f.csv"
    coeffs.write_text("a_n\n1\n1\n", encoding="utf-8")
    code = run(["local-sweep", "--coeffs", coeffs, "--tau-grid=0,0.5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "max window integral = 2.80365921" in out


def test_weights_command(capsys):
    code = run(["weights", "--tol", "1e-6"])
    assert code == 0
    assert "PASS" in capsys.readouterr().out


def test_determinism_byte_identical(tmp_path):
    outputs = []
    for tag in ("a", "b"):
        csv_path = tmp_path / f"{tag}.csv"
        json_path = tmp_path / f"{tag}.json"
        assert run([
            "check-identity", "--n", 12, "--trials", 4, "--seed", 42,
            "--out-csv", csv_path, "--out-json", json_path,
        ]) == 0
        outputs.append((csv_path.read_bytes(), json_path.read_bytes()))
    assert outputs[0] == outputs[1]


def test_determinism_extremal(tmp_path):
    blobs = []
    for tag in ("a", "b"):
        path = tmp_path / f"{tag}.csv"
        assert run(["extremal", "--eps-grid", "0.3,0.1", "--n-grid", "10", "--out-csv", path]) == 0
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1]


def test_svg_plot_basics():
    doc = line_plot_svg([1, 10, 100], [1.0, 1.5, 1.8], "N", "lambda", logx=True)
    assert doc.startswith("<svg") and doc.rstrip().endswith("</svg>")
    assert "polyline" in doc
    with pytest.raises(ValueError):
        line_plot_svg([], [], "x", "y")
    with pytest.raises(ValueError):
        line_plot_svg([-1, 1], [0, 1], "x", "y", logx=True)


def test_thread_cap_env(monkeypatch):
    from hardy_embed.util import thread_count, thread_map

    monkeypatch.setenv("HARDY_EMBED_THREADS", "2")
    assert thread_count() == 2
    assert thread_map(lambda x: x * x, [1, 2, 3]) == [1, 4, 9]
    monkeypatch.setenv("HARDY_EMBED_THREADS", "0")
    assert thread_count() >= 1
    monkeypatch.setenv("HARDY_EMBED_THREADS", "-1")
    with pytest.raises(ValueError):
        thread_count()
