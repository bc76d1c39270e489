import math
from pathlib import Path

import pytest

from banditlab_figures import FIGURES, RenderInputError, render_all
from banditlab_figures.cli import main
from banditlab_figures.render import DIAG_HEADER, REGRET_HEADER, SWEEP_HEADER


def _write(path: Path, header, rows):
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", newline="\n")


def _synthetic_inputs(in_dir: Path) -> None:
    in_dir.mkdir(parents=True, exist_ok=True)
    horizon = 25
    for name, policies in (("fig1_left", ("ts", "r2")),
                           ("fig_ber_left", ("ts", "r2_mbar20", "r2_mbar40")),
                           ("fig_fix_left", ("ts", "fix"))):
        rows = []
        for policy in policies:
            scale = 1.0 if policy == "ts" else 0.7
            for t in range(1, horizon + 1):
                mean = scale * math.sqrt(t)
                rows.append((name, policy, t, mean, 0.02 * mean, 500, 7))
        _write(in_dir / f"{name}.csv", REGRET_HEADER, rows)
    for name, policies, xs in (
            ("fig1_right", ("ts", "r2"),
             [round(-0.30 + 0.01 * i, 2) for i in range(30)]),
            ("fig_ber_right", ("ts", "r2_mbar40"), list(range(1, 8))),
            ("fig_fix_right", ("r2_mbar40", "fix"), list(range(1, 8)))):
        rows = []
        for policy in policies:
            for x in xs:
                nu = abs(float(x)) * (0.5 if policy == "ts" else 1.5)
                rows.append((name, policy, x, nu))
        _write(in_dir / f"{name}.csv", SWEEP_HEADER, rows)
    for name in ("fig_ucb", "fig_ts_overlap", "fig_cov"):
        rows = []
        for t in range(1, horizon + 1):
            width = 1.0 / math.sqrt(t)
            rows.append((t, 0.5, max(0.0, 0.4 - 0.02 * t), 0.3 / t, 0.4,
                         0.7, 0.7 - width, 0.7 + width,
                         0.4, 0.4 - width, 0.4 + width))
        _write(in_dir / f"{name}.csv", DIAG_HEADER, rows)


@pytest.fixture()
def inputs(tmp_path):
    in_dir = tmp_path / "csv"
    _synthetic_inputs(in_dir)
    return in_dir


def test_renders_all_six_figures(inputs, tmp_path):
    out_dir = tmp_path / "figs"
    paths = render_all(inputs, out_dir)
    assert len(paths) == 6
    assert {p.stem for p in paths} == set(FIGURES)
    for path in paths:
        data = path.read_bytes()
        assert len(data) > 1000
        assert data[:8] == b"\x89PNG\r\n\x1a\n"


def test_rendering_is_byte_stable(inputs, tmp_path):
    first = render_all(inputs, tmp_path / "a")
    second = render_all(inputs, tmp_path / "b")
    for p1, p2 in zip(first, second):
        assert p1.read_bytes() == p2.read_bytes()


def test_only_filter(inputs, tmp_path):
    paths = render_all(inputs, tmp_path / "one", only="fig_cov")
    assert [p.name for p in paths] == ["fig_cov.png"]
    with pytest.raises(RenderInputError, match="unknown figure id"):
        render_all(inputs, tmp_path / "bad", only="fig_42")


def test_missing_and_empty_inputs_error(inputs, tmp_path):
    (inputs / "fig_cov.csv").unlink()
    with pytest.raises(RenderInputError, match="missing"):
        render_all(inputs, tmp_path / "x", only="fig_cov")
    (inputs / "fig_cov.csv").write_text("")
    with pytest.raises(RenderInputError, match="empty"):
        render_all(inputs, tmp_path / "x", only="fig_cov")


def test_schema_violations_are_reported_with_location(inputs, tmp_path):
    bad = inputs / "fig1_left.csv"
    bad.write_text("wrong,header\n1,2\n")
    with pytest.raises(RenderInputError, match="fig1_left.csv:1"):
        render_all(inputs, tmp_path / "x", only="fig1")
    _synthetic_inputs(inputs)
    lines = bad.read_text().splitlines()
    lines[3] = lines[3] + ",extra_field"
    bad.write_text("\n".join(lines) + "\n")
    with pytest.raises(RenderInputError, match="fig1_left.csv:4"):
        render_all(inputs, tmp_path / "x", only="fig1")


def test_cli_roundtrip_and_error_exit(inputs, tmp_path, capsys):
    rc = main(["--in", str(inputs), "--out", str(tmp_path / "figs")])
    assert rc == 0
    assert len(list((tmp_path / "figs").glob("*.png"))) == 6
    (inputs / "fig_ucb.csv").write_text("")
    rc = main(["--in", str(inputs), "--out", str(tmp_path / "figs2"),
               "--only", "fig_ucb"])
    assert rc == 1
    assert "empty" in capsys.readouterr().err


def test_renders_from_real_preset_outputs(tmp_path):
    # end-to-end against the simulator's own CSVs, at reduced trial counts;
    # skipped when only this package is installed
    bl_cli = pytest.importorskip("banditlab.cli")
    out = tmp_path / "out"
    assert bl_cli.main(["dp-build", "--m-bar", "20,30,40",
                        "--out", str(out / "tables")]) == 0
    runs = [
        ("fig1_left", ["--trials", "200", "--horizon", "50"]),
        ("fig1_right", []),
        ("fig_ucb", ["--horizon", "200"]),
        ("fig_ts_overlap", ["--horizon", "200"]),
        ("fig_cov", ["--horizon", "200"]),
        ("fig_ber_left", ["--trials", "500"]),
        ("fig_ber_right", []),
        ("fig_fix_left", ["--trials", "100", "--horizon", "50"]),
        ("fig_fix_right", []),
    ]
    for experiment, extra in runs:
        argv = ["run", experiment, "--out", str(out),
                "--table", str(out / "tables")] + extra
        assert bl_cli.main(argv) == 0
    first = render_all(out, tmp_path / "figs")
    assert len(first) == 6
    for path in first:
        assert path.stat().st_size > 1000
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    second = render_all(out, tmp_path / "figs_again")
    for p1, p2 in zip(first, second):
        assert p1.read_bytes() == p2.read_bytes()
