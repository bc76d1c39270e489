"""Renderers for the six reference figures.

Input schemas (produced by the banditlab CLI):

    regret curves      experiment,policy,t,mean_cum_regret,stderr,trials,seed
    regularizer sweeps experiment,policy,sweep_param,nu
    diagnostics        t,q1,overlap,regularizer,pull_rate,
                       mean1,lo1,hi1,mean2,lo2,hi2

Every figure is two panels.  Rendering is deterministic: fixed styling, a
pinned Software tag instead of the matplotlib version string, and no
timestamps, so re-rendering identical CSVs yields identical bytes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

REGRET_HEADER = ["experiment", "policy", "t", "mean_cum_regret", "stderr",
                 "trials", "seed"]
SWEEP_HEADER = ["experiment", "policy", "sweep_param", "nu"]
DIAG_HEADER = ["t", "q1", "overlap", "regularizer", "pull_rate",
               "mean1", "lo1", "hi1", "mean2", "lo2", "hi2"]

_SAVE_KW = dict(dpi=110, metadata={"Software": "banditlab-figures"})

_POLICY_STYLE = {
    "ts": ("tab:blue", "posterior sampling"),
    "r2": ("tab:red", "squared-regret optimal"),
    "fix": ("tab:green", "shutdown variant"),
    "ucb": ("tab:purple", "index baseline"),
}


class RenderInputError(ValueError):
    """A CSV is missing, empty, or violates its schema."""


@dataclass(frozen=True)
class FigureSpec:
    """One output figure: its id, input CSVs, and axis labeling."""

    figure_id: str
    inputs: tuple[str, ...]
    title: str
    output: str = field(default="")

    def output_name(self) -> str:
        return self.output or f"{self.figure_id}.png"


def _policy_style(name: str):
    if name in _POLICY_STYLE:
        return _POLICY_STYLE[name]
    if name.startswith("r2_mbar"):
        depth = name.removeprefix("r2_mbar")
        shades = {"20": "tab:orange", "30": "tab:red", "40": "tab:brown"}
        return shades.get(depth, "tab:red"), f"DP policy (depth {depth})"
    if name.startswith("ts_lambda"):
        return "tab:cyan", f"scaled sampling ({name.removeprefix('ts_lambda')})"
    return "tab:gray", name


def _read_csv(path: Path, header: list[str]) -> dict[str, np.ndarray]:
    if not path.exists():
        raise RenderInputError(f"{path}: input CSV is missing")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            got = next(reader)
        except StopIteration:
            raise RenderInputError(f"{path}:1: file is empty") from None
        if got != header:
            raise RenderInputError(
                f"{path}:1: header {got!r} does not match {header!r}")
        columns: list[list] = [[] for _ in header]
        lineno = 1
        for row in reader:
            lineno += 1
            if len(row) != len(header):
                raise RenderInputError(
                    f"{path}:{lineno}: expected {len(header)} fields, "
                    f"got {len(row)}")
            for j, raw in enumerate(row):
                columns[j].append(raw)
    if lineno == 1:
        raise RenderInputError(f"{path}:1: no data rows")
    out: dict[str, np.ndarray] = {}
    for name, values in zip(header, columns):
        if name in ("experiment", "policy"):
            out[name] = np.asarray(values, dtype=object)
        else:
            try:
                out[name] = np.asarray([float(v) for v in values])
            except ValueError as exc:
                raise RenderInputError(
                    f"{path}: non-numeric value in column {name}: {exc}")
    return out


def _plot_regret(ax, data: dict[str, np.ndarray]) -> None:
    for policy in sorted(set(data["policy"])):
        mask = data["policy"] == policy
        t = data["t"][mask]
        mean = data["mean_cum_regret"][mask]
        se = data["stderr"][mask]
        order = np.argsort(t)
        t, mean, se = t[order], mean[order], se[order]
        color, label = _policy_style(policy)
        ax.plot(t, mean, color=color, label=label)
        ax.fill_between(t, mean - 1.96 * se, mean + 1.96 * se,
                        color=color, alpha=0.2, linewidth=0)
    ax.set_xlabel("round")
    ax.set_ylabel("mean cumulative regret")
    ax.legend(frameon=False)


def _plot_sweep(ax, data: dict[str, np.ndarray], xlabel: str) -> None:
    for policy in sorted(set(data["policy"])):
        mask = data["policy"] == policy
        x = data["sweep_param"][mask]
        nu = data["nu"][mask]
        order = np.argsort(x)
        color, label = _policy_style(policy)
        ax.plot(x[order], nu[order], marker="o", markersize=3,
                color=color, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("regularizer")
    ax.legend(frameon=False)


def _plot_intervals(ax, d: dict[str, np.ndarray]) -> None:
    t = d["t"]
    for arm, color in ((1, "tab:blue"), (2, "tab:orange")):
        ax.plot(t, d[f"mean{arm}"], color=color, label=f"arm {arm}")
        ax.fill_between(t, d[f"lo{arm}"], d[f"hi{arm}"], color=color,
                        alpha=0.2, linewidth=0)
    ax.set_xlabel("round")
    ax.set_ylabel("interval around the mean")
    ax.legend(frameon=False)


def _twin_rate(ax, t, series, series_label, rate, color) -> None:
    ax.plot(t, series, color=color, label=series_label)
    ax.set_xlabel("round")
    ax.set_ylabel(series_label, color=color)
    twin = ax.twinx()
    twin.plot(t, rate, color="tab:gray", alpha=0.8, label="suboptimal pull rate")
    twin.set_ylabel("suboptimal pull rate", color="tab:gray")


def _render_fig1(in_dir: Path, axes) -> None:
    _plot_regret(axes[0], _read_csv(in_dir / "fig1_left.csv", REGRET_HEADER))
    _plot_sweep(axes[1], _read_csv(in_dir / "fig1_right.csv", SWEEP_HEADER),
                xlabel="posterior mean of the uncertain arm")


def _render_fig_ucb(in_dir: Path, axes) -> None:
    d = _read_csv(in_dir / "fig_ucb.csv", DIAG_HEADER)
    start = 2 if d["t"].size > 2 else 0  # both arms pulled from round 3 on
    trimmed = {k: v[start:] for k, v in d.items()}
    _plot_intervals(axes[0], trimmed)
    axes[1].plot(trimmed["t"], trimmed["hi1"], color="tab:blue",
                 label="upper bound, arm 1")
    axes[1].plot(trimmed["t"], trimmed["hi2"], color="tab:orange",
                 label="upper bound, arm 2")
    axes[1].set_xlabel("round")
    axes[1].set_ylabel("upper confidence bound")
    axes[1].legend(frameon=False)


def _render_fig_ts_overlap(in_dir: Path, axes) -> None:
    d = _read_csv(in_dir / "fig_ts_overlap.csv", DIAG_HEADER)
    _plot_intervals(axes[0], d)
    axes[1].plot(d["t"], d["overlap"], color="tab:green")
    axes[1].set_xlabel("round")
    axes[1].set_ylabel("credible-interval overlap")


def _render_fig_cov(in_dir: Path, axes) -> None:
    d = _read_csv(in_dir / "fig_cov.csv", DIAG_HEADER)
    _twin_rate(axes[0], d["t"], d["overlap"], "interval overlap",
               d["pull_rate"], "tab:green")
    _twin_rate(axes[1], d["t"], d["regularizer"], "regularizer",
               d["pull_rate"], "tab:blue")


def _render_fig_ber(in_dir: Path, axes) -> None:
    _plot_regret(axes[0], _read_csv(in_dir / "fig_ber_left.csv", REGRET_HEADER))
    _plot_sweep(axes[1], _read_csv(in_dir / "fig_ber_right.csv", SWEEP_HEADER),
                xlabel="pseudo-counts k of the known-ish arm")


def _render_fig_fix(in_dir: Path, axes) -> None:
    _plot_regret(axes[0], _read_csv(in_dir / "fig_fix_left.csv", REGRET_HEADER))
    _plot_sweep(axes[1], _read_csv(in_dir / "fig_fix_right.csv", SWEEP_HEADER),
                xlabel="pseudo-counts k of the known-ish arm")


FIGURES: dict[str, FigureSpec] = {
    "fig1": FigureSpec("fig1", ("fig1_left.csv", "fig1_right.csv"),
                       "Regret and regularizers, one-armed Gaussian"),
    "fig_ucb": FigureSpec("fig_ucb", ("fig_ucb.csv",),
                          "Index baseline: confidence intervals and bounds"),
    "fig_ts_overlap": FigureSpec("fig_ts_overlap", ("fig_ts_overlap.csv",),
                                 "Posterior sampling: credible intervals"),
    "fig_cov": FigureSpec("fig_cov", ("fig_cov.csv",),
                          "Overlap and regularizer vs the pull rate"),
    "fig_ber": FigureSpec("fig_ber", ("fig_ber_left.csv", "fig_ber_right.csv"),
                          "Regret and regularizers, Bernoulli pair"),
    "fig_fix": FigureSpec("fig_fix", ("fig_fix_left.csv", "fig_fix_right.csv"),
                          "Shutdown variant: regret and regularizers"),
}

_RENDERERS = {
    "fig1": _render_fig1,
    "fig_ucb": _render_fig_ucb,
    "fig_ts_overlap": _render_fig_ts_overlap,
    "fig_cov": _render_fig_cov,
    "fig_ber": _render_fig_ber,
    "fig_fix": _render_fig_fix,
}


def render(spec: FigureSpec, in_dir: Path, out_dir: Path) -> Path:
    """Render one figure from its CSVs; returns the written PNG path."""
    fig, axes = plt.subplots(1, 2, figsize=(9.6, 3.6))
    try:
        _RENDERERS[spec.figure_id](Path(in_dir), axes)
        fig.suptitle(spec.title, fontsize=11)
        fig.tight_layout()
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        out_path = out_dir / spec.output_name()
        fig.savefig(out_path, **_SAVE_KW)
    finally:
        plt.close(fig)
    return out_path


def render_all(in_dir: Path, out_dir: Path,
               only: str | None = None) -> list[Path]:
    """Render every known figure (or a single one with only=<figure id>)."""
    if only is not None:
        if only not in FIGURES:
            raise RenderInputError(
                f"unknown figure id {only!r}; known: {sorted(FIGURES)}")
        specs = [FIGURES[only]]
    else:
        specs = [FIGURES[k] for k in sorted(FIGURES)]
    return [render(spec, Path(in_dir), Path(out_dir)) for spec in specs]
