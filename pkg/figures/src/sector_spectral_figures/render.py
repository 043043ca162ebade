"""Figure builders for the four experiment plots.

Each builder takes parsed CSV rows and returns ``(figure, FigureInfo)`` where
the info records the series drawn and the cutoff-marker positions, read
verbatim from the CSV's ``k_star`` column. Rendering is deterministic: fixed
style, fixed colors, no timestamps embedded in the output files.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .io import read_many  # noqa: E402

_COLORS = ["#d62728", "#ff7f0e", "#1f2a7a", "#2ca02c", "#9467bd", "#8c564b"]
_LOG_FLOOR = 1e-17


@dataclass
class FigureInfo:
    figure_id: str
    series_labels: list = field(default_factory=list)
    marker_positions: list = field(default_factory=list)

    @property
    def n_series(self):
        return len(self.series_labels)


def _style(ax, xlabel, ylabel, title):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.25)


def _groups(rows, key):
    order = []
    for row in rows:
        k = row[key]
        if k not in order:
            order.append(k)
    return order


def _fmt_beta(beta):
    mult = beta / np.pi
    return f"{mult:.2g}pi"


def build_spectrum(rows):
    fig, ax = plt.subplots(figsize=(7, 5))
    info = FigureInfo("spectrum")
    for i, W in enumerate(_groups(rows, "W")):
        sub = [r for r in rows if r["W"] == W]
        idx = np.array([r["index"] for r in sub])
        vals = np.array([r["eigenvalue"] for r in sub])
        color = _COLORS[i % len(_COLORS)]
        mask = vals > 0
        label = f"W={int(W)}"
        ax.semilogy(idx[mask], vals[mask], color=color, label=label)
        kstar = sub[0]["k_star"]
        ax.axvline(kstar, color=color, linestyle="--", alpha=0.7)
        info.series_labels.append(label)
        info.marker_positions.append(kstar)
    _style(ax, "index k", "eigenvalue", "Information-matrix spectrum")
    if info.series_labels:
        ax.legend()
    return fig, info


def _mse_vs_k(rows, group_key, label_fn, title):
    fig, ax = plt.subplots(figsize=(7, 5))
    info = FigureInfo(title)
    for i, g in enumerate(_groups(rows, group_key)):
        sub = [r for r in rows if r[group_key] == g]
        seen = {}
        for r in sub:
            seen[r["K"]] = (r["mean_mse"], r["ci95_half"])
        K = np.array(sorted(seen))
        mean = np.array([seen[k][0] for k in K])
        ci = np.array([seen[k][1] for k in K])
        color = _COLORS[i % len(_COLORS)]
        label = label_fn(sub[0])
        ax.semilogy(K, np.maximum(mean, _LOG_FLOOR), color=color, marker="o",
                    markersize=3, label=label)
        ax.fill_between(K, np.maximum(mean - ci, _LOG_FLOOR),
                        np.maximum(mean + ci, _LOG_FLOOR), color=color, alpha=0.2)
        kstar = sub[0]["k_star"]
        ax.axvline(kstar, color=color, linestyle="--", alpha=0.7)
        info.series_labels.append(label)
        info.marker_positions.append(kstar)
    _style(ax, "filter bank size K", "test MSE", title)
    if info.series_labels:
        ax.legend()
    return fig, info


def build_tomography(rows):
    return _mse_vs_k(rows, "beta", lambda r: f"beta={_fmt_beta(r['beta'])}",
                     "Tomography phase transition")


def build_dim(rows):
    return _mse_vs_k(rows, "d", lambda r: f"d={int(r['d'])}",
                     "Hidden-dimension ablation")


def build_basis(rows):
    return _mse_vs_k(rows, "basis", lambda r: str(r["basis"]),
                     "Slepian vs Fourier bank")


BUILDERS = {
    "spectrum": build_spectrum,
    "tomography": build_tomography,
    "dim": build_dim,
    "basis": build_basis,
}


def build_figure(figure_id, csv_paths):
    if figure_id not in BUILDERS:
        raise ValueError(f"unknown figure id: {figure_id}")
    rows = read_many(csv_paths, figure_id)
    return BUILDERS[figure_id](rows)


def save_figure(fig, out_path):
    """Write the image without timestamp metadata so output bytes are stable."""
    out_path = str(out_path)
    if out_path.endswith(".svg"):
        fig.savefig(out_path, metadata={"Date": None})
    else:
        fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render(figure_id, csv_paths, out_path):
    fig, info = build_figure(figure_id, csv_paths)
    save_figure(fig, out_path)
    return info
