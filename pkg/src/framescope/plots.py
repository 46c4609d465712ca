"""Figure rendering for the report path.

All figures are written to files; nothing is shown interactively.  The
CSV outputs remain the data of record, the figures are companions
rendered next to them.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_DPI = 150


def _finish(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def bounds_figure(sweeps: dict, path: str, title: str) -> str:
    """Semilog plot of A_M (solid) and B_M (dashed) against M per label.

    Args:
        sweeps: label -> list of FrameBoundEstimate, ascending in M.
        path: output image path.
        title: figure title.
    """
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, estimates in sweeps.items():
        ms = [e.M for e in estimates]
        color = ax.semilogy(ms, [max(e.A_M, 1e-16) for e in estimates],
                            marker="o", label=f"{label} A_M")[0].get_color()
        ax.semilogy(ms, [e.B_M for e in estimates], marker="s",
                    linestyle="--", color=color, alpha=0.6)
    ax.set_xlabel("subspace degree M")
    ax.set_ylabel("extreme Rayleigh quotient")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    return _finish(fig, path)


def witness_figure(values: list, t: float, path: str) -> str:
    """Stem plot of witness inner-product moduli against the index n."""
    ns = [n for n, _ in values]
    mags = [abs(v) for _, v in values]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.stem(ns, mags)
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.set_xlabel("index n")
    ax.set_ylabel("|inner product|")
    ax.set_title(f"witness F_t inner products, t = {t}")
    ax.grid(True, alpha=0.3)
    return _finish(fig, path)


def rayleigh_figure(ms: list, even_values: list, full_values: list, path: str) -> str:
    """Even-subspace vs unrestricted minimal Rayleigh quotients."""
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.semilogy(ms, even_values, marker="o", label="even subspace")
    ax.semilogy(ms, full_values, marker="s", label="unrestricted")
    ax.axhline(11.0 / 24.0, linestyle=":", color="gray", label="11/24")
    ax.set_xlabel("degree M")
    ax.set_ylabel("min Rayleigh quotient")
    ax.set_title("derivative sampling stability")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    return _finish(fig, path)


def conditioning_figure(rows: dict, path: str) -> str:
    """Condition number against truncation size N per scheme label."""
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, pairs in rows.items():
        ns = [n for n, _ in pairs]
        conds = [c for _, c in pairs]
        ax.loglog(ns, conds, marker="o", base=2, label=label)
    ax.set_xlabel("truncation N")
    ax.set_ylabel("condition number")
    ax.set_title("dynamical sampling conditioning")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    return _finish(fig, path)
