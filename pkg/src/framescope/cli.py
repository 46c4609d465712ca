"""Command-line front end.

Subcommands expose classification (JSON), frame-bound sweeps (CSV),
exponential-system sweeps (CSV), finite-section spectra (JSON or CSV
matrix dump), witness inner products, sampling experiments, and the
Beurling density utility.  Every run is fully determined by its
arguments: identical invocations produce byte-identical output.

Exit codes: 0 success, 2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import frame_bounds as fb
from . import plots, sampling_lab, toeplitz_ops
from .classifier import classify, classify_modulated
from .windows import (BUILTIN_WINDOWS, Modulated, WindowError, parse_window,
                      parse_xi)


def _f(x: float) -> str:
    return f"{float(x):.17g}"


def _xi_str(xi) -> str:
    if isinstance(xi, Fraction):
        return f"{xi.numerator}/{xi.denominator}"
    if isinstance(xi, int):
        return str(xi)
    return _f(xi)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _parse_m_list(text: str) -> list:
    try:
        values = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"M: invalid integer list {text!r}")
    if not values or values[0] < 0:
        raise argparse.ArgumentTypeError(f"M: need nonnegative integers, got {text!r}")
    return values


def _load_window(text: str):
    w = parse_window(text)
    label = text.strip() if text.strip() in BUILTIN_WINDOWS else w.label
    return w, label


def _window_for(args):
    if getattr(args, "window", None):
        return _load_window(args.window)
    if getattr(args, "xi", None) is not None:
        xi = parse_xi(args.xi)
        return Modulated(xi), f"modulated({_xi_str(xi)})"
    raise WindowError("window: provide --window or --xi")


def _cmd_classify(args) -> int:
    w, _ = _window_for(args)
    verdict = classify(w)
    if args.format == "csv":
        tv = verdict.toeplitz
        text = _csv(
            ["status", "injective", "bounded_below", "invertible", "citation"],
            [[verdict.status.value, tv.injective, tv.bounded_below,
              tv.invertible, verdict.citation]])
    else:
        text = _json_text(verdict.to_json())
    _emit(text, args.out)
    return 0


def _bounds_rows(w, label, xi, ms, n_tail):
    verdict = classify(w).status.value
    rows = []
    for m in ms:
        est = fb.frame_bounds_subspace(w, m, n_tail=n_tail)
        rows.append([label, _xi_str(xi) if xi is not None else "",
                     est.M, _f(est.A_M), _f(est.B_M), _f(est.tail),
                     "true" if est.rigorous else "false", verdict])
    return rows


def _cmd_bounds(args) -> int:
    w, label = _window_for(args)
    xi = w.xi if isinstance(w, Modulated) else None
    rows = _bounds_rows(w, label, xi, args.M, args.n_tail)
    _emit(_csv(["window", "xi", "M", "A_M", "B_M", "tail", "rigorous", "verdict"], rows),
          args.out)
    return 0


def _cmd_expsys(args) -> int:
    xi = parse_xi(args.xi)
    gamma = fb.gamma_of_xi(xi)
    verdict = classify_modulated(xi).status.value
    rows = []
    for m in args.M:
        est = fb.exp_system_bounds(gamma, m, cutoff=args.cutoff)
        rows.append([f"gamma({_xi_str(xi)})", _xi_str(xi), est.M,
                     _f(est.A_M), _f(est.B_M), _f(est.tail),
                     "true" if est.rigorous else "false", verdict])
    _emit(_csv(["window", "xi", "M", "A_M", "B_M", "tail", "rigorous", "verdict"], rows),
          args.out)
    return 0


def _cmd_spectrum(args) -> int:
    w, label = _window_for(args)
    builders = {
        "toeplitz": toeplitz_ops.toeplitz_section,
        "hankel": toeplitz_ops.hankel_section,
        "analysis": toeplitz_ops.analysis_section,
    }
    section = builders[args.recipe](w, args.N)
    if args.format == "csv":
        rows = [[i, j, _f(section.data[i, j].real), _f(section.data[i, j].imag)]
                for i in range(section.rows) for j in range(section.cols)]
        _emit(_csv(["i", "j", "re", "im"], rows), args.out)
        return 0
    summary = toeplitz_ops.spectral_summary(section)
    payload = {
        "window": label,
        "recipe": section.recipe,
        "N": section.order,
        "sigma_min": summary.sigma_min,
        "sigma_max": summary.sigma_max,
        "hermitian": summary.is_hermitian,
        "eigs": None if summary.hermitian_eigs is None
        else [float(v) for v in summary.hermitian_eigs],
    }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_witness(args) -> int:
    values = fb.witness_values(args.t, args.n_lo, args.n_hi)
    rows = []
    for n, v in values:
        freq = (n + args.t) if n >= 0 else -(abs(n) + args.t)
        rows.append([_f(args.t), n, _f(freq), _f(v.real), _f(v.imag), _f(abs(v))])
    if args.format == "json":
        payload = [{"n": n, "re": v.real, "im": v.imag} for n, v in values]
        _emit(_json_text({"t": args.t, "values": payload}), args.out)
    else:
        _emit(_csv(["t", "n", "frequency", "re", "im", "modulus"], rows), args.out)
    return 0


def _dynsample_row(window_text: str, N: int, seed: int, noise_std: float):
    w, label = _load_window(window_text)
    rng = np.random.default_rng(seed)
    values = rng.standard_normal(2 * N + 1) + 1j * rng.standard_normal(2 * N + 1)
    pair = sampling_lab.split_scheme(values, w)
    # sample window [-2N, 2N]: every informative row of the zero-extended
    # convolution, so the conditioning tracks the frame-bound ratio
    samples = sampling_lab.dynamical_forward(pair, sample_radius=2 * N)
    report = sampling_lab.dynamical_recover(pair, samples, noise_std=noise_std,
                                            rng=rng, sample_radius=2 * N)
    return [f"split:{label}", N, seed, _f(report.relative_error),
            _f(report.condition_number), _f(report.residual)]


def _cmd_dynsample(args) -> int:
    row = _dynsample_row(args.window, args.N, args.seed, args.noise_std)
    _emit(_csv(["experiment", "N", "seed", "relative_error",
                "condition_number", "residual"], [row]), args.out)
    return 0


def _cmd_derivsample(args) -> int:
    rows = []
    for m in args.M:
        if args.even:
            rows.append(["derivative_even", m, _f(sampling_lab.even_subspace_bound(m))])
        else:
            if m < 1:
                raise WindowError("M: unrestricted sweep needs M >= 1")
            rows.append(["derivative_full", m, _f(sampling_lab.full_space_rayleigh(m))])
    _emit(_csv(["experiment", "M", "min_rayleigh"], rows), args.out)
    return 0


def _cmd_density(args) -> int:
    xi = parse_xi(args.xi)
    density = fb.upper_beurling_density(fb.gamma_of_xi(xi))
    if args.format == "csv":
        _emit(_csv(["xi", "density"], [[_xi_str(xi), _f(density)]]), args.out)
    else:
        _emit(_json_text({"xi": _xi_str(xi), "upper_beurling_density": density}), args.out)
    return 0


def _cmd_report(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    ms = [4, 8, 16, 32]
    sweeps = {}
    rows = []
    for name in sorted(BUILTIN_WINDOWS):
        w = BUILTIN_WINDOWS[name]()
        xi = w.xi if isinstance(w, Modulated) else None
        sweeps[name] = [fb.frame_bounds_subspace(w, m) for m in ms]
        rows.extend(_bounds_rows(w, name, xi, ms, 256))
    path = out_dir / "bounds_windows.csv"
    path.write_text(_csv(["window", "xi", "M", "A_M", "B_M", "tail",
                          "rigorous", "verdict"], rows))
    written.append(path)
    written.append(Path(plots.bounds_figure(
        sweeps, str(out_dir / "bounds_windows.png"),
        "frame-bound estimates, built-in windows")))

    xi_grid = [Fraction(-1), Fraction(-2, 5), Fraction(-1, 4),
               Fraction(1, 4), Fraction(2, 5)]
    exp_rows = []
    exp_sweeps = {}
    for xi in xi_grid:
        gamma = fb.gamma_of_xi(xi)
        verdict = classify_modulated(xi).status.value
        estimates = [fb.exp_system_bounds(gamma, m, cutoff=512) for m in [4, 8, 16]]
        exp_sweeps[f"xi={_xi_str(xi)}"] = estimates
        for est in estimates:
            exp_rows.append([f"gamma({_xi_str(xi)})", _xi_str(xi), est.M,
                             _f(est.A_M), _f(est.B_M), _f(est.tail), "true", verdict])
    path = out_dir / "expsys.csv"
    path.write_text(_csv(["window", "xi", "M", "A_M", "B_M", "tail",
                          "rigorous", "verdict"], exp_rows))
    written.append(path)
    written.append(Path(plots.bounds_figure(
        exp_sweeps, str(out_dir / "expsys.png"),
        "exponential-system bounds over Gamma_xi")))

    t = 0.75
    values = fb.witness_values(t, -8, 12)
    wit_rows = [[_f(t), n, _f((n + t) if n >= 0 else -(abs(n) + t)),
                 _f(v.real), _f(v.imag), _f(abs(v))] for n, v in values]
    path = out_dir / "witness.csv"
    path.write_text(_csv(["t", "n", "frequency", "re", "im", "modulus"], wit_rows))
    written.append(path)
    written.append(Path(plots.witness_figure(values, t, str(out_dir / "witness.png"))))

    even_ms = [0, 4, 8, 16, 32]
    full_ms = [4, 8, 16, 32]
    even_vals = [sampling_lab.even_subspace_bound(m) for m in even_ms]
    full_vals = [sampling_lab.full_space_rayleigh(m) for m in full_ms]
    deriv_rows = [["derivative_even", m, _f(v)] for m, v in zip(even_ms, even_vals)]
    deriv_rows += [["derivative_full", m, _f(v)] for m, v in zip(full_ms, full_vals)]
    path = out_dir / "derivative.csv"
    path.write_text(_csv(["experiment", "M", "min_rayleigh"], deriv_rows))
    written.append(path)
    written.append(Path(plots.rayleigh_figure(
        full_ms, [sampling_lab.even_subspace_bound(m) for m in full_ms],
        full_vals, str(out_dir / "derivative.png"))))

    dyn_rows = []
    cond_data = {}
    for name in ["constant_1", "two_plus_cos", "sawtooth"]:
        pairs = []
        for n in [8, 16, 32]:
            row = _dynsample_row(name, n, args.seed, 0.0)
            dyn_rows.append(row)
            pairs.append((n, float(row[4])))
        cond_data[f"split:{name}"] = pairs
    path = out_dir / "dynsample.csv"
    path.write_text(_csv(["experiment", "N", "seed", "relative_error",
                          "condition_number", "residual"], dyn_rows))
    written.append(path)
    written.append(Path(plots.conditioning_figure(
        cond_data, str(out_dir / "dynsample.png"))))

    table = {name: classify(BUILTIN_WINDOWS[name]()).to_json()
             for name in sorted(BUILTIN_WINDOWS)}
    table.update({f"modulated({_xi_str(xi)})": classify_modulated(xi).to_json()
                  for xi in [Fraction(-1), Fraction(-1, 2), Fraction(1, 4),
                             Fraction(3, 4), Fraction(3, 2)]})
    path = out_dir / "classification.json"
    path.write_text(_json_text(table))
    written.append(path)

    for p in written:
        sys.stdout.write(f"{p}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framescope",
        description="Classification and numerical evidence for split "
                    "windowed-exponential systems on L2[-1/2, 1/2].")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, window=False, xi=False, m_list=False, fmt="json"):
        if window:
            p.add_argument("--window", help="builtin name or JSON window spec")
        if xi:
            p.add_argument("--xi", help="modulation frequency (float or p/q)")
        if m_list:
            p.add_argument("--M", type=_parse_m_list, required=True,
                           help="comma-separated subspace degrees, e.g. 4,8,16")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=["csv", "json"], default=fmt)

    p = sub.add_parser("classify", help="symbolic verdict for a window")
    add_common(p, window=True, xi=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bounds", help="subspace frame-bound sweep for F(g)")
    add_common(p, window=True, xi=True, m_list=True, fmt="csv")
    p.add_argument("--n-tail", type=int, default=256,
                   help="truncation depth for infinite-support windows")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("expsys", help="frame-bound sweep for E(Gamma_xi)")
    add_common(p, m_list=True, fmt="csv")
    p.add_argument("--xi", required=True, help="modulation frequency (float or p/q)")
    p.add_argument("--cutoff", type=int, default=512,
                   help="per-ray enumeration depth")
    p.set_defaults(func=_cmd_expsys)

    p = sub.add_parser("spectrum", help="finite-section spectral summary or dump")
    add_common(p, window=True, xi=True)
    p.add_argument("--N", type=int, required=True, help="section order")
    p.add_argument("--recipe", choices=["toeplitz", "hankel", "analysis"],
                   default="toeplitz")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("witness", help="completeness-witness inner products")
    add_common(p, fmt="csv")
    p.add_argument("--t", type=float, required=True, help="witness parameter, t > 1/4")
    p.add_argument("--n-lo", type=int, default=-8)
    p.add_argument("--n-hi", type=int, default=12)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("dynsample", help="dynamical sampling recovery experiment")
    add_common(p, fmt="csv")
    p.add_argument("--window", default="sawtooth",
                   help="kernel window (builtin name or JSON)")
    p.add_argument("--N", type=int, default=16, help="truncation half-width")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise-std", type=float, default=0.0)
    p.set_defaults(func=_cmd_dynsample)

    p = sub.add_parser("derivsample", help="derivative-sampling Rayleigh sweep")
    add_common(p, m_list=True, fmt="csv")
    p.add_argument("--even", action="store_true",
                   help="restrict to the even subspace")
    p.set_defaults(func=_cmd_derivsample)

    p = sub.add_parser("density", help="upper Beurling density of Gamma_xi")
    add_common(p)
    p.add_argument("--xi", required=True, help="modulation frequency (float or p/q)")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("report", help="render the full figure/CSV portfolio")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WindowError, toeplitz_ops.SectionError, fb.FrameBoundError,
            sampling_lab.SamplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (sampling_lab.RankDeficientError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
