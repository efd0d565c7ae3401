"""Command-line surface: figure data, covariance / continuity / Dirac /
series verification reports.  CSV output (17 significant digits, atomic
writes), optional SVG overlay.

Exit codes: 0 success, 1 threshold violation, 2 invalid configuration,
3 I/O failure.  The environment variable SALPETER_THREADS caps the BLAS
thread pool for fully reproducible parallelism.
"""

import argparse
import contextlib
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import thresholds as bounds
from .currents import (
    BORN,
    SCALAR,
    SPIN_HALF,
    KernelKind,
    KernelSingularityError,
    continuity_residual,
    density,
    parse_kernel,
)
from .dirac import equivalence_residuals
from .grids import (
    Grid1D,
    MomentumSpectrum,
    WaveFunction,
    make_grid,
    to_momentum,
    to_position,
)
from .hamiltonian import (
    BandLimitError,
    apply_hamiltonian,
    apply_hamiltonian_series,
)
from .lorentz import Boost, constraint_report, covariance_residual
from .plotting import line_plot_svg
from .states import (
    PlaneWaveSuperposition,
    box_state,
    gaussian_state,
    sample_on_grid,
    superposed_box_state,
)

EXIT_OK = 0
EXIT_THRESHOLD = 1
EXIT_CONFIG = 2
EXIT_IO = 3

_COMMANDS = (
    "figure1",
    "figure2",
    "covariance",
    "continuity",
    "dirac-check",
    "series-check",
)

_DEFAULT_GRID_POINTS = {
    "figure1": 4096,
    "figure2": 4096,
    "covariance": 256,
    "continuity": 256,
    "dirac-check": 4096,
    "series-check": 1024,
}

_DEFAULT_BOX_WIDTH = {"figure2": 0.5}


@dataclass(frozen=True)
class RunConfig:
    command: str
    box_width: float
    state_n: int
    grid_points: int
    pad_factor: float
    velocity: float | None
    kernel: KernelKind | None
    output_path: str
    emit_svg: bool
    normalization: str


def _build_config(args) -> RunConfig:
    """Validate every flag against the module preconditions it feeds."""
    command = args.command
    box_width = args.box_width
    if box_width is None:
        box_width = _DEFAULT_BOX_WIDTH.get(command, 1.0)
    if box_width <= 0:
        raise ValueError(f"--box-width must be positive, got {box_width}")
    if args.state_n < 1:
        raise ValueError(f"--state-n must be >= 1, got {args.state_n}")
    grid_points = args.grid_points
    if grid_points is None:
        grid_points = _DEFAULT_GRID_POINTS[command]
    if grid_points < 4 or grid_points & (grid_points - 1):
        raise ValueError(
            f"--grid-points must be a power of two >= 4, got {grid_points}"
        )
    if args.pad_factor < 4.0:
        raise ValueError(f"--pad-factor must be >= 4, got {args.pad_factor}")
    if args.velocity is not None and not abs(args.velocity) < 1.0:
        raise ValueError(f"--velocity must lie in (-1, 1), got {args.velocity}")
    kernel = parse_kernel(args.kernel) if args.kernel is not None else None
    out = args.out if args.out is not None else f"{command}.csv"
    return RunConfig(
        command=command,
        box_width=float(box_width),
        state_n=int(args.state_n),
        grid_points=int(grid_points),
        pad_factor=float(args.pad_factor),
        velocity=args.velocity,
        kernel=kernel,
        output_path=out,
        emit_svg=bool(args.svg),
        normalization=args.normalization,
    )


def _thread_cap():
    raw = os.environ.get("SALPETER_THREADS")
    if not raw:
        return contextlib.nullcontext()
    try:
        count = int(raw)
        if count < 1:
            raise ValueError
    except ValueError:
        raise ValueError(
            f"SALPETER_THREADS must be a positive integer, got {raw!r}"
        ) from None
    try:
        from threadpoolctl import threadpool_limits
    except ImportError:
        return contextlib.nullcontext()
    return threadpool_limits(limits=count)


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _write_text_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_format_cell(cell) for cell in row))
    _write_text_atomic(path, "\n".join(lines) + "\n")


def _svg_path(csv_path: str) -> str:
    root, _ = os.path.splitext(csv_path)
    return root + ".svg"


def _box_grid(box_width: float, n_points: int, pad_factor: float) -> Grid1D:
    half = 0.5 * pad_factor * box_width
    center = 0.5 * box_width
    return make_grid(center - half, center + half, n_points)


def _normalize_column(values: np.ndarray, how: str, dx: float) -> np.ndarray:
    if how == "raw":
        return values
    if how == "unit-area":
        return values / (np.sum(values) * dx)
    if how == "peak":
        return values / np.max(values)
    raise ValueError(f"unknown normalization {how!r}")


def _emit_figure(cfg: RunConfig, columns: dict[str, np.ndarray], grid: Grid1D) -> None:
    x = grid.x
    window = (x >= -0.5 * cfg.box_width) & (x <= 1.5 * cfg.box_width)
    xw = x[window]
    cols = {
        name: _normalize_column(v[window], cfg.normalization, grid.dx)
        for name, v in columns.items()
    }
    header = ["x"] + list(cols)
    rows = [[xw[i]] + [c[i] for c in cols.values()] for i in range(xw.size)]
    _write_csv(cfg.output_path, header, rows)
    if cfg.emit_svg:
        _write_text_atomic(
            _svg_path(cfg.output_path),
            line_plot_svg(xw, cols, title=cfg.command),
        )


def _run_figure1(cfg: RunConfig) -> int:
    grid = _box_grid(cfg.box_width, cfg.grid_points, cfg.pad_factor)
    psi = box_state(cfg.box_width, cfg.state_n, grid)
    columns = {
        "rho_born": density(psi, BORN).values,
        "rho_scalar": density(psi, SCALAR).values,
    }
    _emit_figure(cfg, columns, grid)
    print(f"figure1: wrote {cfg.output_path}")
    return EXIT_OK


def _run_figure2(cfg: RunConfig) -> int:
    grid = _box_grid(cfg.box_width, cfg.grid_points, cfg.pad_factor)
    psi = superposed_box_state(cfg.box_width, grid)
    columns = {
        "rho_born": density(psi, BORN).values,
        "rho_scalar": density(psi, SCALAR).values,
        "rho_half": density(psi, SPIN_HALF).values,
    }
    _emit_figure(cfg, columns, grid)
    print(f"figure2: wrote {cfg.output_path}")
    return EXIT_OK


def _covariance_row(kind: KernelKind, p_i: float, p_j: float, v: float):
    boost = Boost(v)
    report = constraint_report(kind, p_i, p_j, boost)
    s = PlaneWaveSuperposition([1.0, 1.0], [p_i, p_j])
    fourvec = covariance_residual(s, kind, boost)
    return [str(kind), p_i, p_j, v, report.residual, fourvec]


def _run_covariance(cfg: RunConfig) -> int:
    kernels = [cfg.kernel] if cfg.kernel is not None else [BORN, SCALAR, SPIN_HALF]
    velocities = (
        [cfg.velocity]
        if cfg.velocity is not None
        else list(np.linspace(-0.9, 0.9, 5))
    )
    momenta = np.linspace(-2.0, 2.0, 20)
    rows = []
    skipped = 0
    for kind in kernels:
        for p_i in momenta:
            for p_j in momenta:
                if abs(p_i - p_j) <= 1e-9:
                    continue
                for v in velocities:
                    try:
                        rows.append(_covariance_row(kind, float(p_i), float(p_j), float(v)))
                    except KernelSingularityError:
                        skipped += 1
    witness_checked = False
    witness_ok = True
    if any(k.name == "born" for k in kernels):
        wp_i, wp_j, wv = bounds.BORN_WITNESS
        row = _covariance_row(BORN, wp_i, wp_j, wv)
        rows.append(row)
        witness_checked = True
        witness_ok = (
            row[4] > bounds.BORN_WITNESS_MIN and row[5] > bounds.BORN_WITNESS_MIN
        )
    _write_csv(
        cfg.output_path,
        ["kernel", "p_i", "p_j", "v", "eq_constraint_residual", "fourvector_residual"],
        rows,
    )
    if skipped:
        print(f"covariance: skipped {skipped} singular kernel pairs", file=sys.stderr)

    violations = []
    for row in rows:
        name = row[0]
        if name in ("scalar", "spinhalf"):
            if row[4] > bounds.CONSTRAINT_RESIDUAL_MAX or row[5] > bounds.FOURVECTOR_RESIDUAL_MAX:
                violations.append(row)
    for name in ("scalar", "spinhalf"):
        sub = [r for r in rows if r[0] == name]
        if sub:
            worst = max(max(r[4], r[5]) for r in sub)
            print(f"covariance: {name} worst residual {worst:.3e}")
    if witness_checked:
        print(f"covariance: born witness {'reproduced' if witness_ok else 'MISSING'}")
    print(f"covariance: wrote {cfg.output_path} ({len(rows)} rows)")
    if violations:
        print(
            f"covariance: {len(violations)} rows exceed "
            f"{bounds.FOURVECTOR_RESIDUAL_MAX:.0e}",
            file=sys.stderr,
        )
        return EXIT_THRESHOLD
    if witness_checked and not witness_ok:
        print(
            "covariance: Born witness residual failed to exceed "
            f"{bounds.BORN_WITNESS_MIN:.0e}",
            file=sys.stderr,
        )
        return EXIT_THRESHOLD
    return EXIT_OK


def _continuity_state(grid: Grid1D):
    # lattice-aligned momenta with distinct energies; equal-|p| pairs would
    # make the density stationary and the ratio test vacuous
    dp = grid.dp
    p1 = dp * max(1, round(0.2 / dp))
    p2 = dp * max(2, round(1.96 / dp))
    s = PlaneWaveSuperposition([1.0, 0.7], [p1, p2])
    return sample_on_grid(s, grid)


def _run_continuity(cfg: RunConfig) -> int:
    grid = make_grid(-16.0, 16.0, cfg.grid_points)
    psi = _continuity_state(grid)
    kernels = [cfg.kernel] if cfg.kernel is not None else [BORN, SCALAR, SPIN_HALF]
    dt = bounds.CONTINUITY_BASE_DT
    rows = []
    ok = True
    lo, hi = bounds.CONTINUITY_RATIO_RANGE
    for kind in kernels:
        coarse = continuity_residual(psi, kind, dt)
        fine = continuity_residual(psi, kind, dt / 2.0)
        ratio = coarse / fine if fine > 0 else float("inf")
        rows.append([str(kind), dt, coarse, fine, ratio])
        good = lo <= ratio <= hi
        ok = ok and good
        print(
            f"continuity: {kind} residual {coarse:.3e} -> {fine:.3e} "
            f"ratio {ratio:.2f} [{'ok' if good else 'FAIL'}]"
        )
    _write_csv(
        cfg.output_path,
        ["kernel", "dt", "residual_dt", "residual_half_dt", "ratio"],
        rows,
    )
    print(f"continuity: wrote {cfg.output_path}")
    return EXIT_OK if ok else EXIT_THRESHOLD


def _run_dirac_check(cfg: RunConfig) -> int:
    rng = np.random.default_rng(20240817)
    grid = make_grid(-16.0, 16.0, 1024)
    ks = rng.choice(np.arange(-40, 41), size=8, replace=False)
    momenta = grid.dp * ks
    amplitudes = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi_waves = sample_on_grid(PlaneWaveSuperposition(amplitudes, momenta), grid)
    cur_w, evo_w = equivalence_residuals(psi_waves, t=0.7)

    box_grid = _box_grid(cfg.box_width, cfg.grid_points, cfg.pad_factor)
    psi_box = box_state(cfg.box_width, cfg.state_n, box_grid)
    cur_b, evo_b = equivalence_residuals(psi_box, t=0.7)

    rows = [
        ["superposition", cur_w, evo_w],
        ["box", cur_b, evo_b],
    ]
    _write_csv(cfg.output_path, ["state", "current_residual", "evolution_residual"], rows)
    ok_w = max(cur_w, evo_w) < bounds.DIRAC_SUPERPOSITION_MAX
    ok_b = max(cur_b, evo_b) < bounds.DIRAC_BOX_MAX
    print(
        f"dirac-check: superposition residuals ({cur_w:.3e}, {evo_w:.3e}) "
        f"[{'ok' if ok_w else 'FAIL'}]"
    )
    print(
        f"dirac-check: box residuals ({cur_b:.3e}, {evo_b:.3e}) "
        f"[{'ok' if ok_b else 'FAIL'}]"
    )
    print(f"dirac-check: wrote {cfg.output_path}")
    return EXIT_OK if (ok_w and ok_b) else EXIT_THRESHOLD


def band_limited_state(grid: Grid1D, band: float) -> WaveFunction:
    """Gaussian packet hard-truncated to |p| <= band, renormalized."""
    phi = to_momentum(gaussian_state(0.0, 0.0, 0.16 * band, grid))
    vals = phi.values.copy()
    vals[np.abs(grid.p) > band] = 0.0
    psi = to_position(MomentumSpectrum(grid, vals))
    return WaveFunction(grid, psi.values / psi.norm())


def _run_series_check(cfg: RunConfig) -> int:
    grid = make_grid(-80.0, 80.0, cfg.grid_points)
    psi = band_limited_state(grid, bounds.SERIES_BAND)
    exact = apply_hamiltonian(psi)
    truncated = apply_hamiltonian_series(psi, bounds.SERIES_K_MAX)
    gap = float(np.max(np.abs(truncated.values - exact.values)))

    broad = gaussian_state(0.0, 0.0, 0.5, grid)
    try:
        apply_hamiltonian_series(broad, bounds.SERIES_K_MAX)
        detector_fired = False
    except BandLimitError:
        detector_fired = True

    rows = [
        ["series_gap", gap],
        ["divergence_detector_fired", int(detector_fired)],
    ]
    _write_csv(cfg.output_path, ["check", "value"], rows)
    ok = gap < bounds.SERIES_GAP_MAX and detector_fired
    print(
        f"series-check: gap {gap:.3e} at k_max={bounds.SERIES_K_MAX}, "
        f"detector {'fired' if detector_fired else 'SILENT'} "
        f"[{'ok' if ok else 'FAIL'}]"
    )
    print(f"series-check: wrote {cfg.output_path}")
    return EXIT_OK if ok else EXIT_THRESHOLD


_HANDLERS = {
    "figure1": _run_figure1,
    "figure2": _run_figure2,
    "covariance": _run_covariance,
    "continuity": _run_continuity,
    "dirac-check": _run_dirac_check,
    "series-check": _run_series_check,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="salpeter1d",
        description=(
            "1-D Salpeter equation toolkit: box-figure data, Lorentz "
            "covariance checks, continuity / Dirac / series verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} report")
        p.add_argument("--box-width", type=float, default=None,
                       help="box width in Compton wavelengths")
        p.add_argument("--state-n", type=int, default=2,
                       help="box quantum number (default 2)")
        p.add_argument("--grid-points", type=int, default=None,
                       help="grid size, power of two")
        p.add_argument("--pad-factor", type=float, default=4.0,
                       help="grid width / box width, >= 4")
        p.add_argument("--velocity", type=float, default=None,
                       help="boost velocity in (-1, 1)")
        p.add_argument("--kernel", type=str, default=None,
                       help="born|scalar|spinhalf|literal:n")
        p.add_argument("--out", type=str, default=None,
                       help="output CSV path (default <command>.csv)")
        p.add_argument("--svg", action="store_true",
                       help="also write a line-plot SVG next to the CSV")
        p.add_argument("--normalization", choices=("raw", "unit-area", "peak"),
                       default="raw", help="figure column normalization")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _build_config(args)
        with _thread_cap():
            return _HANDLERS[cfg.command](cfg)
    except OSError as exc:
        print(f"error (I/O): {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error (invalid config): {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
