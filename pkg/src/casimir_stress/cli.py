"""Command-line front end for the vacuum stress calculator.

Five subcommands cover the common workflows:

* ``profile``: stress components and null-energy combinations versus
  position at fixed plasma frequency and temperature.
* ``sweep``: the same quantities versus plasma frequency on a log grid
  at fixed position.
* ``nec``: the two null-energy combinations only, versus position.
* ``limits``: the analytic perfect-conductor and blackbody constants.
* ``critical``: the plasma frequency where the midpoint energy density
  changes sign.

Outputs are CSV (metadata in ``#`` comment lines, then a header row,
then 17-significant-digit data rows) or JSON (one object with ``spec``,
``columns``, ``rows``, and ``references`` keys).  Both carry the fully
resolved run specification so a file regenerates byte for byte from its
own metadata; nothing in the output depends on wall-clock time or
machine identity.  Exit status is 0 on success, 1 on a usage error, and
2 when any requested point failed to converge (the rows are still
written, flagged in the ``converged`` column).

Options may also come from a JSON config file (``--config``); explicit
command-line flags win over config entries.  ``--jobs`` evaluates sweep
and profile points in a process pool; rows stay in input order no
matter what finishes first.  ``--si`` with ``--separation-um`` (and
optionally ``--kelvin``) converts densities to J/m**3 through the units
module.  Diagnostics go to stderr and honor the NO_COLOR convention.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .dielectric import PlasmaModel
from .quadrature import QuadratureError, Tolerance
from .stress import (
    Geometry,
    ThermalState,
    critical_omega_pa,
    nec_longitudinal,
    nec_transverse,
    pressure_xx,
    pressure_zz,
    energy_density,
    reference_limits,
)
from .units import BOLTZMANN, HBAR, SPEED_OF_LIGHT

__all__ = ["RunSpec", "build_run_spec", "main"]

_COMMANDS = ("profile", "sweep", "nec", "limits", "critical")

_QUANTITY_COLUMNS = {
    "stress": ["t00", "txx", "tyy", "tzz", "nec_x", "nec_z"],
    "nec": ["nec_x", "nec_z"],
}

# Reference line that belongs under each quantity column, for plots.
_COLUMN_REFERENCE = {
    "t00": "pc_energy_density",
    "txx": "pc_pressure_xx",
    "tyy": "pc_pressure_yy",
    "tzz": "pc_pressure_zz",
    "nec_x": "pc_nec_transverse",
    "nec_z": "pc_nec_longitudinal",
}


class UsageError(Exception):
    """Bad command line or config; maps to exit status 1."""


@dataclass(frozen=True)
class RunSpec:
    """Fully resolved description of one CLI run.

    Ranges are (low, high) tuples, single values plain floats;
    ``beta_over_a`` is None at zero temperature.  The spec is echoed
    into every output file, so two files with equal specs carry equal
    data.
    """

    command: str
    omega_pa: float | tuple[float, float] | None = None
    z_over_a: float | tuple[float, float] | None = None
    beta_over_a: float | None = None
    grid: int = 25
    output_format: str = "csv"
    output_path: str | None = None
    rel_tol: float = 1e-9
    abs_tol: float = 1e-14
    jobs: int = 1
    si: bool = False
    separation_um: float | None = None
    kelvin: float | None = None
    emit_plot_script: bool = False

    def tolerance(self) -> Tolerance:
        return Tolerance(rel_tol=self.rel_tol, abs_tol=self.abs_tol)

    def metadata(self) -> dict:
        """Spec fields as JSON-safe primitives, for output embedding."""

        def enc(value):
            if value is None:
                return None
            if isinstance(value, tuple):
                return [value[0], value[1]]
            if isinstance(value, float) and math.isinf(value):
                return "inf"
            return value

        return {
            "command": self.command,
            "omega_pa": enc(self.omega_pa),
            "z_over_a": enc(self.z_over_a),
            "beta_over_a": "inf" if self.beta_over_a is None else self.beta_over_a,
            "grid": self.grid,
            "format": self.output_format,
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "si": self.si,
            "separation_um": enc(self.separation_um),
            "kelvin": enc(self.kelvin),
        }


def _parse_value_or_range(text: str, name: str, allow_inf: bool = False):
    """Parse 'V' into a float or 'A:B' into an ascending (A, B) tuple."""
    parts = text.split(":")
    if len(parts) == 1:
        try:
            if allow_inf and parts[0].strip().lower() == "inf":
                return math.inf
            return float(parts[0])
        except ValueError:
            raise UsageError(f"cannot parse --{name} value {text!r}") from None
    if len(parts) == 2:
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError:
            raise UsageError(f"cannot parse --{name} range {text!r}") from None
        if not (lo < hi):
            raise UsageError(f"--{name} range needs low < high, got {text!r}")
        return lo, hi
    raise UsageError(f"--{name} accepts 'V' or 'A:B', got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-stress",
        description="Vacuum stress between plasma-model mirrors.",
    )
    parser.add_argument("command", choices=_COMMANDS)
    parser.add_argument(
        "--omega-pa",
        help="plasma frequency times gap width: value, 'A:B' range, or 'inf'",
    )
    parser.add_argument("--z", help="position z/a in (0,1): value or 'A:B' range")
    parser.add_argument(
        "--beta-over-a",
        help="inverse temperature over gap width: value or 'inf' (zero temperature)",
    )
    parser.add_argument("--grid", type=int, help="number of points for a range")
    parser.add_argument("--format", choices=("csv", "json"), dest="output_format")
    parser.add_argument("--out", dest="output_path", help="output file (default stdout)")
    parser.add_argument("--rel-tol", type=float, help="relative quadrature tolerance")
    parser.add_argument("--abs-tol", type=float, help="absolute quadrature tolerance")
    parser.add_argument("--jobs", type=int, help="parallel worker processes (default 1)")
    parser.add_argument("--si", action="store_true", default=None,
                        help="report J/m**3 instead of 1/a**4 units")
    parser.add_argument("--separation-um", type=float,
                        help="gap width in micrometers (required with --si)")
    parser.add_argument("--kelvin", type=float,
                        help="temperature in Kelvin (with --si; sets beta/a)")
    parser.add_argument("--emit-plot-script", action="store_true", default=None,
                        help="also write a matplotlib script next to --out")
    parser.add_argument("--config", help="JSON file with default option values")
    return parser


_CONFIG_KEYS = {
    "omega_pa", "z", "beta_over_a", "grid", "output_format", "output_path",
    "rel_tol", "abs_tol", "jobs", "si", "separation_um", "kelvin",
    "emit_plot_script",
}


def _merge_config(args: argparse.Namespace) -> dict:
    """Fold an optional JSON config under the explicit flags."""
    merged = {key: getattr(args, key, None) for key in _CONFIG_KEYS}
    if args.config is not None:
        try:
            raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = sorted(set(raw) - _CONFIG_KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(unknown)}")
        for key, value in raw.items():
            if merged[key] is None:
                merged[key] = value
    return merged


def build_run_spec(argv: list[str]) -> RunSpec:
    """Parse arguments (and config) into a validated RunSpec."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            raise  # --help and friends exit cleanly
        raise UsageError("invalid arguments (see usage above)") from None
    merged = _merge_config(args)
    command = args.command

    omega = merged["omega_pa"]
    if omega is not None and not isinstance(omega, (int, float)):
        omega = _parse_value_or_range(str(omega), "omega-pa", allow_inf=True)
    elif omega is not None:
        omega = float(omega)

    z_over_a = merged["z"]
    if z_over_a is not None and not isinstance(z_over_a, (int, float)):
        z_over_a = _parse_value_or_range(str(z_over_a), "z")
    elif z_over_a is not None:
        z_over_a = float(z_over_a)

    beta = merged["beta_over_a"]
    if beta is not None and not isinstance(beta, (int, float)):
        beta = _parse_value_or_range(str(beta), "beta-over-a", allow_inf=True)
    elif beta is not None:
        beta = float(beta)
    if isinstance(beta, tuple):
        raise UsageError("--beta-over-a takes a single value, not a range")
    if beta is not None and math.isinf(beta):
        beta = None
    if beta is not None and not (beta > 0.0):
        raise UsageError("--beta-over-a must be positive or 'inf'")

    si = bool(merged["si"]) if merged["si"] is not None else False
    separation_um = merged["separation_um"]
    kelvin = merged["kelvin"]
    if si and separation_um is None:
        raise UsageError("--si needs --separation-um")
    if (separation_um is not None or kelvin is not None) and not si:
        raise UsageError("--separation-um/--kelvin only apply with --si")
    if separation_um is not None and not (separation_um > 0.0):
        raise UsageError("--separation-um must be positive")
    if kelvin is not None:
        if kelvin < 0.0:
            raise UsageError("--kelvin must be >= 0")
        if merged["beta_over_a"] is not None:
            raise UsageError("give either --kelvin or --beta-over-a, not both")
        if kelvin == 0.0:
            beta = None
        else:
            thermal_length = HBAR * SPEED_OF_LIGHT / (BOLTZMANN * kelvin)
            beta = thermal_length / (separation_um * 1e-6)

    grid = merged["grid"]
    grid = 25 if grid is None else int(grid)

    defaults_rel, defaults_abs = (1e-9, 1e-14)
    if command == "critical" and merged["rel_tol"] is None:
        # Root location needs sign stability, not many digits.
        defaults_rel, defaults_abs = (1e-7, 1e-10)
    rel_tol = float(merged["rel_tol"]) if merged["rel_tol"] is not None else defaults_rel
    abs_tol = float(merged["abs_tol"]) if merged["abs_tol"] is not None else defaults_abs

    jobs = int(merged["jobs"]) if merged["jobs"] is not None else 1
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")

    spec = RunSpec(
        command=command,
        omega_pa=omega,
        z_over_a=z_over_a,
        beta_over_a=beta,
        grid=grid,
        output_format=merged["output_format"] or "csv",
        output_path=merged["output_path"],
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        jobs=jobs,
        si=si,
        separation_um=separation_um,
        kelvin=kelvin,
        emit_plot_script=bool(merged["emit_plot_script"])
        if merged["emit_plot_script"] is not None
        else False,
    )
    _validate_spec(spec)
    return spec


def _validate_spec(spec: RunSpec) -> None:
    if spec.output_format not in ("csv", "json"):
        raise UsageError("--format must be csv or json")
    if spec.emit_plot_script and spec.output_path is None:
        raise UsageError("--emit-plot-script needs --out")
    if spec.grid < 2 and (
        isinstance(spec.omega_pa, tuple) or isinstance(spec.z_over_a, tuple)
    ):
        raise UsageError("--grid must be >= 2 when a range is given")

    def check_z(value):
        points = value if isinstance(value, tuple) else (value,)
        for z in points:
            if not (0.0 < z < 1.0):
                raise UsageError("--z must lie strictly inside (0, 1)")

    command = spec.command
    if command in ("profile", "nec"):
        if spec.omega_pa is None:
            raise UsageError(f"{command} needs --omega-pa")
        if isinstance(spec.omega_pa, tuple):
            raise UsageError(f"{command} takes a single --omega-pa; use sweep for ranges")
        if spec.omega_pa < 0.0:
            raise UsageError("--omega-pa must be >= 0")
        if spec.z_over_a is None:
            raise UsageError(f"{command} needs --z (value or range)")
        check_z(spec.z_over_a)
    elif command == "sweep":
        if spec.omega_pa is None:
            raise UsageError("sweep needs --omega-pa as an 'A:B' range")
        if not isinstance(spec.omega_pa, tuple):
            raise UsageError("sweep needs an --omega-pa range 'A:B'")
        if spec.omega_pa[0] <= 0.0:
            raise UsageError("sweep range must start above 0 (log spacing)")
        if spec.z_over_a is None or isinstance(spec.z_over_a, tuple):
            raise UsageError("sweep needs a single --z value")
        check_z(spec.z_over_a)
    elif command in ("limits", "critical"):
        if isinstance(spec.omega_pa, tuple) or isinstance(spec.z_over_a, tuple):
            raise UsageError(f"{command} does not take ranges")


# ----------------------------------------------------------------------
# Point evaluation (also the process-pool worker).
# ----------------------------------------------------------------------


def _evaluate_point(task: tuple) -> tuple[list[float], int, tuple[str, ...]]:
    """Evaluate one row; module-level so a process pool can pickle it.

    task = (kind, omega_pa, z_over_a, beta_or_none, rel_tol, abs_tol)
    Returns (flat [value, error, ...] pairs, converged flag, warning texts).
    """
    kind, omega_pa, z_over_a, beta, rel_tol, abs_tol = task
    tol = Tolerance(rel_tol=rel_tol, abs_tol=abs_tol)
    geom = Geometry(z=z_over_a)
    model = PlasmaModel(omega_p=omega_pa)
    thermal = ThermalState.zero() if beta is None else ThermalState.finite(beta)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if kind == "stress":
            results = [
                energy_density(geom, model, thermal, tol=tol),
                pressure_xx(geom, model, thermal, tol=tol),
            ]
            results.append(results[1])  # tyy = txx
            results.append(pressure_zz(geom, model, thermal, tol=tol))
            results.append(nec_transverse(geom, model, thermal, tol=tol))
            results.append(nec_longitudinal(geom, model, thermal, tol=tol))
        else:
            results = [
                nec_transverse(geom, model, thermal, tol=tol),
                nec_longitudinal(geom, model, thermal, tol=tol),
            ]
    flat: list[float] = []
    converged = True
    for r in results:
        flat.extend([r.value, r.error_estimate])
        converged = converged and r.converged
    notes = tuple(sorted({str(w.message) for w in caught}))
    return flat, int(converged), notes


def _run_points(spec: RunSpec, kind: str, axis: list[tuple[float, float]]):
    """Evaluate rows for (axis value, task) pairs, possibly in parallel."""
    tasks = []
    for _, point in axis:
        tasks.append(point)
    if spec.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            outcomes = list(pool.map(_evaluate_point, tasks))
    else:
        outcomes = [_evaluate_point(task) for task in tasks]

    rows = []
    all_notes: list[str] = []
    any_failed = False
    for (axis_value, _), (flat, converged, notes) in zip(axis, outcomes):
        rows.append([axis_value, *flat, converged])
        any_failed = any_failed or not converged
        for note in notes:
            if note not in all_notes:
                all_notes.append(note)
    return rows, any_failed, all_notes


def _axis_values(spec_value, grid: int, log_spaced: bool) -> list[float]:
    if not isinstance(spec_value, tuple):
        return [float(spec_value)]
    lo, hi = spec_value
    if log_spaced:
        step = (math.log10(hi) - math.log10(lo)) / (grid - 1)
        return [10.0 ** (math.log10(lo) + i * step) for i in range(grid)]
    step = (hi - lo) / (grid - 1)
    return [lo + i * step for i in range(grid)]


def _si_scale(spec: RunSpec) -> float:
    """J/m**3 per 1/a**4 unit, or 1.0 outside SI mode."""
    if not spec.si:
        return 1.0
    a_meters = spec.separation_um * 1e-6
    return HBAR * SPEED_OF_LIGHT / a_meters**4


def _scale_rows(rows: list[list[float]], scale: float) -> None:
    if scale == 1.0:
        return
    for row in rows:
        for i in range(1, len(row) - 1):
            row[i] *= scale


def _quantity_header(names: list[str]) -> list[str]:
    header = []
    for name in names:
        header.extend([name, f"err_{name}"])
    return header


# ----------------------------------------------------------------------
# Commands.
# ----------------------------------------------------------------------


def _cmd_profile(spec: RunSpec, kind: str):
    zs = _axis_values(spec.z_over_a, spec.grid, log_spaced=False)
    axis = [
        (z, (kind, spec.omega_pa, z, spec.beta_over_a, spec.rel_tol, spec.abs_tol))
        for z in zs
    ]
    rows, failed, notes = _run_points(spec, kind, axis)
    _scale_rows(rows, _si_scale(spec))
    columns = ["z_over_a", *_quantity_header(_QUANTITY_COLUMNS[kind]), "converged"]
    return columns, rows, failed, notes


def _cmd_sweep(spec: RunSpec):
    wps = _axis_values(spec.omega_pa, spec.grid, log_spaced=True)
    axis = [
        (wp, ("stress", wp, spec.z_over_a, spec.beta_over_a, spec.rel_tol, spec.abs_tol))
        for wp in wps
    ]
    rows, failed, notes = _run_points(spec, "stress", axis)
    _scale_rows(rows, _si_scale(spec))
    columns = ["omega_pa", *_quantity_header(_QUANTITY_COLUMNS["stress"]), "converged"]
    return columns, rows, failed, notes


def _cmd_limits(spec: RunSpec):
    limits = reference_limits()
    rows = [[name, value] for name, value in limits.items()]
    if spec.beta_over_a is not None:
        beta4 = spec.beta_over_a**4
        rows.append(["blackbody_energy_at_beta", limits["blackbody_energy_coeff"] / beta4])
        rows.append(
            ["blackbody_pressure_at_beta", limits["blackbody_pressure_coeff"] / beta4]
        )
        rows.append(
            [
                "blackbody_nec_transverse_at_beta",
                limits["blackbody_nec_transverse_coeff"] / beta4,
            ]
        )
    scale = _si_scale(spec)
    if scale != 1.0:
        rows = [[name, value * scale] for name, value in rows]
    return ["name", "value"], rows, False, []


def _cmd_critical(spec: RunSpec):
    thermal = (
        ThermalState.zero()
        if spec.beta_over_a is None
        else ThermalState.finite(spec.beta_over_a)
    )
    root_rel_tol = 3e-4
    value = critical_omega_pa(thermal, tol=spec.tolerance(), root_rel_tol=root_rel_tol)
    beta_cell = "inf" if spec.beta_over_a is None else spec.beta_over_a
    if value is None:
        rows = [[beta_cell, "none", "none"]]
    else:
        # The bisection stops once the log10 bracket is narrower than
        # root_rel_tol times the grid scale; report that width as a
        # relative uncertainty on the returned value.
        rel_width = 10.0 ** (root_rel_tol * 5.0) - 1.0
        rows = [[beta_cell, value, rel_width]]
    return ["beta_over_a", "critical_omega_pa", "bracket_rel_width"], rows, False, []


# ----------------------------------------------------------------------
# Serialization.
# ----------------------------------------------------------------------


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    return format(value, ".17g")


def _render_csv(spec: RunSpec, columns, rows, references) -> str:
    lines = [f"# casimir-stress {spec.command}"]
    for key, value in sorted(spec.metadata().items()):
        lines.append(f"# spec.{key}={json.dumps(value)}")
    lines.append(f"# units={'J/m^3' if spec.si else 'a^-4'}")
    for key in sorted(references):
        lines.append(f"# ref.{key}={references[key]!r}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_format_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _render_json(spec: RunSpec, columns, rows, references) -> str:
    payload = {
        "spec": {**spec.metadata(), "units": "J/m^3" if spec.si else "a^-4"},
        "columns": list(columns),
        "rows": [list(row) for row in rows],
        "references": references,
    }
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


_PLOT_TEMPLATE = '''"""Plot {command} data from {data_name}; generated by casimir-stress."""

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

DATA = Path(__file__).resolve().parent / {data_name!r}
COLUMNS = {columns!r}
LOG_X = {log_x!r}
REFERENCE_FOR = {column_reference!r}


def load():
    if DATA.suffix == ".json":
        doc = json.loads(DATA.read_text(encoding="utf-8"))
        return doc["columns"], doc["rows"], doc.get("references", {{}})
    references = {{}}
    rows = []
    header = None
    with DATA.open(encoding="utf-8", newline="") as handle:
        for line in handle:
            line = line.rstrip("\\n")
            if line.startswith("# ref."):
                key, _, value = line[6:].partition("=")
                references[key] = float(value)
                continue
            if line.startswith("#") or not line:
                continue
            cells = line.split(",")
            if header is None:
                header = cells
                continue
            rows.append([float(c) if c not in ("none",) else float("nan") for c in cells])
    return header, rows, references


def main():
    columns, rows, references = load()
    x = [row[columns.index(COLUMNS[0])] for row in rows]
    quantities = [c for c in COLUMNS[1:] if not c.startswith("err_") and c != "converged"]
    fig, axes = plt.subplots(len(quantities), 1, sharex=True,
                             figsize=(6.0, 2.2 * len(quantities)))
    if len(quantities) == 1:
        axes = [axes]
    for ax, name in zip(axes, quantities):
        y = [row[columns.index(name)] for row in rows]
        err = [row[columns.index("err_" + name)] for row in rows]
        ax.errorbar(x, y, yerr=err, fmt="o-", markersize=2.5, linewidth=1.0)
        ref_name = REFERENCE_FOR.get(name)
        if ref_name in references:
            ax.axhline(references[ref_name], linestyle="--", linewidth=0.8, color="gray")
        ax.set_ylabel(name)
        if LOG_X:
            ax.set_xscale("log")
    axes[-1].set_xlabel(COLUMNS[0])
    fig.tight_layout()
    out = DATA.with_suffix(DATA.suffix + ".png")
    fig.savefig(out, dpi=150)
    print(f"wrote {{out}}")


if __name__ == "__main__":
    main()
'''


def _write_plot_script(spec: RunSpec, columns) -> Path:
    data_path = Path(spec.output_path)
    script_path = data_path.with_name(data_path.stem + "_plot.py")
    content = _PLOT_TEMPLATE.format(
        command=spec.command,
        data_name=data_path.name,
        columns=list(columns),
        log_x=spec.command == "sweep",
        column_reference=_COLUMN_REFERENCE,
    )
    script_path.write_text(content, encoding="utf-8")
    return script_path


# ----------------------------------------------------------------------
# Entry point.
# ----------------------------------------------------------------------


def _diagnostic(message: str) -> None:
    stream = sys.stderr
    use_color = stream.isatty() and not os.environ.get("NO_COLOR")
    if use_color:
        stream.write(f"\x1b[33mcasimir-stress:\x1b[0m {message}\n")
    else:
        stream.write(f"casimir-stress: {message}\n")


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; returns the process exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        spec = build_run_spec(argv)
    except UsageError as exc:
        _diagnostic(f"error: {exc}")
        return 1

    try:
        if spec.command in ("profile", "nec"):
            kind = "stress" if spec.command == "profile" else "nec"
            columns, rows, failed, notes = _cmd_profile(spec, kind)
        elif spec.command == "sweep":
            columns, rows, failed, notes = _cmd_sweep(spec)
        elif spec.command == "limits":
            columns, rows, failed, notes = _cmd_limits(spec)
        else:
            columns, rows, failed, notes = _cmd_critical(spec)
    except QuadratureError as exc:
        _diagnostic(f"numerical failure: {exc}")
        return 2
    except ValueError as exc:
        _diagnostic(f"error: {exc}")
        return 1

    references = reference_limits()
    if spec.output_format == "json":
        payload = _render_json(spec, columns, rows, references)
    else:
        payload = _render_csv(spec, columns, rows, references)

    if spec.output_path is not None:
        Path(spec.output_path).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)

    for note in notes:
        _diagnostic(f"note: {note}")
    if spec.emit_plot_script:
        script = _write_plot_script(spec, columns)
        _diagnostic(f"wrote plot script {script}")
    if failed:
        _diagnostic("one or more points did not converge; see the converged column")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
