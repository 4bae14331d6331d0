"""Command-line front end: single points, parameter scans, oracle sweeps.

Subcommands
-----------
dist          photon distribution at one parameter point, with oracle deltas
qscan         Mandel Q along a magnitude grid, plus analytic roots/extremum
squeeze-scan  quadrature variances over a magnitude-by-phase grid
eigencheck    eigenvalue-equation residuals along a magnitude grid
oracle-verify closed-form vs matrix-exponential sweep, exit 1 on violation
limits        contraction-limit distances to displaced number states

Output is CSV (default) or JSON.  CSV files carry ``#`` manifest header
lines before the schema row; the data section below the manifest is
byte-identical for identical requests.  Exit codes: 0 success, 1
verification failure, 2 bad parameters, 3 numeric/truncation failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

import numpy as np

from . import __version__
from .coefficients import (
    Su2Params,
    Su11Params,
    amplitude_profile_su2,
    amplitude_profile_su11,
    distribution_su2,
    distribution_su11,
    limit_comparison_su2,
    limit_comparison_su11,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    PrecisionLossError,
    SingularCouplingError,
    TruncationError,
    UndefinedQError,
)
from .hamiltonians import eigencheck as run_eigencheck
from .hamiltonians import energy_domain
from .oracle import AlgebraKind, oracle_state
from .photon_stats import (
    classify,
    mandel_q_su2,
    mandel_q_su11,
    q_boundary_su2,
    q_boundary_su11,
    q_prime_su2,
    q_prime_su11,
)
from .squeezing import squeezing_scan

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_BAD_PARAMS = 2
EXIT_NUMERIC = 3

TOLERANCE_PROFILES = {
    "default": {"su2_coeff": 1e-9, "su11_coeff": 1e-8, "tail": 1e-12},
    "strict": {"su2_coeff": 5e-10, "su11_coeff": 1e-9, "tail": 1e-12},
}


@dataclass(frozen=True)
class ScanRequest:
    """Echo of one CLI invocation, embedded in every output manifest."""

    algebra: str
    M: int
    n: int
    magnitude_range: tuple[float, float, int]
    phase_range: tuple[float, float, int]
    quantity: str
    output_format: str
    output_path: str | None
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class RunManifest:
    tool_version: str
    parameters: ScanRequest
    tolerance_profile: dict[str, float]
    timestamp: str

    def header_lines(self) -> list[str]:
        req = self.parameters
        lines = [
            f"# dnstates {self.tool_version}",
            f"# command: {req.quantity}",
            f"# algebra: {req.algebra}  M: {req.M}  n: {req.n}",
            f"# magnitude-range: {req.magnitude_range[0]!r}:{req.magnitude_range[1]!r}:{req.magnitude_range[2]}",
            f"# phase-range: {req.phase_range[0]!r}:{req.phase_range[1]!r}:{req.phase_range[2]}",
        ]
        for key, value in req.extras.items():
            lines.append(f"# {key}: {value}")
        lines.append(
            "# tolerance-profile: "
            + " ".join(f"{k}={v:.1e}" for k, v in sorted(self.tolerance_profile.items()))
        )
        lines.append(f"# generated: {self.timestamp}")
        return lines


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.16e}"
    return str(value)


def _grid(spec: tuple[float, float, int]) -> np.ndarray:
    start, stop, count = spec
    if count < 1:
        raise DomainError(f"grid count must be >= 1, got {count}")
    if start > stop:
        raise DomainError(f"grid start {start} exceeds stop {stop}")
    return np.linspace(start, stop, count)


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"expected start:stop:count, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad grid specification {text!r}: {exc}") from exc


def _emit(
    manifest: RunManifest,
    columns: list[str],
    rows: list[list[Any]],
    args: argparse.Namespace,
    summary: list[list[Any]] | None = None,
) -> None:
    if args.format == "json":
        payload = {
            "manifest": {
                "tool_version": manifest.tool_version,
                "command": manifest.parameters.quantity,
                "parameters": {
                    "algebra": manifest.parameters.algebra,
                    "M": manifest.parameters.M,
                    "n": manifest.parameters.n,
                    "magnitude_range": list(manifest.parameters.magnitude_range),
                    "phase_range": list(manifest.parameters.phase_range),
                    **manifest.parameters.extras,
                },
                "tolerance_profile": manifest.tolerance_profile,
                "timestamp": manifest.timestamp,
            },
            "data": {
                "columns": columns,
                "rows": [[_fmt(v) for v in row] for row in rows],
            },
        }
        if summary is not None:
            payload["data"]["summary"] = [[_fmt(v) for v in row] for row in summary]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        for line in manifest.header_lines():
            buf.write(line + "\n")
        buf.write(",".join(columns) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        for row in summary or []:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        text = buf.getvalue()

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _manifest(args: argparse.Namespace, request: ScanRequest) -> RunManifest:
    return RunManifest(
        tool_version=__version__,
        parameters=request,
        tolerance_profile=TOLERANCE_PROFILES[args.tolerance_profile],
        timestamp=datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    )


def _algebra(args: argparse.Namespace) -> AlgebraKind:
    return AlgebraKind.SU2 if args.algebra == "su2" else AlgebraKind.SU11


def _magnitude(args: argparse.Namespace) -> float:
    if args.algebra == "su2":
        if args.R is not None:
            raise DomainError("--R is an su(1,1) flag; use --r for su2")
        return args.r if args.r is not None else 0.0
    if args.r is not None:
        raise DomainError("--r is an su(2) flag; use --R for su11")
    return args.R if args.R is not None else 0.0


def _phase(args: argparse.Namespace) -> float:
    if args.algebra == "su2":
        if args.vartheta is not None:
            raise DomainError("--vartheta is an su(1,1) flag; use --theta for su2")
        return args.theta if args.theta is not None else 0.0
    if args.theta is not None:
        raise DomainError("--theta is an su(2) flag; use --vartheta for su11")
    return args.vartheta if args.vartheta is not None else 0.0


def cmd_dist(args: argparse.Namespace) -> int:
    magnitude = _magnitude(args)
    phase = _phase(args)
    if args.algebra == "su2":
        params = Su2Params(M=args.M, n=args.n, r=magnitude, theta=phase)
        dist = distribution_su2(params, magnitude_exponent=args.distribution_exponent)
        oracle = oracle_state(AlgebraKind.SU2, args.M, args.n, magnitude, phase)
    else:
        params = Su11Params(M=args.M, n=args.n, R=magnitude, vartheta=phase)
        dist = distribution_su11(
            params, m_max=args.m_max, magnitude_exponent=args.distribution_exponent
        )
        oracle = oracle_state(
            AlgebraKind.SU11, args.M, args.n, magnitude, phase, dim=dist.probs.size
        )
    oracle_probs = oracle.probabilities()
    rows = [
        [m, float(dist.probs[m]), abs(float(dist.probs[m]) - float(oracle_probs[m]))]
        for m in range(dist.probs.size)
    ]
    request = ScanRequest(
        algebra=args.algebra,
        M=args.M,
        n=args.n,
        magnitude_range=(magnitude, magnitude, 1),
        phase_range=(phase, phase, 1),
        quantity="dist",
        output_format=args.format,
        output_path=args.out,
        extras={
            "distribution-exponent": args.distribution_exponent,
            "norm-defect": f"{dist.norm_defect:.3e}",
            "source": dist.source.value,
        },
    )
    _emit(
        _manifest(args, request),
        ["m", "probability", "closed_form_vs_oracle_delta"],
        rows,
        args,
    )
    return EXIT_OK


def cmd_qscan(args: argparse.Namespace) -> int:
    magnitude_range = _parse_range(args.grid) if args.grid else _default_magnitude_range(args)
    grid = _grid(magnitude_range)
    phase = _phase(args)
    su2 = args.algebra == "su2"

    rows: list[list[Any]] = []
    for magnitude in grid:
        magnitude = float(magnitude)
        if su2:
            s = math.sin(magnitude) ** 2
            qp = q_prime_su2(args.M, args.n, s)
        else:
            s = math.sinh(magnitude) ** 2
            qp = q_prime_su11(args.M, args.n, s)
        try:
            if su2:
                stats = mandel_q_su2(Su2Params(args.M, args.n, magnitude, phase))
            else:
                stats = mandel_q_su11(Su11Params(args.M, args.n, magnitude, phase))
            q: float | None = stats.q
            cls = stats.classification.value
        except UndefinedQError:
            # Zero mean photon number: Q is 0/0 there, but the numerator
            # still classifies the boundary point.
            q = None
            cls = classify(qp).value
        rows.append(["scan", magnitude, s, qp, q, cls])

    def evaluate_q(magnitude: float) -> float | None:
        try:
            if su2:
                return mandel_q_su2(Su2Params(args.M, args.n, magnitude, phase)).q
            return mandel_q_su11(Su11Params(args.M, args.n, magnitude, phase)).q
        except UndefinedQError:
            return None

    boundary = q_boundary_su2(args.M, args.n) if su2 else q_boundary_su11(args.M, args.n)
    summary: list[list[Any]] = []
    for root in boundary.roots:
        if su2:
            mag = math.asin(math.sqrt(min(max(root, 0.0), 1.0)))
            qp = q_prime_su2(args.M, args.n, root)
        else:
            mag = math.asinh(math.sqrt(max(root, 0.0)))
            qp = q_prime_su11(args.M, args.n, root)
        summary.append(["root", mag, root, qp, evaluate_q(mag), classify(qp).value])
    loc = boundary.extremum_location
    if su2:
        ext_mag: float | None = math.asin(math.sqrt(min(max(loc, 0.0), 1.0)))
    else:
        # The su(1,1) vertex sits at nonpositive s, outside the physical range.
        ext_mag = math.asinh(math.sqrt(loc)) if loc >= 0 else None
    summary.append(
        [
            "extremum",
            ext_mag,
            loc,
            boundary.extremum_value,
            evaluate_q(ext_mag) if ext_mag is not None else None,
            None,
        ]
    )

    request = ScanRequest(
        algebra=args.algebra,
        M=args.M,
        n=args.n,
        magnitude_range=magnitude_range,
        phase_range=(phase, phase, 1),
        quantity="qscan",
        output_format=args.format,
        output_path=args.out,
        extras={"note": "Q is independent of the displacement phase"},
    )
    _emit(
        _manifest(args, request),
        ["row", "magnitude", "s", "q_prime", "q", "classification"],
        rows,
        args,
        summary=summary,
    )
    return EXIT_OK


def _default_magnitude_range(args: argparse.Namespace) -> tuple[float, float, int]:
    stop = 1.4 if args.algebra == "su2" else 1.5
    return (0.0, stop, 101)


def cmd_squeeze_scan(args: argparse.Namespace) -> int:
    magnitude_range = _parse_range(args.grid) if args.grid else _default_magnitude_range(args)
    phase_range = (
        _parse_range(args.phase_grid) if args.phase_grid else (0.0, math.pi / 2, 25)
    )
    scan = squeezing_scan(
        _algebra(args),
        args.M,
        args.n,
        _grid(magnitude_range),
        _grid(phase_range),
    )
    rows: list[list[Any]] = []
    errors = 0
    for cell in scan.cells:
        if cell.report is None:
            errors += 1
            rows.append(
                ["scan", cell.magnitude, cell.phase, None, None, f"error:{cell.error}"]
            )
        else:
            rows.append(
                [
                    "scan",
                    cell.magnitude,
                    cell.phase,
                    cell.report.var_x,
                    cell.report.var_p,
                    cell.report.squeezed_x,
                ]
            )
    summary = [
        [
            "min",
            scan.min_var_x_magnitude,
            scan.min_var_x_phase,
            scan.min_var_x,
            None,
            scan.min_var_x < 0.5,
        ]
    ]
    request = ScanRequest(
        algebra=args.algebra,
        M=args.M,
        n=args.n,
        magnitude_range=magnitude_range,
        phase_range=phase_range,
        quantity="squeeze-scan",
        output_format=args.format,
        output_path=args.out,
    )
    _emit(
        _manifest(args, request),
        ["row", "magnitude", "phase", "var_x", "var_p", "squeezed"],
        rows,
        args,
        summary=summary,
    )
    if errors == len(scan.cells):
        print("squeeze-scan: every grid cell failed", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_eigencheck(args: argparse.Namespace) -> int:
    magnitude_range = _parse_range(args.grid) if args.grid else _default_magnitude_range(args)
    grid = _grid(magnitude_range)
    phase = _phase(args)
    kind = _algebra(args)

    rows: list[list[Any]] = []
    errors = 0
    for magnitude in grid:
        magnitude = float(magnitude)
        try:
            check = run_eigencheck(kind, args.M, args.n, magnitude, phase, args.omega)
            domain = energy_domain(kind, args.M, args.n, magnitude)
            rows.append(
                [
                    args.algebra,
                    args.M,
                    args.n,
                    magnitude,
                    phase,
                    args.omega,
                    check.energy,
                    check.residual_norm,
                    domain.admissible,
                    None,
                ]
            )
        except (SingularCouplingError, TruncationError, PrecisionLossError) as exc:
            errors += 1
            rows.append(
                [
                    args.algebra,
                    args.M,
                    args.n,
                    magnitude,
                    phase,
                    args.omega,
                    None,
                    None,
                    None,
                    type(exc).__name__,
                ]
            )
    request = ScanRequest(
        algebra=args.algebra,
        M=args.M,
        n=args.n,
        magnitude_range=magnitude_range,
        phase_range=(phase, phase, 1),
        quantity="eigencheck",
        output_format=args.format,
        output_path=args.out,
        extras={"omega": args.omega},
    )
    _emit(
        _manifest(args, request),
        [
            "algebra",
            "M",
            "n",
            "magnitude",
            "phase",
            "omega",
            "energy",
            "residual",
            "admissible",
            "error",
        ],
        rows,
        args,
    )
    if errors == len(rows):
        print("eigencheck: every grid row failed", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def _su2_verify_grid(quick: bool):
    if quick:
        return [1, 2, 5], 7, (0.0, math.pi / 2)
    return [1, 2, 5, 10, 20, 40], 25, (0.0, math.pi / 4, math.pi / 2)


def _su11_verify_grid(quick: bool):
    if quick:
        return [1, 2], (0, 1), (0.1, 0.5), (0.0,)
    return [1, 2, 5, 10], (0, 1, 3), (0.1, 0.5, 1.0, 1.5), (0.0, math.pi / 2)


def cmd_oracle_verify(args: argparse.Namespace) -> int:
    tolerances = TOLERANCE_PROFILES[args.tolerance_profile]
    quick = args.grid_profile == "quick"
    failures: list[tuple[float, str]] = []
    report: list[str] = []

    if args.algebra in ("su2", "both"):
        m_values, r_count, thetas = _su2_verify_grid(quick)
        for M in m_values:
            if M > 60:
                raise DomainError(f"su(2) verify cap is M <= 60, got {M}")
            for n in sorted({0, 1, min(M, 3), min(M, 6)}):
                worst_coeff = 0.0
                worst_dist = 0.0
                for r in np.linspace(0.0, 1.4, r_count):
                    for theta in thetas:
                        params = Su2Params(M=M, n=n, r=float(r), theta=theta)
                        state = oracle_state(
                            AlgebraKind.SU2, M, n, float(r), theta
                        )
                        profile = amplitude_profile_su2(params)
                        m_idx = np.arange(M + 1)
                        closed = profile * np.exp(1j * theta * (m_idx - n))
                        worst_coeff = max(
                            worst_coeff,
                            float(np.max(np.abs(closed - state.amplitudes))),
                        )
                        dist = distribution_su2(
                            params, magnitude_exponent=args.distribution_exponent
                        )
                        worst_dist = max(
                            worst_dist,
                            float(
                                np.max(np.abs(dist.probs - state.probabilities()))
                            ),
                        )
                line = (
                    f"su2  M={M:3d} n={n:2d}  max coeff delta {worst_coeff:.3e}"
                    f"  max dist delta {worst_dist:.3e}"
                )
                report.append(line)
                if worst_coeff > tolerances["su2_coeff"] or worst_dist > tolerances["su2_coeff"]:
                    failures.append((max(worst_coeff, worst_dist), line))

    if args.algebra in ("su11", "both"):
        m_values, n_values, magnitudes, phases = _su11_verify_grid(quick)
        for M in m_values:
            for n in n_values:
                worst_coeff = 0.0
                worst_dist = 0.0
                worst_tail = 0.0
                for R in magnitudes:
                    for vartheta in phases:
                        params = Su11Params(M=M, n=n, R=R, vartheta=vartheta)
                        state = oracle_state(AlgebraKind.SU11, M, n, R, vartheta)
                        worst_tail = max(worst_tail, state.tail_bound)
                        profile = amplitude_profile_su11(params, state.dim)
                        m_idx = np.arange(state.dim)
                        closed = profile * np.exp(1j * vartheta * (m_idx - n))
                        worst_coeff = max(
                            worst_coeff,
                            float(np.max(np.abs(closed - state.amplitudes))),
                        )
                        dist = distribution_su11(
                            params,
                            m_max=state.dim - 1,
                            magnitude_exponent=args.distribution_exponent,
                        )
                        worst_dist = max(
                            worst_dist,
                            float(
                                np.max(np.abs(dist.probs - state.probabilities()))
                            ),
                        )
                line = (
                    f"su11 M={M:3d} n={n:2d}  max coeff delta {worst_coeff:.3e}"
                    f"  max dist delta {worst_dist:.3e}  tail {worst_tail:.1e}"
                )
                report.append(line)
                if (
                    worst_coeff > tolerances["su11_coeff"]
                    or worst_dist > tolerances["su11_coeff"]
                    or worst_tail > tolerances["tail"]
                ):
                    failures.append((max(worst_coeff, worst_dist), line))

    out = sys.stdout
    print(f"oracle-verify ({args.grid_profile} grid, {args.tolerance_profile} "
          f"tolerances, exponent {args.distribution_exponent})", file=out)
    for line in report:
        print(line, file=out)
    if failures:
        print(f"FAIL: {len(failures)} combination(s) out of tolerance; worst offender:", file=out)
        print("  " + max(failures)[1], file=out)
        return EXIT_VERIFICATION
    print("PASS: all deltas within tolerance", file=out)
    return EXIT_OK


def cmd_limits(args: argparse.Namespace) -> int:
    m_list = [int(v) for v in args.M_list.split(",")]
    n_list = [int(v) for v in args.n_list.split(",")]
    phase = _phase(args)
    rows: list[list[Any]] = []
    for n in n_list:
        for M in m_list:
            if args.algebra == "su2":
                tv = limit_comparison_su2(M, args.alpha, phase, n)
            else:
                tv = limit_comparison_su11(M, args.alpha, phase, n)
            rows.append([args.algebra, M, n, args.alpha, args.alpha / math.sqrt(M), tv])
    request = ScanRequest(
        algebra=args.algebra,
        M=max(m_list),
        n=max(n_list),
        magnitude_range=(args.alpha, args.alpha, 1),
        phase_range=(phase, phase, 1),
        quantity="limits",
        output_format=args.format,
        output_path=args.out,
        extras={"M-list": args.M_list, "n-list": args.n_list},
    )
    _emit(
        _manifest(args, request),
        ["algebra", "M", "n", "alpha", "magnitude", "tv_distance"],
        rows,
        args,
    )
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, need_mn: bool = True) -> None:
    parser.add_argument("--algebra", choices=["su2", "su11"], required=True)
    if need_mn:
        parser.add_argument("--M", type=int, required=True)
        parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--r", type=float, default=None, help="su(2) magnitude r")
    parser.add_argument("--R", type=float, default=None, help="su(1,1) magnitude R")
    parser.add_argument("--theta", type=float, default=None, help="su(2) phase")
    parser.add_argument("--vartheta", type=float, default=None, help="su(1,1) phase")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument(
        "--tolerance-profile", choices=["default", "strict"], default="default"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnstates",
        description="su(2)/su(1,1) displaced number states: distributions, "
        "statistics, squeezing, eigenchecks, oracle verification.",
    )
    parser.add_argument("--version", action="version", version=f"dnstates {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="photon distribution at one point")
    _add_common(p)
    p.add_argument("--m-max", type=int, default=None, help="su(1,1) window top index")
    p.add_argument(
        "--distribution-exponent",
        choices=["m+n", "M+n"],
        default="m+n",
        help="magnitude exponent convention; M+n is a deliberately wrong canary",
    )
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("qscan", help="Mandel Q along a magnitude grid")
    _add_common(p)
    p.add_argument("--grid", default=None, help="magnitude grid start:stop:count")
    p.set_defaults(func=cmd_qscan)

    p = sub.add_parser("squeeze-scan", help="quadrature variances over a grid")
    _add_common(p)
    p.add_argument("--grid", default=None, help="magnitude grid start:stop:count")
    p.add_argument("--phase-grid", default=None, help="phase grid start:stop:count")
    p.set_defaults(func=cmd_squeeze_scan)

    p = sub.add_parser("eigencheck", help="eigenvalue-equation residual scan")
    _add_common(p)
    p.add_argument("--grid", default=None, help="magnitude grid start:stop:count")
    p.add_argument("--omega", type=float, default=1.0)
    p.set_defaults(func=cmd_eigencheck)

    p = sub.add_parser("oracle-verify", help="closed form vs oracle sweep")
    p.add_argument("--algebra", choices=["su2", "su11", "both"], default="both")
    p.add_argument("--grid-profile", choices=["full", "quick"], default="full")
    p.add_argument(
        "--distribution-exponent",
        choices=["m+n", "M+n"],
        default="m+n",
        help="magnitude exponent convention; M+n is a deliberately wrong canary",
    )
    p.add_argument(
        "--tolerance-profile", choices=["default", "strict"], default="default"
    )
    p.set_defaults(func=cmd_oracle_verify)

    p = sub.add_parser("limits", help="contraction-limit distances")
    p.add_argument("--algebra", choices=["su2", "su11"], required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--vartheta", type=float, default=None)
    p.add_argument("--M-list", default="100,200,400")
    p.add_argument("--n-list", default="0,1,2")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.add_argument(
        "--tolerance-profile", choices=["default", "strict"], default="default"
    )
    p.set_defaults(func=cmd_limits)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, DimensionMismatchError, SingularCouplingError, UndefinedQError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except (TruncationError, PrecisionLossError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
