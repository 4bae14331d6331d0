"""Quadrature variances and squeezing scans.

With x = (a' + a)/sqrt(2) and p = (a' - a)/sqrt(2),

    Var x = 1/2 + <N> + Re<a^2> - 2 (Re<a>)^2,
    Var p = 1/2 + <N> - Re<a^2> - 2 (Im<a>)^2,

and all three expectations reduce to phase-free sums over products of the
signed amplitude profiles: <a> carries e^{i*phase}, Re<a^2> a cos(2*phase)
factor.  A quadrature is squeezed when its variance drops below 1/2; the
threshold carries a small guard band so the bare number state (variance
exactly 1/2 + n) never counts as squeezed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coefficients import (
    Su2Params,
    Su11Params,
    amplitude_profile_su2,
    amplitude_profile_su11,
    su11_window,
)
from .errors import DnstatesError, DomainError
from .oracle import AlgebraKind

__all__ = [
    "QuadratureReport",
    "ScanCell",
    "SqueezingScan",
    "quadrature_su2",
    "quadrature_su11",
    "squeezing_scan",
    "SQUEEZE_GUARD",
]

SQUEEZE_GUARD = 1e-12

# su(1,1) expectation sums are truncated where the closed-form mass defect
# falls below this; first-moment weighting then keeps the tail under 1e-10.
_SU11_SUM_TAIL = 1e-14


@dataclass(frozen=True)
class QuadratureReport:
    """Var(x), Var(p) and the expectations they were assembled from."""

    var_x: float
    var_p: float
    exp_a: complex
    re_a2: float
    mean_n: float
    squeezed_x: bool
    squeezed_p: bool


def _assemble(phase: float, profile: np.ndarray) -> QuadratureReport:
    m = np.arange(profile.size, dtype=float)
    s_n = float(np.sum(m * profile**2))
    s_a = float(np.sum(np.sqrt(m[:-1] + 1.0) * profile[:-1] * profile[1:]))
    s_a2 = float(
        np.sum(np.sqrt((m[:-2] + 1.0) * (m[:-2] + 2.0)) * profile[:-2] * profile[2:])
    )
    exp_a = s_a * complex(math.cos(phase), math.sin(phase))
    re_a2 = math.cos(2.0 * phase) * s_a2
    var_x = 0.5 + s_n + re_a2 - 2.0 * exp_a.real**2
    var_p = 0.5 + s_n - re_a2 - 2.0 * exp_a.imag**2
    return QuadratureReport(
        var_x=var_x,
        var_p=var_p,
        exp_a=exp_a,
        re_a2=re_a2,
        mean_n=s_n,
        squeezed_x=var_x < 0.5 - SQUEEZE_GUARD,
        squeezed_p=var_p < 0.5 - SQUEEZE_GUARD,
    )


def quadrature_su2(p: Su2Params) -> QuadratureReport:
    """Quadrature variances of the su(2) state (exact finite sums)."""
    return _assemble(p.theta, amplitude_profile_su2(p))


def quadrature_su11(p: Su11Params) -> QuadratureReport:
    """Quadrature variances of the su(1,1) state.

    The infinite sums are truncated at the coefficient window plus two
    guard indices, since <a^2> couples m to m+2.
    """
    count = su11_window(p, tail=_SU11_SUM_TAIL) + 2
    return _assemble(p.vartheta, amplitude_profile_su11(p, count))


@dataclass(frozen=True)
class ScanCell:
    magnitude: float
    phase: float
    report: QuadratureReport | None = None
    error: str | None = None


@dataclass(frozen=True)
class SqueezingScan:
    """Dense magnitude-by-phase table of quadrature reports.

    Cells are row-major (magnitude outer, phase inner).  Cells whose
    computation failed carry the error string instead of a report and do
    not stop the scan.
    """

    kind: AlgebraKind
    M: int
    n: int
    cells: tuple[ScanCell, ...]
    min_var_x: float
    min_var_x_magnitude: float
    min_var_x_phase: float


def squeezing_scan(
    kind: AlgebraKind,
    M: int,
    n: int,
    magnitude_grid: np.ndarray,
    phase_grid: np.ndarray,
) -> SqueezingScan:
    """Evaluate quadrature variances over a magnitude-by-phase grid."""
    magnitude_grid = np.asarray(magnitude_grid, dtype=float)
    phase_grid = np.asarray(phase_grid, dtype=float)
    if magnitude_grid.size == 0 or phase_grid.size == 0:
        raise DomainError("scan grids must be nonempty")

    cells: list[ScanCell] = []
    best = (math.inf, math.nan, math.nan)
    for magnitude in magnitude_grid:
        for phase in phase_grid:
            try:
                if kind is AlgebraKind.SU2:
                    report = quadrature_su2(
                        Su2Params(M=M, n=n, r=float(magnitude), theta=float(phase))
                    )
                else:
                    report = quadrature_su11(
                        Su11Params(M=M, n=n, R=float(magnitude), vartheta=float(phase))
                    )
            except DnstatesError as exc:
                cells.append(
                    ScanCell(
                        magnitude=float(magnitude),
                        phase=float(phase),
                        error=f"{type(exc).__name__}: {exc}",
                    )
                )
                continue
            cells.append(
                ScanCell(magnitude=float(magnitude), phase=float(phase), report=report)
            )
            if report.var_x < best[0]:
                best = (report.var_x, float(magnitude), float(phase))

    return SqueezingScan(
        kind=kind,
        M=M,
        n=n,
        cells=tuple(cells),
        min_var_x=best[0],
        min_var_x_magnitude=best[1],
        min_var_x_phase=best[2],
    )
