"""Exact generator matrices and brute-force displacement exponentials.

This module is the ground truth the closed-form machinery is validated
against.  Generators are filled entry by entry from their square-root
couplings,

    su(2):   <m+1| J+ |m> = sqrt((m+1)(M-m)),   J0 = diag(m - M/2),
    su(1,1): <m+1| K+ |m> = sqrt((m+1)(M+m)),   K0 = diag(m + M/2),

and displacement operators exp(xi*J+ - conj(xi)*J-) are evaluated by
scaling-and-squaring of the plain Taylor series.  su(2) representations
are exactly finite (dim = M+1); su(1,1) and the harmonic oscillator live
on a truncated Fock window whose leakage is tracked as a tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError, DomainError, TruncationError

__all__ = [
    "AlgebraKind",
    "GeneratorSet",
    "FockVector",
    "build_generators",
    "displacement_oracle",
    "oracle_state",
    "displaced_number_oracle",
    "su11_start_dim",
    "SU11_TAIL_TARGET",
    "OSCILLATOR_TAIL_TARGET",
    "DIM_CAP",
]

# Truncation policy for the non-compact cases.
SU11_TAIL_TARGET = 1e-12
OSCILLATOR_TAIL_TARGET = 1e-10
DIM_CAP = 4096

# Columns of non-compact displacements are evaluated in a working space
# twice the reported window, so overflow mass genuinely leaves the column
# instead of reflecting off the truncation wall (the block generator is
# anti-Hermitian, hence its bare exponential is unitary and would hide
# the leak).
_BUFFER_FACTOR = 2
_REPORT_CAP = DIM_CAP // _BUFFER_FACTOR

# Taylor kernel: scale until the 1-norm is below this, then square back up.
_SERIES_NORM_TARGET = 0.5
_MAX_SERIES_TERMS = 64


class AlgebraKind(Enum):
    """Which ladder algebra a computation refers to."""

    SU2 = "su2"
    SU11 = "su11"


@dataclass(frozen=True)
class GeneratorSet:
    """Dense matrix representation of one ladder algebra on a Fock window.

    ``j_minus`` is always the conjugate transpose of ``j_plus``.  For su(2)
    the representation is exact (``dim == M + 1``); for su(1,1) it is the
    top-left block of the infinite representation and ``truncated`` is True.
    """

    kind: AlgebraKind
    M: int
    dim: int
    j_plus: np.ndarray
    j_minus: np.ndarray
    j_zero: np.ndarray
    truncated: bool


@dataclass(frozen=True)
class FockVector:
    """Complex amplitudes over number states plus a truncation-tail estimate.

    The invariant sum(|amplitudes|^2) + tail_bound == 1 holds to 1e-9 for
    every vector produced here.
    """

    amplitudes: np.ndarray
    dim: int
    tail_bound: float

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_generators(kind: AlgebraKind, M: int, dim: int) -> GeneratorSet:
    """Build J+/J-/J0 (or K+/K-/K0) as dense complex matrices.

    Parameters
    ----------
    kind : AlgebraKind
        SU2 requires ``dim == M + 1`` exactly; SU11 requires ``M >= 1``.
    M : int
        Algebra label (su(2) maximum photon number, or twice the su(1,1)
        Bargmann index).
    dim : int
        Matrix dimension.
    """
    if M < 0:
        raise DomainError(f"M must be nonnegative, got {M}")
    if dim < 1:
        raise DomainError(f"dim must be positive, got {dim}")
    if kind is AlgebraKind.SU2:
        if dim != M + 1:
            raise DimensionMismatchError(
                f"su(2) representation is exactly {M + 1}-dimensional, got dim={dim}"
            )
        truncated = False
    else:
        if M < 1:
            raise DomainError(f"su(1,1) requires M >= 1, got {M}")
        truncated = True

    m = np.arange(dim - 1, dtype=float)
    if kind is AlgebraKind.SU2:
        coupling = np.sqrt((m + 1.0) * (M - m))
        diag = np.arange(dim, dtype=float) - M / 2.0
    else:
        coupling = np.sqrt((m + 1.0) * (M + m))
        diag = np.arange(dim, dtype=float) + M / 2.0

    j_plus = np.zeros((dim, dim), dtype=complex)
    j_plus[np.arange(1, dim), np.arange(dim - 1)] = coupling
    j_minus = j_plus.conj().T.copy()
    j_zero = np.diag(diag).astype(complex)
    return GeneratorSet(
        kind=kind,
        M=M,
        dim=dim,
        j_plus=_freeze(j_plus),
        j_minus=_freeze(j_minus),
        j_zero=_freeze(j_zero),
        truncated=truncated,
    )


def _expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring of the Taylor series.

    The scaled 1-norm is kept below 0.5, where the series converges to
    double precision in under 25 terms.
    """
    norm = float(np.linalg.norm(a, 1))
    squarings = 0
    if norm > _SERIES_NORM_TARGET:
        squarings = int(math.ceil(math.log2(norm / _SERIES_NORM_TARGET)))
    b = a / (2.0**squarings)

    dim = a.shape[0]
    result = np.eye(dim, dtype=complex)
    term = np.eye(dim, dtype=complex)
    for k in range(1, _MAX_SERIES_TERMS + 1):
        term = term @ b / k
        result += term
        if np.max(np.abs(term)) <= 1e-17 * max(np.max(np.abs(result)), 1.0):
            break
    for _ in range(squarings):
        result = result @ result
    return result


@lru_cache(maxsize=16)
def _displacement_matrix(
    kind: AlgebraKind, M: int, dim: int, magnitude: float, phase: float
) -> np.ndarray:
    gens = build_generators(kind, M, dim)
    xi = magnitude * complex(math.cos(phase), math.sin(phase))
    generator = xi * gens.j_plus - np.conj(xi) * gens.j_minus
    return _freeze(_expm(generator))


def displacement_oracle(
    gens: GeneratorSet, magnitude: float, phase: float
) -> np.ndarray:
    """exp(xi*J+ - conj(xi)*J-) with xi = magnitude * e^{i*phase}.

    Unitary to full precision for su(2); for su(1,1) the truncation leaks
    through the top rows, which ``oracle_state`` monitors per column.
    """
    if magnitude < 0:
        raise DomainError(f"magnitude must be nonnegative, got {magnitude}")
    return _displacement_matrix(gens.kind, gens.M, gens.dim, magnitude, phase)


def su11_start_dim(M: int, n: int, magnitude: float) -> int:
    """Initial su(1,1) truncation: four times the expected occupation."""
    mean_scale = n + M * math.sinh(magnitude) ** 2 + 1.0
    return max(int(math.ceil(4.0 * mean_scale)), 32)


def _column_state(u: np.ndarray, n: int, report_dim: int) -> FockVector:
    amps = u[:report_dim, n].copy()
    tail = max(0.0, 1.0 - float(np.sum(np.abs(amps) ** 2)))
    return FockVector(amplitudes=_freeze(amps), dim=report_dim, tail_bound=tail)


def _buffered_su11_column(
    M: int, n: int, magnitude: float, phase: float, report_dim: int
) -> FockVector:
    working = min(_BUFFER_FACTOR * report_dim, DIM_CAP)
    u = _displacement_matrix(AlgebraKind.SU11, M, working, magnitude, phase)
    return _column_state(u, n, report_dim)


def oracle_state(
    kind: AlgebraKind,
    M: int,
    n: int,
    magnitude: float,
    phase: float,
    dim: int | None = None,
) -> FockVector:
    """Column ``n`` of the displacement oracle, with its tail bound.

    For su(1,1) with ``dim=None`` the reported window is auto-grown
    (doubling from :func:`su11_start_dim`) until the tail bound drops
    below 1e-12.  Working dimensions are capped at 4096, beyond which a
    TruncationError is raised.
    """
    if kind is AlgebraKind.SU2:
        if not 0 <= n <= M:
            raise DomainError(f"su(2) seed index must satisfy 0 <= n <= M, got n={n}")
        if dim is None:
            dim = M + 1
        gens = build_generators(kind, M, dim)
        u = displacement_oracle(gens, magnitude, phase)
        return _column_state(u, n, dim)

    if n < 0:
        raise DomainError(f"seed index must be nonnegative, got n={n}")
    if magnitude < 0:
        raise DomainError(f"magnitude must be nonnegative, got {magnitude}")
    if dim is not None:
        if n >= dim:
            raise DomainError(f"n={n} out of range for dim={dim}")
        if dim > _REPORT_CAP:
            raise TruncationError(
                f"requested window {dim} exceeds the reportable cap {_REPORT_CAP}"
            )
        state = _buffered_su11_column(M, n, magnitude, phase, dim)
        if state.tail_bound > 1e-9:
            raise TruncationError(
                f"window {dim} leaves tail {state.tail_bound:.3e}; "
                "column-norm contract needs <= 1e-9"
            )
        return state

    d = su11_start_dim(M, n, magnitude)
    if d > _REPORT_CAP:
        raise TruncationError(
            f"predicted su(1,1) occupation needs window {d} > cap {_REPORT_CAP}"
        )
    while True:
        state = _buffered_su11_column(M, n, magnitude, phase, d)
        if state.tail_bound < SU11_TAIL_TARGET:
            return state
        if d >= _REPORT_CAP:
            raise TruncationError(
                f"tail bound {state.tail_bound:.3e} at window cap {_REPORT_CAP}"
            )
        d = min(2 * d, _REPORT_CAP)


@lru_cache(maxsize=16)
def _oscillator_displacement(dim: int, alpha: float, phase: float) -> np.ndarray:
    lower = np.zeros((dim, dim), dtype=complex)
    lower[np.arange(dim - 1), np.arange(1, dim)] = np.sqrt(
        np.arange(1, dim, dtype=float)
    )
    z = alpha * complex(math.cos(phase), math.sin(phase))
    return _freeze(_expm(z * lower.conj().T - np.conj(z) * lower))


def displaced_number_oracle(
    alpha: float, phase: float, n: int, dim: int | None = None
) -> FockVector:
    """D(alpha*e^{i*phase})|n> for the plain harmonic oscillator.

    With ``dim=None`` the window is grown until the tail bound is below
    1e-10.  This is the contraction-limit target of the two displaced
    number state families.
    """
    if alpha < 0:
        raise DomainError(f"alpha must be nonnegative, got {alpha}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")

    def column(report_dim: int) -> FockVector:
        working = min(_BUFFER_FACTOR * report_dim, DIM_CAP)
        return _column_state(_oscillator_displacement(working, alpha, phase), n, report_dim)

    if dim is not None:
        if n >= dim:
            raise DomainError(f"n={n} out of range for dim={dim}")
        if dim > _REPORT_CAP:
            raise TruncationError(
                f"requested window {dim} exceeds the reportable cap {_REPORT_CAP}"
            )
        state = column(dim)
        if state.tail_bound > 1e-9:
            raise TruncationError(
                f"window {dim} leaves tail {state.tail_bound:.3e}; "
                "column-norm contract needs <= 1e-9"
            )
        return state

    d = max(int(math.ceil(4.0 * (n + alpha**2 + 1.0))), 32)
    if d > _REPORT_CAP:
        raise TruncationError(
            f"predicted oscillator occupation needs window {d} > cap {_REPORT_CAP}"
        )
    while True:
        state = column(d)
        if state.tail_bound < OSCILLATOR_TAIL_TARGET:
            return state
        if d >= _REPORT_CAP:
            raise TruncationError(
                f"oscillator tail bound {state.tail_bound:.3e} at window cap {_REPORT_CAP}"
            )
        d = min(2 * d, _REPORT_CAP)
