"""Density-dependent interaction Hamiltonians and their spectral checks.

The displaced number states are exact eigenstates of

    H2  = w N - (w/2) tan(2r)  (e^{i*theta}    a' sqrt(M-N) + h.c.),
    H11 = w N - (w/2) tanh(2R) (e^{i*vartheta} a' sqrt(M+N) + h.c.),

with energies

    E_n(su2)  = w [ M/2 + (2n - M) / (2 cos 2r) ],
    E_n(su11) = w [ (M + 2n) / (2 cosh 2R) - M/2 ].

The su(2) coupling diverges at r = pi/4, which is reported as an error
rather than assembled into an enormous matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DomainError, SingularCouplingError
from .oracle import (
    AlgebraKind,
    build_generators,
    oracle_state,
    su11_start_dim,
)

__all__ = [
    "SpectralCheck",
    "EnergyDomain",
    "build_h2",
    "build_h11",
    "energy_su2",
    "energy_su11",
    "eigencheck",
    "energy_domain",
    "COS_2R_CUTOFF",
]

COS_2R_CUTOFF = 1e-8

_ENERGY_SIGN_TOL = 1e-12


@dataclass(frozen=True)
class SpectralCheck:
    """Residual of the eigenvalue equation H psi = E psi for one state."""

    energy: float
    residual_norm: float
    hermiticity_defect: float
    energy_non_negative: bool


@dataclass(frozen=True)
class EnergyDomain:
    """Non-negative-energy admissibility of one parameter point.

    ``admissible`` is decided by the numeric sign of the energy;
    ``inequality_holds`` evaluates the closed-form parameter-domain rule
    as a cross-check (the two can disagree only on the measure-zero
    boundary, where the rule is strict but the energy is exactly zero).
    """

    kind: AlgebraKind
    admissible: bool
    energy: float
    inequality_holds: bool
    inequality: dict[str, Any]


def _check_omega(omega: float) -> None:
    if omega <= 0:
        raise DomainError(f"omega must be positive, got {omega}")


def build_h2(M: int, r: float, theta: float, omega: float = 1.0) -> np.ndarray:
    """Hermitian su(2) interaction Hamiltonian on the (M+1)-dim space."""
    _check_omega(omega)
    c2r = math.cos(2.0 * r)
    if abs(c2r) < COS_2R_CUTOFF:
        raise SingularCouplingError(
            f"cos(2r) = {c2r:.3e} makes the tan(2r) coupling singular"
        )
    gens = build_generators(AlgebraKind.SU2, M, M + 1)
    number = np.diag(np.arange(M + 1, dtype=complex))
    phase = complex(math.cos(theta), math.sin(theta))
    coupling = math.tan(2.0 * r)
    return omega * number - 0.5 * omega * coupling * (
        phase * gens.j_plus + np.conj(phase) * gens.j_minus
    )


def build_h11(
    M: int, R: float, vartheta: float, omega: float = 1.0, dim: int | None = None
) -> np.ndarray:
    """Hermitian su(1,1) interaction Hamiltonian on a truncated window."""
    _check_omega(omega)
    if dim is None:
        dim = su11_start_dim(M, 0, R)
    gens = build_generators(AlgebraKind.SU11, M, dim)
    number = np.diag(np.arange(dim, dtype=complex))
    phase = complex(math.cos(vartheta), math.sin(vartheta))
    coupling = math.tanh(2.0 * R)
    return omega * number - 0.5 * omega * coupling * (
        phase * gens.j_plus + np.conj(phase) * gens.j_minus
    )


def energy_su2(M: int, n: int, r: float, omega: float = 1.0) -> float:
    c2r = math.cos(2.0 * r)
    if abs(c2r) < COS_2R_CUTOFF:
        raise SingularCouplingError(
            f"cos(2r) = {c2r:.3e} leaves the su(2) energy undefined"
        )
    return omega * (M / 2.0 + (2 * n - M) / (2.0 * c2r))


def energy_su11(M: int, n: int, R: float, omega: float = 1.0) -> float:
    return omega * ((M + 2 * n) / (2.0 * math.cosh(2.0 * R)) - M / 2.0)


def eigencheck(
    kind: AlgebraKind,
    M: int,
    n: int,
    magnitude: float,
    phase: float,
    omega: float = 1.0,
) -> SpectralCheck:
    """Verify H psi = E psi for the displaced number state at these parameters.

    su(1,1) residuals are measured only on the amplitude support (relative
    threshold 1e-13) excluding the top two truncation rows, where the
    sqrt(M+N) coupling unavoidably leaks.
    """
    _check_omega(omega)
    if kind is AlgebraKind.SU2:
        h = build_h2(M, magnitude, phase, omega)
        energy = energy_su2(M, n, magnitude, omega)
        psi = oracle_state(kind, M, n, magnitude, phase).amplitudes
        mask = np.ones(psi.size, dtype=bool)
    else:
        state = oracle_state(kind, M, n, magnitude, phase)
        psi = state.amplitudes
        h = build_h11(M, magnitude, phase, omega, dim=state.dim)
        energy = energy_su11(M, n, magnitude, omega)
        mask = np.abs(psi) > 1e-13 * float(np.max(np.abs(psi)))
        mask[-2:] = False
    defect = float(np.max(np.abs(h - h.conj().T)))
    residual_vec = h @ psi - energy * psi
    residual = float(
        np.linalg.norm(residual_vec[mask]) / np.linalg.norm(psi)
    )
    return SpectralCheck(
        energy=energy,
        residual_norm=residual,
        hermiticity_defect=defect,
        energy_non_negative=energy >= -_ENERGY_SIGN_TOL,
    )


def energy_domain(
    kind: AlgebraKind, M: int, n: int, magnitude: float
) -> EnergyDomain:
    """Evaluate the non-negative-energy condition at one parameter point."""
    if M < 1:
        raise DomainError(f"M must be positive, got {M}")
    if n < 0 or (kind is AlgebraKind.SU2 and n > M):
        raise DomainError(f"invalid seed index n={n} for M={M}")
    if kind is AlgebraKind.SU2:
        energy = energy_su2(M, n, magnitude)
        c2r = math.cos(2.0 * magnitude)
        pivot = 1.0 - 2.0 * n / M
        holds = c2r > max(0.0, pivot) or c2r < min(0.0, pivot)
        inequality: dict[str, Any] = {
            "variable": "cos(2r)",
            "value": c2r,
            "upper_branch": max(0.0, pivot),
            "lower_branch": min(0.0, pivot),
            "rule": "cos(2r) > max(0, 1-2n/M) or cos(2r) < min(0, 1-2n/M)",
        }
    else:
        energy = energy_su11(M, n, magnitude)
        c2R = math.cosh(2.0 * magnitude)
        bound = 1.0 + 2.0 * n / M
        holds = c2R <= bound
        inequality = {
            "variable": "cosh(2R)",
            "value": c2R,
            "bound": bound,
            "rule": "cosh(2R) <= 1 + 2n/M",
        }
    return EnergyDomain(
        kind=kind,
        admissible=energy >= -_ENERGY_SIGN_TOL,
        energy=energy,
        inequality_holds=holds,
        inequality=inequality,
    )
