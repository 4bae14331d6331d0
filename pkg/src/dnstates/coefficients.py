"""Closed-form Fock expansion coefficients and photon-number distributions.

The su(2) matrix element is

    <m|D2|n> = e^{i*theta*(m-n)} * (-1)^n * t^{m+n}
               * sqrt(m! n! / ((M-m)! (M-n)!))
               * sum_k (M-k)! (-t^2)^{-k} (1+t^2)^{k-M/2} / (k!(n-k)!(m-k)!),

with t = tan r, and its su(1,1) mirror uses t = tanh R with (M+k-1)!
weights and (1-t^2)^{k+M/2}.  Each term of the alternating k-sum is
evaluated as a sign plus a log-magnitude via log-gamma and the terms are
accumulated largest-first with Neumaier compensation; a cancellation
indicator guards against the regime where doubles cannot be trusted.

Photon distributions are the squared coefficients, i.e. they carry the
magnitude exponent 2(m+n).  A deliberately wrong 2(M+n) variant is kept
available for verification canaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import lgamma

import numpy as np

from .errors import DomainError, PrecisionLossError, TruncationError
from .oracle import (
    DIM_CAP,
    AlgebraKind,
    displaced_number_oracle,
    oracle_state,
    su11_start_dim,
)

__all__ = [
    "Su2Params",
    "Su11Params",
    "CoeffValue",
    "PhotonDistribution",
    "DistributionSource",
    "DistanceMetric",
    "coeff_su2",
    "coeff_su11",
    "amplitude_profile_su2",
    "amplitude_profile_su11",
    "distribution_su2",
    "distribution_su11",
    "su11_window",
    "total_variation",
    "limit_comparison_su2",
    "limit_comparison_su11",
    "COS_R_CUTOFF",
    "CANCELLATION_LIMIT",
]

# Closed forms need tan r; below this |cos r| everything routes to the oracle.
COS_R_CUTOFF = 1e-8
# Cancellation indicator above which the alternating sum is not trusted at
# all and the scalar ops raise.
CANCELLATION_LIMIT = 1e6
# Above this the sum still returns but its absolute error (log-gamma noise
# ~1e-14 per term times the term mass) threatens the 1e-9 contract, so
# values are refined via the oracle instead.
_FALLBACK_LIMIT = 1e4

MAGNITUDE_EXPONENTS = ("m+n", "M+n")


@dataclass(frozen=True)
class Su2Params:
    """One su(2) displaced number state: D2(M, r*e^{i*theta}) |n>."""

    M: int
    n: int
    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if self.M < 0:
            raise DomainError(f"M must be nonnegative, got {self.M}")
        if not 0 <= self.n <= self.M:
            raise DomainError(f"need 0 <= n <= M, got n={self.n}, M={self.M}")
        if self.r < 0:
            raise DomainError(f"r must be nonnegative, got {self.r}")

    @property
    def tan_r(self) -> float:
        """|tan r|, the magnitude of the disentangled raising coefficient."""
        return abs(math.tan(self.r))

    @property
    def sin2_r(self) -> float:
        return math.sin(self.r) ** 2


@dataclass(frozen=True)
class Su11Params:
    """One su(1,1) displaced number state: D11(M, R*e^{i*vartheta}) |n>."""

    M: int
    n: int
    R: float
    vartheta: float = 0.0

    def __post_init__(self) -> None:
        if self.M < 1:
            raise DomainError(f"su(1,1) requires M >= 1, got {self.M}")
        if self.n < 0:
            raise DomainError(f"n must be nonnegative, got {self.n}")
        if self.R < 0:
            raise DomainError(f"R must be nonnegative, got {self.R}")

    @property
    def tanh_R(self) -> float:
        return math.tanh(self.R)

    @property
    def sinh2_R(self) -> float:
        return math.sinh(self.R) ** 2


@dataclass(frozen=True)
class CoeffValue:
    """One expansion coefficient as sign, log-magnitude and phase winding.

    The complex value is sign * exp(log_mag) * exp(i*phase*phase_winding),
    where phase is theta (su(2)) or vartheta (su(1,1)).  log_mag is -inf
    for an exact zero.
    """

    log_mag: float
    sign: int
    phase_winding: int

    @property
    def magnitude(self) -> float:
        return math.exp(self.log_mag) if self.log_mag != -math.inf else 0.0

    @property
    def signed_real(self) -> float:
        return self.sign * self.magnitude

    @property
    def prob(self) -> float:
        return math.exp(2.0 * self.log_mag) if self.log_mag != -math.inf else 0.0

    def complex_value(self, phase: float) -> complex:
        w = self.phase_winding
        return self.signed_real * complex(math.cos(phase * w), math.sin(phase * w))


class DistributionSource(Enum):
    CLOSED_FORM = "closed-form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class PhotonDistribution:
    """Probability vector over photon number with a normalization record."""

    probs: np.ndarray
    norm_defect: float
    source: DistributionSource
    clamped: int = 0


class DistanceMetric(Enum):
    TOTAL_VARIATION = "total-variation"


def _signed_log_sum(
    log_mags: list[float], signs: list[int]
) -> tuple[float, int, float]:
    """Sum sign_k * exp(log_mag_k), largest magnitude first, compensated.

    Returns (log|sum|, sign(sum), cancellation).  The cancellation
    indicator is sum(|terms|) / max(|sum|, 1): expansion coefficients are
    bounded by one, so measuring against that unit floor flags sums whose
    ABSOLUTE accuracy is threatened while leaving benign exact zeros of
    the coefficient (where the ratio to |sum| alone would explode) alone.
    """
    pairs = [(lm, s) for lm, s in zip(log_mags, signs) if lm != -math.inf]
    if not pairs:
        return -math.inf, 1, 1.0
    pairs.sort(reverse=True)
    top = pairs[0][0]

    total = 0.0
    comp = 0.0
    abs_total = 0.0
    for lm, s in pairs:
        term = s * math.exp(lm - top)
        abs_total += abs(term)
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    total += comp

    log_abs_sum = top + math.log(abs_total)
    log_result = top + math.log(abs(total)) if total != 0.0 else -math.inf
    cancellation = math.exp(min(log_abs_sum - max(log_result, 0.0), 700.0))
    if total == 0.0:
        return -math.inf, 1, cancellation
    return log_result, (1 if total > 0 else -1), cancellation


def _fold_su2(r: float) -> tuple[float, int, bool]:
    """Reduce r to the principal branch of the tan-parameterized form.

    Returns (rho, half_turns, reflected): rho in [0, pi/2] with
    tan(rho) = |tan r|, the number of whole pi turns removed, and whether
    the second quadrant reflection rho -> pi - rho was applied.  Each half
    turn contributes a global (-1)^M and the reflection an extra
    (-1)^(M + m - n) to the coefficient sign.
    """
    half_turns = int(math.floor(r / math.pi))
    rho = r - half_turns * math.pi
    if rho > math.pi / 2.0:
        return math.pi - rho, half_turns, True
    return rho, half_turns, False


def _log_coeff_su2(
    M: int, n: int, m: int, tan_r: float
) -> tuple[float, int, float]:
    """(log|coeff|, sign, cancellation) on the principal branch."""
    if tan_r == 0.0:
        return (0.0, 1, 1.0) if m == n else (-math.inf, 1, 1.0)
    log_t = math.log(tan_r)
    log_sec2 = math.log1p(tan_r * tan_r)
    prefactor = 0.5 * (
        lgamma(m + 1) + lgamma(n + 1) - lgamma(M - m + 1) - lgamma(M - n + 1)
    )
    log_mags: list[float] = []
    signs: list[int] = []
    for k in range(min(m, n) + 1):
        log_mags.append(
            lgamma(M - k + 1)
            - lgamma(k + 1)
            - lgamma(n - k + 1)
            - lgamma(m - k + 1)
            + (m + n - 2 * k) * log_t
            + (k - 0.5 * M) * log_sec2
            + prefactor
        )
        signs.append(-1 if (n + k) & 1 else 1)
    return _signed_log_sum(log_mags, signs)


def _log_coeff_su11(
    M: int, n: int, m: int, tanh_R: float
) -> tuple[float, int, float]:
    if tanh_R == 0.0:
        return (0.0, 1, 1.0) if m == n else (-math.inf, 1, 1.0)
    log_t = math.log(tanh_R)
    log_comp = math.log1p(-tanh_R * tanh_R)
    prefactor = 0.5 * (
        lgamma(m + 1) + lgamma(n + 1) + lgamma(M + m) + lgamma(M + n)
    )
    log_mags: list[float] = []
    signs: list[int] = []
    for k in range(min(m, n) + 1):
        log_mags.append(
            -lgamma(k + 1)
            - lgamma(M + k)
            - lgamma(n - k + 1)
            - lgamma(m - k + 1)
            + (m + n - 2 * k) * log_t
            + (k + 0.5 * M) * log_comp
            + prefactor
        )
        signs.append(-1 if (n + k) & 1 else 1)
    return _signed_log_sum(log_mags, signs)


def _check_cancellation(cancellation: float, context: str) -> None:
    if cancellation > CANCELLATION_LIMIT:
        raise PrecisionLossError(
            f"cancellation indicator {cancellation:.3e} exceeds "
            f"{CANCELLATION_LIMIT:.0e} for {context}; use the oracle path"
        )


def _strip_winding(amps: np.ndarray, phase: float, n: int) -> np.ndarray:
    """Real signed profile recovered from complex amplitudes."""
    m = np.arange(amps.size)
    return np.real(amps * np.exp(-1j * phase * (m - n)))


def _oracle_profile_su2(p: Su2Params) -> np.ndarray:
    amps = oracle_state(AlgebraKind.SU2, p.M, p.n, p.r, p.theta).amplitudes
    return _strip_winding(amps, p.theta, p.n)


def _coeff_su2_via_oracle(p: Su2Params, m: int) -> CoeffValue:
    value = float(_oracle_profile_su2(p)[m])
    w = m - p.n
    if value == 0.0:
        return CoeffValue(-math.inf, 1, w)
    return CoeffValue(math.log(abs(value)), 1 if value > 0 else -1, w)


def coeff_su2(p: Su2Params, m: int) -> CoeffValue:
    """<m| D2(M, r*e^{i*theta}) |n> in sign/log-magnitude form.

    Arbitrary r is supported: the tangent parameterization covers
    [0, pi/2) and quadrant folds supply the remaining signs; within 1e-8
    of the tangent pole the value is taken from the oracle instead.
    Mildly ill-conditioned sums are also refined via the oracle; beyond
    the trusted range the op raises PrecisionLossError.
    """
    if not 0 <= m <= p.M:
        raise DomainError(f"m must lie in [0, M], got m={m}, M={p.M}")
    if abs(math.cos(p.r)) < COS_R_CUTOFF:
        return _coeff_su2_via_oracle(p, m)
    rho, half_turns, reflected = _fold_su2(p.r)
    log_mag, sign, cancellation = _log_coeff_su2(p.M, p.n, m, math.tan(rho))
    _check_cancellation(cancellation, f"su(2) coefficient M={p.M} n={p.n} m={m}")
    if cancellation > _FALLBACK_LIMIT:
        return _coeff_su2_via_oracle(p, m)
    flips = p.M * half_turns + (p.M + m - p.n) * int(reflected)
    if flips & 1:
        sign = -sign
    return CoeffValue(log_mag, sign, m - p.n)


def coeff_su11(p: Su11Params, m: int) -> CoeffValue:
    """<m| D11(M, R*e^{i*vartheta}) |n> in sign/log-magnitude form."""
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    log_mag, sign, cancellation = _log_coeff_su11(p.M, p.n, m, p.tanh_R)
    _check_cancellation(cancellation, f"su(1,1) coefficient M={p.M} n={p.n} m={m}")
    if cancellation > _FALLBACK_LIMIT:
        state = oracle_state(AlgebraKind.SU11, p.M, p.n, p.R, p.vartheta)
        if m >= state.dim:
            raise PrecisionLossError(
                f"su(1,1) coefficient M={p.M} n={p.n} m={m} is ill-conditioned "
                "beyond the oracle window"
            )
        value = float(_strip_winding(state.amplitudes, p.vartheta, p.n)[m])
        if value == 0.0:
            return CoeffValue(-math.inf, 1, m - p.n)
        return CoeffValue(math.log(abs(value)), 1 if value > 0 else -1, m - p.n)
    return CoeffValue(log_mag, sign, m - p.n)


def _su2_signed_values(p: Su2Params) -> tuple[np.ndarray, bool]:
    """Signed profile over m = 0..M, with per-entry oracle fallback.

    Entries whose cancellation indicator exceeds the trusted range are
    replaced by the oracle value; the second element reports whether any
    fallback happened.
    """
    if abs(math.cos(p.r)) < COS_R_CUTOFF:
        return _oracle_profile_su2(p), True
    rho, half_turns, reflected = _fold_su2(p.r)
    tan_rho = math.tan(rho)
    values = np.empty(p.M + 1)
    oracle_profile: np.ndarray | None = None
    for m in range(p.M + 1):
        log_mag, sign, cancellation = _log_coeff_su2(p.M, p.n, m, tan_rho)
        if cancellation > _FALLBACK_LIMIT:
            if oracle_profile is None:
                oracle_profile = _oracle_profile_su2(p)
            values[m] = oracle_profile[m]
            continue
        flips = p.M * half_turns + (p.M + m - p.n) * int(reflected)
        value = math.exp(log_mag) if log_mag != -math.inf else 0.0
        values[m] = -sign * value if flips & 1 else sign * value
    return values, oracle_profile is not None


def _su11_signed_values(p: Su11Params, count: int) -> tuple[np.ndarray, bool]:
    """su(1,1) mirror of :func:`_su2_signed_values`."""
    values = np.empty(count)
    oracle_profile: np.ndarray | None = None
    for m in range(count):
        log_mag, sign, cancellation = _log_coeff_su11(p.M, p.n, m, p.tanh_R)
        if cancellation > _FALLBACK_LIMIT:
            if oracle_profile is None:
                state = oracle_state(
                    AlgebraKind.SU11, p.M, p.n, p.R, p.vartheta
                )
                oracle_profile = _strip_winding(state.amplitudes, p.vartheta, p.n)
            if m >= oracle_profile.size:
                raise PrecisionLossError(
                    f"su(1,1) coefficient M={p.M} n={p.n} m={m} is "
                    "ill-conditioned beyond the oracle window"
                )
            values[m] = oracle_profile[m]
            continue
        values[m] = sign * math.exp(log_mag) if log_mag != -math.inf else 0.0
    return values, oracle_profile is not None


def amplitude_profile_su2(p: Su2Params) -> np.ndarray:
    """Signed real amplitudes with the phase winding stripped.

    The full state amplitude is profile[m] * exp(i*theta*(m-n)).  Entries
    that the alternating sum cannot deliver to absolute accuracy are taken
    from the oracle.
    """
    return _su2_signed_values(p)[0]


def amplitude_profile_su11(p: Su11Params, count: int) -> np.ndarray:
    """First ``count`` signed real su(1,1) amplitudes (phase stripped)."""
    return _su11_signed_values(p, count)[0]


def _apply_magnitude_exponent(
    probs: np.ndarray, ratio: float, M: int, magnitude_exponent: str
) -> np.ndarray:
    if magnitude_exponent not in MAGNITUDE_EXPONENTS:
        raise DomainError(
            f"magnitude_exponent must be one of {MAGNITUDE_EXPONENTS}, "
            f"got {magnitude_exponent!r}"
        )
    if magnitude_exponent == "m+n":
        return probs
    # Canary variant: swaps the running index for the algebra label in the
    # magnitude exponent, i.e. multiplies by ratio^(2(M-m)).  Wrong except
    # at m = M; verification must flag it.
    m = np.arange(probs.size, dtype=float)
    return probs * ratio ** (2.0 * (M - m))


def distribution_su2(
    p: Su2Params, magnitude_exponent: str = "m+n"
) -> PhotonDistribution:
    """Photon-number distribution of the su(2) state (length M+1).

    ``magnitude_exponent`` selects which index enters the squared-magnitude
    power of tan r: "m+n" (correct) or "M+n" (wrong-by-construction canary
    for verification tooling).
    """
    values, used_oracle = _su2_signed_values(p)
    probs = values**2
    clamped = int(np.sum(probs < 0))
    probs = np.clip(probs, 0.0, None)
    ratio = math.tan(_fold_su2(p.r)[0]) if not used_oracle else p.tan_r
    probs = _apply_magnitude_exponent(probs, ratio, p.M, magnitude_exponent)
    return PhotonDistribution(
        probs=probs,
        norm_defect=abs(1.0 - float(probs.sum())),
        source=DistributionSource.ORACLE if used_oracle else DistributionSource.CLOSED_FORM,
        clamped=clamped,
    )


def _su11_probs(p: Su11Params, count: int) -> tuple[np.ndarray, bool]:
    values, used_oracle = _su11_signed_values(p, count)
    return values**2, used_oracle


def su11_window(p: Su11Params, tail: float = 1e-12) -> int:
    """Smallest policy window whose closed-form mass defect is below ``tail``.

    Starts at :func:`su11_start_dim` and doubles, capped at 4096.
    """
    count = su11_start_dim(p.M, p.n, p.R)
    if count > DIM_CAP:
        raise TruncationError(
            f"predicted su(1,1) occupation needs window {count} > cap {DIM_CAP}"
        )
    previous = math.inf
    while True:
        defect = 1.0 - math.fsum(_su11_probs(p, count)[0].tolist())
        if defect < tail:
            return count
        # A genuine geometric tail collapses under doubling; stagnation at
        # a tiny defect means the measurement hit its rounding floor and
        # the true tail is far below it.
        if defect > 0.5 * previous and defect < 1e-12:
            return count
        if count >= DIM_CAP:
            raise TruncationError(
                f"window mass defect {defect:.3e} at dim cap {DIM_CAP}"
            )
        previous = defect
        count = min(2 * count, DIM_CAP)


def distribution_su11(
    p: Su11Params, m_max: int | None = None, magnitude_exponent: str = "m+n"
) -> PhotonDistribution:
    """Photon-number distribution of the su(1,1) state over [0, m_max].

    With ``m_max=None`` the window comes from the truncation policy and
    captures all but <1e-12 of the mass.  An explicit window that leaves
    more than 1e-10 of mass outside raises TruncationError.
    """
    if m_max is None:
        count = su11_window(p)
    else:
        if m_max < 0:
            raise DomainError(f"m_max must be nonnegative, got {m_max}")
        count = m_max + 1
    probs, used_oracle = _su11_probs(p, count)
    defect = 1.0 - float(probs.sum())
    if m_max is not None and defect > 1e-10:
        raise TruncationError(
            f"window [0, {m_max}] leaves {defect:.3e} of probability mass outside"
        )
    probs = _apply_magnitude_exponent(probs, p.tanh_R, p.M, magnitude_exponent)
    return PhotonDistribution(
        probs=probs,
        norm_defect=abs(1.0 - float(probs.sum())),
        source=DistributionSource.ORACLE if used_oracle else DistributionSource.CLOSED_FORM,
    )


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    """Half the l1 distance, zero-padding the shorter vector."""
    size = max(p.size, q.size)
    pp = np.zeros(size)
    qq = np.zeros(size)
    pp[: p.size] = p
    qq[: q.size] = q
    return 0.5 * float(np.sum(np.abs(pp - qq)))


def limit_comparison_su2(
    M: int,
    alpha: float,
    theta: float,
    n: int,
    metric: DistanceMetric = DistanceMetric.TOTAL_VARIATION,
) -> float:
    """Distance between the su(2) state at |xi| = alpha/sqrt(M) and D(alpha)|n>.

    Shrinks as M grows with alpha fixed: the contraction limit of the
    su(2) family is the displaced number state.
    """
    if metric is not DistanceMetric.TOTAL_VARIATION:
        raise DomainError(f"unsupported metric {metric}")
    if M < max(n, 1):
        raise DomainError(f"need M >= max(n, 1), got M={M}, n={n}")
    p = distribution_su2(Su2Params(M=M, n=n, r=alpha / math.sqrt(M), theta=theta))
    target = displaced_number_oracle(alpha, theta, n).probabilities()
    return total_variation(p.probs, target)


def limit_comparison_su11(
    M: int,
    alpha: float,
    vartheta: float,
    n: int,
    metric: DistanceMetric = DistanceMetric.TOTAL_VARIATION,
) -> float:
    """su(1,1) mirror of :func:`limit_comparison_su2` with |zeta| = alpha/sqrt(M)."""
    if metric is not DistanceMetric.TOTAL_VARIATION:
        raise DomainError(f"unsupported metric {metric}")
    if M < 1 or n < 0:
        raise DomainError(f"need M >= 1 and n >= 0, got M={M}, n={n}")
    p = distribution_su11(
        Su11Params(M=M, n=n, R=alpha / math.sqrt(M), vartheta=vartheta)
    )
    target = displaced_number_oracle(alpha, vartheta, n).probabilities()
    return total_variation(p.probs, target)
