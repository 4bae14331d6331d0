"""Closed-form photon-number moments, Mandel Q, and the Q-parabola roots.

Writing s = sin^2(r) (su(2)) or sinh^2(R) (su(1,1)), the numerator of
Mandel's Q is a parabola in s:

    su(2):   Q' = -A s^2 + (A - M + 2n) s - n,   A = 2n(M-n) + M > 0,
    su(1,1): Q' =  A s^2 + (A - M - 2n) s - n,   A = 2n(M+n) + M > 0,

and the denominator equals the mean photon number, so the sign of Q' is
the sign of Q.  The boundary analysis returns the parabola's extremum and
its nonnegative axis crossings, at which the field is Poissonian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .coefficients import Su2Params, Su11Params
from .errors import DomainError, UndefinedQError
from .oracle import AlgebraKind

__all__ = [
    "Classification",
    "QStats",
    "QBoundary",
    "POISSONIAN_BAND",
    "mean_n_su2",
    "mean_n2_su2",
    "q_prime_su2",
    "mandel_q_su2",
    "q_boundary_su2",
    "mean_n_su11",
    "mean_n2_su11",
    "q_prime_su11",
    "mandel_q_su11",
    "q_boundary_su11",
    "parabola_a_su2",
    "parabola_a_su11",
    "classify",
]

# |Q| at or below this counts as Poissonian; exact zero is measure-zero
# in floating point.
POISSONIAN_BAND = 1e-10

_MEAN_N_FLOOR = 1e-14


class Classification(Enum):
    SUB = "Sub"
    POISSONIAN = "Poissonian"
    SUPER = "Super"


@dataclass(frozen=True)
class QStats:
    """First/second moments and Mandel Q for one state."""

    mean_n: float
    mean_n2: float
    q: float
    q_prime: float
    classification: Classification
    parabola_a: float


@dataclass(frozen=True)
class QBoundary:
    """Extremum and Poissonian crossings of the Q' parabola in s.

    ``roots`` holds s values (sin^2 r or sinh^2 R).  Degenerate su(2)
    cases (n = 0, n = M, or M = 2 with n = 1) collapse to the single
    tangency point; su(1,1) always has exactly one nonnegative root.
    """

    kind: AlgebraKind
    roots: tuple[float, ...]
    extremum_location: float
    extremum_value: float


def classify(q: float, band: float = POISSONIAN_BAND) -> Classification:
    if abs(q) <= band:
        return Classification.POISSONIAN
    return Classification.SUB if q < 0 else Classification.SUPER


def parabola_a_su2(M: int, n: int) -> int:
    return 2 * M * n - 2 * n * n + M


def parabola_a_su11(M: int, n: int) -> int:
    return 2 * M * n + 2 * n * n + M


def mean_n_su2(p: Su2Params) -> float:
    """<N> = M sin^2 r + n cos 2r."""
    return p.M * math.sin(p.r) ** 2 + p.n * math.cos(2.0 * p.r)


def mean_n2_su2(p: Su2Params) -> float:
    """<N^2>, assembled from the same rotation identities as the mean."""
    s2 = math.sin(p.r) ** 2
    c2r = math.cos(2.0 * p.r)
    spread = (p.M - p.n + 1) * p.n + (p.M - p.n) * (p.n + 1)
    return (
        p.M**2 * s2**2
        + 2.0 * p.M * p.n * s2 * c2r
        + p.n**2 * c2r**2
        + 0.25 * math.sin(2.0 * p.r) ** 2 * spread
    )


def q_prime_su2(M: int, n: int, s: float) -> float:
    """Q numerator as a function of s = sin^2 r (concave parabola)."""
    a = parabola_a_su2(M, n)
    return -a * s * s + (a - M + 2 * n) * s - n


def mandel_q_su2(p: Su2Params) -> QStats:
    """Mandel Q for the su(2) state; raises UndefinedQError when <N> = 0."""
    mean_n = mean_n_su2(p)
    if mean_n <= _MEAN_N_FLOOR:
        raise UndefinedQError(
            f"mean photon number {mean_n:.3e} leaves Mandel Q undefined"
        )
    s = p.sin2_r
    q_prime = q_prime_su2(p.M, p.n, s)
    denominator = (p.M - p.n) * s + p.n * (1.0 - s)
    q = q_prime / denominator
    return QStats(
        mean_n=mean_n,
        mean_n2=mean_n2_su2(p),
        q=q,
        q_prime=q_prime,
        classification=classify(q),
        parabola_a=float(parabola_a_su2(p.M, p.n)),
    )


def q_boundary_su2(M: int, n: int) -> QBoundary:
    """Roots and maximum of the su(2) Q' parabola.

    All discriminant arithmetic is integer-exact, so the degenerate
    tangency cases are detected exactly.
    """
    if M < 1:
        raise DomainError(f"M must be positive, got {M}")
    if not 0 <= n <= M:
        raise DomainError(f"need 0 <= n <= M, got n={n}, M={M}")
    a = parabola_a_su2(M, n)
    product = n * (M - n)
    discriminant = product * product - product
    s_max = (a - M + 2 * n) / (2.0 * a)
    q_max = discriminant / a
    if discriminant == 0:
        roots: tuple[float, ...] = (s_max,)
    else:
        sq = math.sqrt(discriminant)
        roots = ((n * (M - n + 1) - sq) / a, (n * (M - n + 1) + sq) / a)
    return QBoundary(
        kind=AlgebraKind.SU2,
        roots=roots,
        extremum_location=s_max,
        extremum_value=q_max,
    )


def mean_n_su11(p: Su11Params) -> float:
    """<N> = (n + M/2) cosh 2R - M/2, equal to 2(k+n) sinh^2 R + n."""
    return (p.n + p.M / 2.0) * math.cosh(2.0 * p.R) - p.M / 2.0


def q_prime_su11(M: int, n: int, s: float) -> float:
    """Q numerator as a function of s = sinh^2 R (convex parabola).

    Q' = Var(N) - <N> with Var(N) = A s (1 + s); the sign of the linear
    term follows from that identity (and is checked against distribution
    moments in the test suite).
    """
    a = parabola_a_su11(M, n)
    return a * s * s + (a - M - 2 * n) * s - n


def mandel_q_su11(p: Su11Params) -> QStats:
    """Mandel Q for the su(1,1) state; undefined only at R = 0, n = 0."""
    mean_n = mean_n_su11(p)
    if mean_n <= _MEAN_N_FLOOR:
        raise UndefinedQError(
            f"mean photon number {mean_n:.3e} leaves Mandel Q undefined"
        )
    q_prime = q_prime_su11(p.M, p.n, p.sinh2_R)
    q = q_prime / mean_n
    return QStats(
        mean_n=mean_n,
        mean_n2=mean_n2_su11(p),
        q=q,
        q_prime=q_prime,
        classification=classify(q),
        parabola_a=float(parabola_a_su11(p.M, p.n)),
    )


def mean_n2_su11(p: Su11Params) -> float:
    """<N^2> recovered from Q' and <N>: <N^2> = Q' + <N> + <N>^2."""
    mean_n = mean_n_su11(p)
    return q_prime_su11(p.M, p.n, p.sinh2_R) + mean_n + mean_n * mean_n


def q_boundary_su11(M: int, n: int) -> QBoundary:
    """Minimum and the single nonnegative root of the su(1,1) Q' parabola.

    The vertex sits at s = -(A - M - 2n)/(2A), which is nonpositive, so
    over the physical range s >= 0 the parabola rises from Q'(0) = -n and
    crosses zero exactly once.
    """
    if M < 1:
        raise DomainError(f"su(1,1) requires M >= 1, got {M}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    a = parabola_a_su11(M, n)
    b = a - M - 2 * n  # = 2n(M + n - 1)
    s_min = -b / (2.0 * a)
    q_min = -((b / 2.0) ** 2 / a + n)
    root = (-b + math.sqrt(b * b + 4.0 * a * n)) / (2.0 * a)
    return QBoundary(
        kind=AlgebraKind.SU11,
        roots=(root,),
        extremum_location=s_min,
        extremum_value=q_min,
    )
