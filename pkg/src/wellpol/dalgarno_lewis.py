"""Closed-form static polarizability of the finite-well ground state.

The second-order Stark shift of the ground state is obtained from the
solution phi of an inhomogeneous differential equation driven by the dipole
interaction, so no excited or continuum states are needed.  With the field
along x the shift splits into a classically-forbidden-region part and an
inside-the-well part, giving (in units of g = m q^2 a^4 / hbar^2)

    alpha1' = N'^2 cos^2(g0) [1/b0^2 + 5/(2 b0^3) + 5/(2 b0^4) + 5/(4 b0^5)]
    alpha2' = N'^2 [-1/(3 g0^2) + f1(g0) cos(2 g0) + f2(g0) sin(2 g0)]

with g0 = gamma0, b0 = beta0, and f1, f2 rational-trigonometric
coefficients that carry the homogeneous-correction constant C'.  The
correction sin-wave added inside the well is fixed by matching the
hard-wall limit, C' = -(pi/2)^2 / gamma0^2; the trial value alpha2_t'
corresponds to C' = 0.

All phi evaluations here are in the reduced convention

    phi = (m q eps a^3 N / (2 hbar^2)) * phi'(x/a),

so the applied field eps never appears numerically.  ``alpha_via_quadrature``
integrates <psi0| x |phi> directly as an independent route to the same
number, and ``orthogonality`` checks <psi0|phi> = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import DomainError, NumericalError
from .well_spectrum import GroundState, psi0_eval

__all__ = [
    "HARD_WALL_ALPHA_COEFF",
    "PhiReduced",
    "PolarizabilityBreakdown",
    "default_c_prime",
    "phi_reduced",
    "phi_eval",
    "phi_jump",
    "ode_residual_outer",
    "ode_residual_inner",
    "alpha1_prime",
    "alpha2_prime",
    "alpha2_t_prime",
    "alpha2_prime_hard_wall",
    "alpha_apr_prime",
    "t_ratio",
    "breakdown",
    "alpha_via_quadrature",
    "overlap_with_psi0",
    "orthogonality",
]

_QUARTER_PI_SQ = (0.5 * math.pi) ** 2

# Published hard-wall polarizability coefficient used by the wider-well
# approximation alpha_apr' = coeff * (1 + 1/R)^4.
HARD_WALL_ALPHA_COEFF = 0.0702247


def default_c_prime(gamma0: float) -> float:
    """Homogeneous-correction coefficient C' = -(pi/2)^2 / gamma0^2."""
    return -_QUARTER_PI_SQ / gamma0**2


@dataclass(frozen=True)
class PhiReduced:
    """Piecewise reduced dipole-response function phi'(x')."""

    state: GroundState
    c_coefficient: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.c_coefficient) or self.c_coefficient > 0.0:
            raise DomainError(
                f"c_coefficient must be finite and <= 0, got {self.c_coefficient!r}"
            )


def phi_reduced(state: GroundState, c_prime: float | None = None) -> PhiReduced:
    """Build phi' for a state; ``c_prime`` overrides the default C'."""
    if c_prime is None:
        c_prime = default_c_prime(state.gamma0)
    return PhiReduced(state=state, c_coefficient=c_prime)


def _phi_inner(gamma0: float, c_prime: float, x: float) -> float:
    s = math.sin(gamma0 * x)
    c = math.cos(gamma0 * x)
    return -(x * x * s / gamma0 + x * c / gamma0**2 + c_prime * s / gamma0)


def _phi_outer(gamma0: float, beta0: float, ax: float) -> float:
    # Right-region form (ax > 1); the left region is the odd mirror image.
    return (
        math.cos(gamma0)
        * math.exp(-beta0 * (ax - 1.0))
        * (ax * ax / beta0 + ax / beta0**2)
    )


def phi_eval(phi: PhiReduced, x_over_a: float) -> float:
    """Evaluate the reduced phi'(x'); odd in x', boundary owned by the outer piece."""
    st = phi.state
    ax = abs(x_over_a)
    if ax < 1.0:
        return _phi_inner(st.gamma0, phi.c_coefficient, x_over_a)
    return math.copysign(_phi_outer(st.gamma0, st.beta0, ax), x_over_a)


def phi_jump(phi: PhiReduced) -> float:
    """Discontinuity phi'(1+) - phi'(1-) at the well edge.

    The piecewise phi' is built without imposing continuity at |x'| = 1;
    the jump is reported as a diagnostic only.
    """
    st = phi.state
    return _phi_outer(st.gamma0, st.beta0, 1.0) - _phi_inner(
        st.gamma0, phi.c_coefficient, 1.0
    )


def ode_residual_outer(phi: PhiReduced, x_over_a: float) -> float:
    """Residual of the outer-region response equation at x', |x'| > 1.

    Evaluates [-beta0^2 + d^2/dx'^2] phi' + 4 x' cos(gamma0) e^{-beta0(|x'|-1)}
    with the second derivative coded term by term (not pre-cancelled), so a
    wrong phi' or forcing term shows up as a nonzero value.
    """
    st = phi.state
    ax = abs(x_over_a)
    if ax <= 1.0:
        raise DomainError(f"outer residual needs |x'| > 1, got {x_over_a!r}")
    g, b = st.gamma0, st.beta0
    env = math.exp(-b * (ax - 1.0))
    u0 = ax * ax / b + ax / b**2
    u1 = 2.0 * ax / b + 1.0 / b**2
    u2 = 2.0 / b
    second = math.cos(g) * env * (u2 - 2.0 * b * u1 + b * b * u0)
    value = math.cos(g) * env * u0
    resid = second - b * b * value + 4.0 * ax * math.cos(g) * env
    return math.copysign(resid, x_over_a)


def ode_residual_inner(phi: PhiReduced, x_over_a: float) -> float:
    """Residual of the in-well response equation at x', |x'| < 1.

    Evaluates [gamma0^2 + d^2/dx'^2] phi' + 4 x' cos(gamma0 x').  The
    homogeneous sin-wave carried by ``c_coefficient`` drops out for any C'.
    """
    st = phi.state
    if abs(x_over_a) >= 1.0:
        raise DomainError(f"inner residual needs |x'| < 1, got {x_over_a!r}")
    g = st.gamma0
    x = x_over_a
    s = math.sin(g * x)
    c = math.cos(g * x)
    cp = phi.c_coefficient
    # d^2/dx^2 of -(x^2 s/g + x c/g^2 + C' s/g), term by term
    second = -(
        (2.0 * s / g + 4.0 * x * c - g * x * x * s)
        + (-2.0 * s / g - x * c)
        + (-cp * g * s)
    )
    return second + g * g * _phi_inner(g, cp, x) + 4.0 * x * c


def alpha1_prime(state: GroundState) -> float:
    """Forbidden-region polarizability contribution, in units of g."""
    b = state.beta0
    bracket = math.fsum(
        [1.0 / b**2, 5.0 / (2.0 * b**3), 5.0 / (2.0 * b**4), 5.0 / (4.0 * b**5)]
    )
    return state.n_prime_sq * math.cos(state.gamma0) ** 2 * bracket


def _alpha2_bracket(gamma0: float, c_prime: float) -> float:
    # Compensated summation: near gamma0 = pi/2 the cos(2 gamma0) terms
    # nearly cancel and six-decimal table reproduction needs the headroom.
    g = gamma0
    c2g = math.cos(2.0 * g)
    s2g = math.sin(2.0 * g)
    return math.fsum(
        [
            -1.0 / (3.0 * g**2),
            c2g / (2.0 * g**2),
            -5.0 * c2g / (4.0 * g**4),
            c_prime * c2g / (2.0 * g**2),
            -5.0 * s2g / (4.0 * g**3),
            5.0 * s2g / (8.0 * g**5),
            -c_prime * s2g / (4.0 * g**3),
        ]
    )


def alpha2_prime(state: GroundState, c_prime: float | None = None) -> float:
    """In-well polarizability contribution, in units of g.

    ``c_prime`` overrides the homogeneous-correction coefficient; the
    default is C' = -(pi/2)^2 / gamma0^2.
    """
    if c_prime is None:
        c_prime = default_c_prime(state.gamma0)
    return state.n_prime_sq * _alpha2_bracket(state.gamma0, c_prime)


def alpha2_t_prime(state: GroundState) -> float:
    """In-well contribution of the bare trial solution (C' = 0)."""
    return alpha2_prime(state, c_prime=0.0)


def alpha2_prime_hard_wall(c_prime: float = -1.0) -> float:
    """Hard-wall (gamma0 -> pi/2) limit of alpha2' as a function of C'.

    Affine in C'; C' = -1 gives the exact box polarizability
    20/pi^4 - 4/(3 pi^2), and C' = 0 gives the trial-solution limit.
    """
    pi_sq = math.pi**2
    return math.fsum(
        [
            -4.0 / (3.0 * pi_sq),
            -2.0 / pi_sq,
            20.0 / pi_sq**2,
            -2.0 * c_prime / pi_sq,
        ]
    )


def alpha_apr_prime(R: float) -> float:
    """Wider-hard-wall approximation: 0.0702247 (1 + 1/R)^4."""
    if not (math.isfinite(R) and R > 0.0):
        raise DomainError(f"R must be finite and positive, got {R!r}")
    return HARD_WALL_ALPHA_COEFF * (1.0 + 1.0 / R) ** 4


def t_ratio(state: GroundState, c_prime: float | None = None) -> float:
    """Fractional share of alpha2' contributed by the homogeneous correction.

    T = (alpha2' - alpha2_t') / alpha2'.  Independent of N'^2.
    """
    a2 = alpha2_prime(state, c_prime=c_prime)
    if a2 == 0.0:
        raise DomainError("t_ratio undefined: alpha2' vanishes for this state")
    return (a2 - alpha2_t_prime(state)) / a2


@dataclass(frozen=True)
class PolarizabilityBreakdown:
    """All reduced polarizabilities of one well, in units of g."""

    alpha1_prime: float
    alpha2_prime: float
    alpha2_t_prime: float
    alpha_prime: float
    alpha_apr_prime: float
    t_ratio: float

    def __post_init__(self) -> None:
        if self.alpha1_prime < 0.0:
            raise NumericalError("alpha1' must be nonnegative")
        if self.alpha_prime != self.alpha1_prime + self.alpha2_prime:
            raise NumericalError("alpha' must equal alpha1' + alpha2' exactly")


def breakdown(state: GroundState) -> PolarizabilityBreakdown:
    """Assemble every closed-form polarizability for one state."""
    a1 = alpha1_prime(state)
    a2 = alpha2_prime(state)
    a2t = alpha2_t_prime(state)
    return PolarizabilityBreakdown(
        alpha1_prime=a1,
        alpha2_prime=a2,
        alpha2_t_prime=a2t,
        alpha_prime=a1 + a2,
        alpha_apr_prime=alpha_apr_prime(state.R),
        t_ratio=(a2 - a2t) / a2 if a2 != 0.0 else math.nan,
    )


def _quad_piece(f, lo: float, hi: float) -> tuple[float, float]:
    value, err = quad(f, lo, hi, epsabs=1e-13, epsrel=1e-11, limit=200)
    return value, err


def _region_edges(state: GroundState) -> float:
    # Outer tails truncated where the integrand is far below its peak:
    # exp(-2 beta0 * 40/beta0) ~ 1.8e-35.
    return 1.0 + 40.0 / state.beta0


def alpha_via_quadrature(state: GroundState, region: str = "all") -> float:
    """Polarizability from direct integration of <psi0| x |phi>.

    Independent numerical route to alpha' (or to its outer / inner pieces
    via ``region``); agrees with the closed forms to better than 1e-8
    relative.
    """
    if region not in ("all", "outer", "inner"):
        raise DomainError(f"region must be 'all', 'outer' or 'inner', got {region!r}")
    phi = phi_reduced(state)
    cut = _region_edges(state)

    def integrand(x: float) -> float:
        return psi0_eval(state, x) * x * phi_eval(phi, x)

    pieces: list[tuple[float, float]] = []
    if region in ("all", "outer"):
        pieces.append(_quad_piece(integrand, -cut, -1.0))
        pieces.append(_quad_piece(integrand, 1.0, cut))
    if region in ("all", "inner"):
        pieces.append(_quad_piece(integrand, -1.0, 1.0))
    total = state.n_prime * math.fsum(v for v, _ in pieces)
    err = state.n_prime * math.fsum(e for _, e in pieces)
    if err > 1e-8 * max(abs(total), 1e-3):
        raise NumericalError(
            f"quadrature did not converge: value {total!r}, error estimate {err!r}, "
            f"gamma0 {state.gamma0!r}, region {region!r}"
        )
    return total


def overlap_with_psi0(state: GroundState, func) -> float:
    """Numerical overlap integral of psi0 with an arbitrary reduced function."""
    cut = _region_edges(state)

    def integrand(x: float) -> float:
        return psi0_eval(state, x) * func(x)

    pieces = [
        _quad_piece(integrand, -cut, -1.0),
        _quad_piece(integrand, -1.0, 1.0),
        _quad_piece(integrand, 1.0, cut),
    ]
    return math.fsum(v for v, _ in pieces)


def orthogonality(state: GroundState) -> float:
    """Overlap <psi0|phi'>; vanishes by parity (psi0 even, phi' odd)."""
    phi = phi_reduced(state)
    return overlap_with_psi0(state, lambda x: phi_eval(phi, x))
