"""Lorentz boosts and exact covariance checks on plane-wave superpositions.

A kernel's four-current is covariant when the boosted-frame current at the
boosted event equals the boosted original current.  That ends up being a
functional constraint on the kernel; this module evaluates the constraint
residual for a momentum pair and the end-to-end four-vector residual over a
set of events.  The amplitude transformation only fixes |A'|; phases are
kept, since the plane-wave phase p x - E t is frame-invariant at
corresponding events and any extra phase would inject spurious residuals.
"""

from dataclasses import dataclass

import numpy as np

from .currents import KernelKind, fourcurrent_planewaves, gamma_pair, kernel_value
from .hamiltonian import energy
from .states import MOMENTUM_DISTINCT_TOL, PlaneWaveSuperposition


@dataclass(frozen=True)
class Boost:
    """A 1+1-D boost with velocity strictly inside (-1, 1)."""

    velocity: float

    def __post_init__(self):
        if not abs(self.velocity) < 1.0:
            raise ValueError(f"|boost velocity| must be < 1, got {self.velocity}")

    @property
    def gamma(self) -> float:
        v = self.velocity
        return float(1.0 / np.sqrt((1.0 - v) * (1.0 + v)))


def compose_boosts(b1: Boost, b2: Boost) -> Boost:
    """Relativistic velocity addition."""
    v1, v2 = b1.velocity, b2.velocity
    return Boost((v1 + v2) / (1.0 + v1 * v2))


def boost_momentum(p, b: Boost):
    """p' = gamma (p - v E(p)); preserves the mass shell E'^2 - p'^2 = 1."""
    p = np.asarray(p)
    return b.gamma * (p - b.velocity * energy(p))


def boost_event(t: float, x: float, b: Boost) -> tuple[float, float]:
    """(t', x') = (gamma (t - v x), gamma (x - v t))."""
    g, v = b.gamma, b.velocity
    return (g * (t - v * x), g * (x - v * t))


def transform_amplitudes(
    s: PlaneWaveSuperposition, b: Boost, kind: KernelKind
) -> PlaneWaveSuperposition:
    """Boost a superposition: momenta via the boost, amplitudes rescaled by

        |A'_i|^2 = (F_ii / F'_ii) (gamma'_ii / gamma_ii) |A_i|^2

    with phases preserved.  For the scalar kernel the factor is identically
    one (F_ii = gamma_ii cancels) and amplitudes are bitwise unchanged.
    """
    p = s.momenta
    p_b = boost_momentum(p, b)
    scale_sq = (kernel_value(kind, p, p) * gamma_pair(p_b, p_b)) / (
        kernel_value(kind, p_b, p_b) * gamma_pair(p, p)
    )
    return PlaneWaveSuperposition(s.amplitudes * np.sqrt(scale_sq), p_b)


@dataclass(frozen=True)
class ConstraintReport:
    """Both sides of the kernel covariance constraint for one momentum pair."""

    kind: KernelKind
    p_i: float
    p_j: float
    boost: Boost
    lhs: float
    rhs: float
    residual: float


def constraint_report(
    kind: KernelKind, p_i: float, p_j: float, b: Boost
) -> ConstraintReport:
    """Evaluate the covariance constraint

        [F'_ij^2 / (F'_ii F'_jj)] [F_ii F_jj / F_ij^2]
            = [gamma'_ij^2 / (gamma'_ii gamma'_jj)] [gamma_ii gamma_jj / gamma_ij^2]

    in extended precision.  A kernel whose residual vanishes for all pairs
    and boosts yields a four-vector current; F = 1 (Born) does not.
    """
    if abs(p_i - p_j) <= MOMENTUM_DISTINCT_TOL:
        raise ValueError(
            f"coincident momenta: p_i={p_i!r}, p_j={p_j!r} "
            f"(need |p_i - p_j| > {MOMENTUM_DISTINCT_TOL:.0e})"
        )
    ld = np.longdouble
    pi, pj, v = ld(p_i), ld(p_j), ld(b.velocity)
    gv = 1.0 / np.sqrt((1.0 - v) * (1.0 + v))
    pi_b = gv * (pi - v * energy(pi))
    pj_b = gv * (pj - v * energy(pj))

    def ratio(func):
        return (func(pi_b, pj_b) ** 2 / (func(pi_b, pi_b) * func(pj_b, pj_b))) * (
            func(pi, pi) * func(pj, pj) / func(pi, pj) ** 2
        )

    lhs = ratio(lambda a, c: kernel_value(kind, a, c))
    rhs = ratio(gamma_pair)
    return ConstraintReport(
        kind=kind,
        p_i=float(p_i),
        p_j=float(p_j),
        boost=b,
        lhs=float(lhs),
        rhs=float(rhs),
        residual=float(abs(lhs - rhs)),
    )


def default_events() -> list[tuple[float, float]]:
    """3x3 event lattice spanning one Compton wavelength and time at origin."""
    pts = (-0.5, 0.0, 0.5)
    return [(t, x) for t in pts for x in pts]


def covariance_residual(
    s: PlaneWaveSuperposition,
    kind: KernelKind,
    b: Boost,
    events: list[tuple[float, float]] | None = None,
) -> float:
    """Max over events of |J'(boosted event) - Lambda J(event)| (2-norm).

    The primed current uses :func:`transform_amplitudes`; everything is
    evaluated with the exact plane-wave closed form, so a nonzero residual
    is a genuine covariance failure, not discretization error.
    """
    if events is None:
        events = default_events()
    events = list(events)
    if not events:
        raise ValueError("need at least one event")
    s_b = transform_amplitudes(s, b, kind)
    g, v = b.gamma, b.velocity
    worst = 0.0
    for t, x in events:
        here = fourcurrent_planewaves(s, kind, t, x)
        t_b, x_b = boost_event(t, x, b)
        there = fourcurrent_planewaves(s_b, kind, t_b, x_b)
        gap = np.hypot(
            there.j0 - g * (here.j0 - v * here.j1),
            there.j1 - g * (here.j1 - v * here.j0),
        )
        worst = max(worst, float(gap))
    return worst
