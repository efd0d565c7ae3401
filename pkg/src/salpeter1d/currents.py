"""Probability density / current pairs built from momentum-pair kernels.

A kernel is a symmetric weight F(p1, p2); the associated density and current
of a state with momentum amplitudes phi are

    rho(x) = (2 pi)^-1 intint F(p1,p2)            phi*(p1) phi(p2) e^{i(p2-p1)x} dp1 dp2
    J(x)   = (2 pi)^-1 intint F(p1,p2) u(p1,p2)   phi*(p1) phi(p2) e^{i(p2-p1)x} dp1 dp2

with the pair velocity u = (p1+p2)/(E1+E2).  Implemented kernels:

    born       F = 1                      rho = |psi|^2
    scalar     F = gamma(p1,p2)           rho = |D+ psi|^2 + |D- psi|^2
    spinhalf   F = 1 + d(p1) d(p2)        rho = |psi|^2 + |D psi|^2,  d = p/(1+E)
    literal:n  F = gamma/(gamma-1)^n      diagnostic family, singular at
                                          gamma = 1 for n >= 1

The separated (fast) forms on the right are exactly equal to the double-sum
definition; the O(N^2) double-sum path is retained for every kernel as the
oracle.  The scalar separation relies on the sign-carrying square-root
factor: gamma(p1,p2) = d+(p1) d+(p2) + d-(p1) d-(p2) holds for all momentum
sign combinations only when d- is odd in p.
"""

from dataclasses import dataclass

import numpy as np

from .grids import Grid1D, WaveFunction, spectral_derivative, to_momentum
from .hamiltonian import apply_d_operator, d_vel, energy, evolve_free

_KERNEL_NAMES = ("born", "scalar", "spinhalf", "literal")


class KernelSingularityError(ValueError):
    """The literal half-integer kernel was evaluated where it diverges."""


@dataclass(frozen=True)
class KernelKind:
    """Selects which density/current pair a computation uses."""

    name: str
    order: int | None = None

    def __post_init__(self):
        if self.name not in _KERNEL_NAMES:
            raise ValueError(
                f"unknown kernel {self.name!r}; expected one of {_KERNEL_NAMES}"
            )
        if self.name == "literal":
            if self.order is None or self.order < 0:
                raise ValueError("literal kernel needs a non-negative order")
        elif self.order is not None:
            raise ValueError(f"kernel {self.name!r} takes no order parameter")

    def __str__(self) -> str:
        if self.name == "literal":
            return f"literal:{self.order}"
        return self.name


BORN = KernelKind("born")
SCALAR = KernelKind("scalar")
SPIN_HALF = KernelKind("spinhalf")


def literal_half_integer(n: int) -> KernelKind:
    """The printed half-integer family with exponent n; n = 0 equals scalar."""
    return KernelKind("literal", int(n))


def parse_kernel(text: str) -> KernelKind:
    """Parse 'born' | 'scalar' | 'spinhalf' | 'literal:n'."""
    text = text.strip().lower()
    if text.startswith("literal:"):
        try:
            return literal_half_integer(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"bad literal kernel order in {text!r}") from exc
    if text in ("born", "scalar", "spinhalf"):
        return KernelKind(text)
    raise ValueError(
        f"unknown kernel {text!r}; expected born|scalar|spinhalf|literal:n"
    )


def _float_pair(p1, p2):
    dt = np.result_type(np.asarray(p1).dtype, np.asarray(p2).dtype, np.float64)
    return np.asarray(p1, dtype=dt), np.asarray(p2, dtype=dt)


def u_pair(p1, p2):
    """Pair velocity (p1 + p2)/(E1 + E2); always strictly inside (-1, 1)."""
    p1, p2 = _float_pair(p1, p2)
    return (p1 + p2) / (energy(p1) + energy(p2))


def gamma_pair(p1, p2):
    """Lorentz factor of the pair velocity, 1/sqrt(1 - u^2); >= 1, symmetric."""
    u = u_pair(p1, p2)
    return 1.0 / np.sqrt((1.0 - u) * (1.0 + u))


def kernel_value(kind: KernelKind, p1, p2):
    """Evaluate the kernel F(p1, p2); broadcasts over array arguments.

    Raises :class:`KernelSingularityError` where the literal family's
    denominator (gamma - 1)^n vanishes, i.e. on opposite-momentum pairs.
    """
    p1, p2 = _float_pair(p1, p2)
    if kind.name == "born":
        return np.ones(np.broadcast(p1, p2).shape, dtype=p1.dtype)
    if kind.name == "scalar":
        return gamma_pair(p1, p2)
    if kind.name == "spinhalf":
        return 1.0 + d_vel(p1) * d_vel(p2)
    g = gamma_pair(p1, p2)
    if kind.order >= 1:
        singular = g == 1.0
        if np.any(singular):
            b1, b2 = np.broadcast_arrays(p1, p2)
            i = np.argwhere(np.atleast_1d(singular))[0]
            pa = np.atleast_1d(b1)[tuple(i)]
            pb = np.atleast_1d(b2)[tuple(i)]
            raise KernelSingularityError(
                f"literal kernel of order {kind.order} diverges at "
                f"(p1, p2) = ({pa!r}, {pb!r}) where gamma = 1"
            )
    return g / (g - 1.0) ** kind.order


def current_kernel_value(kind: KernelKind, p1, p2):
    """Current weight F(p1, p2) * u(p1, p2)."""
    return kernel_value(kind, p1, p2) * u_pair(p1, p2)


@dataclass(frozen=True, eq=False)
class DensityField:
    """Real probability density sampled on a grid."""

    grid: Grid1D
    values: np.ndarray

    def integral(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)


@dataclass(frozen=True, eq=False)
class CurrentField:
    """Real probability current sampled on a grid."""

    grid: Grid1D
    values: np.ndarray

    def integral(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)


@dataclass(frozen=True)
class FourCurrentSample:
    """(j0, j1) of a plane-wave superposition at one event (t, x)."""

    t: float
    x: float
    j0: float
    j1: float


def _kernel_sum(psi: WaveFunction, weights: np.ndarray) -> np.ndarray:
    """O(N^2) double-sum over the momentum lattice with a (N, N) weight matrix.

    Exact discrete counterpart of the defining double integral; costs O(N^2)
    memory, intended for oracle-sized grids (N <= 512 or so).
    """
    g = psi.grid
    phi = to_momentum(psi).values
    pair_amp = weights * (np.conj(phi)[:, None] * phi[None, :])
    modes = np.exp(1j * np.outer(g.p, g.x))
    vals = np.einsum("kj,kj->j", np.conj(modes), pair_amp @ modes, optimize=True)
    return vals.real * (g.dp**2 / (2.0 * np.pi))


def _pair_weights(kind: KernelKind, grid: Grid1D, with_velocity: bool) -> np.ndarray:
    p1 = grid.p[:, None]
    p2 = grid.p[None, :]
    if with_velocity:
        return current_kernel_value(kind, p1, p2)
    return kernel_value(kind, p1, p2)


def density(psi: WaveFunction, kind: KernelKind, path: str = "auto") -> DensityField:
    """Probability density of a state under the chosen kernel.

    ``path`` selects "fast" (separated/local form), "generic" (double-sum
    oracle), or "auto" (fast where one exists, generic for literal kernels).
    """
    if path not in ("auto", "fast", "generic"):
        raise ValueError(f"unknown path {path!r}")
    if path == "generic" or (path == "auto" and kind.name == "literal"):
        return DensityField(psi.grid, _kernel_sum(psi, _pair_weights(kind, psi.grid, False)))
    if kind.name == "born":
        vals = np.abs(psi.values) ** 2
    elif kind.name == "scalar":
        vals = (
            np.abs(apply_d_operator(psi, "plus").values) ** 2
            + np.abs(apply_d_operator(psi, "minus_signed").values) ** 2
        )
    elif kind.name == "spinhalf":
        vals = (
            np.abs(psi.values) ** 2
            + np.abs(apply_d_operator(psi, "vel").values) ** 2
        )
    else:
        raise ValueError(f"no fast density path for kernel {kind}")
    return DensityField(psi.grid, vals)


def current(psi: WaveFunction, kind: KernelKind, path: str = "auto") -> CurrentField:
    """Probability current of a state under the chosen kernel.

    The spin-half current has a local form 2 Re(psi* D psi); every other
    kernel goes through the generic double-sum with weight F * u.
    """
    if path not in ("auto", "fast", "generic"):
        raise ValueError(f"unknown path {path!r}")
    if path in ("auto", "fast") and kind.name == "spinhalf":
        dpsi = apply_d_operator(psi, "vel").values
        return CurrentField(psi.grid, 2.0 * np.real(np.conj(psi.values) * dpsi))
    if path == "fast":
        raise ValueError(f"no fast current path for kernel {kind}")
    return CurrentField(psi.grid, _kernel_sum(psi, _pair_weights(kind, psi.grid, True)))


def fourcurrent_planewaves(s, kind: KernelKind, t: float, x: float) -> FourCurrentSample:
    """Exact four-current (j0, j1) of a plane-wave superposition at (t, x).

    Closed form: j^mu = sum_ij F_ij (1, u_ij) A_i* A_j
    exp(i[(p_j - p_i) x - (E_j - E_i) t]).  The kernel symmetry makes the
    sums real; the imaginary parts cancel pairwise and are dropped.
    """
    p = s.momenta
    e = s.energies
    a = s.amplitudes
    p1, p2 = p[:, None], p[None, :]
    weights = kernel_value(kind, p1, p2)
    vel = u_pair(p1, p2)
    cross = (np.conj(a)[:, None] * a[None, :]) * np.exp(
        1j * ((p2 - p1) * x - (e[None, :] - e[:, None]) * t)
    )
    j0 = complex(np.sum(weights * cross))
    j1 = complex(np.sum(weights * vel * cross))
    return FourCurrentSample(t=float(t), x=float(x), j0=j0.real, j1=j1.real)


def continuity_residual(psi: WaveFunction, kind: KernelKind, dt: float) -> float:
    """Sup-norm of d(rho)/dt + dJ/dx with a central time difference.

    rho(t +/- dt) comes from the freely evolved state; the spatial derivative
    is spectral.  For smooth band-limited states the residual decays as dt^2.
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    rho_plus = density(evolve_free(psi, dt), kind).values
    rho_minus = density(evolve_free(psi, -dt), kind).values
    j = current(psi, kind).values
    residual = (rho_plus - rho_minus) / (2.0 * dt) + spectral_derivative(psi.grid, j)
    return float(np.max(np.abs(residual)))


def normalize_for_kernel(psi: WaveFunction, kind: KernelKind) -> WaveFunction:
    """Rescale so the kernel's density integrates to one; idempotent."""
    total = density(psi, kind).integral()
    if not total > 0.0:
        raise ValueError(
            f"cannot normalize: total density is {total} (zero or negative state)"
        )
    return WaveFunction(psi.grid, psi.values / np.sqrt(total))
