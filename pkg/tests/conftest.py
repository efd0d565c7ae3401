import numpy as np

import salpeter1d as s


def random_superposition(rng, n_terms, p_max=2.0, min_sep=1e-3):
    """Random plane-wave superposition with well-separated momenta."""
    while True:
        p = rng.uniform(-p_max, p_max, size=n_terms)
        d = np.abs(p[:, None] - p[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() > min_sep:
            break
    amps = rng.normal(size=n_terms) + 1j * rng.normal(size=n_terms)
    return s.PlaneWaveSuperposition(amps, p)


def random_state(grid, rng):
    """Unit-norm state with full-band random content."""
    vals = rng.normal(size=grid.n_points) + 1j * rng.normal(size=grid.n_points)
    psi = s.WaveFunction(grid, vals)
    return s.WaveFunction(grid, vals / psi.norm())


def box_grid(box_width, n_points=4096, pad=4.0):
    """Grid centered on the box with the given padding factor."""
    half = 0.5 * pad * box_width
    center = 0.5 * box_width
    return s.make_grid(center - half, center + half, n_points)


def lattice_wave(grid, p_target, amplitude=1.0):
    """Plane wave snapped to the nearest momentum lattice point."""
    k = round(p_target / grid.dp)
    p = grid.dp * k
    return s.WaveFunction(grid, amplitude * np.exp(1j * p * grid.x)), p
