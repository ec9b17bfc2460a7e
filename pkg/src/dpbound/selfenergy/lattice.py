"""Off-diagonal (inter-nucleus) lattice sums for a simple cubic crystal."""

import math

import numpy as np

from .. import constants as const
from ..errors import TooLarge

MAX_SIDE = 30

# directly summed unit-cell shell: 3 + 3/(2 sqrt 2) + 1/(3 sqrt 3)
NEAR_SHELL = 3.0 + 3.0 / (2.0 * math.sqrt(2.0)) + 1.0 / (3.0 * math.sqrt(3.0))


def offdiag_sum_exact(n_per_side):
    """``S = sum_{i != j} |i - j|^-3`` over an ``n^3`` cubic block, lattice units.

    Each displacement vector ``(dx, dy, dz)`` occurs
    ``(n-|dx|)(n-|dy|)(n-|dz|)`` times, so the double sum over sites is
    accumulated displacement by displacement.
    """
    n = int(n_per_side)
    if n != n_per_side or n < 2:
        raise ValueError("n_per_side must be an integer >= 2")
    if n > MAX_SIDE:
        raise TooLarge(f"n_per_side={n} exceeds cap {MAX_SIDE}")
    k = np.arange(-(n - 1), n)
    mult = (n - np.abs(k)).astype(float)
    dx, dy, dz = np.meshgrid(k, k, k, indexing="ij")
    r2 = (dx * dx + dy * dy + dz * dz).astype(float)
    weight = mult[:, None, None] * mult[None, :, None] * mult[None, None, :]
    r2[n - 1, n - 1, n - 1] = np.inf  # self term
    return float(np.sum(weight / r2**1.5))


def offdiag_sum_chain(n_per_side):
    """Analytic upper bound on ``S`` obtained by replacing sums with integrals.

    ``N 2^3 [near-shell + three integral terms]`` with ``half = (N^(1/3) - 1)/2``
    the largest index offset from the block centre. An integral whose upper
    limit falls below its lower limit corresponds to an empty sum and
    contributes zero.
    """
    N = float(n_per_side) ** 3
    n = n_per_side - 1.0

    t1 = 0.0
    if n / 2.0 > 1.0:
        t1 = (
            6.0 * n / math.sqrt(n * n + 4.0)
            + 3.0 * n / (2.0 * math.sqrt(n * n + 8.0))
            - 6.0 / n**2
            - 3.0 * math.sqrt(2.0)
            - math.sqrt(3.0) / 2.0
            + 1.5
        )
    t2 = 0.0
    if n / math.sqrt(2.0) > 1.0:
        t2 = 0.75 * math.pi * (
            -2.0 * math.sqrt(2.0) / math.sqrt(n * n + 2.0) - 2.0 * math.sqrt(2.0) / n + math.sqrt(2.0) + 2.0
        )
    t3 = 0.0
    if math.sqrt(3.0) * n / 2.0 > 1.0:
        t3 = 0.5 * math.pi * math.log(math.sqrt(3.0) * n / 2.0)
    return N * 8.0 * (NEAR_SHELL + t1 + t2 + t3)


def offdiag_sum_asymptotic(n_atoms):
    """Large-N estimate ``(4 pi / 3) N ln N`` of the lattice sum."""
    return 4.0 * math.pi / 3.0 * n_atoms * math.log(n_atoms)


def offdiag_energy_prefactor(crystal, d):
    """``8 pi G d^2 m^2 / (2 a^3)``: energy per unit of the lattice sum."""
    m, a = crystal.nucleus_mass, crystal.lattice_constant
    return 8.0 * math.pi * const.G * d * d * m * m / (2.0 * a**3)


def offdiag_energy_bound(crystal, d):
    """Upper bound (J) on the neglected off-diagonal self-energy contribution."""
    return offdiag_energy_prefactor(crystal, d) * offdiag_sum_asymptotic(crystal.n_atoms)
