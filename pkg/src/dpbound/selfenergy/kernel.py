"""Momentum-space collapse kernel of the master equation."""

import math

import numpy as np

from .. import constants as const
from .density import radial_fourier


def mass_fourier(dens, q, numeric=False):
    """``(2 pi hbar)^-3 int mu(y) exp(-i Q.y / hbar) dy`` at momentum ``q``."""
    k = np.asarray(q, dtype=float) / const.HBAR
    if numeric:
        ft = radial_fourier(dens.density, dens.support_radius, k)
    else:
        ft = dens.fourier(k)
    return ft / (2.0 * math.pi * const.HBAR) ** 3


def decoherence_kernel(dens, q, numeric=False):
    """``(4G / pi hbar^2) |mu~(Q)|^2 / Q^2`` for momentum transfer ``q`` (kg m/s)."""
    q = np.asarray(q, dtype=float)
    if np.any(q <= 0):
        raise ValueError("q must be positive")
    mu = mass_fourier(dens, q, numeric=numeric)
    out = 4.0 * const.G / (math.pi * const.HBAR**2) * mu * mu / q**2
    return float(out) if out.ndim == 0 else out
