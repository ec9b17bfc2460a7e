"""Spherically symmetric nuclear mass densities.

Every density exposes the same small surface used by the self-energy code:
``mass``, ``support_radius``, ``density(r)``, ``autocorrelation(x)`` and
``fourier(k)``. The autocorrelation ``A(x) = int mu(r) mu(r + x) dr`` is what
the gravitational self-energy integrals reduce to once the relative
coordinate is separated out.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, interpolate


@dataclass(frozen=True)
class MassSphere:
    """Uniform ball of total ``mass`` (kg) and radius ``r0`` (m)."""

    mass: float
    r0: float

    def __post_init__(self):
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.r0 > 0:
            raise ValueError(f"r0 must be positive, got {self.r0}")

    @property
    def support_radius(self):
        return self.r0

    @property
    def rho(self):
        return 3.0 * self.mass / (4.0 * np.pi * self.r0**3)

    def density(self, r):
        r = np.asarray(r, dtype=float)
        return np.where(r <= self.r0, self.rho, 0.0)

    def autocorrelation(self, x):
        # rho^2 times the lens volume shared by two balls at distance x
        x = np.abs(np.asarray(x, dtype=float))
        R = self.r0
        lens = np.pi / 12.0 * (4.0 * R + x) * (2.0 * R - x) ** 2
        return np.where(x < 2.0 * R, self.rho**2 * lens, 0.0)

    def fourier(self, k):
        """``int mu(y) exp(-i k.y) dy`` for wavenumber ``k`` (1/m)."""
        kr = np.asarray(k, dtype=float) * self.r0
        with np.errstate(invalid="ignore", divide="ignore"):
            shape = 3.0 * (np.sin(kr) - kr * np.cos(kr)) / kr**3
        # series near zero to dodge cancellation
        small = np.abs(kr) < 1e-3
        shape = np.where(small, 1.0 - kr**2 / 10.0, shape)
        return self.mass * shape


@dataclass(frozen=True)
class GaussianDensity:
    """Gaussian mass density of width ``r0`` (standard deviation per axis)."""

    mass: float
    r0: float
    cutoff: float = 6.0

    def __post_init__(self):
        if not self.mass > 0 or not self.r0 > 0:
            raise ValueError("mass and r0 must be positive")

    @property
    def support_radius(self):
        return self.cutoff * self.r0

    def density(self, r):
        r = np.asarray(r, dtype=float)
        norm = self.mass / (2.0 * np.pi * self.r0**2) ** 1.5
        return norm * np.exp(-(r**2) / (2.0 * self.r0**2))

    def autocorrelation(self, x):
        x = np.asarray(x, dtype=float)
        s2 = 4.0 * self.r0**2
        return self.mass**2 / (np.pi * s2) ** 1.5 * np.exp(-(x**2) / s2)

    def fourier(self, k):
        k = np.asarray(k, dtype=float)
        return self.mass * np.exp(-(k**2) * self.r0**2 / 2.0)


@dataclass(frozen=True)
class TabulatedDensity:
    """Radial density profile sampled on a grid, linear in between.

    ``radii`` must start at 0 and be strictly increasing; the density is zero
    beyond the last radius.
    """

    radii: np.ndarray
    values: np.ndarray
    n_autocorr: int = 801
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if r.ndim != 1 or r.shape != v.shape or r.size < 2:
            raise ValueError("radii and values must be 1-D arrays of equal length >= 2")
        if r[0] != 0.0 or np.any(np.diff(r) <= 0):
            raise ValueError("radii must start at 0 and increase strictly")
        if np.any(v < 0):
            raise ValueError("density must be non-negative")
        object.__setattr__(self, "radii", r)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_density(cls, dens, n=2001):
        r = np.linspace(0.0, dens.support_radius, n)
        return cls(r, dens.density(r))

    @property
    def support_radius(self):
        return float(self.radii[-1])

    @property
    def mass(self):
        r, v = self._fine()
        return float(integrate.trapezoid(4.0 * np.pi * r**2 * v, r))

    def density(self, r):
        r = np.asarray(r, dtype=float)
        return np.interp(r, self.radii, self.values, right=0.0)

    def _fine(self):
        if "fine" not in self._cache:
            r = np.unique(np.concatenate([self.radii, np.linspace(0.0, self.support_radius, 4001)]))
            self._cache["fine"] = (r, self.density(r))
        return self._cache["fine"]

    def _autocorr_spline(self):
        if "acf" in self._cache:
            return self._cache["acf"]
        r, v = self._fine()
        R = self.support_radius
        # F(s) = int_0^s rho(t) t dt; angular integral collapses onto F
        F = integrate.cumulative_trapezoid(v * r, r, initial=0.0)

        def F_at(s):
            return np.interp(s, r, F, right=F[-1])

        xs = np.linspace(0.0, 2.0 * R, self.n_autocorr)
        acf = np.empty_like(xs)
        acf[0] = 4.0 * np.pi * integrate.trapezoid(r**2 * v**2, r)
        for i, x in enumerate(xs[1:], start=1):
            inner = F_at(r + x) - F_at(np.abs(r - x))
            acf[i] = 2.0 * np.pi / x * integrate.trapezoid(r * v * inner, r)
        spline = interpolate.CubicSpline(xs, acf)
        self._cache["acf"] = (spline, 2.0 * R)
        return self._cache["acf"]

    def autocorrelation(self, x):
        spline, xmax = self._autocorr_spline()
        x = np.abs(np.asarray(x, dtype=float))
        return np.where(x < xmax, np.maximum(spline(np.minimum(x, xmax)), 0.0), 0.0)

    def fourier(self, k):
        return radial_fourier(self.density, self.support_radius, k)


def radial_fourier(density, support, k, epsrel=1e-10):
    """Numerical 3-D Fourier transform of a radial density.

    ``int 4 pi r^2 rho(r) sin(kr)/(kr) dr`` by adaptive quadrature.
    """

    def one(kk):
        def f(r):
            kr = kk * r
            sinc = np.sinc(kr / np.pi)
            return 4.0 * np.pi * r**2 * float(density(r)) * sinc

        val, _ = integrate.quad(f, 0.0, support, epsrel=epsrel, epsabs=0.0, limit=400)
        return val

    k = np.asarray(k, dtype=float)
    if k.ndim == 0:
        return one(float(k))
    return np.array([one(float(kk)) for kk in k.ravel()]).reshape(k.shape)
