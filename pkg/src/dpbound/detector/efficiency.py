"""Polynomial detection-efficiency curves."""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import DomainMismatch, IllConditioned

MAX_DEGREE = 8
COND_LIMIT = 1e10
CLAMP_TOL = 1e-6


@dataclass(frozen=True)
class EfficiencyCurve:
    """``eps(E) = sum_j xi_j E^j`` over ``[e_lo, e_hi]`` keV, clamped to [0, 1].

    Internally the polynomial is held in the reduced variable ``u = E / e_ref``
    (``unit_coefficients``), which keeps high-degree fits and the ``1/E``
    integral well conditioned. ``coefficients`` gives the keV^-j form.
    """

    material_id: str
    unit_coefficients: tuple
    e_ref: float
    domain: tuple
    source_points: tuple = ()
    residual_rms: float = 0.0

    @property
    def degree(self):
        return len(self.unit_coefficients) - 1

    @property
    def coefficients(self):
        j = np.arange(len(self.unit_coefficients))
        return tuple(np.asarray(self.unit_coefficients) / self.e_ref**j)

    def raw(self, e_kev):
        return P.polyval(np.asarray(e_kev, dtype=float) / self.e_ref, self.unit_coefficients)

    def __call__(self, e_kev):
        return np.clip(self.raw(e_kev), 0.0, 1.0)

    def covers(self, e1, e2):
        lo, hi = self.domain
        return lo <= e1 and e2 <= hi

    def needs_clamp(self, e1, e2, n=2001):
        vals = self.raw(np.linspace(e1, e2, n))
        return bool(np.any(vals < -CLAMP_TOL) or np.any(vals > 1.0 + CLAMP_TOL))

    def peak(self, e1, e2, n=2801):
        e = np.linspace(e1, e2, n)
        v = self(e)
        k = int(np.argmax(v))
        return float(e[k]), float(v[k])

    def inverse_energy_integral(self, e1, e2):
        """``int_{e1}^{e2} eps(E)/E dE`` (dimensionless) by exact antiderivative.

        Only valid while the polynomial stays inside [0, 1]; see
        :func:`inverse_energy_integral`.
        """
        c = np.asarray(self.unit_coefficients)
        u1, u2 = e1 / self.e_ref, e2 / self.e_ref
        total = c[0] * np.log(u2 / u1)
        for j in range(1, len(c)):
            total += c[j] * (u2**j - u1**j) / j
        return float(total)


def constant_curve(value, domain=(1000.0, 3800.0), material_id="const"):
    return EfficiencyCurve(material_id, (float(value),), float(domain[1]), tuple(domain))


def fit_efficiency(points, degree, material_id="material", domain=None):
    """Least-squares polynomial fit of (keV, efficiency) samples."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be (energy_kev, efficiency) pairs")
    e, eff = pts[:, 0], pts[:, 1]
    if degree < 0 or degree > MAX_DEGREE:
        raise ValueError(f"degree must be in [0, {MAX_DEGREE}]")
    if len(e) <= degree:
        raise ValueError(f"need more than {degree} points for a degree-{degree} fit")
    if np.any(np.diff(e) <= 0):
        raise ValueError("energies must be strictly increasing")
    if np.any(e <= 0):
        raise ValueError("energies must be positive")
    e_ref = float(e[-1])
    u = e / e_ref
    V = np.vander(u, degree + 1, increasing=True)
    cond = np.linalg.cond(V)
    if cond > COND_LIMIT:
        raise IllConditioned(f"design matrix condition number {cond:.3g} exceeds {COND_LIMIT:g}")
    coef, *_ = np.linalg.lstsq(V, eff, rcond=None)
    resid = eff - V @ coef
    rms = float(np.sqrt(np.mean(resid**2)))
    dom = tuple(domain) if domain is not None else (float(e[0]), float(e[-1]))
    if dom[0] < e[0] - 1e-9 or dom[1] > e[-1] + 1e-9:
        raise DomainMismatch(f"domain {dom} extends beyond fit support [{e[0]}, {e[-1]}]")
    return EfficiencyCurve(
        material_id=material_id,
        unit_coefficients=tuple(float(x) for x in coef),
        e_ref=e_ref,
        domain=dom,
        source_points=tuple(map(tuple, pts.tolist())),
        residual_rms=rms,
    )


def inverse_energy_integral(curve, e1, e2, method="auto"):
    """``int eps(E)/E dE`` over [e1, e2] keV.

    ``auto`` uses the exact antiderivative unless clamping is active inside
    the interval, in which case it falls back to adaptive quadrature.
    """
    from scipy import integrate

    if not 0 < e1 < e2:
        raise ValueError("need 0 < e1 < e2")
    if method == "exact" or (method == "auto" and not curve.needs_clamp(e1, e2)):
        return curve.inverse_energy_integral(e1, e2)
    val, _ = integrate.quad(lambda x: float(curve(x)) / x, e1, e2, epsrel=1e-10, limit=400)
    return float(val)
