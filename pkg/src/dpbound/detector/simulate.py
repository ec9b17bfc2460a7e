"""Toy spectrum generator for exercising the inference chain."""

from dataclasses import dataclass

import numpy as np

from .._rng import default_seed, stream_generators
from .signal import component_signal

MAX_EXPECTED = 5e7


@dataclass(frozen=True)
class FlatBackground:
    """Background flat in energy with ``expected_counts`` over the whole ROI."""

    expected_counts: float

    def __post_init__(self):
        if self.expected_counts < 0:
            raise ValueError("expected_counts must be non-negative")


@dataclass(frozen=True)
class Histogram:
    edges: np.ndarray  # keV
    counts: np.ndarray

    @property
    def total(self):
        return int(self.counts.sum())

    def rows(self):
        for lo, hi, c in zip(self.edges[:-1], self.edges[1:], self.counts):
            yield float(lo), float(hi), int(c)


def roi_edges(roi, bin_width=1.0):
    n = int(round((roi.e2 - roi.e1) / bin_width))
    return roi.e1 + bin_width * np.arange(n + 1)


def _sample_component(rng, curve, e1, e2, n):
    """``n`` energies with density proportional to eps(E)/E on [e1, e2]."""
    _, peak = curve.peak(e1, e2)
    # grid maximum can undershoot the true supremum slightly
    eps_max = min(1.0, 1.01 * peak)
    out = np.empty(n)
    filled = 0
    ratio = e2 / e1
    while filled < n:
        want = n - filled
        batch = 2 * want + 64
        e = e1 * ratio ** rng.random(batch)  # inverse CDF of 1/E
        keep = e[rng.random(batch) * eps_max < curve(e)]
        take = keep[:want]
        out[filled : filled + take.size] = take
        filled += take.size
    return out


def simulate_spectrum(components, acq, r0, background=None, seed=None, rng=None, bin_width=1.0):
    """Draw one synthetic ROI spectrum for true width ``r0`` (m).

    The detected signal count is Poisson(a / r0^3), split over components in
    proportion to their expected contributions; each photon energy follows
    ``eps_i(E) / E`` (1/E inverse-CDF proposal, efficiency acceptance).
    """
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    if rng is None:
        rng = stream_generators(default_seed() if seed is None else seed, 1)[0]
    e1, e2 = acq.roi.e1, acq.roi.e2
    edges = roi_edges(acq.roi, bin_width)
    per_comp = np.array([component_signal(c, acq) for c in components], dtype=float) / r0**3
    mean = float(per_comp.sum())
    if mean > MAX_EXPECTED:
        raise ValueError(f"expected signal {mean:.3g} counts is too large to simulate event by event")
    energies = []
    if mean > 0:
        n_sig = int(rng.poisson(mean))
        split = rng.multinomial(n_sig, per_comp / mean)
        for comp, k in zip(components, split):
            if k:
                energies.append(_sample_component(rng, comp.efficiency, e1, e2, int(k)))
    if background is not None and background.expected_counts > 0:
        n_bkg = int(rng.poisson(background.expected_counts))
        energies.append(rng.uniform(e1, e2, n_bkg))
    all_e = np.concatenate(energies) if energies else np.empty(0)
    counts, _ = np.histogram(all_e, bins=edges)
    return Histogram(edges=edges, counts=counts.astype(np.int64))
