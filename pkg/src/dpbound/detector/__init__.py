"""From emission law to expected detected counts."""

from .efficiency import EfficiencyCurve, constant_curve, fit_efficiency, inverse_energy_integral
from .io import (
    InputFileError,
    count_in_roi,
    load_setup,
    read_efficiency_csv,
    read_histogram_csv,
    write_efficiency_csv,
    write_histogram_csv,
)
from .signal import (
    AcquisitionConfig,
    BackgroundSource,
    Roi,
    SetupComponent,
    background_counts,
    component_signal,
    compton_limit_coefficient,
    high_energy_coefficient,
    improvement_factor,
    n_atoms_from_mass,
    signal_coefficient,
)
from .simulate import FlatBackground, Histogram, roi_edges, simulate_spectrum

__all__ = [
    "AcquisitionConfig",
    "BackgroundSource",
    "EfficiencyCurve",
    "FlatBackground",
    "Histogram",
    "InputFileError",
    "Roi",
    "SetupComponent",
    "background_counts",
    "component_signal",
    "compton_limit_coefficient",
    "constant_curve",
    "count_in_roi",
    "fit_efficiency",
    "high_energy_coefficient",
    "improvement_factor",
    "inverse_energy_integral",
    "load_setup",
    "n_atoms_from_mass",
    "read_efficiency_csv",
    "read_histogram_csv",
    "roi_edges",
    "signal_coefficient",
    "simulate_spectrum",
    "write_efficiency_csv",
    "write_histogram_csv",
]
