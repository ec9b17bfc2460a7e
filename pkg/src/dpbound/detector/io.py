"""Readers and writers for efficiency tables, setup configs and histograms.

Efficiency CSV: header ``energy_kev,efficiency``, one file per material.
Histogram CSV: header ``bin_lo_kev,bin_hi_kev,count``.
Setup config (JSON)::

    {
      "components": [
        {"material_id": "Ge", "atomic_number": 32,
         "mass_kg": 2.0, "molar_mass_g": 72.63,      # or "n_atoms": ...
         "efficiency_file": "ge.csv", "degree": 4}
      ],
      "acquisition": {"live_time_days": 62, "roi_kev": [1000, 3800],
                      "e3_kev": 100000}
    }

Relative ``efficiency_file`` paths resolve against the config's directory.
"""

import csv
import io
import json
from pathlib import Path

from .. import constants as const
from .efficiency import fit_efficiency
from .signal import AcquisitionConfig, Roi, SetupComponent, n_atoms_from_mass
from .simulate import Histogram

EFFICIENCY_HEADER = ["energy_kev", "efficiency"]
HISTOGRAM_HEADER = ["bin_lo_kev", "bin_hi_kev", "count"]
DEFAULT_DEGREE = 4


class InputFileError(ValueError):
    def __init__(self, path, line, msg):
        super().__init__(f"{path}:{line}: {msg}")
        self.path = str(path)
        self.line = line


def _rows(path, header):
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise InputFileError(path, 0, f"not ASCII ({exc})") from None
    reader = csv.reader(io.StringIO(text))
    first = next(reader, None)
    if first is None or [h.strip() for h in first] != header:
        raise InputFileError(path, 1, f"expected header {','.join(header)}")
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise InputFileError(path, reader.line_num, f"expected {len(header)} fields, got {len(row)}")
        yield reader.line_num, row


def read_efficiency_csv(path):
    points = []
    for line, (e, eff) in _rows(path, EFFICIENCY_HEADER):
        try:
            point = (float(e), float(eff))
        except ValueError:
            raise InputFileError(path, line, f"non-numeric value in {e!r},{eff!r}") from None
        if not 0.0 <= point[1] <= 1.0:
            raise InputFileError(path, line, f"efficiency {point[1]} outside [0, 1]")
        if points and point[0] <= points[-1][0]:
            raise InputFileError(path, line, "energies must increase strictly")
        points.append(point)
    if not points:
        raise InputFileError(path, 2, "no data rows")
    return points


def write_efficiency_csv(points, path):
    with open(path, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(EFFICIENCY_HEADER)
        for e, eff in points:
            w.writerow([repr(float(e)), repr(float(eff))])


def write_histogram_csv(hist, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(HISTOGRAM_HEADER)
    for lo, hi, c in hist.rows():
        w.writerow([f"{lo:.6g}", f"{hi:.6g}", c])


def read_histogram_csv(path):
    import numpy as np

    lo, hi, counts = [], [], []
    for line, (a, b, c) in _rows(path, HISTOGRAM_HEADER):
        try:
            lo.append(float(a))
            hi.append(float(b))
            counts.append(int(c))
        except ValueError:
            raise InputFileError(path, line, f"bad row {a!r},{b!r},{c!r}") from None
        if counts[-1] < 0:
            raise InputFileError(path, line, "negative count")
    edges = np.array(lo + hi[-1:]) if lo else np.array([])
    return Histogram(edges=edges, counts=np.array(counts, dtype=np.int64))


def count_in_roi(hist, roi):
    """Total counts in bins lying wholly inside ``roi``."""
    lo, hi = hist.edges[:-1], hist.edges[1:]
    mask = (lo >= roi.e1 - 1e-9) & (hi <= roi.e2 + 1e-9)
    return int(hist.counts[mask].sum())


def _component(entry, base, where):
    try:
        mid = str(entry["material_id"])
        z = int(entry["atomic_number"])
        if "n_atoms" in entry:
            n_atoms = float(entry["n_atoms"])
        else:
            n_atoms = n_atoms_from_mass(float(entry["mass_kg"]), float(entry["molar_mass_g"]))
        eff_path = Path(entry["efficiency_file"])
    except KeyError as exc:
        raise InputFileError(where, 0, f"component missing field {exc}") from None
    if not eff_path.is_absolute():
        eff_path = base / eff_path
    points = read_efficiency_csv(eff_path)
    curve = fit_efficiency(points, int(entry.get("degree", DEFAULT_DEGREE)), material_id=mid)
    return SetupComponent(mid, z, n_atoms, curve)


def load_setup(path):
    """Parse a setup config into ``(components, AcquisitionConfig)``."""
    path = Path(path)
    try:
        cfg = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputFileError(path, exc.lineno, exc.msg) from None
    comps = [_component(c, path.parent, path) for c in cfg.get("components", [])]
    if not comps:
        raise InputFileError(path, 0, "no components")
    acq_cfg = cfg.get("acquisition", {})
    roi = acq_cfg.get("roi_kev", [1000.0, 3800.0])
    acq = AcquisitionConfig(
        live_time=float(acq_cfg.get("live_time_days", 62.0)) * const.DAY,
        roi=Roi(float(roi[0]), float(roi[1])),
        e3=float(acq_cfg.get("e3_kev", 1e5)),
    )
    return comps, acq
