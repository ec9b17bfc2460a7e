"""Parse quantities with unit suffixes at the CLI boundary, returning SI."""

import re

from . import constants as const

_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_PATTERN = re.compile(rf"^\s*({_NUM})\s*([A-Za-z°][A-Za-z°0-9]*)?\s*$")

LENGTH = {
    "": 1.0,
    "m": 1.0,
    "cm": 1e-2,
    "mm": 1e-3,
    "um": 1e-6,
    "nm": 1e-9,
    "pm": 1e-12,
    "fm": const.FERMI,
    "a": const.ANGSTROM,
    "a°": const.ANGSTROM,
    "angstrom": const.ANGSTROM,
}
# energies are returned in keV, the detector-side unit
ENERGY_KEV = {"": 1.0, "ev": 1e-3, "kev": 1.0, "mev": 1e3, "gev": 1e6}
TIME = {"": 1.0, "s": 1.0, "min": 60.0, "h": 3600.0, "d": const.DAY, "day": const.DAY, "days": const.DAY}
MASS = {"": 1.0, "kg": 1.0, "g": 1e-3, "u": const.ATOMIC_MASS_UNIT}
AREA_A2 = {"": 1.0, "a2": 1.0, "angstrom2": 1.0, "m2": 1e20}

KINDS = {"length": LENGTH, "energy": ENERGY_KEV, "time": TIME, "mass": MASS, "area": AREA_A2}


class UnitError(ValueError):
    pass


def parse_quantity(text, kind, relative=None):
    """``'1e-13m' -> 1e-13``; ``'0.5r0'`` with ``relative={'r0': 1e-14}`` -> 5e-15."""
    m = _PATTERN.match(str(text))
    if not m:
        raise UnitError(f"cannot parse quantity {text!r}")
    value, unit = float(m.group(1)), (m.group(2) or "").lower()
    if relative and unit in relative:
        return value * relative[unit]
    table = KINDS[kind]
    if unit not in table:
        raise UnitError(f"unknown {kind} unit {m.group(2)!r} in {text!r}")
    return value * table[unit]


def parse_band(text):
    """``'1000:3800'`` or ``'1MeV:3.8MeV'`` -> (lo, hi) in keV."""
    parts = str(text).split(":")
    if len(parts) != 2:
        raise UnitError(f"band must look like LO:HI, got {text!r}")
    lo, hi = (parse_quantity(p, "energy") for p in parts)
    if not 0 < lo < hi:
        raise UnitError(f"band needs 0 < LO < HI, got {text!r}")
    return lo, hi


def parse_assignments(items):
    out = {}
    for item in items:
        if "=" not in item:
            raise UnitError(f"expected KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out
