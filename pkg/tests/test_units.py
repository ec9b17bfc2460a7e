import numpy as np
import pytest

from dpbound import constants as const
from dpbound._rng import DEFAULT_SEED, default_seed, split_counts, stream_generators
from dpbound.units import UnitError, parse_assignments, parse_band, parse_quantity


@pytest.mark.parametrize(
    "text, kind, value",
    [
        ("1e-13", "length", 1e-13),
        ("1e-13m", "length", 1e-13),
        ("10 fm", "length", 1e-14),
        ("0.54angstrom", "length", 0.54e-10),
        ("1A", "length", 1e-10),
        ("3.8MeV", "energy", 3800.0),
        ("1000keV", "energy", 1000.0),
        ("62days", "time", 62 * 86400.0),
        ("2kg", "mass", 2.0),
        ("12g", "mass", 0.012),
        ("0.5", "area", 0.5),
    ],
)
def test_parse_quantity(text, kind, value):
    assert parse_quantity(text, kind) == pytest.approx(value)


def test_relative():
    assert parse_quantity("0.5r0", "length", relative={"r0": 2e-14}) == pytest.approx(1e-14)
    with pytest.raises(UnitError):
        parse_quantity("0.5r0", "length")


@pytest.mark.parametrize("text", ["", "abc", "1e", "1 2", "5 parsec"])
def test_parse_errors(text):
    with pytest.raises(UnitError):
        parse_quantity(text, "length")


def test_band_and_assignments():
    assert parse_band("1MeV:3800") == (1000.0, 3800.0)
    with pytest.raises(UnitError):
        parse_band("1000")
    assert parse_assignments(["a=1", "b = 2"]) == {"a": "1", "b": "2"}
    with pytest.raises(UnitError):
        parse_assignments(["a1"])


def test_constants_consistent():
    assert const.BETA == pytest.approx(
        2 / 3 * const.G * const.E_CHARGE**2 / (np.pi**1.5 * const.EPSILON_0 * const.C_LIGHT**3), rel=1e-14
    )


def test_seed_env(monkeypatch):
    monkeypatch.delenv("DPBOUND_SEED", raising=False)
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv("DPBOUND_SEED", "42")
    assert default_seed() == 42


def test_streams_independent_and_stable():
    a = [g.random() for g in stream_generators(1, 3)]
    b = [g.random() for g in stream_generators(1, 3)]
    c = [g.random() for g in stream_generators(1, 2, offset=1)]
    assert a == b and len(set(a)) == 3 and c == a[1:]
    assert split_counts(10, 3) == [4, 3, 3]
