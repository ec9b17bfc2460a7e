"""Command-line front end.

    dpbound selfenergy --crystal N=1e14 m=5e-26 r0=1e-14 d=1e-13
    dpbound selfenergy --sphere m=1 r0=1 d=0.5r0
    dpbound rate --N 32 --Na 1e24 --r0 1e-10 --band 1000:3800
    dpbound signal [--config setup.json]
    dpbound bound [--a 1.756e-29 --zc 576 --zb 506] [--published-rounding]
    dpbound improve --a 1.756e-29 --fb 5.712e-29
    dpbound simulate --r0 8e-11 --background-counts 506 --seed 7 --out hist.csv
    dpbound report

Exit codes: 0 success, 1 internal numeric failure, 2 ill-posed input.
"""

import argparse
import json
import math
import sys
import warnings
from importlib.resources import files
from pathlib import Path

import numpy as np

from . import __version__
from . import constants as const
from ._rng import default_seed
from .detector import (
    FlatBackground,
    Roi,
    compton_limit_coefficient,
    component_signal,
    count_in_roi,
    high_energy_coefficient,
    improvement_factor,
    load_setup,
    read_histogram_csv,
    signal_coefficient,
    simulate_spectrum,
    write_histogram_csv,
)
from .emission import EmitterSpec, rate_per_energy
from .errors import DPBoundError, IllPosedInput, NumericFailure, OutOfValidityBand
from .inference import (
    PUBLISHED_COMPTON_COEFFICIENT,
    PUBLISHED_SIGNAL_COEFFICIENT,
    PUBLISHED_Z_B,
    PUBLISHED_Z_C,
    CountData,
    PriorSpec,
    r0_lower_bound,
)
from .selfenergy import CrystalSpec, MassSphere, QuadratureConfig, delta_e_crystal, delta_e_sphere
from .units import UnitError, parse_assignments, parse_band, parse_quantity

EXIT_OK, EXIT_NUMERIC, EXIT_INPUT = 0, 1, 2
SIG_DIGITS = 12
DEFAULT_LATTICE_CONSTANT = 1e-10


def bundled_setup():
    return files("dpbound") / "data" / "setup_synthetic.json"


def _clean(obj):
    """Round floats to 12 significant digits; infinities become strings."""
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.{SIG_DIGITS}g}")
    return obj


def dump_json(obj, out=None):
    text = json.dumps(_clean(obj), indent=2) + "\n"
    (out or sys.stdout).write(text)


def _quad_config(args):
    return QuadratureConfig(samples=args.samples, seed=args.seed)


def cmd_selfenergy(args):
    if bool(args.sphere) == bool(args.crystal):
        raise IllPosedInput("give exactly one of --sphere or --crystal")
    kv = parse_assignments(args.sphere or args.crystal)
    try:
        m = parse_quantity(kv.pop("m"), "mass")
        r0 = parse_quantity(kv.pop("r0"), "length")
        d = parse_quantity(kv.pop("d", "0"), "length", relative={"r0": r0})
        if args.crystal:
            n = float(kv.pop("N"))
            a = parse_quantity(kv.pop("a", str(DEFAULT_LATTICE_CONSTANT)), "length")
    except KeyError as exc:
        raise IllPosedInput(f"missing parameter {exc}") from None
    if kv:
        raise IllPosedInput(f"unknown parameters: {', '.join(sorted(kv))}")
    if d < 0:
        raise IllPosedInput("d must be non-negative")
    if args.crystal:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            res = delta_e_crystal(CrystalSpec(n, m, a, r0), d)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    else:
        res = delta_e_sphere(MassSphere(m, r0), d, _quad_config(args))
    dump_json(
        {
            "delta_e_joule": res.delta_e,
            "tau_s": res.tau,
            "regime": res.regime.value,
            "offdiag_bound_joule": res.offdiag_bound,
            "error_joule": res.error,
            "regime_violation": res.regime_violation,
        }
    )


def cmd_rate(args):
    lo, hi = parse_band(args.band)
    r0 = parse_quantity(args.r0, "length")
    r0e = parse_quantity(args.r0e, "length") if args.r0e else None
    emitter = EmitterSpec(args.N, args.Na, r0, r0e)
    energies = np.linspace(lo, hi, args.points)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        out.write("energy_kev\trate_per_kev_per_s\n")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", OutOfValidityBand)
            for e in energies:
                val = rate_per_energy(emitter, e * const.KEV).value * const.KEV
                out.write(f"{e:.{SIG_DIGITS}g}\t{val:.{SIG_DIGITS}g}\n")
        if caught:
            print(f"warning: {len(caught)} energies outside the emission validity band", file=sys.stderr)
    finally:
        if args.out:
            out.close()


def cmd_signal(args):
    if args.preset == "published":
        dump_json({"a_m3": PUBLISHED_SIGNAL_COEFFICIENT, "fb_limit_m3": PUBLISHED_COMPTON_COEFFICIENT, "source": "published"})
        return
    comps, acq = load_setup(args.config or bundled_setup())
    a = signal_coefficient(comps, acq)
    fb = compton_limit_coefficient(comps, acq)
    dump_json(
        {
            "a_m3": a,
            "b_m3": high_energy_coefficient(comps, acq),
            "fb_limit_m3": fb,
            "improvement_limit": improvement_factor(a, fb),
            "live_time_s": acq.live_time,
            "roi_kev": [acq.roi.e1, acq.roi.e2],
            "components": [
                {
                    "material_id": c.material_id,
                    "atomic_number": c.atomic_number,
                    "n_atoms": c.n_atoms,
                    "a_m3": component_signal(c, acq),
                    "fit_degree": c.efficiency.degree,
                    "fit_residual_rms": c.efficiency.residual_rms,
                }
                for c in comps
            ],
        }
    )


def cmd_bound(args):
    a = args.a
    if args.improvement_preset:
        a = a + (args.fb if args.fb is not None else PUBLISHED_COMPTON_COEFFICIENT)
    elif args.fb is not None:
        a = a + args.fb
    zc = args.zc
    if args.counts_from:
        hist = read_histogram_csv(args.counts_from)
        roi = Roi(*parse_band(args.roi)) if args.roi else Roi(float(hist.edges[0]), float(hist.edges[-1]))
        zc = count_in_roi(hist, roi)
    prior = PriorSpec(r0_min=parse_quantity(args.r0min, "length"), credibility=args.credibility)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = r0_lower_bound(a, CountData(z_c=zc, z_b=args.zb), prior, rounded=args.published_rounding)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    dump_json(
        {
            "a_m3": a,
            "z_c": zc,
            "z_b": args.zb,
            "lambda_b": res.lambda_b,
            "lambda_max": res.lambda_max,
            "lambda_bar": res.lambda_bar,
            "lambda_bar_rounded": res.lambda_bar_rounded,
            "rounding": "integer" if args.published_rounding else "continuous",
            "credibility": res.credibility,
            "r0_bound_m": res.r0_bound,
        }
    )


def cmd_improve(args):
    if args.config:
        comps, acq = load_setup(args.config)
        a = signal_coefficient(comps, acq)
        fb = compton_limit_coefficient(comps, acq) if args.fb is None else args.fb
    else:
        a, fb = args.a, args.fb if args.fb is not None else PUBLISHED_COMPTON_COEFFICIENT
    dump_json({"a_m3": a, "fb_m3": fb, "improvement": improvement_factor(a, fb)})


def cmd_simulate(args):
    comps, acq = load_setup(args.config or bundled_setup())
    r0 = parse_quantity(args.r0, "length")
    bkg = FlatBackground(args.background_counts) if args.background_counts else None
    hist = simulate_spectrum(comps, acq, r0, background=bkg, seed=args.seed, bin_width=args.bin_width)
    if args.out:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            write_histogram_csv(hist, fh)
        a = signal_coefficient(comps, acq)
        dump_json({"path": str(Path(args.out)), "total_counts": hist.total, "expected_signal": a / r0**3,
                   "expected_background": args.background_counts or 0.0, "seed": args.seed})
    else:
        write_histogram_csv(hist, sys.stdout)


def cmd_report(args):
    from .report import reproduction_report

    rep = reproduction_report(dipole_samples=args.dipole_samples, coverage_replicas=args.replicas, seed=args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            dump_json(rep, fh)
    else:
        dump_json(rep)
    return EXIT_OK if rep["all_passed"] else EXIT_NUMERIC


def build_parser():
    p = argparse.ArgumentParser(prog="dpbound", description="Gravity-related collapse: self-energy, emission, R0 bound.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("selfenergy", help="self-energy difference and collapse time")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--sphere", nargs="+", metavar="KEY=VAL", help="m=<kg> r0=<m> d=<m|Xr0>")
    g.add_argument("--crystal", nargs="+", metavar="KEY=VAL", help="N=<count> m=<kg> r0=<m> d=<m> [a=<m>]")
    s.add_argument("--samples", type=int, default=1_000_000)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_selfenergy)

    r = sub.add_parser("rate", help="TSV table of dGamma/dE over an energy band")
    r.add_argument("--N", type=int, required=True, help="protons per nucleus")
    r.add_argument("--Na", type=float, required=True, help="number of atoms")
    r.add_argument("--r0", required=True)
    r.add_argument("--r0e", default=None, help="electron smearing radius (enables electron term)")
    r.add_argument("--band", default="1000:3800", help="LO:HI, keV unless suffixed")
    r.add_argument("--points", type=int, default=57)
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_rate)

    sg = sub.add_parser("signal", help="signal coefficient a for a setup")
    sg.add_argument("--config", default=None)
    sg.add_argument("--preset", choices=["published"], default=None)
    sg.set_defaults(func=cmd_signal)

    b = sub.add_parser("bound", help="credible lower bound on R0")
    b.add_argument("--a", type=float, default=PUBLISHED_SIGNAL_COEFFICIENT)
    b.add_argument("--fb", type=float, default=None, help="extra high-band signal coefficient added to a")
    b.add_argument("--zc", type=int, default=PUBLISHED_Z_C)
    b.add_argument("--zb", type=float, default=PUBLISHED_Z_B)
    b.add_argument("--credibility", type=float, default=0.95)
    b.add_argument("--r0min", default="1e-14")
    b.add_argument("--improvement-preset", action="store_true", help="add the all-at-peak-efficiency fb")
    b.add_argument("--published-rounding", action="store_true", help="round the quantile to an integer first")
    b.add_argument("--counts-from", default=None, help="histogram CSV; z_c is its ROI total")
    b.add_argument("--roi", default=None, help="LO:HI for --counts-from (default: full histogram)")
    b.set_defaults(func=cmd_bound)

    im = sub.add_parser("improve", help="improvement factor from Compton-degraded photons")
    im.add_argument("--a", type=float, default=PUBLISHED_SIGNAL_COEFFICIENT)
    im.add_argument("--fb", type=float, default=None)
    im.add_argument("--config", default=None)
    im.set_defaults(func=cmd_improve)

    sm = sub.add_parser("simulate", help="synthetic ROI spectrum as histogram CSV")
    sm.add_argument("--config", default=None)
    sm.add_argument("--r0", required=True)
    sm.add_argument("--background-counts", type=float, default=0.0)
    sm.add_argument("--seed", type=int, default=None)
    sm.add_argument("--bin-width", type=float, default=1.0)
    sm.add_argument("--out", default=None)
    sm.set_defaults(func=cmd_simulate)

    rp = sub.add_parser("report", help="full reproduction run as one JSON document")
    rp.add_argument("--dipole-samples", type=int, default=10_000_000)
    rp.add_argument("--replicas", type=int, default=500)
    rp.add_argument("--seed", type=int, default=None)
    rp.add_argument("--out", default=None)
    rp.set_defaults(func=cmd_report)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", "absent") is None:
        args.seed = default_seed()
    try:
        code = args.func(args)
    except (UnitError, IllPosedInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericFailure as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ValueError, DPBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
