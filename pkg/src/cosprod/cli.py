"""Command-line interface: every pipeline as a subcommand emitting CSV.

All output is plain CSV with `\\n` line endings and `.` decimal separator,
written to stdout or to `--out PATH` (identical bytes either way).  Exit
codes: 0 success, 2 usage error, 1 computation error (atom cap, overflow,
bad quadrature step, ...).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import cantor, measure, products, randseries, spectra
from .errors import CosprodError

DEFAULT_SEED = 42


def _grid(xmin: float, xmax: float, step: float) -> list[float]:
    count = int(math.floor((xmax - xmin) / step + 1e-9))
    return [xmin + j * step for j in range(count + 1)]


def _cmd_identity(args) -> str:
    spec = products.ProductSpec(args.base, args.depth)
    lines = ["x,partial,sinc,abs_err"]
    for x in _grid(args.xmin, args.xmax, args.step):
        p = products.basep_partial(spec, x)
        s = products.sinc(x)
        lines.append(f"{x:.12f},{p:.12f},{s:.12f},{abs(p - s):.12f}")
    return "\n".join(lines) + "\n"


def _cmd_vieta(args) -> str:
    terms, _ = products.vieta_partial(args.terms)
    lines = ["k,term,partial_product,abs_err_vs_2_over_pi"]
    prod = 1.0
    for k, t in enumerate(terms, start=1):
        prod *= t
        lines.append(f"{k},{t:.17g},{prod:.17g},{abs(prod - products.TWO_OVER_PI):.17g}")
    return "\n".join(lines) + "\n"


def _cmd_spectrum(args) -> str:
    m = products.basep_spectrum(products.ProductSpec(args.base, args.depth))
    return measure.dump_csv(m)


def _cmd_cantor_cdf(args) -> str:
    lines = ["x,value"]
    for i in range(args.points):
        x = Fraction(i, args.points - 1)
        lines.append(f"{float(x):.12f},{cantor.cantor_cdf(x, args.depth):.12f}")
    return "\n".join(lines) + "\n"


def _cmd_cantor_product(args) -> str:
    lines = ["x,value"]
    for x in _grid(args.xmin, args.xmax, args.step):
        lines.append(f"{x:.12f},{cantor.cantor_cos_product(x, args.depth):.12f}")
    return "\n".join(lines) + "\n"


def _cmd_phi(args) -> str:
    cfg = spectra.QuadratureConfig(args.upper, args.dx, args.truncate)
    if args.omegas == "paper":
        omegas = list(spectra.DEFAULT_OMEGAS)
    else:
        omegas = [float(tok) for tok in args.omegas.split(",") if tok.strip()]
    table = spectra.density_table(omegas, cfg)
    lines = ["omega,phi"]
    for w, phi in table.rows:
        lines.append(f"{w:.1f},{phi:.6f}")
    return "\n".join(lines) + "\n"


def _cmd_conjectures(args) -> str:
    cfg = spectra.QuadratureConfig(args.upper, args.dx, args.truncate)
    i0, i2 = spectra.conjecture_integrals(cfg)
    lines = ["name,value,target,abs_diff"]
    for name, value, target in (("i0", i0, math.pi / 4), ("i2", i2, math.pi / 8)):
        lines.append(f"{name},{value:.12f},{target:.12f},{abs(value - target):.12f}")
    return "\n".join(lines) + "\n"


def _cmd_simulate(args) -> str:
    series = randseries.CoeffSeries.harmonic(args.terms)
    cfg = randseries.SimConfig(args.trials, args.terms, args.seed)
    samples = randseries.simulate(series, cfg)
    if args.raw:
        return "\n".join(f"{s:.17g}" for s in samples) + "\n"
    hist = randseries.histogram(samples, args.bins, args.lo, args.hi)
    lines = ["bin_left,bin_right,count"]
    for j, count in enumerate(hist.counts):
        lines.append(f"{hist.edges[j]:.17g},{hist.edges[j + 1]:.17g},{count}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosprod",
        description="Cosine-product identities, Cantor measures and random-sign "
        "series, emitted as CSV plot data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", metavar="F", default=None, help="write CSV to F instead of stdout")

    p = sub.add_parser("identity", help="base-p partial product vs sinc on a grid")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--xmin", type=float, default=-10.0)
    p.add_argument("--xmax", type=float, default=10.0)
    p.add_argument("--step", type=float, default=0.05)
    add_out(p)
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("vieta", help="nested-radical terms and running product vs 2/pi")
    p.add_argument("--terms", type=int, default=30)
    add_out(p)
    p.set_defaults(handler=_cmd_vieta)

    p = sub.add_parser("spectrum", help="atom dump of the base-p depth-n spectrum")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    add_out(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("cantor-cdf", help="Cantor function values on a uniform grid")
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--points", type=int, default=201)
    add_out(p)
    p.set_defaults(handler=_cmd_cantor_cdf)

    p = sub.add_parser("cantor-product", help="prod cos(2x/3^k) plot data")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--xmin", type=float, default=0.0)
    p.add_argument("--xmax", type=float, default=100.0)
    p.add_argument("--step", type=float, default=0.1)
    add_out(p)
    p.set_defaults(handler=_cmd_cantor_product)

    p = sub.add_parser("phi", help="density table of the random harmonic sum")
    p.add_argument("--upper", type=float, default=15.0)
    p.add_argument("--dx", type=float, default=0.02)
    p.add_argument("--truncate", type=int, default=1000)
    p.add_argument(
        "--omegas",
        default="paper",
        help="comma-separated list, or 'paper' for the reference 21-point grid",
    )
    add_out(p)
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("conjectures", help="truncated integrals vs pi/4 and pi/8")
    p.add_argument("--upper", type=float, default=15.0)
    p.add_argument("--dx", type=float, default=0.02)
    p.add_argument("--truncate", type=int, default=1000)
    add_out(p)
    p.set_defaults(handler=_cmd_conjectures)

    p = sub.add_parser("simulate", help="Monte Carlo random harmonic sums, histogram or raw")
    p.add_argument("--trials", type=int, default=5000)
    p.add_argument("--terms", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--bins", type=int, default=40)
    p.add_argument("--lo", type=float, default=-4.0)
    p.add_argument("--hi", type=float, default=4.0)
    p.add_argument("--raw", action="store_true", help="dump one sample per line instead")
    add_out(p)
    p.set_defaults(handler=_cmd_simulate)

    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if getattr(args, "step", 1.0) <= 0:
        parser.error("--step must be positive")
    if getattr(args, "xmax", 1.0) <= getattr(args, "xmin", 0.0):
        parser.error("--xmax must exceed --xmin")
    if getattr(args, "points", 2) < 2:
        parser.error("--points must be >= 2")
    if getattr(args, "terms", 1) < 1:
        parser.error("--terms must be >= 1")
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "depth", 0) < 0:
        parser.error("--depth must be >= 0")


def run(argv: list[str]) -> int:
    """Parse argv, run the subcommand, write its CSV.  Returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.handler(args)
    except CosprodError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
