"""Command-line front end.

Subcommands:

* ``bounds``  - print the five trace bounds for a named or file-supplied gate
* ``verify``  - run a randomized dominance campaign, emit a JSON report
* ``figure``  - emit CSV curve data for the qubit/qutrit figures
* ``catalog`` - list the named gate families and their closed-form traces

The default RNG seed is 12345, overridable by the QSL_SEED environment
variable; an explicit ``--seed`` flag always wins.  Numbers are printed
with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import bounds, catalog, harness
from .linalg import complex_matrix, is_unitary, trace_abs
from .spectrum import EnergySpectrum, compute_stats

DEFAULT_SEED = 12345

FILE_UNITARY_TOL = 1e-6

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_UNITARY = 3


def _default_seed() -> int:
    raw = os.environ.get("QSL_SEED", "")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_SEED


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _ints_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _floats_csv(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")


def _qubit_params(text: str) -> catalog.QubitParams:
    vals = _floats_csv(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("expected phi,alpha,beta,theta")
    return catalog.QubitParams(*vals)


_FAMILY_NAMES = {"1": catalog.MubFamily.ONE, "one": catalog.MubFamily.ONE,
                 "u1": catalog.MubFamily.ONE, "2": catalog.MubFamily.TWO,
                 "two": catalog.MubFamily.TWO, "u2": catalog.MubFamily.TWO}


def _qutrit_params(text: str) -> catalog.QutritMubParams:
    parts = text.split(",")
    if len(parts) != 3 or parts[0].strip().lower() not in _FAMILY_NAMES:
        raise argparse.ArgumentTypeError("expected family,x,y with family one of 1/2/one/two")
    try:
        x, y = float(parts[1]), float(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad qutrit angles in {text!r}")
    return catalog.QutritMubParams(_FAMILY_NAMES[parts[0].strip().lower()], x, y)


def load_matrix_file(path: str) -> np.ndarray:
    """Read the JSON matrix format {"n": int, "re": [[...]], "im": [[...]]}."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    n = data["n"]
    re = np.asarray(data["re"], dtype=np.float64)
    im = np.asarray(data["im"], dtype=np.float64)
    if re.shape != (n, n) or im.shape != (n, n):
        raise ValueError(f"re/im must both be {n}x{n} arrays")
    return complex_matrix(re + 1j * im)


def _parse_spectrum(text: str) -> EnergySpectrum:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            levels = [float(line) for line in fh if line.strip()]
    else:
        levels = [float(part) for part in text.split(",")]
    return EnergySpectrum(levels)


def _build_gate(args) -> np.ndarray:
    if args.file is not None:
        return load_matrix_file(args.file)
    if args.fourier is not None:
        return catalog.fourier(args.fourier)
    if args.grover is not None:
        return catalog.grover(args.grover, args.target)
    if args.permutation is not None:
        return catalog.permutation(args.permutation)
    if args.hadamard_power is not None:
        return catalog.hadamard_power(args.hadamard_power)
    if args.qubit is not None:
        return catalog.qubit_unitary(args.qubit)
    return catalog.qutrit_mub(args.qutrit_mub)


def cmd_bounds(args) -> int:
    try:
        u = _build_gate(args)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot build gate: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.file is not None and not is_unitary(u, FILE_UNITARY_TOL):
        print(f"error: matrix in {args.file} is not unitary to {FILE_UNITARY_TOL:g}",
              file=sys.stderr)
        return EXIT_NOT_UNITARY

    n = u.shape[0]
    tr = trace_abs(u)
    ti = bounds.TraceInput(n, tr)
    print(f"n          {n}")
    print(f"|tr U|     {_fmt(tr)}")
    print(f"r=|trU|/n  {_fmt(ti.ratio)}")

    if args.spectrum is not None:
        try:
            spectrum = _parse_spectrum(args.spectrum)
        except (OSError, ValueError) as exc:
            print(f"error: bad spectrum: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        if spectrum.n != n:
            print(f"error: spectrum has {spectrum.n} levels, gate has dimension {n}",
                  file=sys.stderr)
            return EXIT_BAD_INPUT
        bs = bounds.bound_set(ti, compute_stats(spectrum))
        print(f"ml         {_fmt(bs.ml)}  [time]")
        print(f"mt         {_fmt(bs.mt)}  [time]")
        print(f"dual_ml    {_fmt(bs.dual_ml)}  [time]")
        print(f"width_ml   {_fmt(bs.width_ml)}  [time]")
        print(f"width_mt   {_fmt(bs.width_mt)}  [time]")
        print(f"combined   {_fmt(bs.combined)}  [time, max(ml, mt)]")
    else:
        ml = bounds.ml_product(ti.ratio)
        mt = bounds.mt_product(ti.ratio)
        print(f"ml         {_fmt(ml)}  [units 1/E]")
        print(f"mt         {_fmt(mt)}  [units 1/dE]")
        print(f"dual_ml    {_fmt(ml)}  [units 1/(Emax-mean)]")
        print(f"width_ml   {_fmt(2.0 * ml)}  [units 1/width]")
        print(f"width_mt   {_fmt(2.0 * mt)}  [units 1/width]")
        print(f"combined   {_fmt(max(ml, mt))}  [max(ml, mt) at E = dE = 1]")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = harness.run_random_campaign(args.dims, args.samples, args.seed)
    payload = json.dumps(report.as_json_dict(), indent=2, sort_keys=True) + "\n"
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
    else:
        sys.stdout.write(payload)
    if report.failures:
        print(f"FAILED: {report.failures} of {report.samples} samples broke a bound",
              file=sys.stderr)
        return EXIT_FAILED_CHECK
    return EXIT_OK


_FIGURES = {
    "qubit": lambda points, seed: harness.figure_qubit(points),
    "qubit-mub": lambda points, seed: harness.figure_qubit_mub(points),
    "qutrit-u1": lambda points, seed: harness.figure_qutrit(
        catalog.MubFamily.ONE, y_points=points, seed=seed),
    "qutrit-u2": lambda points, seed: harness.figure_qutrit(
        catalog.MubFamily.TWO, y_points=points, seed=seed),
}


def cmd_figure(args) -> int:
    points = _FIGURES[args.name](args.resolution + 1, args.seed)
    try:
        out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
        try:
            writer = csv.writer(out)
            writer.writerow(["abscissa", "exact", "ml", "mt"])
            for p in points:
                writer.writerow(
                    [_fmt(p.abscissa), _fmt(p.exact), _fmt(p.ml),
                     "" if p.mt is None else _fmt(p.mt)]
                )
        finally:
            if args.out:
                out.close()
    except OSError as exc:
        print(f"error: cannot write figure data: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK


def cmd_catalog(_args) -> int:
    rows = [
        ("fourier N", "|tr| = sqrt(2), 1, 0, 1 for N = 0,1,2,3 (mod 4)"),
        ("grover N [target]", "|tr| = N - 4 + 4/N   (N >= 2, target-independent)"),
        ("permutation P", "|tr| = number of fixed points of P"),
        ("hadamard-power q", "dimension 2^q, |tr| = 0"),
        ("qubit phi,alpha,beta,theta", "|tr| = 2 |cos(theta) cos(alpha)|"),
        ("qutrit-mub 1,x,y", "|tr| = |1 + w~ (e^{ix} + e^{iy})| / sqrt(3), w = e^{2 pi i/3}"),
        ("qutrit-mub 2,x,y", "|tr| = |1 + w (e^{ix} + e^{iy})| / sqrt(3)"),
    ]
    width = max(len(name) for name, _ in rows)
    for name, trace in rows:
        print(f"{name:<{width}}  {trace}")
    print("\nMUB trace cap: |tr U| <= sqrt(N) for any basis-to-MUB gate")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gateqsl",
        description="Trace-based quantum speed-limit bounds for unitary gates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="print the bounds for one gate")
    source = p_bounds.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="JSON matrix file {n, re, im}")
    source.add_argument("--fourier", type=int, metavar="N")
    source.add_argument("--grover", type=int, metavar="N")
    source.add_argument("--permutation", type=_ints_csv, metavar="P0,P1,...")
    source.add_argument("--hadamard-power", type=int, metavar="Q")
    source.add_argument("--qubit", type=_qubit_params, metavar="PHI,ALPHA,BETA,THETA")
    source.add_argument("--qutrit-mub", type=_qutrit_params, metavar="FAMILY,X,Y")
    p_bounds.add_argument("--target", type=int, default=0,
                          help="Grover target state (default 0)")
    p_bounds.add_argument("--spectrum", metavar="E0,E1,... | @FILE",
                          help="energy levels; when given, bounds are absolute times")
    p_bounds.set_defaults(func=cmd_bounds)

    p_verify = sub.add_parser("verify", help="run a randomized dominance campaign")
    p_verify.add_argument("--dims", type=_ints_csv, default=list(range(2, 9)),
                          metavar="D0,D1,...")
    p_verify.add_argument("--samples", type=int, default=200,
                          help="samples per dimension (default 200)")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("-o", "--out", help="report path (default: stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_figure = sub.add_parser("figure", help="emit CSV curve data")
    p_figure.add_argument("name", choices=sorted(_FIGURES))
    p_figure.add_argument("-o", "--out", help="CSV path (default: stdout)")
    p_figure.add_argument("-r", "--resolution", type=int, default=200,
                          help="grid intervals; output has resolution+1 rows per block")
    p_figure.add_argument("--seed", type=int, default=None)
    p_figure.set_defaults(func=cmd_figure)

    p_catalog = sub.add_parser("catalog", help="list named gates and traces")
    p_catalog.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = _default_seed()
    if args.command == "verify":
        if args.samples < 1:
            parser.error("--samples must be at least 1")
        if not args.dims or min(args.dims) < 2:
            parser.error("--dims must be integers >= 2")
        if args.seed < 0:
            parser.error("--seed must be nonnegative")
    if args.command == "figure" and args.resolution < 1:
        parser.error("--resolution must be at least 1")
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
