"""Command-line front end.

    wpzeros zeros --g2 7 --g3 3 --verify
    wpzeros modulus --g2 4 --g3 0 --format csv
    wpzeros eval --g2 7 --g3 3 --z 0.3,0.2
    wpzeros invariants --alpha 0.01 --beta 1 --k2 0.2
    wpzeros orbit --alpha 0.01 --beta 1 --k2 0.2 --theta-max 6.283 --n 100

Exit codes: 0 success, 1 usage or parse error, 2 domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .errors import EllipticError
from .orbits import OrbitParams, ode_residual, orbit_constants, sample_trajectory
from .weierstrass import (
    Invariants,
    decompose,
    invariants_from_orbit,
    lattice,
    recover_modulus,
    wp,
    wp_oracle,
    wp_prime,
    wp_zeros,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_complex(text: str) -> complex:
    """Parse a ``re,im`` literal (a bare real is accepted too)."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected a complex literal 're,im', got {text!r}")


def _finite_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return x


def _jsonable(value):
    if isinstance(value, complex):
        return {"re": _jsonable(value.real), "im": _jsonable(value.imag)}
    if isinstance(value, float):
        return value + 0.0 if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _flatten(prefix: str, value, rows: list) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, rows)
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, "" if value is None else value))


def render(record: dict, fmt: str) -> str:
    data = _jsonable(record)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    rows: list = []
    _flatten("", data, rows)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["key", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def _csv_table(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_zeros(args) -> dict:
    inv = Invariants(args.g2, args.g3)
    zp = wp_zeros(inv)
    rec = recover_modulus(inv)
    dec = decompose(inv, rec)
    lat = lattice(dec)
    k2 = rec.selected_k2
    record = {
        "g2": args.g2,
        "g3": args.g3,
        "a": rec.a.real,
        "xi": k2 + 1 / k2 - 1,
        "k2": k2,
        "best_effort": rec.best_effort,
        "C": dec.C,
        "theta0": zp.theta0,
        "negation": zp.negation,
        "omega1": lat.omega1,
        "omega3": lat.omega3,
    }
    if args.verify:
        record["wp_residual"] = abs(wp_oracle(zp.theta0, inv))
    return record


def cmd_modulus(args) -> dict:
    inv = Invariants(args.g2, args.g3)
    rec = recover_modulus(inv)
    dec = decompose(inv, rec)
    e_roots = [dec.e1, dec.e2, dec.e3]
    return {
        "g2": args.g2,
        "g3": args.g3,
        "discriminant": inv.discriminant.real,
        "absolute_invariant": inv.absolute_invariant.real,
        "classification": inv.classification,
        "a": rec.a.real,
        "xi": list(rec.xi_candidates),
        "k2_candidates": rec.k2_candidates,
        "k2": rec.selected_k2,
        "best_effort": rec.best_effort,
        "e_roots": e_roots,
        "real_e_roots": sum(1 for e in e_roots if abs(e.imag) <= 1e-10 * max(1.0, abs(e))),
    }


def cmd_eval(args) -> dict:
    inv = Invariants(args.g2, args.g3)
    dec = decompose(inv)
    p = wp(args.z, dec)
    dp = wp_prime(args.z, dec)
    residual = abs(dp * dp - (4 * p ** 3 - inv.g2 * p - inv.g3))
    return {
        "g2": args.g2,
        "g3": args.g3,
        "z": args.z,
        "wp": p,
        "wp_prime": dp,
        "wp_oracle": wp_oracle(args.z, inv),
        "ode_residual": residual,
    }


def cmd_invariants(args) -> dict:
    if args.g2 is not None and args.g3 is not None:
        inv = Invariants(args.g2, args.g3)
        return {
            "g2": args.g2,
            "g3": args.g3,
            "discriminant": inv.discriminant.real,
            "absolute_invariant": inv.absolute_invariant.real,
            "a": inv.a.real,
            "classification": inv.classification,
        }
    if None in (args.alpha, args.beta, args.k2):
        raise _UsageError("invariants needs either --g2/--g3 or --alpha/--beta/--k2")
    inv = invariants_from_orbit(args.alpha, args.beta, args.k2)
    return {
        "alpha": args.alpha,
        "beta": args.beta,
        "k2": args.k2,
        "g2": inv.g2.real,
        "g3": inv.g3.real,
        "discriminant": inv.discriminant.real,
    }


def cmd_orbit(args):
    p = OrbitParams(args.alpha, args.beta, args.k2)
    oc = orbit_constants(p)
    samples = sample_trajectory(oc, p.m, args.theta_max, args.n)
    record = {
        "alpha": args.alpha,
        "beta": args.beta,
        "k2": args.k2,
        "A": oc.A,
        "B": oc.B,
        "C": oc.C,
    }
    if args.verify:
        residuals = [ode_residual(oc, p, s.theta) for s in samples if s.bound]
        worst = max(residuals, default=0.0)
        record["max_ode_residual"] = worst
        record["verified"] = worst < 1e-6
    if args.format == "csv":
        rows = [
            [s.theta, s.r if s.bound else "", s.x if s.bound else "", s.y if s.bound else "", str(s.bound).lower()]
            for s in samples
        ]
        diag = ", ".join(f"{k}={v!r}" for k, v in record.items())
        return _csv_table(["theta", "r", "x", "y", "bound"], rows), diag
    record["samples"] = [
        {"theta": s.theta, "r": s.r, "x": s.x, "y": s.y, "bound": s.bound} for s in samples
    ]
    return record


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpzeros", description="Zeros of the Weierstrass p function and related quantities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, g=True):
        if g:
            sp.add_argument("--g2", type=_finite_float, required=True)
            sp.add_argument("--g3", type=_finite_float, required=True)
        sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("zeros", help="closed-form zeros of p")
    common(sp)
    sp.add_argument("--verify", action="store_true", help="report |p(theta0)| from the Laurent oracle")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("modulus", help="xi roots and k^2 candidates")
    common(sp)
    sp.set_defaults(func=cmd_modulus)

    sp = sub.add_parser("eval", help="evaluate p and p' at a complex point")
    common(sp)
    sp.add_argument("--z", type=parse_complex, required=True, help="complex literal re,im")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("invariants", help="discriminant and invariants, from g2/g3 or from an orbit")
    sp.add_argument("--g2", type=_finite_float)
    sp.add_argument("--g3", type=_finite_float)
    sp.add_argument("--alpha", type=_finite_float)
    sp.add_argument("--beta", type=_finite_float)
    sp.add_argument("--k2", type=_finite_float)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("orbit", help="sample the closed-form orbit")
    common(sp, g=False)
    sp.add_argument("--alpha", type=_finite_float, required=True)
    sp.add_argument("--beta", type=_finite_float, required=True)
    sp.add_argument("--k2", type=_finite_float, required=True)
    sp.add_argument("--theta-max", type=_finite_float, default=2 * math.pi)
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--verify", action="store_true", help="check the orbit ODE at every bound sample")
    sp.set_defaults(func=cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except _UsageError as exc:
        parser.exit(1, f"wpzeros: error: {exc}\n")
    except EllipticError as exc:
        print(f"wpzeros: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, tuple):
        text, diag = result
        print(diag, file=sys.stderr)
    else:
        text = render(result, args.format)
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
