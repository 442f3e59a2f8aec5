"""Command-line front end.

Exit codes: 0 success (or a positive verdict), 1 negative verdict,
2 invalid parameters, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import criteria as crit
from . import oracle as orc
from .errors import ConvergenceError, DomainError, MonotonicityError, TruncationError
from .gamma import WrightParams
from .plot import PlotSpec, render_svg
from .series import (
    Wright2Params,
    bessel_map,
    bessel_normalized,
    eval_normalized,
    eval_normalized_deriv,
    eval_wright2,
    eval_wright4,
    wright_map,
)
from .sweeps import SweepSpec, run_sweep
from .zeros import PolyCoeffs, find_roots, verify_exterior

__all__ = ["main", "build_parser", "parse_complex"]

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3


class _InvalidArgs(Exception):
    pass


def parse_complex(text: str) -> complex:
    """``a+bi``, ``a-bi``, ``bi`` or a plain real."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    if s.endswith("i"):
        head = s[:-1]
        if head in ("", "+", "-"):
            head += "1"
        s = head + "j"
    try:
        return complex(s)
    except ValueError:
        raise ValueError(f"cannot parse complex literal {text!r} (use a+bi)") from None


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


# --- argument groups -------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = p.add_argument_group("global options")
    g.add_argument("--tol", type=float, default=d(1e-12), help="series truncation tolerance")
    g.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    g.add_argument("--out", default=d(None), metavar="PATH", help="write output to PATH")
    g.add_argument("--grid-radii", type=int, default=d(64), metavar="N")
    g.add_argument("--grid-angles", type=int, default=d(256), metavar="N")
    g.add_argument("--r-max", type=float, default=d(None), metavar="X",
                   help="outermost sampled radius (default: region radius - 1e-3)")


def _add_family(p: argparse.ArgumentParser, choices: Sequence[str], default: str = "four"):
    p.add_argument("--family", choices=choices, default=default)
    for name in ("mu", "a", "nu", "b", "beta", "alpha"):
        p.add_argument(f"--{name}", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wrightfn",
        description="Four-parameter Wright functions: evaluation, geometric criteria, "
                    "grid verification, partial-sum zeros, sweeps and SVG plots.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    fams = ("four", "raw", "confluent", "bessel", "twoparam", "wright2")
    p = sub.add_parser("eval", help="evaluate a series at one point")
    _add_globals(p, suppress=True)
    _add_family(p, fams)
    p.add_argument("--z", type=_complex_arg, required=True)
    p.add_argument("--deriv", type=int, choices=(0, 1, 2), default=0)

    p = sub.add_parser("criteria", help="run the sufficient-condition criteria")
    _add_globals(p, suppress=True)
    _add_family(p, ("four", "confluent", "bessel", "twoparam"))
    p.add_argument("--eta", type=float, help="also test starlikeness of this order")
    p.add_argument("--only", nargs="+", choices=sorted(crit.CRITERIA), metavar="ID")

    p = sub.add_parser("verify", help="grid-check a geometric property")
    _add_globals(p, suppress=True)
    _add_family(p, ("four", "confluent", "bessel", "twoparam", "identity", "koebe",
                    "halfplane"))
    p.add_argument("--property", required=True,
                   choices=("starlike", "convex", "ucv", "sp", "close-to-convex",
                            "half-plane", "deviation"))
    p.add_argument("--radius", type=float, default=1.0, help="disk radius (1 or 0.5)")
    p.add_argument("--eta", type=float, default=0.0)
    p.add_argument("--witness", metavar="MU,A,NU,B",
                   help="close-to-convex witness (default: nu replaced by 1)")
    p.add_argument("--N", type=int, help="partial sum order for half-plane")
    p.add_argument("--mode", choices=("f_over_z_minus_1", "fprime_minus_1"),
                   default="f_over_z_minus_1")
    p.add_argument("--threshold", type=float, default=1.0)

    p = sub.add_parser("zeros", help="zeros of a partial sum or an explicit polynomial")
    _add_globals(p, suppress=True)
    _add_family(p, ("four", "confluent", "twoparam"))
    p.add_argument("--which", choices=("raw", "normalized", "qfactor"), default="raw")
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--coeffs", help="comma-separated ascending coefficients instead")

    p = sub.add_parser("sweep", help="sweep one parameter and locate criterion boundaries")
    _add_globals(p, suppress=True)
    _add_family(p, ("four", "confluent", "bessel", "twoparam"))
    p.add_argument("--vary", required=True)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--criteria", nargs="+", choices=sorted(crit.CRITERIA), metavar="ID")
    p.add_argument("--oracle", action="store_true", help="add grid-oracle margins per row")

    p = sub.add_parser("plot", help="SVG image of circles and rays under the map")
    _add_globals(p, suppress=True)
    _add_family(p, ("four", "confluent", "bessel", "twoparam", "identity", "koebe",
                    "halfplane"))
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--circles", type=int, default=8)
    p.add_argument("--rays", type=int, default=16)
    p.add_argument("--samples", type=int, default=512)
    return parser


# --- helpers ---------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise _InvalidArgs(f"--family {args.family} needs " + ", ".join(f"--{n}" for n in missing))


def _params(args) -> WrightParams:
    fam = args.family
    if fam in ("four", "raw"):
        _need(args, "mu", "a", "nu", "b")
        return WrightParams(args.mu, args.a, args.nu, args.b)
    if fam == "confluent":
        _need(args, "b")
        return crit.family_params("confluent", b=args.b)
    if fam == "twoparam":
        _need(args, "b", "nu")
        return crit.family_params("twoparam", b=args.b, nu=args.nu)
    if fam == "bessel":
        _need(args, "beta")
        return crit.family_params("bessel", beta=args.beta)
    raise _InvalidArgs(f"--family {fam} has no Wright parameters")


def _family_kw(args) -> dict:
    if args.family == "bessel":
        return {"beta": args.beta}
    if args.family == "confluent":
        return {"b": args.b}
    if args.family == "twoparam":
        return {"b": args.b, "nu": args.nu}
    return {"mu": args.mu, "a": args.a, "nu": args.nu, "b": args.b}


def _function(args):
    closed = {"identity": orc.IDENTITY, "koebe": orc.KOEBE, "halfplane": orc.HALF_PLANE_MAP}
    if args.family in closed:
        return closed[args.family]
    if args.family == "bessel":
        _need(args, "beta")
        return bessel_map(args.beta)
    return wright_map(_params(args))


def _grid(args, radius: float) -> orc.GridSpec:
    r_max = args.r_max if args.r_max is not None else radius - 1e-3
    if r_max >= radius:
        raise _InvalidArgs(f"--r-max {r_max} must be below the region radius {radius}")
    return orc.GridSpec(r_max, args.grid_radii, args.grid_angles)


def _fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.16g}{x.imag:+.16g}i"
    if isinstance(x, float):
        return f"{x:.16g}"
    return str(x)


# --- commands --------------------------------------------------------------


def cmd_eval(args):
    z = args.z
    fam = args.family
    if fam == "wright2":
        _need(args, "alpha", "beta")
        if args.deriv:
            raise _InvalidArgs("--deriv is only available for normalized families")
        val = eval_wright2(Wright2Params(args.alpha, args.beta), z, args.tol)
    elif fam == "raw":
        if args.deriv:
            raise _InvalidArgs("--deriv is only available for normalized families")
        val = eval_wright4(_params(args), z, args.tol)
    elif fam == "bessel":
        _need(args, "beta")
        val = bessel_normalized(args.beta, z, args.tol, args.deriv)
    else:
        p = _params(args)
        if args.deriv:
            val = eval_normalized_deriv(p, z, args.deriv, args.tol)
        else:
            val = eval_normalized(p, z, args.tol)
    if args.json:
        return json.dumps(val.as_dict(), indent=2), EXIT_OK
    lines = [f"value       {_fmt(complex(val.value))}",
             f"terms_used  {val.terms_used}",
             f"tail_bound  {val.tail_bound:.3e}"]
    return "\n".join(lines), EXIT_OK


def _report_text(r: crit.CriterionReport) -> str:
    concl = ", ".join(c.label for c in r.conclusions) or "-"
    out = [f"{r.theorem_id:<24} {r.verdict.value:<15} [{concl}]"]
    for h in r.hypotheses:
        mark = "ok  " if h.holds else "FAIL"
        out.append(f"    {mark} {h.name:<28} lhs={h.lhs:<12.6g} rhs={h.rhs:.6g}")
    return "\n".join(out)


def cmd_criteria(args):
    p = _params(args)
    reports = crit.run_criteria(p, eta=args.eta)
    if args.only:
        keep = set(args.only)
        reports = [r for r in reports if r.theorem_id in keep]
    code = EXIT_OK if any(r.established for r in reports) else EXIT_NEGATIVE
    if args.json:
        return json.dumps({"params": p.as_dict(), "note": crit.SEMANTICS_NOTE,
                           "reports": [r.as_dict() for r in reports]}, indent=2), code
    head = f"params {p.as_dict()}\n{crit.SEMANTICS_NOTE}\n"
    return head + "\n".join(_report_text(r) for r in reports), code


def _parse_witness(text: str) -> WrightParams:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise _InvalidArgs(f"--witness expects MU,A,NU,B, got {text!r}") from None
    if len(vals) != 4:
        raise _InvalidArgs(f"--witness expects four numbers, got {text!r}")
    return WrightParams(*vals)


def cmd_verify(args):
    prop = args.property
    radius = args.radius
    if not 0 < radius <= 1:
        raise _InvalidArgs(f"--radius must lie in (0, 1], got {radius}")
    grid = _grid(args, radius)
    if prop == "half-plane":
        chk = orc.check_half_plane(_params(args), grid, args.N)
    else:
        f = _function(args)
        if prop == "starlike":
            chk = orc.check_starlike(f, radius, grid, args.eta)
        elif prop == "convex":
            chk = orc.check_convex(f, radius, grid)
        elif prop == "ucv":
            chk = orc.check_ucv(f, grid)
        elif prop == "sp":
            chk = orc.check_sp(f, grid)
        elif prop == "deviation":
            chk = orc.check_bound_deviation(f, args.mode, args.threshold, grid)
        else:
            if args.witness:
                w = _parse_witness(args.witness)
            else:
                p = _params(args)
                w = WrightParams(p.mu, p.a, 1.0, p.b)
            chk = orc.check_close_to_convex(f, wright_map(w), grid, witness=w)
    code = EXIT_OK if chk.ok else EXIT_NEGATIVE
    if args.json:
        return json.dumps(chk.as_dict(), indent=2), code
    d = chk.as_dict()
    prop_label = d["property"]["label"] if isinstance(d["property"], dict) else d["property"]
    lines = [
        f"property        {prop_label}",
        f"grid            r_max={grid.r_max:g} radii={grid.n_radii} angles={grid.n_angles} "
        f"({grid.radial_spacing.value})",
        f"extremal_value  {chk.extremal_value:.12g}",
        f"extremal_point  {_fmt(chk.extremal_point)}",
        f"margin          {chk.margin:.12g}",
        f"error_bound     {chk.error_bound:.3e}",
        f"verdict         {chk.verdict.value}",
        f"note            {chk.note}",
    ]
    return "\n".join(lines), code


def cmd_zeros(args):
    if args.coeffs:
        try:
            c = [float(v) for v in args.coeffs.split(",")]
        except ValueError:
            raise _InvalidArgs(f"--coeffs expects comma-separated numbers, got {args.coeffs!r}")
        rep = find_roots(PolyCoeffs(tuple(c)))
        payload = rep.as_dict()
        code = EXIT_OK
        verdict_lines = []
    else:
        ext = verify_exterior(_params(args), args.N, args.which)
        rep = ext.report
        payload = ext.as_dict()
        code = EXIT_OK if ext.verdict and ext.theorem_applies else EXIT_NEGATIVE
        failed = [n for n, ok in ext.preconditions if not ok]
        verdict_lines = [
            f"exterior        {ext.verdict}",
            "hypotheses      " + ("all met" if not failed
                                  else "not met: " + ", ".join(failed)),
        ]
    if args.json:
        return json.dumps(payload, indent=2), code
    lines = [f"degree          {len(rep.roots)}",
             f"min_modulus     {rep.min_modulus:.12g}",
             f"kakeya          {rep.kakeya_applicable}",
             f"residual_max    {rep.residual_max:.3e}",
             f"vieta (sum,prod) {rep.vieta_sum_error:.3e} {rep.vieta_product_error:.3e}",
             f"iterations      {rep.iterations}"] + verdict_lines
    lines.append("roots (by modulus, argument):")
    lines += [f"  {_fmt(r)}   |r|={abs(r):.12g}" for r in rep.roots]
    return "\n".join(lines), code


def cmd_sweep(args):
    fixed = {k: v for k, v in _family_kw(args).items() if k != args.vary and v is not None}
    spec_kw = {}
    if args.criteria:
        spec_kw["criteria"] = tuple(args.criteria)
    grid = None
    if args.oracle and args.r_max is not None:
        grid = _grid(args, 1.0)
    spec = SweepSpec(args.family, args.vary, args.lo, args.hi, args.steps, fixed,
                     oracle=args.oracle, grid=grid, **spec_kw)
    res = run_sweep(spec)
    if args.json:
        return res.to_json(), EXIT_OK
    lines = [res.table(), "", "boundaries:"]
    if not res.boundaries:
        lines.append("  (none in range)")
    for b in res.boundaries:
        lines.append(f"  {b.criterion:<24} {b.as_dict()['direction']:<20} at "
                     f"{args.vary} = {b.value:.7f}")
    return "\n".join(lines), EXIT_OK


def cmd_plot(args):
    f = _function(args)
    title = getattr(f, "name", repr(f))
    spec = PlotSpec(f, args.radius, args.circles, args.rays, args.samples,
                    title=f"{title} on |z| < {args.radius:g}")
    return render_svg(spec), EXIT_OK


_COMMANDS = {
    "eval": cmd_eval,
    "criteria": cmd_criteria,
    "verify": cmd_verify,
    "zeros": cmd_zeros,
    "sweep": cmd_sweep,
    "plot": cmd_plot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed usage; --help exits 0, bad flags 2
        return int(e.code or 0)
    try:
        text, code = _COMMANDS[args.command](args)
    except (_InvalidArgs, DomainError, TruncationError, MonotonicityError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
