"""Command-line surface: parse curve/family files, run analyses, emit
JSON/CSV reports, and run the regression selftest.

Exit codes: 0 success, 1 assertion failure inside a check, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import curve as curve_mod
from . import family as family_mod
from . import gauss as gauss_mod
from . import kernel as kernel_mod
from .curve import HoloCurve, invariants, ramification
from .errors import HoloCurveError, ParseError, ValidationError
from .poly import ExactPoly
from .rational import GaussianRational


def fmt_float(x: float) -> float:
    """Round-trip through 17 significant digits for stable report bytes."""
    return float(format(x, ".17g"))


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read JSON from {path}: {e}") from e


def parse_curve(path) -> HoloCurve:
    """Load and validate a curve file; errors name the failed invariant."""
    return HoloCurve.from_json(_load_json(path))


def _write_json(obj, path):
    text = json.dumps(obj, sort_keys=True, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _write_csv(rows, header, path):
    if path is None:
        w = csv.writer(sys.stdout)
        w.writerow(header)
        w.writerows(rows)
    else:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)


# -- subcommands ---------------------------------------------------------


def cmd_analyze(args) -> int:
    f = parse_curve(args.input)
    rd = ramification(f)
    sheet = invariants(f)
    _write_json(
        {
            "schema": 1,
            "k": sheet.k,
            "r_finite": rd.r_finite,
            "r_infinity": rd.r_infinity,
            "r_total": rd.r_total,
            "d": sheet.d,
            "E": sheet.E,
            "k_polar": sheet.k_polar,
            "r_polar": sheet.r_polar,
            "divisor": rd.divisor.to_json(),
        },
        args.output,
    )
    return 0


def cmd_polar(args) -> int:
    f = parse_curve(args.input)
    h = curve_mod.conjugate_polar(f)
    _write_json(h.to_json(), args.output)
    return 0


def cmd_gauss_sample(args) -> int:
    f = parse_curve(args.input)
    ev = gauss_mod.GaussEvaluator(f)
    ev_flip = gauss_mod.GaussEvaluator(ev.f_flip)
    rows = []
    n = args.grid
    xs = np.linspace(-args.chart_split, args.chart_split, n)
    for y in xs:
        for x in xs:
            z = complex(x, y)
            if abs(z) <= args.chart_split:
                point, chart = gauss_mod.gauss_eval(ev, z), "z"
            else:
                point, chart = gauss_mod.gauss_eval(ev_flip, 1.0 / z), "w"
            v = np.asarray(point.to_complex())
            v = v / np.linalg.norm(v)
            rows.append(
                [fmt_float(x), fmt_float(y)]
                + [fmt_float(c.real) for c in v]
                + [fmt_float(c.imag) for c in v]
                + [chart]
            )
    header = ["z.re", "z.im", "phi0.re", "phi1.re", "phi2.re", "phi0.im", "phi1.im", "phi2.im", "chart"]
    # column order: real parts then imaginary parts, normalized lift
    _write_csv(rows, header, args.output)
    return 0


def cmd_geometry(args) -> int:
    f = parse_curve(args.input)
    ev = gauss_mod.GaussEvaluator(f)
    quad = gauss_mod.QuadratureSpec(split_radius=args.chart_split, order=args.quad_order)
    report = gauss_mod.degree_energy(ev, quad)
    out = report.to_json()
    out = {k: (fmt_float(v) if isinstance(v, float) else v) for k, v in out.items()}
    _write_json(out, args.output)
    return 0


def cmd_kernel(args) -> int:
    obj = _load_json(args.input)
    p0 = ExactPoly.from_json(obj["p0"])
    if "a_roots" in obj:
        roots = [(GaussianRational.from_json(a), m) for a, m in obj["a_roots"]]
        spec = kernel_mod.KernelSpec.from_roots(roots, p0)
    elif "a" in obj:
        spec = kernel_mod.KernelSpec(a=ExactPoly.from_json(obj["a"]), p0=p0)
    else:
        raise ParseError("kernel input needs 'a' or 'a_roots'")
    report = kernel_mod.kernel_report(kernel_mod.build_T(spec))
    _write_json(report.to_json(), args.output)
    return 0


def _load_family(args):
    if args.preset:
        return family_mod.preset(args.preset, k=args.k, r=args.r)
    if args.input:
        obj = _load_json(args.input)
        tables = tuple(
            tuple(ExactPoly.from_json(p) for p in table) for table in obj["tables"]
        )
        lo, hi = (Fraction(s) for s in obj["domain"])
        return family_mod.CurveFamily(tables=tables, domain=(lo, hi))
    raise ParseError("family command needs --preset or --input")


def cmd_family(args) -> int:
    fam = _load_family(args)
    lo, hi = fam.domain
    n = args.samples
    ts = [lo + (hi - lo) * Fraction(i, n - 1) for i in range(n)]
    report = family_mod.smooth_divisor(fam, ts)
    rows = []
    for i, t in enumerate(report.ts):
        coeffs = ";".join(str(c) for c in report.values[i])
        quot = ""
        if i < len(report.quotients) and report.quotients[i] is not None:
            quot = ";".join(str(q) for q in report.quotients[i])
        rows.append([str(t), coeffs, quot, "jump" if t in report.stratum_jumps else ""])
    _write_csv(rows, ["t", "divisor_coeffs", "coeff_quotients", "stratum_flag"], args.output)
    return 0


# -- selftest ------------------------------------------------------------


def _check(results, name, ok, detail=""):
    results.append({"name": name, "pass": bool(ok), "detail": detail})
    return ok


def run_selftest(quad_order: int = 64) -> dict:
    """Deterministic regression suite over known example values."""
    from .poly import from_ints

    results = []

    # Wedge of the discontinuous cubic family at t = 0 and t = 1.
    burstall = family_mod.preset("burstall")
    f0 = burstall.specialize(0)
    w0 = curve_mod.wedge(f0)
    _check(results, "burstall.wedge.t0",
           w0 == (from_ints(0, 0, 0, 0, -1), from_ints(0, -2), from_ints(0, 0, 3)))
    f1 = burstall.specialize(1)
    w1 = curve_mod.wedge(f1)
    _check(results, "burstall.wedge.t1",
           w1 == (from_ints(0, 0, 1, 0, -1), from_ints(0, -2), from_ints(1, 0, 3)))

    # Ramification of the cubic family: divisor z at t=0, trivial at t=1.
    rd0, rd1 = ramification(f0), ramification(f1)
    _check(results, "burstall.divisor.t0", rd0.divisor == from_ints(0, 1) and rd0.r_total == 1)
    _check(results, "burstall.divisor.t1", rd1.divisor == from_ints(1) and rd1.r_total == 0)

    # Coalescing family: exact divisor z^2 - t, stratum (4, 2).
    coalesce = family_mod.preset("coalesce")
    ok = True
    for t in (Fraction(-1, 2), Fraction(-1, 4), 0, Fraction(1, 4), Fraction(1, 2)):
        rd = ramification(coalesce.specialize(t))
        ok = ok and rd.divisor == ExactPoly([-Fraction(t), 0, 1]) and rd.r_total == 2
    _check(results, "coalesce.divisor.z2_minus_t", ok)

    # Integer invariant formulas.
    for k, r, expected in [
        (2, 0, (0, 4, 2, 0)),
        (4, 2, (0, 8, 4, 2)),
        (3, 0, (1, 7, 4, 3)),
    ]:
        s = curve_mod.invariant_sheet(k, r)
        _check(results, f"invariants.k{k}r{r}",
               (s.d, s.E, s.k_polar, s.r_polar) == expected)

    # Gauss transform values of the cubic family at z = 0.
    ev1 = gauss_mod.GaussEvaluator(f1)
    ev0 = gauss_mod.GaussEvaluator(f0)
    z0 = GaussianRational(0)
    _check(results, "gauss.burstall.t1.z0",
           gauss_mod.gauss_eval(ev1, z0) == curve_mod.ProjPoint(
               (GaussianRational(0), GaussianRational(1), GaussianRational(0))))
    _check(results, "gauss.burstall.t0.z0",
           gauss_mod.gauss_eval(ev0, z0) == curve_mod.ProjPoint(
               (GaussianRational(0), GaussianRational(0), GaussianRational(1))))

    # Trace discontinuity: one jump event of FS distance pi/2.
    ts = [Fraction(i, 100) for i in range(-20, 21)]
    trace = family_mod.trace_gauss(burstall, z0, ts)
    one_event = len(trace.jump_events) == 1
    dist_ok = one_event and abs(trace.jump_events[0][2] - math.pi / 2) <= 1e-12
    _check(results, "burstall.trace.single_jump", one_event and dist_ok)

    # Kernel dimension counterexample at (k, r) = (6, 4).
    p0 = from_ints(4, -4, 2, 0, 10, -12, 4)
    spec = kernel_mod.KernelSpec.from_roots([(0, 1), (1, 1), (-1, 1), (2, 1)], p0.monic())
    report = kernel_mod.kernel_report(kernel_mod.build_T(spec))
    _check(results, "kernel.k6r4.dim4", report.dim_kernel == 4, f"dim={report.dim_kernel}")

    # Numerical geometry: calibration case and the Gauss transform of the
    # degree-2 rational normal curve.
    veronese = curve_mod.validate(from_ints(1), from_ints(0, 1), from_ints(0, 0, 1))
    quad = gauss_mod.QuadratureSpec(order=quad_order)
    cal = gauss_mod.degree_energy(veronese, quad, as_map=True)
    _check(results, "geometry.calibration.d2E2",
           abs(cal.d_num - 2) <= 1e-9 and abs(cal.E_num - 2) <= 1e-9,
           f"d={fmt_float(cal.d_num)}, E={fmt_float(cal.E_num)}")
    gv = gauss_mod.degree_energy(gauss_mod.GaussEvaluator(veronese), quad)
    _check(results, "geometry.gauss_veronese.d0E4",
           abs(gv.d_num) <= 1e-3 and abs(gv.E_num - 4) <= 1e-3,
           f"d={fmt_float(gv.d_num)}, E={fmt_float(gv.E_num)}")
    gc = gauss_mod.degree_energy(gauss_mod.GaussEvaluator(coalesce.specialize(1)), quad)
    _check(results, "geometry.gauss_coalesce_t1.d0E8",
           abs(gc.d_num) <= 1e-3 and abs(gc.E_num - 8) <= 1e-3,
           f"d={fmt_float(gc.d_num)}, E={fmt_float(gc.E_num)}")

    passed = all(r["pass"] for r in results)
    return {"schema": 1, "passed": passed, "checks": results}


def cmd_selftest(args) -> int:
    report = run_selftest(quad_order=args.quad_order)
    _write_json(report, args.output)
    return 0 if report["passed"] else 1


# -- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="holocurves", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=False, help="input JSON file")
        p.add_argument("--output", default=None, help="output file (stdout if omitted)")
        p.add_argument("--quad-order", dest="quad_order", type=int, default=64)
        p.add_argument("--fd-step", dest="fd_step", type=float, default=1e-3)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--chart-split", dest="chart_split", type=float, default=1.0)

    p = sub.add_parser("analyze", help="invariant sheet and ramification data")
    common(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("polar", help="conjugate polar curve file")
    common(p)
    p.set_defaults(fn=cmd_polar)

    p = sub.add_parser("gauss-sample", help="grid CSV of the Gauss transform")
    common(p)
    p.add_argument("--grid", type=int, default=20)
    p.set_defaults(fn=cmd_gauss_sample)

    p = sub.add_parser("geometry", help="numerical degree/energy report")
    common(p)
    p.set_defaults(fn=cmd_geometry)

    p = sub.add_parser("kernel", help="rank and kernel basis of the remainder map")
    common(p)
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("family", help="divisor trace of a curve family")
    common(p)
    p.add_argument("--preset", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--samples", type=int, default=21)
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("selftest", help="deterministic regression suite")
    common(p, needs_input=False)
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except HoloCurveError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
