"""Command-line front end.

Subcommands map one-to-one onto the library operations; with no flags the
energy subcommands reproduce the headline coefficients 0.04668 (sphere)
and -0.0135944 (cylinder, quadratic variant). Energies print as JSON,
tables as CSV; all floats carry 9 significant digits and the output is
byte-identical across runs for identical flags.

Exit status: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import verify as verify_mod
from .cylinder import (
    AlphaIntegralVariant,
    alpha_integral,
    cylinder_n_term,
    cylinder_sce,
)
from .orbits import BoundaryCondition, enumerate_sectors, orbit_geometry
from .series import (
    SeriesTailPlan,
    compensated_partial_sums,
    euler_averaged_limit,
    richardson_limit,
)
from .sphere import sphere_diameter_term, sphere_generic_term, sphere_sce
from .wkb import spectrum_report

_VARIANT_FLAGS = {
    "quadratic": AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC,
    "expfit": AlphaIntegralVariant.EXPONENTIAL_FIT,
    "unbounded": AlphaIntegralVariant.UNBOUNDED,
}


def _fmt(value: float) -> str:
    if isinstance(value, float) and math.isnan(value):
        return "nan"
    return f"{value:.9g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _plan_from(ns: argparse.Namespace) -> SeriesTailPlan:
    return SeriesTailPlan(
        explicit_terms=ns.terms,
        richardson_order=getattr(ns, "richardson_order", 4),
        tolerance=getattr(ns, "tolerance", 1e-5),
    )


def _cmd_sphere_energy(ns: argparse.Namespace) -> int:
    plan = _plan_from(ns)
    if ns.breakdown:
        rows = [["diameter", n, sphere_diameter_term(n)] for n in range(1, plan.explicit_terms + 1)]
        rows += [["generic", n, sphere_generic_term(n)] for n in range(2, plan.explicit_terms + 1)]
        _emit(_csv_text(["kind", "n", "term"], rows), ns.out)
        return 0
    bd = sphere_sce(plan)
    payload = {
        "diameter_sum": float(_fmt(bd.diameter_sum)),
        "generic_sum": float(_fmt(bd.generic_sum)),
        "total": float(_fmt(bd.total)),
        "tail_error": float(_fmt(bd.tail_error)),
        "explicit_terms": bd.explicit_terms_used,
        "units": "hbar*c/R",
    }
    if ns.format == "text":
        lines = [f"{key} = {value}" for key, value in payload.items()]
        _emit("\n".join(lines) + "\n", ns.out)
    else:
        _emit(_json_text(payload), ns.out)
    return 0


def _cmd_cylinder_energy(ns: argparse.Namespace) -> int:
    plan = _plan_from(ns)
    variant = _VARIANT_FLAGS[ns.variant]
    if ns.breakdown:
        rows = [[n, cylinder_n_term(n)] for n in range(1, plan.explicit_terms + 1)]
        _emit(_csv_text(["n", "term"], rows), ns.out)
        return 0
    bd = cylinder_sce(variant, plan)
    payload = {
        "variant": bd.variant.value,
        "prefactor": float(_fmt(bd.prefactor)),
        "series_value": float(_fmt(bd.series_value)),
        "series_error": float(_fmt(bd.series_error)),
        "alpha_factor": float(_fmt(bd.alpha_factor)),
        "total": float(_fmt(bd.total)),
        "units": "hbar*c*L/R^2",
    }
    if ns.format == "text":
        lines = [f"{key} = {value}" for key, value in payload.items()]
        _emit("\n".join(lines) + "\n", ns.out)
    else:
        _emit(_json_text(payload), ns.out)
    return 0


def _cmd_wkb_zeros(ns: argparse.Namespace) -> int:
    bcs = {
        "dirichlet": [BoundaryCondition.DIRICHLET],
        "neumann": [BoundaryCondition.NEUMANN],
        "both": [BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN],
    }[ns.bc]
    rows = []
    for bc in bcs:
        for r in spectrum_report(ns.ell_max, ns.n_max, bc):
            rows.append([r.ell, r.n, r.bc.value, r.x_wkb, r.x_exact, r.rel_error, r.flag])
    _emit(_csv_text(["ell", "n", "bc", "x_wkb", "x_exact", "rel_error", "flag"], rows), ns.out)
    return 0


def _cmd_orbit_table(ns: argparse.Namespace) -> int:
    rows = []
    for sector in enumerate_sectors(ns.n_max, em_only=ns.em_only):
        g = orbit_geometry(sector)
        rows.append([
            sector.n, sector.w, g.stationary_z, g.length_over_r,
            g.maslov_dirichlet, g.maslov_neumann, g.em_contributes,
        ])
    header = ["n", "w", "z_bar", "length_over_R", "maslov_D", "maslov_N", "em_contributes"]
    _emit(_csv_text(header, rows), ns.out)
    return 0


def _cmd_alpha_integral(ns: argparse.Namespace) -> int:
    if ns.x_values:
        grid = [float(tok) for tok in ns.x_values.split(",")]
    else:
        if ns.points < 2:
            raise ValueError("--points must be >= 2")
        grid = [ns.x_max * i / (ns.points - 1) for i in range(ns.points)]
    rows = [
        [x,
         alpha_integral(x, AlphaIntegralVariant.EXACT_QUADRATURE),
         alpha_integral(x, AlphaIntegralVariant.SEMICLASSICAL_QUADRATIC),
         alpha_integral(x, AlphaIntegralVariant.EXPONENTIAL_FIT)]
        for x in grid
    ]
    _emit(_csv_text(["x", "exact", "semiclassical", "exp_fit"], rows), ns.out)
    return 0


def _cmd_convergence(ns: argparse.Namespace) -> int:
    plan = _plan_from(ns)
    if ns.series == "sphere":
        terms = [sphere_generic_term(n) for n in range(2, plan.explicit_terms + 1)]
        first_n = 2
    else:
        terms = [cylinder_n_term(n) for n in range(1, plan.explicit_terms + 1)]
        first_n = 1
    partials = compensated_partial_sums(terms)
    if ns.series == "sphere":
        limit, err = richardson_limit(partials, plan)
    else:
        limit, err = euler_averaged_limit(partials)
    rows = []
    for i, s in enumerate(partials):
        last = (i == len(partials) - 1)
        rows.append([first_n + i, s, _fmt(limit) if last else "", _fmt(err) if last else ""])
    _emit(_csv_text(["N", "partial_sum", "limit", "error_estimate"], rows), ns.out)
    return 0


def _cmd_verify(ns: argparse.Namespace) -> int:
    results = verify_mod.run_all(brute_force_n=100000 if ns.full else None)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{status}] criterion {r.criterion:2d} ({r.name}): {r.detail}")
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_fail}/{len(results)} criteria passed")
    _emit("\n".join(lines) + "\n", ns.out)
    return 0 if n_fail == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellcasimir",
        description=("Semiclassical Casimir self-energy coefficients of ideal-metal "
                     "spherical and cylindrical shells, from sums over interior "
                     "periodic rays."),
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_out(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser(
        "sphere-energy",
        help="sphere coefficient (units hbar*c/R); defaults reproduce 0.04668")
    p.add_argument("--terms", type=int, default=50, help="explicit generic-sector terms")
    p.add_argument("--richardson-order", type=int, default=4)
    p.add_argument("--tolerance", type=float, default=1e-5)
    p.add_argument("--breakdown", action="store_true", help="emit per-sector CSV instead")
    p.add_argument("--format", choices=["json", "text"], default="json")
    add_out(p)
    p.set_defaults(func=_cmd_sphere_energy)

    p = sub.add_parser(
        "cylinder-energy",
        help=("cylinder coefficient (units hbar*c*L/R^2); quadratic variant "
              "reproduces 7*pi*(7*pi^2-240)/276480 = -0.0135944"))
    p.add_argument("--variant", choices=sorted(_VARIANT_FLAGS), default="quadratic")
    p.add_argument("--terms", type=int, default=50)
    p.add_argument("--tolerance", type=float, default=1e-5)
    p.add_argument("--breakdown", action="store_true", help="emit per-n CSV instead")
    p.add_argument("--format", choices=["json", "text"], default="json")
    add_out(p)
    p.set_defaults(func=_cmd_cylinder_energy)

    p = sub.add_parser(
        "wkb-zeros",
        help="Debye wave numbers vs exact Bessel(-derivative) zeros, as CSV")
    p.add_argument("--ell-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--bc", choices=["dirichlet", "neumann", "both"], default="both")
    add_out(p)
    p.set_defaults(func=_cmd_wkb_zeros)

    p = sub.add_parser(
        "orbit-table",
        help="geometry of stationary periodic-orbit sectors, as CSV")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--em-only", action="store_true",
                   help="keep only even-reflection (electromagnetic) sectors")
    add_out(p)
    p.set_defaults(func=_cmd_orbit_table)

    p = sub.add_parser(
        "alpha-integral",
        help="longitudinal-momentum integral: exact vs quadratic vs exp fit, as CSV")
    p.add_argument("--x-max", type=float, default=30.0)
    p.add_argument("--points", type=int, default=61)
    p.add_argument("--x-values", help="comma-separated x grid overriding --x-max/--points")
    add_out(p)
    p.set_defaults(func=_cmd_alpha_integral)

    p = sub.add_parser(
        "convergence",
        help="partial sums and extrapolation summary for the sector series, as CSV")
    p.add_argument("--series", choices=["sphere", "cylinder"], default="sphere")
    p.add_argument("--terms", type=int, default=50)
    p.add_argument("--richardson-order", type=int, default=4)
    p.add_argument("--tolerance", type=float, default=1e-5)
    add_out(p)
    p.set_defaults(func=_cmd_convergence)

    p = sub.add_parser(
        "verify",
        help="run the acceptance checks; exit 0 only if every criterion passes")
    p.add_argument("--full", action="store_true",
                   help="include the 1e5-term brute-force sphere cross-check (slow)")
    add_out(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (ValueError, OverflowError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
