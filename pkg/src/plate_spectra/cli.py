"""Command-line interface.

Subcommands mirror the library surface: `rho`, `owen-bracket`,
`bounds-table`, `scan`, `weyl`.  All numeric output is machine-readable
(flat JSON or CSV) and byte-deterministic; curve commands can additionally
emit a self-contained SVG plot and a matplotlib PNG figure.

Exit codes: 0 success, 2 usage or precondition violation, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from .bounds import (
    SQUARE_LAMBDA1_UPPER,
    BoundReport,
    RectAspect,
    bracket_optimal_aspect,
    liyau_bound,
    owen_bound,
    simple_bound,
)
from .beam import rho_determinant, rho_fd_oracle
from .errors import PlateSpectraError
from .numerics import DEFAULT_ROOT_TOL
from .output import bounds_csv, flat_json, scan_svg, write_text
from .parallel import parallel_map
from .rect_spectra import (
    CLAMPED_RITZ,
    NAVIER,
    WeylParams,
    kth_value,
    minimiser_scan,
    weyl_two_term,
)
from .ritz import RitzBasisSpec, ritz_eigs

ASPECT_RATIO_REFERENCE = 1.066459


def parse_grid(text: str) -> list[float]:
    """Aspect grid from a START:STOP:STEP string (inclusive, step > 0)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be START:STOP:STEP, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"grid values must be numeric: {text!r}") from exc
    if step <= 0.0:
        raise ValueError(f"grid step must be positive, got {step}")
    if start < 1.0:
        raise ValueError(f"grid must start at aspect >= 1, got {start}")
    if stop < start:
        raise ValueError(f"grid is empty: stop {stop} below start {start}")
    count = int((stop - start) / step + 1e-9) + 1
    return [start + i * step for i in range(count)]


def read_config(path: str) -> dict:
    """Tiny `key = value` config reader; '#' starts a comment."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line is not `key = value`: {raw.strip()!r}")
            key, _, text = line.partition("=")
            values[key.strip()] = _parse_scalar(text.strip())
    return values


def _parse_scalar(text: str):
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
        return text[1:-1]
    lowered = text.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    return text


def _flag_present(argv: Sequence[str], flag: str) -> bool:
    return any(tok == flag or tok.startswith(flag + "=") for tok in argv)


def _apply_config(args: argparse.Namespace, argv: Sequence[str]) -> None:
    if not getattr(args, "config", None):
        return
    for key, value in read_config(args.config).items():
        dest = "lam" if key == "lambda" else key.replace("-", "_")
        flag = "--" + key.replace("_", "-")
        if hasattr(args, dest) and not _flag_present(argv, flag):
            setattr(args, dest, value)


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", help="write the report to this file instead of stdout")
    parser.add_argument("--config", help="optional key = value defaults file; flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plate-spectra",
        description="Eigenvalue bounds and spectra for the clamped plate on unit-area rectangles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rho = sub.add_parser("rho", help="first eigenvalue of the tension-perturbed clamped beam")
    p_rho.add_argument("alpha", type=float, help="tension parameter, >= 0")
    p_rho.add_argument("--tol", type=float, default=DEFAULT_ROOT_TOL, help="root tolerance")
    p_rho.add_argument("--oracle", action="store_true", help="also run the finite-difference check")
    p_rho.add_argument("--gridpoints", type=int, default=256, help="oracle grid size")
    _add_common(p_rho)
    p_rho.set_defaults(handler=cmd_rho)

    p_br = sub.add_parser("owen-bracket", help="certified interval where the lower bound crosses a level")
    p_br.add_argument("--lambda", dest="lam", type=float, default=SQUARE_LAMBDA1_UPPER,
                      help="level to invert (default: the square's certified upper value)")
    p_br.add_argument("--tol", type=float, default=5e-6, help="interval width tolerance")
    _add_common(p_br)
    p_br.set_defaults(handler=cmd_owen_bracket)

    p_tab = sub.add_parser("bounds-table", help="CSV of lower/upper bounds over an aspect grid")
    p_tab.add_argument("--grid", help="aspect grid START:STOP:STEP")
    p_tab.add_argument("--modes", type=int, default=12, help="Ritz basis size per direction")
    p_tab.add_argument("--tol", type=float, default=DEFAULT_ROOT_TOL, help="rho root tolerance")
    p_tab.add_argument("--figure", help="also render the curves to this PNG file")
    _add_common(p_tab)
    p_tab.set_defaults(handler=cmd_bounds_table)

    p_scan = sub.add_parser("scan", help="minimise lambda_k over an aspect grid")
    p_scan.add_argument("--k", type=int, help="eigenvalue index")
    p_scan.add_argument("--kind", choices=[NAVIER, CLAMPED_RITZ], default=NAVIER)
    p_scan.add_argument("--grid", help="aspect grid START:STOP:STEP")
    p_scan.add_argument("--modes", type=int, default=12, help="Ritz basis size (clamped-ritz only)")
    p_scan.add_argument("--svg", help="write a line plot of the scan to this SVG file")
    p_scan.add_argument("--figure", help="also render the scan to this PNG file")
    _add_common(p_scan)
    p_scan.set_defaults(handler=cmd_scan)

    p_weyl = sub.add_parser("weyl", help="two-term asymptotics vs exact and Ritz values")
    p_weyl.add_argument("--k", type=int, help="eigenvalue index")
    p_weyl.add_argument("--a", type=float, default=1.0, help="aspect parameter")
    p_weyl.add_argument("--modes", type=int, default=24, help="Ritz basis size for comparison")
    _add_common(p_weyl)
    p_weyl.set_defaults(handler=cmd_weyl)

    return parser


def cmd_rho(args: argparse.Namespace) -> int:
    if args.alpha < 0.0:
        raise ValueError(f"alpha must be nonnegative, got {args.alpha}")
    result = rho_determinant(args.alpha, args.tol)
    payload = {
        "alpha": result.alpha,
        "rho": result.rho,
        "enclosure_lo": result.enclosure.lo,
        "enclosure_hi": result.enclosure.hi,
        "method": result.method,
        "residual": result.residual,
    }
    if args.oracle:
        oracle = rho_fd_oracle(args.alpha, args.gridpoints)
        payload.update(
            {
                "oracle_rho": oracle.rho,
                "oracle_enclosure_lo": oracle.enclosure.lo,
                "oracle_enclosure_hi": oracle.enclosure.hi,
                "oracle_method": oracle.method,
                "discrepancy": abs(result.rho - oracle.rho),
            }
        )
    _emit(flat_json(payload), args.output)
    return 0


def cmd_owen_bracket(args: argparse.Namespace) -> int:
    enclosure = bracket_optimal_aspect(args.lam, args.tol)
    q_hi = enclosure.hi**2
    payload = {
        "lambda": args.lam,
        "tol": args.tol,
        "a_lo": enclosure.lo,
        "a_hi": enclosure.hi,
        "width": enclosure.width(),
        "q_lo": enclosure.lo**2,
        "q_hi": q_hi,
        "q_reference": ASPECT_RATIO_REFERENCE,
        "q_within_reference": q_hi <= ASPECT_RATIO_REFERENCE + 1e-5,
    }
    _emit(flat_json(payload), args.output)
    return 0


def build_bounds_reports(grid: Sequence[float], modes: int, tol: float) -> list[BoundReport]:
    aspects = [RectAspect(a) for a in grid]
    liyau_first = liyau_bound(1, 1.0, 2)

    def one_row(aspect: RectAspect) -> BoundReport:
        ritz = ritz_eigs(RitzBasisSpec(a=aspect, modes_per_direction=modes), 1).eigenvalues[0]
        return BoundReport(
            a=aspect,
            owen=owen_bound(aspect, tol),
            simple=simple_bound(aspect),
            liyau_k1=liyau_first,
            ritz_upper=ritz,
        )

    return parallel_map(one_row, aspects)


def cmd_bounds_table(args: argparse.Namespace) -> int:
    if not args.grid:
        raise ValueError("--grid is required (flag or config)")
    grid = parse_grid(args.grid)
    reports = build_bounds_reports(grid, args.modes, args.tol)
    _emit(bounds_csv(reports), args.output)
    if args.figure:
        from .figures import render_bounds_figure

        render_bounds_figure(reports, args.figure)
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    if args.k is None or not args.grid:
        raise ValueError("--k and --grid are required (flag or config)")
    if args.k < 1:
        raise ValueError(f"k must be >= 1, got {args.k}")
    grid = parse_grid(args.grid)
    scan = minimiser_scan(args.k, args.kind, grid, ritz_modes=args.modes)
    start, stop, step = (float(p) for p in args.grid.split(":"))
    payload = {
        "k": scan.k,
        "kind": scan.kind,
        "a_start": start,
        "a_stop": stop,
        "a_step": step,
        "points": len(scan.grid),
        "a_star": scan.a_star.a,
        "q_star": scan.q_star,
        "lambda_star": scan.lambda_star,
    }
    _emit(flat_json(payload), args.output)
    if args.svg:
        write_text(args.svg, scan_svg(scan))
    if args.figure:
        from .figures import render_scan_figure

        render_scan_figure(scan, args.figure)
    return 0


def cmd_weyl(args: argparse.Namespace) -> int:
    if args.k is None:
        raise ValueError("--k is required (flag or config)")
    if args.k < 1:
        raise ValueError(f"k must be >= 1, got {args.k}")
    aspect = RectAspect(args.a)
    params = WeylParams.for_rectangle(aspect)
    two_term, two_term_sqrt = weyl_two_term(args.k, params)
    leading = 16.0 * math.pi**2 * args.k**2 / params.area**2
    navier = kth_value(aspect, args.k, NAVIER)
    spec = RitzBasisSpec(a=aspect, modes_per_direction=args.modes)
    ritz_value = None
    if args.k <= spec.max_count:
        ritz_value = ritz_eigs(spec, args.k).eigenvalues[args.k - 1]
    payload = {
        "k": args.k,
        "a": aspect.a,
        "perimeter": params.perimeter,
        "boundary_factor": params.boundary_factor,
        "leading_term": leading,
        "two_term_lambda": two_term,
        "two_term_sqrt": two_term_sqrt,
        "navier_exact": navier,
        "ritz_upper": ritz_value,
        "navier_over_leading": navier / leading,
        "two_term_over_ritz": (two_term / ritz_value) if ritz_value else None,
    }
    _emit(flat_json(payload), args.output)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.handler(args)
    except ValueError as exc:
        print(f"plate-spectra {args.command}: {exc}", file=sys.stderr)
        return 2
    except PlateSpectraError as exc:
        print(f"plate-spectra {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"plate-spectra {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
