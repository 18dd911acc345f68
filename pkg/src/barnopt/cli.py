"""Command-line interface.

Angles are accepted in degrees and converted to radians at this boundary.
Exit codes: 0 success, 1 internal or I/O failure, 2 input validation.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import fields, oracle, serialize
from .compactness import AssessReport, assess
from .errors import BarnOptError
from .geometry import HouseParams
from .optimize_floor import optimize_fixed_floor
from .optimize_volume import optimize_fixed_volume

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2

BUNDLED_CASES = "cases/paper_houses.csv"
AUDIT_HEADER = ["name", "W", "L", "H", "alpha_deg"]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BarnOptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barnopt",
        description="Optimal barn-type house proportions: envelope-area "
        "minimization, compactness assessment and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize-volume", help="minimal envelope for a fixed volume")
    p.add_argument("--volume", type=float, required=True, help="habitable volume in m^3")
    p.add_argument("--alpha", type=float, required=True, help="roof slope in degrees")
    _output_flags(p, formats=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_optimize_volume)

    p = sub.add_parser("optimize-floor", help="minimal envelope for a fixed floor area")
    p.add_argument("--floor", type=float, required=True, help="floor area in m^2")
    p.add_argument("--height", type=float, required=True, help="wall height in meters")
    p.add_argument("--alpha", type=float, required=True, help="roof slope in degrees")
    _output_flags(p, formats=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_optimize_floor)

    p = sub.add_parser("assess", help="compare one design against both optima")
    p.add_argument("--width", type=float, required=True)
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--height", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True, help="roof slope in degrees")
    _output_flags(p, formats=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_assess)

    p = sub.add_parser("audit", help="batch-assess designs from a CSV file")
    p.add_argument(
        "csv_path",
        nargs="?",
        default=None,
        help=f"CSV with header {','.join(AUDIT_HEADER)}; defaults to the bundled paper houses",
    )
    _output_flags(p, formats=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("field", help="export a sampled scalar field over (r, k)")
    p.add_argument("--kind", choices=("surface", "compactness"), default=None,
                   help="defaults to 'surface' when --volume is given, else 'compactness'")
    p.add_argument("--volume", type=float, default=None, help="required for the surface field")
    p.add_argument("--alpha", type=float, required=True)
    _range_flags(p)
    p.add_argument("--res", type=int, default=fields.DEFAULT_RESOLUTION)
    _output_flags(p, formats=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_field)

    p = sub.add_parser("contours", help="export compactness level curves")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--levels", type=str, default=",".join(str(v) for v in fields.DEFAULT_LEVELS))
    _range_flags(p)
    p.add_argument("--res", type=int, default=fields.DEFAULT_RESOLUTION)
    _output_flags(p, formats=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_contours)

    p = sub.add_parser("sweep", help="optimal dimensions versus roof slope")
    p.add_argument("--volume", type=float, required=True)
    p.add_argument("--alpha-min", type=float, default=1.0)
    p.add_argument("--alpha-max", type=float, default=89.0)
    p.add_argument("--samples", type=int, default=181)
    _output_flags(p, formats=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("curve", help="envelope area versus width at fixed floor area")
    p.add_argument("--floor", type=float, required=True)
    p.add_argument("--height", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--wmin", type=float, default=None)
    p.add_argument("--wmax", type=float, default=None)
    p.add_argument("--samples", type=int, default=fields.DEFAULT_RESOLUTION)
    _output_flags(p, formats=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("verify", help="cross-check closed forms against brute-force oracles")
    p.add_argument("--cases", type=int, default=25, help="random cases per problem")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--resolution", type=int, default=oracle.DEFAULT_RK_RESOLUTION)
    _output_flags(p, formats=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--bind", type=str, default="127.0.0.1")
    p.add_argument("--cors-allow", action="append", default=[], metavar="ORIGIN",
                   help="additional allowed CORS origin (repeatable)")
    p.add_argument("--ui-dir", type=str, default=None,
                   help="optional directory of static UI files to serve at /")
    p.set_defaults(handler=_cmd_serve)

    return parser


def _output_flags(p, formats, default):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--out", type=str, default="-", help="output path, '-' for stdout")


def _range_flags(p):
    p.add_argument("--rmin", type=float, default=fields.DEFAULT_R_RANGE[0])
    p.add_argument("--rmax", type=float, default=fields.DEFAULT_R_RANGE[1])
    p.add_argument("--kmin", type=float, default=fields.DEFAULT_K_RANGE[0])
    p.add_argument("--kmax", type=float, default=fields.DEFAULT_K_RANGE[1])


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fmt(value: float, decimals: int = 4) -> str:
    return f"{value:.{decimals}f}"


# --- single-shot commands ---------------------------------------------------


def _cmd_optimize_volume(args) -> int:
    opt = optimize_fixed_volume(args.volume, math.radians(args.alpha))
    if args.format == "json":
        _emit(serialize.to_json(opt) + "\n", args.out)
    else:
        lines = [
            "fixed-volume optimum",
            f"  volume [m^3]  {_fmt(opt.volume)}",
            f"  alpha  [deg]  {_fmt(math.degrees(opt.alpha))}",
            f"  r_min         {_fmt(opt.r_min)}",
            f"  k_min         {_fmt(opt.k_min)}",
            f"  W_min  [m]    {_fmt(opt.W_min)}",
            f"  L_min  [m]    {_fmt(opt.L_min)}",
            f"  H_min  [m]    {_fmt(opt.H_min)}",
            f"  S_min  [m^2]  {_fmt(opt.S_min)}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_optimize_floor(args) -> int:
    opt = optimize_fixed_floor(args.floor, args.height, math.radians(args.alpha))
    if args.format == "json":
        _emit(serialize.to_json(opt) + "\n", args.out)
    else:
        lines = [
            "fixed-floor optimum",
            f"  floor  [m^2]  {_fmt(opt.floor_area)}",
            f"  height [m]    {_fmt(opt.height)}",
            f"  alpha  [deg]  {_fmt(math.degrees(opt.alpha))}",
            f"  W_min  [m]    {_fmt(opt.W_min)}",
            f"  L_min  [m]    {_fmt(opt.L_min)}",
            f"  S_min  [m^2]  {_fmt(opt.S_min)}",
            f"  cubic residual {opt.cubic_residual:.3e}",
            f"  single real root: {'yes' if opt.single_real_root else 'no'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_assess(args) -> int:
    design = HouseParams(
        width=args.width, length=args.length, height=args.height, alpha=math.radians(args.alpha)
    )
    report = assess(design)
    if args.format == "json":
        _emit(serialize.to_json(report) + "\n", args.out)
    else:
        comp, floor = report.compactness, report.fixed_floor
        lines = [
            f"design  W={_fmt(design.width, 2)} m  L={_fmt(design.length, 2)} m  "
            f"H={_fmt(design.height, 2)} m  alpha={_fmt(math.degrees(design.alpha), 2)} deg",
            f"  volume {_fmt(comp.V, 2)} m^3   floor {_fmt(design.width * design.length, 2)} m^2   "
            f"envelope {_fmt(comp.S, 2)} m^2",
            "",
            "fixed-volume optimum (same volume, same slope)",
            f"  W_min {_fmt(comp.optimum.W_min, 2)} m   L_min {_fmt(comp.optimum.L_min, 2)} m   "
            f"H_min {_fmt(comp.optimum.H_min, 2)} m   S_min {_fmt(comp.S_min, 2)} m^2",
            f"  ratio S/S_min {_fmt(comp.ratio)}   headroom {_fmt(comp.headroom, 2)} m^2",
            "",
            "fixed-floor optimum (same floor area, height and slope)",
            f"  W_min {_fmt(floor.optimum.W_min, 2)} m   L_min {_fmt(floor.optimum.L_min, 2)} m   "
            f"S_min {_fmt(floor.optimum.S_min, 2)} m^2",
            f"  ratio S/S_min {_fmt(floor.ratio)}   headroom {_fmt(floor.headroom, 2)} m^2",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# --- audit ------------------------------------------------------------------


@dataclass
class CaseStudyRow:
    """One audited design plus everything both tables need.

    Derived cells are always recomputed from the W/L/H/alpha inputs, never
    read from the file.
    """

    name: str
    design: HouseParams
    report: AssessReport

    def volume_cells(self) -> dict:
        rep = self.report.compactness
        return {
            "name": self.name,
            "W": self.design.width,
            "L": self.design.length,
            "H": self.design.height,
            "alpha_deg": math.degrees(self.design.alpha),
            "V": rep.V,
            "S": rep.S,
            "W_min": rep.optimum.W_min,
            "L_min": rep.optimum.L_min,
            "H_min": rep.optimum.H_min,
            "S_min": rep.S_min,
            "ratio": rep.ratio,
            "headroom": rep.headroom,
        }

    def floor_cells(self) -> dict:
        rep = self.report.fixed_floor
        return {
            "name": self.name,
            "W": self.design.width,
            "L": self.design.length,
            "H": self.design.height,
            "alpha_deg": math.degrees(self.design.alpha),
            "F": self.design.width * self.design.length,
            "S": rep.S,
            "W_min": rep.optimum.W_min,
            "L_min": rep.optimum.L_min,
            "S_min": rep.optimum.S_min,
            "ratio": rep.ratio,
            "headroom": rep.headroom,
        }


VOLUME_COLUMNS = ["name", "W", "L", "H", "alpha_deg", "V", "S",
                  "W_min", "L_min", "H_min", "S_min", "ratio", "headroom"]
FLOOR_COLUMNS = ["name", "W", "L", "H", "alpha_deg", "F", "S",
                 "W_min", "L_min", "S_min", "ratio", "headroom"]


def load_case_rows(text: str) -> tuple[list[CaseStudyRow], list[str]]:
    """Parse an audit CSV; returns (valid rows, error strings with row numbers)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        return [], ["no header row"]
    if [h.strip() for h in header] != AUDIT_HEADER:
        return [], [f"bad header {header!r}, expected {AUDIT_HEADER!r}"]
    rows: list[CaseStudyRow] = []
    errors: list[str] = []
    count = 0
    for record in reader:
        if not record or all(not cell.strip() for cell in record):
            continue
        count += 1
        number = count
        try:
            if len(record) != len(AUDIT_HEADER):
                raise ValueError(f"expected {len(AUDIT_HEADER)} cells, got {len(record)}")
            name = record[0].strip()
            w, l, h, alpha_deg = (float(cell) for cell in record[1:])
            design = HouseParams(width=w, length=l, height=h, alpha=math.radians(alpha_deg))
            # assess() also enforces the solver alpha domain, which is
            # stricter than the type's open interval.
            rows.append(CaseStudyRow(name=name, design=design, report=assess(design)))
        except (ValueError, BarnOptError) as exc:
            errors.append(f"row {number}: {exc}")
    if count == 0:
        errors.append("no data rows")
    return rows, errors


def bundled_cases_text() -> str:
    return resources.files("barnopt").joinpath(BUNDLED_CASES).read_text(encoding="utf-8")


def _table_text(title: str, columns: list[str], cells: list[dict]) -> str:
    def fmt_cell(col, value):
        if col == "name":
            return str(value)
        if col == "ratio":
            return _fmt(value, 4)
        return _fmt(value, 2)

    rendered = [[fmt_cell(c, row[c]) for c in columns] for row in cells]
    widths = [max(len(columns[i]), *(len(r[i]) for r in rendered)) if rendered else len(columns[i])
              for i in range(len(columns))]
    lines = [title]
    lines.append("  ".join(col.rjust(widths[i]) for i, col in enumerate(columns)))
    for r in rendered:
        lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(r)))
    return "\n".join(lines)


def _table_csv(columns: list[str], cells: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in cells:
        writer.writerow([row["name"]] + [repr(float(row[c])) for c in columns[1:]])
    return buf.getvalue()


def _cmd_audit(args) -> int:
    if args.csv_path is None:
        text = bundled_cases_text()
    else:
        text = Path(args.csv_path).read_text(encoding="utf-8")
    rows, errors = load_case_rows(text)

    volume_cells = [row.volume_cells() for row in rows]
    floor_cells = [row.floor_cells() for row in rows]

    if args.format == "json":
        payload = {
            "volume_table": volume_cells,
            "floor_table": floor_cells,
            "errors": errors,
        }
        _emit(serialize.to_json(payload) + "\n", args.out)
    elif args.format == "csv":
        blocks = [_table_csv(VOLUME_COLUMNS, volume_cells), _table_csv(FLOOR_COLUMNS, floor_cells)]
        _emit("\n".join(blocks), args.out)
    else:
        blocks = [
            _table_text("fixed-volume audit", VOLUME_COLUMNS, volume_cells),
            "",
            _table_text("fixed-floor audit", FLOOR_COLUMNS, floor_cells),
        ]
        _emit("\n".join(blocks) + "\n", args.out)

    for err in errors:
        print(f"audit: {err}", file=sys.stderr)
    return EXIT_VALIDATION if errors else EXIT_OK


# --- field exports ----------------------------------------------------------


def _cmd_field(args) -> int:
    kind = args.kind or ("surface" if args.volume is not None else "compactness")
    alpha = math.radians(args.alpha)
    if kind == "surface":
        if args.volume is None:
            raise ValueError("surface field requires --volume")
        field = fields.surface_field(args.volume, alpha, (args.rmin, args.rmax),
                                     (args.kmin, args.kmax), args.res)
    else:
        field = fields.compactness_field(alpha, (args.rmin, args.rmax),
                                         (args.kmin, args.kmax), args.res)
    if args.format == "csv":
        _emit(serialize.field_csv(field), args.out)
    else:
        _emit(serialize.to_json(field) + "\n", args.out)
    return EXIT_OK


def _cmd_contours(args) -> int:
    levels = tuple(float(part) for part in args.levels.split(",") if part.strip())
    contours = fields.compactness_contours(
        math.radians(args.alpha), levels, (args.rmin, args.rmax), (args.kmin, args.kmax), args.res
    )
    if args.format == "csv":
        _emit(serialize.contours_csv(contours), args.out)
    else:
        _emit(serialize.to_json(contours) + "\n", args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    curves = fields.sweep_curves(
        args.volume, (math.radians(args.alpha_min), math.radians(args.alpha_max)), args.samples
    )
    if args.format == "csv":
        _emit(serialize.sweep_csv(curves), args.out)
    else:
        _emit(serialize.to_json(curves) + "\n", args.out)
    return EXIT_OK


def _cmd_curve(args) -> int:
    w_range = None
    if (args.wmin is None) != (args.wmax is None):
        raise ValueError("--wmin and --wmax must be given together")
    if args.wmin is not None:
        w_range = (args.wmin, args.wmax)
    curve, _ = fields.floor_curve(
        args.floor, args.height, math.radians(args.alpha), w_range, args.samples
    )
    if args.format == "csv":
        _emit(serialize.curve_csv(curve), args.out)
    else:
        _emit(serialize.to_json(curve) + "\n", args.out)
    return EXIT_OK


# --- verification -----------------------------------------------------------


def _cmd_verify(args) -> int:
    report = oracle.run_verification(
        seed=args.seed, cases=args.cases, tolerance=args.tolerance, resolution=args.resolution
    )
    if args.format == "json":
        _emit(serialize.to_json(report) + "\n", args.out)
    else:
        lines = [
            f"oracle verification  seed={report['seed']}  cases={report['cases_per_problem']} "
            f"per problem  tolerance={report['tolerance']:g}",
        ]
        for kind in ("fixed_volume", "fixed_floor"):
            worst = max(max(case["rel_errors"].values()) for case in report[kind])
            n_pass = sum(1 for case in report[kind] if case["pass"])
            lines.append(f"  {kind}: {n_pass}/{len(report[kind])} pass, worst rel err {worst:.3e}")
            for case in report[kind]:
                if not case["pass"]:
                    lines.append(f"    FAIL {serialize.to_json(case)}")
        lines.append("PASS" if report["pass"] else "FAIL")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report["pass"] else EXIT_INTERNAL


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(cors_allow=args.cors_allow, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
