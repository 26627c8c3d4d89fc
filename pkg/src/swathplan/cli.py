"""Command line front end: width-table, plan, verify and plot-data.

Exit statuses: 0 success or verification pass, 1 verification failure or an
infeasible scenario, 2 usage, config or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import ConfigError, ScenarioConfig, apply_overrides, load_config
from .errors import PlanningError
from .geometry import width_table
from .planfile import (
    PlanParseError,
    format_sig,
    plan_summary,
    read_plan,
    write_plan_csv,
    write_plan_json,
)
from .planner import depth_at_x, derive_profile, plan_survey
from .units import nm_to_m
from .verifier import verify_plan


def _csv_floats(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", metavar="PATH", help="JSON scenario config")
    sub.add_argument("--format", choices=("csv", "json"), help="output format")
    sub.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    sub.add_argument("--alpha-deg", type=float, help="bed dip angle override (deg)")
    sub.add_argument("--theta-deg", type=float, help="transducer opening angle override (deg)")
    sub.add_argument("--eta", type=float, help="target overlap fraction override")
    sub.add_argument("--center-depth-m", type=float, help="region center depth override (m)")
    sub.add_argument("--region-ew-nm", type=float, help="region east-west extent override (NM)")
    sub.add_argument("--region-ns-nm", type=float, help="region north-south extent override (NM)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swathplan",
        description="Multibeam swath widths and survey line layout over a sloped seabed.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_table = subs.add_parser("width-table", help="swath width grid over headings and distances")
    _add_common_flags(p_table)
    p_table.add_argument(
        "--headings-deg", type=_csv_floats, metavar="LIST", help="comma-separated headings (deg)"
    )
    p_table.add_argument(
        "--distances-nm", type=_csv_floats, metavar="LIST", help="comma-separated distances (NM)"
    )
    p_table.set_defaults(handler=cmd_width_table)

    p_plan = subs.add_parser("plan", help="lay out north-south survey lines")
    _add_common_flags(p_plan)
    p_plan.set_defaults(handler=cmd_plan)

    p_verify = subs.add_parser("verify", help="audit a plan file against the scenario")
    p_verify.add_argument("plan_file", metavar="PLAN", help="plan file written by 'plan'")
    _add_common_flags(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    p_plot = subs.add_parser("plot-data", help="emit plan and region geometry as JSON")
    _add_common_flags(p_plot)
    p_plot.set_defaults(handler=cmd_plot_data)

    return parser


def _config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    cfg = load_config(args.config)
    return apply_overrides(
        cfg,
        alpha_deg=args.alpha_deg,
        theta_deg=args.theta_deg,
        eta=args.eta,
        center_depth_m=args.center_depth_m,
        region_ew_nm=args.region_ew_nm,
        region_ns_nm=args.region_ns_nm,
        fmt=args.format,
        headings_deg=getattr(args, "headings_deg", None),
        distances_nm=getattr(args, "distances_nm", None),
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_width_table(args: argparse.Namespace, cfg: ScenarioConfig) -> int:
    """Swath width per (heading, distance) cell; failed cells print as ERR/null."""
    distances_m = [nm_to_m(d) for d in cfg.distances_nm]
    grid = width_table(cfg.seabed(), cfg.transducer(), list(cfg.headings_deg), distances_m)
    sig = cfg.precision
    labels = [format_sig(d, sig) for d in cfg.distances_nm]
    if cfg.format == "json":
        doc = [
            {
                "heading_deg": heading,
                "widths_m": {
                    label: (None if w is None else float(format_sig(w, sig)))
                    for label, w in zip(labels, row)
                },
            }
            for heading, row in zip(cfg.headings_deg, grid)
        ]
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = ["heading_deg," + ",".join(labels)]
        for heading, row in zip(cfg.headings_deg, grid):
            cells = ["ERR" if w is None else format_sig(w, sig) for w in row]
            lines.append(format_sig(heading, sig) + "," + ",".join(cells))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_plan(args: argparse.Namespace, cfg: ScenarioConfig) -> int:
    """Plan survey lines for the configured region and write the placement table."""
    region = cfg.region()
    plan = plan_survey(region, cfg.transducer(), cfg.eta_target)
    d1 = derive_profile(region).edge_offset_d1
    if cfg.format == "json":
        body = write_plan_json(plan, d1, cfg.precision)
    else:
        body = write_plan_csv(plan, d1, cfg.precision)
    _emit(body, args.out)
    if args.out is not None:
        summary = plan_summary(plan, d1, cfg.precision)
        print(
            f"{summary['lines']} lines, {summary['total_track_nm']} NM total, "
            f"D1 = {summary['d1_m']} m"
        )
    return 0


def cmd_verify(args: argparse.Namespace, cfg: ScenarioConfig) -> int:
    """Audit a plan file: raster coverage, pairwise overlap band, width ordering."""
    try:
        with open(args.plan_file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise PlanParseError(f"cannot read plan file: {err}") from err
    region = cfg.region()
    plan = read_plan(text, region)
    result = verify_plan(plan, region, cfg.transducer(), cfg.eta_min, cfg.eta_max)
    for finding in result.findings:
        print(f"finding: {finding}")
    if result.passed:
        print(
            f"PASS: {plan.line_count} lines cover the region; "
            f"{len(result.report.pairwise_overlap_ratios)} adjacent pairs inside "
            f"[{cfg.eta_min:g}, {cfg.eta_max:g}] with slack"
        )
        return 0
    print(f"FAIL: {len(result.findings)} finding(s)")
    return 1


def cmd_plot_data(args: argparse.Namespace, cfg: ScenarioConfig) -> int:
    """Emit region and plan geometry as JSON for external plotting; renders nothing."""
    region = cfg.region()
    plan = plan_survey(region, cfg.transducer(), cfg.eta_target)
    profile = derive_profile(region)
    sig = cfg.precision

    def num(v: float) -> float:
        return float(format_sig(v, sig))

    w, length = region.width_ew, region.length_ns
    corners_xy = [(0.0, 0.0), (w, 0.0), (w, length), (0.0, length)]
    doc = {
        "region": {"width_ew_m": num(w), "length_ns_m": num(length)},
        "sea_surface_corners": [[num(x), num(y), 0.0] for x, y in corners_xy],
        "seabed_corners": [
            [num(x), num(y), num(-depth_at_x(profile, x))] for x, y in corners_xy
        ],
        "survey_lines": [
            {
                "line": i + 1,
                "x_m": num(p.x),
                "start": [num(p.x), 0.0, 0.0],
                "end": [num(p.x), num(length), 0.0],
            }
            for i, p in enumerate(plan.placements)
        ],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return args.handler(args, cfg)
    except (ConfigError, PlanParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except PlanningError as err:
        print(f"error: {err}", file=sys.stderr)
        partial = getattr(err, "partial_plan", None)
        if partial is not None:
            print(f"partial plan ({partial.line_count} lines):", file=sys.stderr)
            for p in partial.placements:
                print(f"  x={p.x:.3f} m  width={p.swath_width:.3f} m", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
