"""West-to-east greedy placement of north-south survey lines.

Frame: x in meters east of the west region boundary. The deep side of the
region is fixed at the west edge, so depth falls off eastward. Every line
runs the full north-south length of the region; its across-track direction
is east-west, so the cross-track slope it sees equals the bed dip alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NoFeasibleStartError,
    PlanningError,
    RegionExhaustedError,
    SurfacedSeabedError,
)
from .geometry import SwathCrossSection, TransducerSpec, horizontal_footprint, swath_cross_section
from .units import METERS_PER_NAUTICAL_MILE

# Give bracket caps a hair of clearance from the exact surfacing point so
# depth stays positive at every evaluated candidate.
_WET_CLEARANCE = 1.0 - 1e-12


@dataclass(frozen=True)
class SurveyRegion:
    """Rectangular survey region. The deep side is the west edge by convention."""

    width_ew: float  # east-west extent, m
    length_ns: float  # north-south extent, m
    center_depth: float  # depth at the region center, m
    slope_alpha: float  # east-west bed dip, deg

    def __post_init__(self):
        if self.width_ew <= 0.0 or self.length_ns <= 0.0:
            raise ValueError("region extents must be positive")
        if self.center_depth <= 0.0:
            raise ValueError(f"center depth must be positive, got {self.center_depth}")
        if not 0.0 <= self.slope_alpha < 90.0:
            raise ValueError(f"slope angle must be in [0, 90) degrees, got {self.slope_alpha}")


@dataclass(frozen=True)
class DepthProfile:
    """East-west depth profile: depth(x) = west_edge_depth - x * tan(alpha)."""

    west_edge_depth: float
    edge_offset_d1: float  # depth increase from region center to the west edge, m
    slope_alpha: float


@dataclass(frozen=True)
class LinePlacement:
    """One north-south survey line and the geometry recorded for reports."""

    x: float
    depth: float
    swath_width: float  # bed-measured total width, m
    overlap_with_previous: float | None  # None on the westmost line

    def __post_init__(self):
        if self.overlap_with_previous is not None and not (
            0.0 < self.overlap_with_previous < 1.0
        ):
            raise ValueError(f"overlap must be in (0, 1), got {self.overlap_with_previous}")


@dataclass(frozen=True)
class SurveyPlan:
    """Ordered west-to-east line placements plus track totals."""

    placements: tuple[LinePlacement, ...]
    line_length: float  # north-south length of every line, m
    line_count: int
    total_track_length: float  # nautical miles

    def __post_init__(self):
        if self.line_count != len(self.placements):
            raise ValueError("line_count does not match the number of placements")


def derive_profile(region: SurveyRegion) -> DepthProfile:
    """Depth profile of a region, anchored at the (deep) west edge."""
    d1 = 0.5 * region.width_ew * math.tan(math.radians(region.slope_alpha))
    return DepthProfile(
        west_edge_depth=region.center_depth + d1,
        edge_offset_d1=d1,
        slope_alpha=region.slope_alpha,
    )


def depth_at_x(profile: DepthProfile, x: float) -> float:
    """Water depth (m) at x meters east of the west boundary.

    Raises SurfacedSeabedError once the profile line crosses the surface.
    """
    depth = profile.west_edge_depth - x * math.tan(math.radians(profile.slope_alpha))
    if depth <= 0.0:
        raise SurfacedSeabedError(f"surfaced seabed: depth {depth:.3f} m at x = {x:.3f} m")
    return depth


def swath_at(profile: DepthProfile, xdcr: TransducerSpec, x: float) -> SwathCrossSection:
    """Cross-section of a north-south line at x; the cross-track slope is alpha."""
    return swath_cross_section(depth_at_x(profile, x), profile.slope_alpha, xdcr)


def overlap_ratio(
    profile: DepthProfile, xdcr: TransducerSpec, x_west: float, x_east: float
) -> float:
    """Overlap fraction eta between two adjacent lines.

    Defined through the spacing relation d = (1 - eta) * w_mean with w_mean
    the mean of the two bed-measured widths. Coverage tests elsewhere work
    on horizontal projections; the two conventions differ by roughly a
    factor cos(alpha), which is documented rather than hidden.
    """
    w_mean = 0.5 * (
        swath_at(profile, xdcr, x_west).total_width + swath_at(profile, xdcr, x_east).total_width
    )
    return 1.0 - (x_east - x_west) / w_mean


def _bisect(on_west_side, lo: float, hi: float) -> float:
    """Machine-precision bisection over a predicate that is true west of the root.

    Halves until the midpoint collapses onto an endpoint (about 50 rounds)
    and returns the west endpoint. Full convergence costs microseconds and
    is needed to reproduce closed-form answers to 1e-9 relative; it also
    lands well inside the documented 1e-4 m bracket.
    """
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return lo
        if on_west_side(mid):
            lo = mid
        else:
            hi = mid


def _wet_limit(profile: DepthProfile) -> float:
    """Largest x with positive depth (inf on a flat profile)."""
    ta = math.tan(math.radians(profile.slope_alpha))
    if ta == 0.0:
        return math.inf
    return profile.west_edge_depth / ta * _WET_CLEARANCE


def first_line_position(
    profile: DepthProfile, xdcr: TransducerSpec, x_max: float | None = None
) -> float:
    """x of the westmost line: its deep edge must land on the west boundary.

    Solves x = proj_deep(x) by bisection on f(x) = x - proj_deep(x).
    proj_deep shrinks as the bed shoals eastward, so f is strictly
    increasing and the root unique; the root can never exceed proj_deep at
    x = 0, which seeds the bracket. The returned position keeps the deep
    edge at or a hair west of the boundary (never short of it).

    Raises NoFeasibleStartError when x_max (usually the region width) lies
    west of the root, i.e. even the easternmost allowed line would overreach
    the boundary.
    """

    def overshoot(x: float) -> bool:
        # west of the root: the deep edge still lies past the boundary
        proj_deep, _ = horizontal_footprint(swath_at(profile, xdcr, x), profile.slope_alpha)
        return x - proj_deep < 0.0

    hi = horizontal_footprint(swath_at(profile, xdcr, 0.0), profile.slope_alpha)[0]
    hi = min(hi, _wet_limit(profile))
    if x_max is not None and x_max < hi:
        if overshoot(x_max):
            raise NoFeasibleStartError(
                f"no feasible start: a line at x = {x_max:.3f} m still reaches "
                "past the west boundary"
            )
        hi = x_max
    if not overshoot(0.0):
        # zero-width swath cannot arise from validated inputs; keep the
        # degenerate answer well defined anyway
        return 0.0
    return _bisect(overshoot, 0.0, hi)


def next_line_position(
    profile: DepthProfile, xdcr: TransducerSpec, x_prev: float, eta_target: float
) -> float:
    """x of the next line east of x_prev holding the target overlap fraction.

    eta(x) falls monotonically from 1 at x_prev to <= 0 one previous-width
    east, so the target crossing is unique. Bisection keeps the west
    endpoint at eta >= eta_target and returns it, so the achieved overlap
    never undershoots the target (and exceeds it by < 1e-4).

    Raises RegionExhaustedError when the bed surfaces east of x_prev before
    the overlap can fall to the target.
    """
    if not 0.0 < eta_target < 1.0:
        raise ValueError(f"overlap target must be in (0, 1), got {eta_target}")
    hi = x_prev + swath_at(profile, xdcr, x_prev).total_width
    wet = _wet_limit(profile)
    if hi > wet:
        hi = wet
        if overlap_ratio(profile, xdcr, x_prev, hi) >= eta_target:
            raise RegionExhaustedError(
                f"region exhausted: seabed surfaces near x = {wet:.3f} m before the "
                f"overlap can drop to {eta_target:g}"
            )
    return _bisect(
        lambda x: overlap_ratio(profile, xdcr, x_prev, x) >= eta_target, x_prev, hi
    )


def plan_survey(region: SurveyRegion, xdcr: TransducerSpec, eta_target: float) -> SurveyPlan:
    """Greedy west-to-east plan: lines at the target overlap until covered.

    The first line pins its deep edge to the west boundary; each later line
    keeps the target overlap with its predecessor; placement stops once a
    line's shallow edge reaches the east boundary. Infeasibility surfaces as
    a PlanningError carrying whatever partial plan existed.
    """
    if not 0.0 < eta_target < 1.0:
        raise ValueError(f"overlap target must be in (0, 1), got {eta_target}")
    profile = derive_profile(region)
    if _wet_limit(profile) <= region.width_ew:
        # A bed surfacing inside the region can never satisfy the east
        # boundary termination: widths decay geometrically toward the
        # surfacing point and placement would recurse forever.
        raise RegionExhaustedError(
            f"region exhausted: seabed surfaces at x = {_wet_limit(profile):.3f} m, "
            f"inside the {region.width_ew:.3f} m east-west extent"
        )
    placements: list[LinePlacement] = []
    try:
        x = first_line_position(profile, xdcr, x_max=region.width_ew)
        section = swath_at(profile, xdcr, x)
        placements.append(
            LinePlacement(x, section.local_depth, section.total_width, None)
        )
        while True:
            _, proj_shallow = horizontal_footprint(section, profile.slope_alpha)
            if x + proj_shallow >= region.width_ew:
                break
            x_next = next_line_position(profile, xdcr, x, eta_target)
            if x_next - x <= 1e-9 * max(1.0, x):
                raise RegionExhaustedError(
                    f"region exhausted: placement stalled at x = {x:.3f} m"
                )
            achieved = overlap_ratio(profile, xdcr, x, x_next)
            section = swath_at(profile, xdcr, x_next)
            placements.append(
                LinePlacement(x_next, section.local_depth, section.total_width, achieved)
            )
            x = x_next
    except PlanningError as err:
        if placements:
            err.partial_plan = _as_plan(placements, region)
        raise
    return _as_plan(placements, region)


def _as_plan(placements: list[LinePlacement], region: SurveyRegion) -> SurveyPlan:
    return SurveyPlan(
        placements=tuple(placements),
        line_length=region.length_ns,
        line_count=len(placements),
        total_track_length=len(placements) * region.length_ns / METERS_PER_NAUTICAL_MILE,
    )
