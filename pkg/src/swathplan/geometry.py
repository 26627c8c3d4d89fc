"""Swath geometry for a multibeam echosounder over a planar sloped seabed.

All angles cross the public interface in degrees and all lengths in meters.
Depths are positive numbers measured downward from the sea surface. The
seabed frame puts +x in the downhill direction, so depth grows along +x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BeamGrazeError,
    InvalidDepthError,
    PlanningError,
    SurfacedSeabedError,
)

# Reject cross-track slopes this close (degrees) to the outer-beam angle;
# the deep-side extent diverges as the beam becomes parallel to the bed.
GRAZING_MARGIN_DEG = 1e-9


@dataclass(frozen=True)
class PlanarSeabed:
    """Planar seabed model: depth grows linearly in the downhill (+x) direction.

    Attributes
    ----------
    reference_depth : float
        Water depth (m) at the frame origin, > 0.
    slope_alpha : float
        Dip angle of the bed (deg), 0 <= alpha < 90.
    """

    reference_depth: float
    slope_alpha: float

    def __post_init__(self):
        if self.reference_depth <= 0.0:
            raise ValueError(f"reference depth must be positive, got {self.reference_depth}")
        if not 0.0 <= self.slope_alpha < 90.0:
            raise ValueError(f"slope angle must be in [0, 90) degrees, got {self.slope_alpha}")


@dataclass(frozen=True)
class TransducerSpec:
    """Multibeam transducer described by the full opening angle between outer beams."""

    opening_angle_theta: float

    def __post_init__(self):
        if not 0.0 < self.opening_angle_theta < 180.0:
            raise ValueError(
                f"opening angle must be in (0, 180) degrees, got {self.opening_angle_theta}"
            )

    @property
    def half_angle(self) -> float:
        """Half opening angle (deg): the tilt of each outer beam from vertical."""
        return 0.5 * self.opening_angle_theta


@dataclass(frozen=True)
class ShipFix:
    """Ship position on a straight survey line through the frame origin.

    Attributes
    ----------
    distance_from_center : float
        Signed along-line distance (m) from the origin; negative is astern.
    heading_beta : float
        Line heading (deg) measured from +x (the downhill direction), in [0, 360).
    """

    distance_from_center: float
    heading_beta: float

    def __post_init__(self):
        if not 0.0 <= self.heading_beta < 360.0:
            raise ValueError(f"heading must be in [0, 360) degrees, got {self.heading_beta}")


@dataclass(frozen=True)
class SwathCrossSection:
    """Across-track swath geometry at one ship fix.

    Extents are measured on the seabed (slope distances, m); the deep half is
    the downhill side. total_width == half_deep + half_shallow by construction.
    """

    local_depth: float
    effective_gamma: float
    half_deep: float
    half_shallow: float
    total_width: float


def along_line_depth(seabed: PlanarSeabed, fix: ShipFix) -> float:
    """Water depth (m) under the ship at a fix on a straight line.

    The bed is planar, so depth is affine in the along-line distance with
    slope cos(beta) * tan(alpha): a heading of 0 runs straight downhill,
    90/270 follow a depth contour, 180 runs uphill.

    Raises
    ------
    SurfacedSeabedError
        If the fix lies beyond the line where the bed breaks the surface.
    """
    depth = seabed.reference_depth + fix.distance_from_center * math.cos(
        math.radians(fix.heading_beta)
    ) * math.tan(math.radians(seabed.slope_alpha))
    if depth <= 0.0:
        raise SurfacedSeabedError(
            f"surfaced seabed: depth {depth:.3f} m at distance "
            f"{fix.distance_from_center:.3f} m on heading {fix.heading_beta:g} deg"
        )
    return depth


def _check_angles(alpha_deg: float, beta_deg: float) -> None:
    if not 0.0 <= alpha_deg < 90.0:
        raise ValueError(f"slope angle must be in [0, 90) degrees, got {alpha_deg}")
    if not 0.0 <= beta_deg < 360.0:
        raise ValueError(f"heading must be in [0, 360) degrees, got {beta_deg}")


def effective_slope(alpha_deg: float, beta_deg: float) -> float:
    """Cross-track bed slope gamma (deg) seen by a line at heading beta.

    Closed form:

        cos(gamma) = cos(alpha) / sqrt(cos^2(alpha) + sin^2(beta) sin^2(alpha))

    gamma runs from 0 (line straight up/downhill) to alpha (line along a
    depth contour) and is symmetric under beta -> 360 - beta.
    """
    _check_angles(alpha_deg, beta_deg)
    a = math.radians(alpha_deg)
    b = math.radians(beta_deg)
    cos_g = math.cos(a) / math.sqrt(math.cos(a) ** 2 + math.sin(b) ** 2 * math.sin(a) ** 2)
    return math.degrees(math.acos(min(1.0, cos_g)))


def effective_slope_numeric(alpha_deg: float, beta_deg: float) -> float:
    """Gamma (deg) from explicit vector construction; oracle for effective_slope.

    Builds the across-track direction n3 = n1 x n2 (line direction crossed
    with the bed normal) and measures its angle to its own horizontal
    projection n4. Returns 0 by convention where a projection degenerates
    to zero length.
    """
    _check_angles(alpha_deg, beta_deg)
    a = math.radians(alpha_deg)
    b = math.radians(beta_deg)
    n1 = np.array([math.cos(b), math.sin(b), 0.0])
    n2 = np.array([math.sin(a), 0.0, math.cos(a)])
    n3 = np.cross(n1, n2)
    n4 = n3 * np.array([1.0, 1.0, 0.0])
    norm3 = float(np.linalg.norm(n3))
    norm4 = float(np.linalg.norm(n4))
    if norm3 == 0.0 or norm4 == 0.0:
        return 0.0
    cos_g = float(np.dot(n3, n4)) / (norm3 * norm4)
    return math.degrees(math.acos(max(-1.0, min(1.0, cos_g))))


def swath_cross_section(depth: float, gamma_deg: float, xdcr: TransducerSpec) -> SwathCrossSection:
    """Across-track swath on the bed for a given local depth and cross-track slope.

    Law-of-sines extents of the two half swaths, measured on the bed:

        half_deep    = depth * sin(theta/2) / sin(90 - theta/2 - gamma)
        half_shallow = depth * sin(theta/2) / sin(90 - theta/2 + gamma)

    Parameters
    ----------
    depth : float
        Local water depth (m), > 0.
    gamma_deg : float
        Cross-track bed slope (deg), >= 0.
    xdcr : TransducerSpec

    Raises
    ------
    InvalidDepthError
        On depth <= 0.
    BeamGrazeError
        Once gamma comes within GRAZING_MARGIN_DEG of 90 - theta/2, where
        the deep-side beam stops intersecting the bed.
    """
    if depth <= 0.0:
        raise InvalidDepthError(f"invalid depth: {depth:.3f} m (must be positive)")
    if gamma_deg < 0.0:
        raise ValueError(f"cross-track slope must be >= 0, got {gamma_deg}")
    half = xdcr.half_angle
    if gamma_deg >= 90.0 - half - GRAZING_MARGIN_DEG:
        raise BeamGrazeError(
            f"beam grazes seabed: cross-track slope {gamma_deg:.6g} deg at or beyond the "
            f"{90.0 - half:.6g} deg limit for a {xdcr.opening_angle_theta:g} deg opening"
        )
    sin_half = math.sin(math.radians(half))
    half_deep = depth * sin_half / math.sin(math.radians(90.0 - half - gamma_deg))
    half_shallow = depth * sin_half / math.sin(math.radians(90.0 - half + gamma_deg))
    return SwathCrossSection(
        local_depth=depth,
        effective_gamma=gamma_deg,
        half_deep=half_deep,
        half_shallow=half_shallow,
        total_width=half_deep + half_shallow,
    )


def horizontal_footprint(
    section: SwathCrossSection, cross_track_slope_deg: float
) -> tuple[float, float]:
    """Project the swath halves onto the horizontal: (proj_deep, proj_shallow).

    Bed-measured extents shrink by cos(slope) when mapped to horizontal
    across-track distance; the slope is passed explicitly because the
    section does not know which component of the bed dip it crossed.
    """
    c = math.cos(math.radians(cross_track_slope_deg))
    return section.half_deep * c, section.half_shallow * c


def width_table(
    seabed: PlanarSeabed,
    xdcr: TransducerSpec,
    headings: list[float],
    distances: list[float],
) -> list[list[float | None]]:
    """Swath total widths (m) for every (heading, distance) pair.

    Rows follow ``headings``, columns follow ``distances`` (meters along the
    line from the frame origin). Cells whose geometry fails (surfaced bed,
    grazing beam) carry None; the rest of the grid keeps computing.
    """
    rows: list[list[float | None]] = []
    for beta in headings:
        gamma = effective_slope(seabed.slope_alpha, beta)
        row: list[float | None] = []
        for dist in distances:
            try:
                depth = along_line_depth(seabed, ShipFix(dist, beta))
                row.append(swath_cross_section(depth, gamma, xdcr).total_width)
            except PlanningError:
                row.append(None)
        rows.append(row)
    return rows
