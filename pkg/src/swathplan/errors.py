"""Exception types shared by the geometry, planning and verification layers."""

from __future__ import annotations


class PlanningError(Exception):
    """Base class for geometry and placement failures.

    ``partial_plan`` carries whatever placements were committed before the
    failure so callers can print them for diagnosis; it stays None when the
    failure happened before any line was placed.
    """

    def __init__(self, message: str, partial_plan=None):
        super().__init__(message)
        self.partial_plan = partial_plan


class SurfacedSeabedError(PlanningError):
    """Depth evaluated to zero or negative: the seabed breaks the surface."""


class InvalidDepthError(PlanningError):
    """A swath cross-section was requested for a non-positive water depth."""


class BeamGrazeError(PlanningError):
    """The outer beam runs parallel to the bed (or away from it) and never lands."""


class NoFeasibleStartError(PlanningError):
    """No position inside the region puts the first line's deep edge on the west boundary."""


class RegionExhaustedError(PlanningError):
    """The seabed surfaces before line placement can finish covering the region."""


class NoSolutionInBracketError(PlanningError):
    """A candidate scan ran through its bracket without an acceptable position."""
