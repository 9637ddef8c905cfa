"""Layout of the platform and its three heaving absorbers."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..environment.hydro import RADIUS_RANGE
from ..errors import DomainError

#: Valid range for both PTO stiffness (N/m) and damping (N s/m).
PTO_RANGE = (1.0e1, 1.0e10)


@dataclass(frozen=True)
class Geometry:
    """Three absorbers spaced 120 degrees apart at distance `spacing` from the
    platform center, one directly down-wave. Only the along-wave coordinate
    matters for the colinear seas modeled here.

    Parameters
    ----------
    spacing : float
        Center-to-center distance L in meters.
    radius : float
        Absorber radius a in meters.
    clearance : float
        Minimum allowed spacing - radius, default 12 m.
    """

    spacing: float
    radius: float
    clearance: float = 12.0

    def __post_init__(self):
        if not (RADIUS_RANGE[0] <= self.radius <= RADIUS_RANGE[1]):
            raise DomainError(
                f"radius {self.radius} outside {list(RADIUS_RANGE)}"
            )
        if self.spacing <= 0.0:
            raise DomainError(f"spacing must be > 0, got {self.spacing}")
        if self.spacing - self.radius < self.clearance:
            raise DomainError(
                f"spacing - radius = {self.spacing - self.radius:.3f} m "
                f"violates the {self.clearance} m clearance"
            )

    @property
    def wec_x(self) -> np.ndarray:
        """Along-wave absorber coordinates (m): one at +L, the symmetric pair
        at -L/2."""
        L = self.spacing
        return np.array([L, -0.5 * L, -0.5 * L])


@dataclass(frozen=True)
class PtoSetting:
    """Linear power take-off: spring stiffness and damping on the relative
    heave between one absorber and the platform."""

    stiffness: float
    damping: float

    def __post_init__(self):
        lo, hi = PTO_RANGE
        if not (lo <= self.stiffness <= hi):
            raise DomainError(f"pto stiffness {self.stiffness} outside [{lo}, {hi}]")
        if not (lo <= self.damping <= hi):
            raise DomainError(f"pto damping {self.damping} outside [{lo}, {hi}]")
