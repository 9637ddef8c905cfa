"""Surrogate hydrodynamic coefficients.

Two bodies are modeled. The heaving-sphere WEC gets smooth frequency-dependent
coefficients built so that the deep-water Haskind identity between excitation
and radiation damping holds exactly, and the long-wave excitation limit equals
the hydrostatic stiffness. The platform gets frequency-constant per-mode
coefficients from the configuration. WEC/platform and WEC/WEC hydrodynamic
interaction is deliberately not modeled.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..constants import PhysicsConfig
from ..errors import DomainError
from .spectra import FrequencyGrid

RADIUS_RANGE = (0.5, 15.0)


@dataclass(frozen=True)
class SphereHydro:
    """Per-frequency heave coefficients of one floating sphere.

    added_mass/damping are (nw,) arrays, excitation is complex (nw,) per unit
    wave amplitude with phase referenced to the body's own position.
    """

    omega: np.ndarray
    added_mass: np.ndarray
    damping: np.ndarray
    excitation: np.ndarray
    hydrostatic: float
    mass: float
    radius: float


@dataclass(frozen=True)
class PlatformHydro:
    """Frequency-constant platform coefficients on (surge, heave, pitch).

    Mass/added-mass/damping/stiffness are (3,3); excitation is complex
    (3, nw) per unit wave amplitude at the platform center.
    """

    omega: np.ndarray
    mass: np.ndarray
    added_mass: np.ndarray
    damping: np.ndarray
    hydrostatic: np.ndarray
    mooring: np.ndarray
    excitation: np.ndarray


def sphere_hydro(grid: FrequencyGrid, radius: float, cfg: PhysicsConfig) -> SphereHydro:
    """Heave coefficients for a half-submerged sphere of the given radius.

    The sphere floats neutrally (mass = displaced mass of the half sphere
    2/3 pi rho a^3). Excitation magnitude decays as exp(-lambda ka) from the
    hydrostatic-stiffness long-wave limit; radiation damping follows from the
    Haskind relation B = w^3 |X|^2 / (2 rho g^3), which keeps it positive and
    single-peaked near ka ~ 1. Added mass interpolates between the 0.83 and
    0.50 displaced-mass limits through a rational function of ka.
    """
    a = float(radius)
    if not (RADIUS_RANGE[0] <= a <= RADIUS_RANGE[1]):
        raise DomainError(
            f"radius {a} outside supported range {list(RADIUS_RANGE)}"
        )
    omega = grid.omega
    rho, g = cfg.rho_water, cfg.g
    c33 = rho * g * np.pi * a * a
    mass = (2.0 / 3.0) * np.pi * rho * a ** 3
    ka = omega ** 2 * a / g
    exc_mag = c33 * np.exp(-cfg.wec_exc_decay * ka)
    damping = omega ** 3 * exc_mag ** 2 / (2.0 * rho * g ** 3)
    span = cfg.wec_am_zero - cfg.wec_am_inf
    added = mass * (cfg.wec_am_inf + span / (1.0 + ka ** 2))
    return SphereHydro(
        omega=omega,
        added_mass=added,
        damping=damping,
        excitation=exc_mag.astype(complex),
        hydrostatic=c33,
        mass=mass,
        radius=a,
    )


def platform_hydro(grid: FrequencyGrid, cfg: PhysicsConfig) -> PlatformHydro:
    """Platform coefficients on (surge, heave, pitch) from the configuration."""
    omega = grid.omega
    m = np.array(
        [
            [cfg.platform_mass, 0.0, 0.0],
            [0.0, cfg.platform_mass, 0.0],
            [0.0, 0.0, cfg.platform_i55],
        ]
    )
    added = np.array(
        [
            [cfg.platform_a11, 0.0, cfg.platform_a15],
            [0.0, cfg.platform_a33, 0.0],
            [cfg.platform_a15, 0.0, cfg.platform_a55],
        ]
    )
    damping = np.diag([cfg.platform_b11, cfg.platform_b33, cfg.platform_b55])
    hydrostatic = np.diag([0.0, cfg.platform_hs_k33, cfg.platform_hs_k55])
    mooring = np.diag([cfg.moor_k11, cfg.moor_k33, cfg.moor_k55])

    k = omega ** 2 / cfg.g
    decay = np.exp(-k * cfg.exc_decay_depth)
    f_surge = 1j * (cfg.rho_water * cfg.platform_volume + cfg.platform_a11) \
        * omega ** 2 * decay
    f_heave = cfg.platform_hs_k33 * decay + 0j
    f_pitch = f_surge * cfg.pitch_exc_arm
    excitation = np.vstack([f_surge, f_heave, f_pitch])
    return PlatformHydro(
        omega=omega,
        mass=m,
        added_mass=added,
        damping=damping,
        hydrostatic=hydrostatic,
        mooring=mooring,
        excitation=excitation,
    )
