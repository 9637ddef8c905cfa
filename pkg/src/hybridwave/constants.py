"""Physical constants and platform parameters.

Everything the surrogate model treats as given lives in one flat mapping so a
single YAML document can override any of it. Platform rigid-body and
hydrodynamic numbers are seeded from a published semi-submersible design and
are deliberately order-of-magnitude engineering values, not validated
coefficients; the model built on top of them is a surrogate.
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass

import yaml

from .errors import ConfigurationError


@dataclass(frozen=True)
class PhysicsConfig:
    # fluids
    rho_water: float = 1025.0
    g: float = 9.81
    rho_air: float = 1.225

    # platform rigid body (hull + tower + nacelle lumped)
    platform_mass: float = 1.4072e7          # kg
    platform_i55: float = 1.10e10            # kg m^2, pitch about CG
    platform_volume: float = 13917.0         # m^3 displaced
    z_wt: float = 90.0                       # m, nacelle height above SWL
    z_cg: float = -8.0                       # m, system CG (below SWL)

    # constant per-mode platform hydrodynamics (surge, heave, pitch)
    platform_a11: float = 8.0e6
    platform_a33: float = 1.40e7
    platform_a55: float = 1.20e10
    platform_a15: float = -8.0e7
    platform_b11: float = 1.0e5
    platform_b33: float = 2.5e5
    platform_b55: float = 3.0e8
    platform_hs_k33: float = 3.836e6         # N/m
    platform_hs_k55: float = 1.30e9          # N m/rad
    exc_decay_depth: float = 15.0            # m, effective pressure decay depth
    pitch_exc_arm: float = 12.0              # m, wave pitch moment arm

    # linearized mooring stiffness (diagonal)
    moor_k11: float = 7.08e4
    moor_k33: float = 1.91e4
    moor_k55: float = 8.73e7

    # lumped quadratic drag coefficients, F = -c_d * v * |v|
    cd_surge: float = 2.0e5                  # N s^2/m^2
    cd_heave: float = 5.0e5
    cd_pitch: float = 5.0e9                  # N m s^2
    cd_wec: float = 2.0e4

    # rotor aerodynamics (constant thrust-slope linearization)
    rotor_area: float = 12469.0              # m^2
    aero_ct: float = 0.80
    turb_intensity: float = 0.14
    kaimal_length: float = 340.2             # m

    # wave spectrum
    jonswap_gamma: float = 3.3

    # heaving-sphere surrogate shape parameters
    wec_am_zero: float = 0.83                # added mass / displaced mass at ka -> 0
    wec_am_inf: float = 0.50                 # and at ka -> inf
    wec_exc_decay: float = 0.65              # excitation decay rate in ka

    # geometry
    clearance: float = 12.0                  # m, min (spacing - radius)

    # statistical linearization controls
    lin_tol: float = 1e-4
    lin_max_iter: int = 50
    lin_relax: float = 0.5

    def replace(self, **kwargs) -> "PhysicsConfig":
        return dataclasses.replace(self, **kwargs)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)

    def config_hash(self) -> str:
        payload = json.dumps(self.as_dict(), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


_FIELDS = {f.name: f.type for f in dataclasses.fields(PhysicsConfig)}


def physics_from_mapping(mapping: dict | None) -> PhysicsConfig:
    """Build a PhysicsConfig from a flat mapping, rejecting unknown keys."""
    if not mapping:
        return PhysicsConfig()
    unknown = sorted(set(mapping) - set(_FIELDS))
    if unknown:
        raise ConfigurationError(
            f"unknown physics keys {unknown}; valid keys: {sorted(_FIELDS)}"
        )
    return PhysicsConfig(**mapping)


def load_physics(path: str) -> PhysicsConfig:
    with open(path) as fh:
        doc = yaml.safe_load(fh) or {}
    if not isinstance(doc, dict):
        raise ConfigurationError(f"{path}: expected a mapping at top level")
    return physics_from_mapping(doc)


def save_physics(cfg: PhysicsConfig, path: str) -> None:
    with open(path, "w") as fh:
        yaml.safe_dump(cfg.as_dict(), fh, sort_keys=True)
