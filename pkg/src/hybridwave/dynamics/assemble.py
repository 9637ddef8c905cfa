"""Assembly of the coupled frequency-domain equations of motion.

Six degrees of freedom: platform surge, heave, pitch (indices 0..2) and the
three absorber heaves (3..5). For each grid frequency the system is

    [-w^2 (M + A(w)) + i w (B_rad(w) + B_aero + B_visc + B_pto)
        + K_moor + K_hs + K_pto] q(w) = Q(w)

with a wave load column per unit wave amplitude and a wind load column per
unit wind-speed fluctuation. The PTO couples each absorber's heave to the
platform's heave and pitch through the relative stroke
d_i = q_wec_i - q_heave + x_i * q_pitch, which yields symmetric stiffness and
damping blocks k * g g^T with g = (0, -1, x_i, e_i).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..constants import PhysicsConfig
from ..environment.hydro import PlatformHydro, SphereHydro
from .geometry import Geometry, PtoSetting

N_DOF = 6
#: DOF index map.
SURGE, HEAVE, PITCH = 0, 1, 2
WEC0 = 3


@dataclass
class SystemMatrices:
    """Frequency-indexed blocks of the assembled system."""

    omega: np.ndarray          # (nw,)
    mass: np.ndarray           # (6,6)
    added: np.ndarray          # (nw,6,6)
    damping_rad: np.ndarray    # (nw,6,6)
    damping_pto: np.ndarray    # (6,6)
    damping_aero: np.ndarray   # (6,6)
    damping_visc: np.ndarray   # (6,6) diagonal, equivalent-linear
    stiffness: np.ndarray      # (6,6) mooring + hydrostatic + pto
    q_wave: np.ndarray         # (nw,6) complex, per unit wave amplitude
    q_wind: np.ndarray         # (6,) real, per unit wind fluctuation
    wec_x: np.ndarray          # (3,)
    lever: float               # z_wt - z_cg

    def impedance(self) -> np.ndarray:
        """Dense (nw, 6, 6) complex impedance matrix."""
        w = self.omega[:, None, None]
        b_const = (
            self.damping_pto + self.damping_aero + self.damping_visc
        )[None, :, :]
        k = self.stiffness[None, :, :]
        m = self.mass[None, :, :] + self.added
        return -(w ** 2) * m + 1j * w * (self.damping_rad + b_const) + k

    def loads(self) -> np.ndarray:
        """(nw, 6, 2) complex: wave column, wind column."""
        nw = self.omega.size
        out = np.zeros((nw, N_DOF, 2), dtype=complex)
        out[:, :, 0] = self.q_wave
        out[:, :, 1] = self.q_wind[None, :]
        return out


def pto_coupling_vectors(wec_x: np.ndarray) -> np.ndarray:
    """Rows g_i with d_i = g_i . q, one per absorber."""
    g = np.zeros((3, N_DOF))
    for i, x in enumerate(wec_x):
        g[i, HEAVE] = -1.0
        g[i, PITCH] = x
        g[i, WEC0 + i] = 1.0
    return g


def assemble(
    geometry: Geometry,
    pto: PtoSetting,
    sphere: SphereHydro,
    platform: PlatformHydro,
    cfg: PhysicsConfig,
    uw: float = 0.0,
    b_visc: np.ndarray | None = None,
) -> SystemMatrices:
    """Build the full system for one sea state.

    Parameters
    ----------
    pto : PtoSetting
        Applied identically to all three absorbers (one setting per state).
    uw : float
        Mean wind speed; sets the aerodynamic damping block and the wind
        load direction.
    b_visc : array or None
        Equivalent-linear viscous damping per DOF (6,), zeros when None.
        Supplied by the statistical linearization loop.
    """
    omega = platform.omega
    nw = omega.size
    wec_x = geometry.wec_x
    lever = cfg.z_wt - cfg.z_cg

    mass = np.zeros((N_DOF, N_DOF))
    mass[:3, :3] = platform.mass
    for i in range(3):
        mass[WEC0 + i, WEC0 + i] = sphere.mass

    added = np.zeros((nw, N_DOF, N_DOF))
    added[:, :3, :3] = platform.added_mass[None, :, :]
    for i in range(3):
        added[:, WEC0 + i, WEC0 + i] = sphere.added_mass

    damping_rad = np.zeros((nw, N_DOF, N_DOF))
    damping_rad[:, :3, :3] = platform.damping[None, :, :]
    for i in range(3):
        damping_rad[:, WEC0 + i, WEC0 + i] = sphere.damping

    g = pto_coupling_vectors(wec_x)
    damping_pto = np.zeros((N_DOF, N_DOF))
    k_pto = np.zeros((N_DOF, N_DOF))
    for i in range(3):
        outer = np.outer(g[i], g[i])
        damping_pto += pto.damping * outer
        k_pto += pto.stiffness * outer

    thrust_slope = cfg.rho_air * cfg.rotor_area * cfg.aero_ct * uw
    u_aero = np.zeros(N_DOF)
    u_aero[SURGE] = 1.0
    u_aero[PITCH] = lever
    damping_aero = thrust_slope * np.outer(u_aero, u_aero)

    if b_visc is None:
        b_visc = np.zeros(N_DOF)
    damping_visc = np.diag(np.asarray(b_visc, dtype=float))

    stiffness = np.zeros((N_DOF, N_DOF))
    stiffness[:3, :3] = platform.mooring + platform.hydrostatic
    for i in range(3):
        stiffness[WEC0 + i, WEC0 + i] = sphere.hydrostatic
    stiffness = stiffness + k_pto

    # wave loads: platform at x = 0, absorbers phased by their position
    k_wave = omega ** 2 / cfg.g
    q_wave = np.zeros((nw, N_DOF), dtype=complex)
    q_wave[:, :3] = platform.excitation.T
    for i, x in enumerate(wec_x):
        q_wave[:, WEC0 + i] = sphere.excitation * np.exp(-1j * k_wave * x)

    q_wind = thrust_slope * u_aero

    return SystemMatrices(
        omega=omega,
        mass=mass,
        added=added,
        damping_rad=damping_rad,
        damping_pto=damping_pto,
        damping_aero=damping_aero,
        damping_visc=damping_visc,
        stiffness=stiffness,
        q_wave=q_wave,
        q_wind=q_wind,
        wec_x=wec_x,
        lever=lever,
    )
