"""Reference frequency-domain response pipeline.

This is the readable implementation: dense batched solves and explicit
statistical linearization. The numba kernel in `fastpath` reproduces it and
is cross-checked against it in the test suite; everything that needs to be
auditable (tests, oracles, landscape single calls) should come through here.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..constants import PhysicsConfig
from ..environment.hydro import PlatformHydro, SphereHydro
from ..errors import NumericalError
from .assemble import HEAVE, PITCH, SURGE, WEC0, SystemMatrices, assemble
from .geometry import Geometry, PtoSetting

#: sqrt(8/pi), the Gaussian equivalent-linearization factor for v|v| drag.
GAUSS_DRAG = float(np.sqrt(8.0 / np.pi))


@dataclass(frozen=True)
class ResponseStats:
    """Standard deviations of the stationary response for one sea state."""

    sigma_q: np.ndarray        # (6,) displacement std per DOF
    sigma_vel: np.ndarray      # (6,) velocity std per DOF
    sigma_relvel: np.ndarray   # (3,) relative-stroke velocity std per absorber
    sigma_nacelle: float       # nacelle horizontal acceleration std
    power: float               # mean absorbed power, W
    converged: bool
    iterations: int


@dataclass(frozen=True)
class FowtStats:
    """Platform-only (3 DOF) response statistics."""

    sigma_q: np.ndarray        # (3,)
    sigma_vel: np.ndarray      # (3,)
    sigma_nacelle: float
    converged: bool
    iterations: int


@dataclass(frozen=True)
class WecStats:
    """Single absorber on a fixed reference: 1 DOF heave."""

    sigma_disp: float
    sigma_vel: float
    power: float
    converged: bool
    iterations: int


def trapezoid_weights(omega: np.ndarray) -> np.ndarray:
    w = np.empty_like(omega)
    w[1:-1] = 0.5 * (omega[2:] - omega[:-2])
    w[0] = 0.5 * (omega[1] - omega[0])
    w[-1] = 0.5 * (omega[-1] - omega[-2])
    return w


def _solve_batched(z: np.ndarray, rhs: np.ndarray, omega: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(z, rhs)
    except np.linalg.LinAlgError as exc:
        dets = np.abs(np.linalg.det(z))
        idx = int(np.argmin(dets))
        raise NumericalError(
            f"singular impedance at frequency index {idx} "
            f"(omega={omega[idx]:.5g} rad/s)"
        ) from exc


def solve_response(
    sysm: SystemMatrices,
    s_wave: np.ndarray,
    s_wind: np.ndarray,
    b_pto: float,
) -> ResponseStats:
    """Solve the assembled system against wave and wind spectra.

    Response variances integrate |H|^2 S over the grid with trapezoid
    weights, wave and wind channels summed (independent processes).
    """
    omega = sysm.omega
    wts = trapezoid_weights(omega)
    h = _solve_batched(sysm.impedance(), sysm.loads(), omega)  # (nw,6,2)

    spec = np.stack([s_wave, s_wind], axis=-1)                 # (nw,2)
    base = wts[:, None] * spec                                 # (nw,2)
    e_disp = np.abs(h) ** 2                                    # (nw,6,2)
    var_q = np.einsum("wdc,wc->d", e_disp, base)
    var_vel = np.einsum("wdc,wc->d", e_disp, base * omega[:, None] ** 2)

    x = sysm.wec_x
    rel = (
        h[:, WEC0:, :]
        - h[:, HEAVE, None, :]
        + x[None, :, None] * h[:, PITCH, None, :]
    )                                                          # (nw,3,2)
    var_rel = np.einsum(
        "wdc,wc->d", np.abs(rel) ** 2, base * omega[:, None] ** 2
    )

    nac = -(omega[:, None] ** 2) * (h[:, SURGE, :] + sysm.lever * h[:, PITCH, :])
    var_nac = float(np.einsum("wc,wc->", np.abs(nac) ** 2, base))

    return ResponseStats(
        sigma_q=np.sqrt(var_q),
        sigma_vel=np.sqrt(var_vel),
        sigma_relvel=np.sqrt(var_rel),
        sigma_nacelle=float(np.sqrt(var_nac)),
        power=float(b_pto * var_rel.sum()),
        converged=True,
        iterations=0,
    )


def drag_vector(cfg: PhysicsConfig) -> np.ndarray:
    return np.array(
        [cfg.cd_surge, cfg.cd_heave, cfg.cd_pitch, cfg.cd_wec, cfg.cd_wec, cfg.cd_wec]
    )


def linearize(
    geometry: Geometry,
    pto: PtoSetting,
    sphere: SphereHydro,
    platform: PlatformHydro,
    cfg: PhysicsConfig,
    s_wave: np.ndarray,
    s_wind: np.ndarray,
    uw: float,
) -> ResponseStats:
    """Statistical linearization of the quadratic drag terms.

    Fixed-point iteration: solve with the current equivalent damping, update
    B_eq = sqrt(8/pi) * sigma_vel * c_d per DOF under relaxation, repeat until
    every retained sigma is stable to `cfg.lin_tol` relative. Non-convergence
    within `cfg.lin_max_iter` is flagged on the result, not raised.
    """
    cds = drag_vector(cfg)
    bv = np.zeros(6)
    prev = None
    stats = None
    converged = False
    iterations = 0
    for it in range(1, cfg.lin_max_iter + 1):
        iterations = it
        sysm = assemble(
            geometry, pto, sphere, platform, cfg, uw=uw, b_visc=bv
        )
        stats = solve_response(sysm, s_wave, s_wind, pto.damping)
        target = GAUSS_DRAG * stats.sigma_vel * cds
        cur = np.concatenate(
            [stats.sigma_vel, stats.sigma_relvel, [stats.sigma_nacelle]]
        )
        if np.array_equal(target, bv):
            converged = True
            break
        if prev is not None:
            delta = np.abs(cur - prev) / np.maximum(np.abs(prev), 1e-300)
            if float(delta.max()) < cfg.lin_tol:
                converged = True
                break
        bv = bv + cfg.lin_relax * (target - bv)
        prev = cur
    return replace(stats, converged=converged, iterations=iterations)


def isolated_fowt(
    platform: PlatformHydro,
    cfg: PhysicsConfig,
    s_wave: np.ndarray,
    s_wind: np.ndarray,
    uw: float,
) -> FowtStats:
    """Platform without absorbers: 3-DOF response with the same loads,
    aero damping, and drag linearization."""
    omega = platform.omega
    wts = trapezoid_weights(omega)
    lever = cfg.z_wt - cfg.z_cg
    thrust_slope = cfg.rho_air * cfg.rotor_area * cfg.aero_ct * uw
    u_aero = np.array([1.0, 0.0, lever])
    b_aero = thrust_slope * np.outer(u_aero, u_aero)
    k_tot = platform.mooring + platform.hydrostatic
    m_tot = platform.mass + platform.added_mass
    cds = np.array([cfg.cd_surge, cfg.cd_heave, cfg.cd_pitch])

    rhs = np.zeros((omega.size, 3, 2), dtype=complex)
    rhs[:, :, 0] = platform.excitation.T
    rhs[:, :, 1] = (thrust_slope * u_aero)[None, :]
    spec = np.stack([s_wave, s_wind], axis=-1)
    base = wts[:, None] * spec

    bv = np.zeros(3)
    prev = None
    out = None
    converged = False
    iterations = 0
    for it in range(1, cfg.lin_max_iter + 1):
        iterations = it
        b_tot = platform.damping + b_aero + np.diag(bv)
        z = (
            -(omega[:, None, None] ** 2) * m_tot[None, :, :]
            + 1j * omega[:, None, None] * b_tot[None, :, :]
            + k_tot[None, :, :]
        )
        h = _solve_batched(z, rhs, omega)
        e = np.abs(h) ** 2
        var_q = np.einsum("wdc,wc->d", e, base)
        var_vel = np.einsum("wdc,wc->d", e, base * omega[:, None] ** 2)
        nac = -(omega[:, None] ** 2) * (h[:, 0, :] + lever * h[:, 2, :])
        var_nac = float(np.einsum("wc,wc->", np.abs(nac) ** 2, base))
        sig_vel = np.sqrt(var_vel)
        out = FowtStats(
            sigma_q=np.sqrt(var_q),
            sigma_vel=sig_vel,
            sigma_nacelle=float(np.sqrt(var_nac)),
            converged=False,
            iterations=it,
        )
        target = GAUSS_DRAG * sig_vel * cds
        cur = np.concatenate([sig_vel, [out.sigma_nacelle]])
        if np.array_equal(target, bv):
            converged = True
            break
        if prev is not None:
            delta = np.abs(cur - prev) / np.maximum(np.abs(prev), 1e-300)
            if float(delta.max()) < cfg.lin_tol:
                converged = True
                break
        bv = bv + cfg.lin_relax * (target - bv)
        prev = cur
    return replace(out, converged=converged, iterations=iterations)


def isolated_wec(
    sphere: SphereHydro,
    pto: PtoSetting,
    cfg: PhysicsConfig,
    s_wave: np.ndarray,
) -> WecStats:
    """One absorber heaving against a fixed reference.

    The PTO reacts against ground, so stroke velocity equals absolute heave
    velocity and the mean power is b_pto * var(velocity).
    """
    omega = sphere.omega
    wts = trapezoid_weights(omega)
    bv = 0.0
    prev = None
    out = None
    converged = False
    iterations = 0
    for it in range(1, cfg.lin_max_iter + 1):
        iterations = it
        z = (
            -(omega ** 2) * (sphere.mass + sphere.added_mass)
            + 1j * omega * (sphere.damping + bv + pto.damping)
            + sphere.hydrostatic
            + pto.stiffness
        )
        h = sphere.excitation / z
        e = np.abs(h) ** 2
        var_d = float(np.sum(wts * e * s_wave))
        var_v = float(np.sum(wts * omega ** 2 * e * s_wave))
        sig_v = np.sqrt(var_v)
        out = WecStats(
            sigma_disp=float(np.sqrt(var_d)),
            sigma_vel=sig_v,
            power=float(pto.damping * var_v),
            converged=False,
            iterations=it,
        )
        target = GAUSS_DRAG * sig_v * cfg.cd_wec
        if target == bv:
            converged = True
            break
        if prev is not None and abs(sig_v - prev) / max(prev, 1e-300) < cfg.lin_tol:
            converged = True
            break
        bv = bv + cfg.lin_relax * (target - bv)
        prev = sig_v
    return replace(out, converged=converged, iterations=iterations)
