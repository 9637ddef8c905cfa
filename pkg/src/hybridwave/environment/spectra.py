"""Wave and wind input spectra on a shared angular-frequency grid."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform angular-frequency grid used by every frequency-domain solve.

    Parameters
    ----------
    n : int
        Number of grid points.
    w_min, w_max : float
        Grid limits in rad/s, 0 < w_min < w_max.
    """

    n: int = 200
    w_min: float = 0.1
    w_max: float = 3.0
    omega: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.n}")
        if not (0.0 < self.w_min < self.w_max):
            raise DomainError(
                f"need 0 < w_min < w_max, got [{self.w_min}, {self.w_max}]"
            )
        object.__setattr__(
            self, "omega", np.linspace(self.w_min, self.w_max, self.n)
        )

    @property
    def trapz_weights(self) -> np.ndarray:
        """Trapezoid quadrature weights matching `omega`."""
        w = np.full(self.n, self.omega[1] - self.omega[0])
        w[0] *= 0.5
        w[-1] *= 0.5
        return w


def _as_omega(grid) -> np.ndarray:
    if isinstance(grid, FrequencyGrid):
        return grid.omega
    return np.asarray(grid, dtype=float)


def _jonswap_shape(omega: np.ndarray, tp: float, gamma: float) -> np.ndarray:
    """Unnormalized JONSWAP density, zero at omega <= 0."""
    wp = 2.0 * np.pi / tp
    out = np.zeros_like(omega)
    pos = omega > 0.0
    w = omega[pos]
    sig = np.where(w <= wp, 0.07, 0.09)
    peak_arg = np.exp(-((w - wp) ** 2) / (2.0 * (sig * wp) ** 2))
    out[pos] = w ** -5.0 * np.exp(-1.25 * (wp / w) ** 4) * gamma ** peak_arg
    return out


def jonswap_spectrum(grid, hs: float, tp: float, gamma: float = 3.3) -> np.ndarray:
    """One-sided wave elevation spectrum S(omega), m^2 s/rad.

    The density is rescaled so its integral over frequency equals hs^2/16
    (the zeroth moment of a sea state of significant height hs). The
    normalization integral runs on an internal dense grid spanning the
    spectrum, so the returned values are a pure function of (hs, tp, gamma)
    regardless of the evaluation grid.
    """
    omega = _as_omega(grid)
    if tp <= 0.0:
        raise DomainError(f"peak period must be positive, got {tp}")
    if hs < 0.0:
        raise DomainError(f"significant height must be >= 0, got {hs}")
    if gamma < 1.0:
        raise DomainError(f"peak enhancement must be >= 1, got {gamma}")
    if hs == 0.0:
        return np.zeros_like(omega)
    wp = 2.0 * np.pi / tp
    ref = np.linspace(0.2 * wp, 12.0 * wp, 6000)
    m0_shape = np.trapezoid(_jonswap_shape(ref, tp, gamma), ref)
    scale = (hs * hs / 16.0) / m0_shape
    return scale * _jonswap_shape(omega, tp, gamma)


def kaimal_spectrum(
    grid,
    uw: float,
    intensity: float = 0.14,
    length: float = 340.2,
) -> np.ndarray:
    """Longitudinal wind-speed spectrum S_u(omega), (m/s)^2 s/rad.

    Standard single-point Kaimal form; the analytic normalization makes the
    integral over f in [0, inf) equal sigma_u^2 = (intensity*uw)^2 exactly.
    """
    omega = _as_omega(grid)
    if uw < 0.0:
        raise DomainError(f"mean wind speed must be >= 0, got {uw}")
    if intensity < 0.0:
        raise DomainError(f"turbulence intensity must be >= 0, got {intensity}")
    if uw == 0.0 or intensity == 0.0:
        return np.zeros_like(omega)
    sigma2 = (intensity * uw) ** 2
    lt = length / uw
    f = omega / (2.0 * np.pi)
    s_f = sigma2 * 4.0 * lt / (1.0 + 6.0 * f * lt) ** (5.0 / 3.0)
    return s_f / (2.0 * np.pi)
