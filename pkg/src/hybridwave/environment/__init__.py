from .spectra import FrequencyGrid, jonswap_spectrum, kaimal_spectrum
from .seastate import SeaState, SiteScatter, load_site, save_site
from .hydro import SphereHydro, PlatformHydro, sphere_hydro, platform_hydro, RADIUS_RANGE
from .sites import (
    SITE_SPECS,
    BUNDLED_SITES,
    generate_site,
    write_bundled_sites,
    load_bundled_site,
    resolve_site,
    wave_power_flux,
    wind_power_density,
)

__all__ = [
    "FrequencyGrid",
    "jonswap_spectrum",
    "kaimal_spectrum",
    "SeaState",
    "SiteScatter",
    "load_site",
    "save_site",
    "SphereHydro",
    "PlatformHydro",
    "sphere_hydro",
    "platform_hydro",
    "RADIUS_RANGE",
    "SITE_SPECS",
    "BUNDLED_SITES",
    "generate_site",
    "write_bundled_sites",
    "load_bundled_site",
    "resolve_site",
    "wave_power_flux",
    "wind_power_density",
]
