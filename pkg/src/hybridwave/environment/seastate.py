"""Sea states and site scatter tables."""
from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass

from ..errors import DataError, DomainError

_OCC_TOL = 1e-9
_RENORM_BAND = (0.99, 1.01)
_COLUMNS = ("hs", "tp", "uw", "occurrence")


@dataclass(frozen=True)
class SeaState:
    """One met-ocean bin: significant wave height, peak period, mean wind."""

    hs: float
    tp: float
    uw: float
    occurrence: float

    def __post_init__(self):
        if self.hs < 0.0:
            raise DomainError(f"hs must be >= 0, got {self.hs}")
        if self.tp <= 0.0:
            raise DomainError(f"tp must be > 0, got {self.tp}")
        if self.uw < 0.0:
            raise DomainError(f"uw must be >= 0, got {self.uw}")
        if not (0.0 <= self.occurrence <= 1.0):
            raise DomainError(f"occurrence must be in [0,1], got {self.occurrence}")


@dataclass(frozen=True)
class SiteScatter:
    """A named deployment site: water depth plus an occurrence-weighted
    collection of sea states whose occurrences sum to one."""

    name: str
    depth: float
    states: tuple

    def __post_init__(self):
        if self.depth <= 0.0:
            raise DomainError(f"depth must be > 0, got {self.depth}")
        if not self.states:
            raise DomainError("site needs at least one sea state")
        total = sum(s.occurrence for s in self.states)
        if abs(total - 1.0) > _OCC_TOL:
            raise DomainError(
                f"occurrences must sum to 1 within {_OCC_TOL}, got {total!r}"
            )

    @property
    def n_states(self) -> int:
        return len(self.states)

    def column(self, name: str):
        return [getattr(s, name) for s in self.states]


def _renormalized(rows, total):
    return [
        SeaState(hs, tp, uw, occ / total) for (hs, tp, uw, occ) in rows
    ]


def load_site(path: str, name: str | None = None) -> SiteScatter:
    """Read a site scatter table from CSV.

    Expected header: hs, tp, uw, occurrence (any order). Leading comment
    lines of the form `# key: value` may set `name` and `depth_m`.
    Occurrence sums in [0.99, 1.01] are renormalized to 1; anything further
    off is an error.
    """
    meta = {}
    body = []
    with open(path, newline="") as fh:
        for line in fh:
            stripped = line.strip()
            if stripped.startswith("#"):
                if ":" in stripped:
                    key, _, val = stripped.lstrip("# ").partition(":")
                    meta[key.strip().lower()] = val.strip()
                continue
            if stripped:
                body.append(line)
    if not body:
        raise DataError(f"{path}: no data rows")
    reader = csv.DictReader(io.StringIO("".join(body)))
    fields = tuple(fn.strip().lower() for fn in (reader.fieldnames or ()))
    missing = set(_COLUMNS) - set(fields)
    if missing:
        raise DataError(f"{path}: missing columns {sorted(missing)}")
    rows = []
    for i, rec in enumerate(reader, start=2):
        try:
            vals = {k: float(rec[k]) for k in _COLUMNS}
        except (TypeError, ValueError) as exc:
            raise DataError(f"{path}: row {i}: unparseable value ({exc})") from exc
        for k in _COLUMNS:
            if vals[k] < 0.0:
                raise DataError(f"{path}: row {i}: negative {k} ({vals[k]})")
        rows.append((vals["hs"], vals["tp"], vals["uw"], vals["occurrence"]))
    total = sum(r[3] for r in rows)
    if not (_RENORM_BAND[0] <= total <= _RENORM_BAND[1]):
        raise DataError(
            f"{path}: occurrence sum {total!r} outside renormalization band "
            f"{list(_RENORM_BAND)}"
        )
    states = tuple(_renormalized(rows, total))
    site_name = name or meta.get("name") or os.path.splitext(os.path.basename(path))[0]
    depth = float(meta.get("depth_m", 100.0))
    return SiteScatter(name=site_name, depth=depth, states=states)


def save_site(site: SiteScatter, path: str) -> None:
    """Write a SiteScatter back to CSV (round-trips through load_site)."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# name: {site.name}\n")
        fh.write(f"# depth_m: {site.depth:.17g}\n")
        fh.write(",".join(_COLUMNS) + "\n")
        for s in site.states:
            fh.write(
                f"{s.hs:.17g},{s.tp:.17g},{s.uw:.17g},{s.occurrence:.17g}\n"
            )
