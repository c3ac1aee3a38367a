"""Size caps guarding the exhaustive enumerations.

Defaults can be overridden with the environment variable ``FUSSCAT_CAPS``,
for example ``FUSSCAT_CAPS="max_poset=100000,max_group_order=2000000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "FUSSCAT_CAPS"


@dataclass(frozen=True)
class Caps:
    max_poset: int = 50_000
    max_group_order: int = 1_000_000
    max_chamber_rank: int = 3
    max_classical_size: int = 16
    max_cluster_vertices: int = 200
    max_root_poset: int = 120

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"cap {f.name} must be positive")


class CapExceeded(RuntimeError):
    """Raised when a requested structure is larger than a configured cap."""

    def __init__(self, cap: str, value: int, limit: int):
        super().__init__(f"size {value} exceeds cap {cap}={limit}")
        self.cap, self.value, self.limit = cap, value, limit


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    known = {f.name for f in fields(Caps)}
    updates = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in known:
            raise ValueError(f"unknown cap {key!r}")
        updates[key] = int(val)
    return replace(base, **updates)


_override: Caps | None = None


def caps() -> Caps:
    if _override is not None:
        return _override
    env = os.environ.get(ENV_VAR)
    return parse_caps(env) if env else Caps()


def set_caps(new: Caps | None) -> None:
    global _override
    _override = new


def check_cap(name: str, value: int) -> None:
    limit = getattr(caps(), name)
    if value > limit:
        raise CapExceeded(name, value, limit)
