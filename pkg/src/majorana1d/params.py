"""Physical unit conventions for a run.

Everything downstream takes a :class:`PhysParams`; the default is natural
units (hbar = c = 1, mass = 1) so times are directly comparable to the
dimensionless combination omega * t.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysParams:
    """Mass and unit constants, with the derived rest frequency.

    mass may be zero (frozen rest dynamics, massless dispersion); hbar and c
    must be positive.
    """

    mass: float = 1.0
    hbar: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        for name in ("mass", "hbar", "c"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.mass < 0:
            raise ValueError(f"mass must be >= 0, got {self.mass}")
        if self.hbar <= 0:
            raise ValueError(f"hbar must be > 0, got {self.hbar}")
        if self.c <= 0:
            raise ValueError(f"c must be > 0, got {self.c}")

    @property
    def omega(self) -> float:
        """Rest angular frequency mass * c**2 / hbar."""
        return self.mass * self.c**2 / self.hbar


NATURAL_UNITS = PhysParams()
