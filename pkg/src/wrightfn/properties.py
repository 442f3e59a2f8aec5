"""Geometric property descriptors shared by the criteria and the grid oracle."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .gamma import WrightParams

__all__ = [
    "PropertyKind", "Region", "PropertyRegion",
    "STARLIKE_D", "STARLIKE_HALF", "CONVEX_D", "CONVEX_HALF", "UCV", "SP",
]


class PropertyKind(str, enum.Enum):
    STARLIKE = "Starlike"
    STARLIKE_ORDER = "StarlikeOrder"
    CONVEX = "Convex"
    UCV = "UCV"
    SP = "SpClass"
    CLOSE_TO_CONVEX = "CloseToConvex"
    HALF_PLANE = "HalfPlaneRe"


class Region(enum.Enum):
    FULL = 1.0
    HALF = 0.5

    @property
    def radius(self) -> float:
        return self.value

    @property
    def suffix(self) -> str:
        return "D" if self is Region.FULL else "Half"


@dataclass(frozen=True)
class PropertyRegion:
    """A property claimed on a disk.

    ``eta`` is only meaningful for :attr:`PropertyKind.STARLIKE_ORDER` and
    ``witness`` only for :attr:`PropertyKind.CLOSE_TO_CONVEX` (the starlike
    function ``g`` in ``Re(z f'/g) > 0``).
    """

    kind: PropertyKind
    region: Region = Region.FULL
    eta: Optional[float] = None
    witness: Optional[WrightParams] = None

    def __post_init__(self):
        if self.eta is not None and not 0.0 <= self.eta < 1.0:
            raise ValueError(f"eta must lie in [0, 1), got {self.eta}")
        if (self.kind is PropertyKind.STARLIKE_ORDER) != (self.eta is not None):
            raise ValueError("eta is given exactly for StarlikeOrder")
        if (self.kind is PropertyKind.CLOSE_TO_CONVEX) != (self.witness is not None):
            raise ValueError("a witness is given exactly for CloseToConvex")

    @property
    def label(self) -> str:
        if self.kind in (PropertyKind.STARLIKE, PropertyKind.CONVEX):
            return f"{self.kind.value}{self.region.suffix}"
        if self.kind is PropertyKind.STARLIKE_ORDER:
            return f"StarlikeOrder({self.eta:g})"
        return self.kind.value

    def as_dict(self) -> dict:
        out = {"label": self.label, "kind": self.kind.value, "radius": self.region.radius}
        if self.eta is not None:
            out["eta"] = self.eta
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


STARLIKE_D = PropertyRegion(PropertyKind.STARLIKE)
STARLIKE_HALF = PropertyRegion(PropertyKind.STARLIKE, Region.HALF)
CONVEX_D = PropertyRegion(PropertyKind.CONVEX)
CONVEX_HALF = PropertyRegion(PropertyKind.CONVEX, Region.HALF)
UCV = PropertyRegion(PropertyKind.UCV)
SP = PropertyRegion(PropertyKind.SP)
