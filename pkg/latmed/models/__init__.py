from . import fields

from .abstract import AbstractModel
from .lattice import Lattice, ElementSet, build_from_covers
from .product import ProductElement
from .profile import Profile
from .report import (
    C1Report,
    CounterexampleReport,
    MedianReport,
    PBPartition,
)
from .specs import (
    FAMILIES,
    ConstructionSpec,
    IntervalRemovalSpec,
    LnkConstruction,
)
from .campaign import CampaignResult, Tally, Violation


__all__ = [
    "fields",
    "AbstractModel",
    "Lattice",
    "ElementSet",
    "build_from_covers",
    "ProductElement",
    "Profile",
    "C1Report",
    "CounterexampleReport",
    "MedianReport",
    "PBPartition",
    "FAMILIES",
    "ConstructionSpec",
    "IntervalRemovalSpec",
    "LnkConstruction",
    "CampaignResult",
    "Tally",
    "Violation",
]
