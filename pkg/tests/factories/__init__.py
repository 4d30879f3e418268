from .chain import ChainFactory
from .lattice import LatticeFactory, RelabeledFactory, SmallLatticeFactory
from .profile import ProfileFactory


__all__ = [
    "ChainFactory",
    "LatticeFactory",
    "RelabeledFactory",
    "SmallLatticeFactory",
    "ProfileFactory",
]
