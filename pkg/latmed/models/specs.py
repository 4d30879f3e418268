from typing import Optional, Sequence

from latmed.exceptions import BadParams

from .abstract import AbstractModel
from .lattice import Lattice
from .profile import Profile


FAMILIES = (
    "chain",
    "boolean",
    "product",
    "gluedsum",
    "remove-interval",
    "lnk",
    "gk",
    "figure1",
)


class ConstructionSpec(AbstractModel):
    """
    Names one lattice family together with its parameters.

    ``n`` and ``k`` are the integer parameters, ``inputs`` the operand
    lattices of product, gluedsum and remove-interval, ``e``/``f`` the
    interval bounds of remove-interval.
    """

    __slots__ = [
        '_family',
        '_n',
        '_k',
        '_e',
        '_f',
        'inputs',
    ]

    def __init__(
        self,
        family: str,
        n=None,
        k=None,
        e=None,
        f=None,
        inputs: Sequence[Lattice] = None,
    ):
        self.family = family
        self.n = n
        self.k = k
        self.e = e
        self.f = f
        self.inputs = tuple(inputs or ())

    @property
    def family(self) -> str:
        return self._family

    @family.setter
    def family(self, value):
        if value not in FAMILIES:
            raise BadParams(
                "unknown family {v!r}, expected one of: {f}".format(
                    v=value, f=", ".join(FAMILIES)
                )
            )
        self._family = value

    @property
    def n(self) -> Optional[int]:
        return self._n

    @n.setter
    def n(self, value):
        self._n = self._is_valid_int(value, "n", 0, True)

    @property
    def k(self) -> Optional[int]:
        return self._k

    @k.setter
    def k(self, value):
        self._k = self._is_valid_int(value, "k", 0, True)

    @property
    def e(self) -> Optional[int]:
        return self._e

    @e.setter
    def e(self, value):
        self._e = self._is_valid_int(value, "e", 0, True)

    @property
    def f(self) -> Optional[int]:
        return self._f

    @f.setter
    def f(self, value):
        self._f = self._is_valid_int(value, "f", 0, True)

    def require(self, *attrs: str):
        missing = [a for a in attrs if getattr(self, a) is None]
        if missing:
            raise BadParams(
                "{fam} needs --{m}".format(fam=self.family, m=missing[0])
            )

    def create_dict(self, **kwargs) -> dict:
        return dict(
            family=self.family,
            n=self.n,
            k=self.k,
            e=self.e,
            f=self.f,
            inputs=[lat.name for lat in self.inputs],
        )


class IntervalRemovalSpec(AbstractModel):
    """
    A base lattice K and the bounds of the interval [e, f] to delete.
    Checked by ``constructions.remove_interval``.
    """

    __slots__ = [
        'base',
        'e',
        'f',
    ]

    def __init__(self, base: Lattice, e: int, f: int):
        self.base = base
        self.e = self._is_valid_index(e, base.n)
        self.f = self._is_valid_index(f, base.n)

    def create_dict(self, **kwargs) -> dict:
        return dict(base=self.base.name, e=self.e, f=self.f)


class LnkConstruction(AbstractModel):
    """
    L(n,k) with its ambient product K(n,k) and the designated elements.

    ``e`` and ``f`` are flat indices of the ambient product (both lie in the
    removed interval); ``z`` and ``xi`` index the lattice itself.
    """

    __slots__ = [
        'n',
        'k',
        'lattice',
        'ambient',
        'e',
        'f',
        'z',
        'xi',
        'embedding',
    ]

    def __init__(
        self,
        n: int,
        k: int,
        lattice: Lattice,
        ambient: Lattice,
        e: int,
        f: int,
        z: int,
        xi: Profile,
        embedding: Sequence[int],
    ):
        self.n = n
        self.k = k
        self.lattice = lattice
        self.ambient = ambient
        self.e = e
        self.f = f
        self.z = z
        self.xi = xi
        self.embedding = tuple(embedding)

    def create_dict(self, **kwargs) -> dict:
        return dict(
            n=self.n,
            k=self.k,
            size=self.lattice.n,
            e=self.e,
            f=self.f,
            z=self.z,
            xi=list(self.xi),
        )
