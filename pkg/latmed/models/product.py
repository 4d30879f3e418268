from typing import Sequence, Tuple

from latmed.exceptions import ValidationError

from .abstract import AbstractModel


class ProductElement(AbstractModel):
    """
    An element of a direct product given by its coordinates, one per factor.

    The flat index is mixed-radix with the last factor varying fastest, so
    (c_1, ..., c_t) maps to ((c_1 * r_2 + c_2) * r_3 + ...) + c_t.
    """

    __slots__ = [
        '_coords',
        '_radices',
    ]

    def __init__(self, coords: Sequence[int], radices: Sequence[int]):
        self.radices = radices
        self.coords = coords

    @property
    def radices(self) -> Tuple[int, ...]:
        return self._radices

    @radices.setter
    def radices(self, values):
        self._radices = tuple(
            self._is_valid_int(r, "radix", 1) for r in values
        )

    @property
    def coords(self) -> Tuple[int, ...]:
        return self._coords

    @coords.setter
    def coords(self, values):
        values = tuple(values)
        if len(values) != len(self._radices):
            raise ValidationError(
                "expected {t} coordinates, got {c}".format(
                    t=len(self._radices), c=len(values)
                )
            )
        self._coords = tuple(
            self._is_valid_index(c, r) for c, r in zip(values, self._radices)
        )

    @property
    def index(self) -> int:
        index = 0
        for c, r in zip(self._coords, self._radices):
            index = index * r + c
        return index

    @staticmethod
    def from_index(index: int, radices: Sequence[int]) -> "ProductElement":
        radices = tuple(radices)
        total = 1
        for r in radices:
            total *= r
        index = AbstractModel._is_valid_index(index, total)
        coords = []
        for r in reversed(radices):
            index, c = divmod(index, r)
            coords.append(c)
        return ProductElement(reversed(coords), radices)

    def create_dict(self, **kwargs) -> dict:
        return dict(coords=list(self._coords), index=self.index)

    def __eq__(self, other):
        if not isinstance(other, ProductElement):
            return NotImplemented
        return (self._coords, self._radices) == (other._coords, other._radices)

    def __hash__(self):
        return hash((self._coords, self._radices))
