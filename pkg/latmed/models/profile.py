from typing import Iterable, Iterator, Tuple

from latmed.exceptions import ValidationError

from .abstract import AbstractModel


class Profile(AbstractModel):
    """
    Ordered k-tuple of lattice elements, repetitions allowed.
    """

    __slots__ = [
        '_entries',
    ]

    def __init__(self, entries: Iterable[int], n: int = None):
        entries = tuple(entries)
        if not entries:
            raise ValidationError("a profile needs at least one element")
        if n is None:
            self._entries = tuple(
                self._is_valid_int(x, "profile entry", 0) for x in entries
            )
        else:
            self._entries = self._are_valid_indices(entries, n)

    @property
    def entries(self) -> Tuple[int, ...]:
        return self._entries

    @property
    def k(self) -> int:
        return len(self._entries)

    def check_range(self, n: int) -> "Profile":
        self._are_valid_indices(self._entries, n)
        return self

    @staticmethod
    def parse(text: str, n: int = None) -> "Profile":
        """
        Reads a comma separated list of element indices.
        """
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValidationError(
                "profile must be a comma list of ints, got {t!r}".format(
                    t=text
                )
            )
        return Profile(values, n)

    def create_dict(self, **kwargs) -> dict:
        return dict(entries=list(self._entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        if not isinstance(other, Profile):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __str__(self):
        return ",".join(str(x) for x in self._entries)
