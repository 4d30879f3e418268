from abc import ABC, abstractmethod
from typing import Iterable, Optional, Tuple

from latmed.exceptions import ElementIndexError, ValidationError


class AbstractModel(ABC):
    """
    Abstract model for creating child models.
    """
    @abstractmethod
    def create_dict(self, **kwargs) -> dict:
        """
        Must be inherited by each child class.
        Describes the logic for creating a dictionary with data from a model.
        """
        raise NotImplementedError

    def to_dict(self, clean: bool = False) -> dict:
        """
        Calls the inherited method to create the dictionary and returns a
        clean dictionary if the parameter was set.
        """
        return self.clean_dict if clean else self.create_dict()

    @property
    def clean_dict(self) -> dict:
        """
        A helper property to get clean dictionary with data.
        """
        return dict(
            **{k: v for k, v in self.create_dict().items() if v is not None}
        )

    def __repr__(self):
        return "{cls}({fields})".format(
            cls=self.__class__.__name__,
            fields=", ".join(
                "{k}={v!r}".format(k=k, v=v)
                for k, v in self.clean_dict.items()
            ),
        )

    @staticmethod
    def _is_valid_int(
        value,
        attr: str,
        minimum: Optional[int] = None,
        allow_none: bool = False,
    ) -> Optional[int]:
        """
        A helper method for checking if a value is a valid integer (and not
        below the minimum) and returning it or raising an error.
        """
        if value is None and allow_none:
            return None
        if isinstance(value, bool):
            raise ValidationError("{a} must be a valid int".format(a=attr))
        try:
            converted = int(value)
        except (TypeError, ValueError):
            raise ValidationError("{a} must be a valid int".format(a=attr))
        if converted != value and not isinstance(value, str):
            raise ValidationError("{a} must be a valid int".format(a=attr))
        if minimum is not None and converted < minimum:
            raise ValidationError(
                "{a} must be at least {m}, got {v}".format(
                    a=attr, m=minimum, v=converted
                )
            )
        return converted

    @staticmethod
    def _is_valid_index(value, n: int) -> int:
        """
        A helper method for checking that an element index lies in 0..n-1.
        """
        error = ValidationError(
            "element index must be a valid int, got {v!r}".format(v=value)
        )
        if isinstance(value, bool):
            raise error
        try:
            index = int(value)
        except (TypeError, ValueError):
            raise error
        if index != value and not isinstance(value, str):
            raise error
        if not 0 <= index < n:
            raise ElementIndexError(index, n)
        return index

    @classmethod
    def _are_valid_indices(cls, values: Iterable, n: int) -> Tuple[int, ...]:
        return tuple(cls._is_valid_index(v, n) for v in values)
