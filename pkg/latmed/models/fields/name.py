from typing import Optional

from latmed.exceptions import ValidationError


class NameField:
    _name = None

    @property
    def name(self) -> Optional[str]:
        return self._name

    @name.setter
    def name(self, value):
        if value is None:
            self._name = None
        elif isinstance(value, str) and value and not any(
            ch.isspace() for ch in value
        ):
            self._name = value
        else:
            raise ValidationError(
                "name should be a single token without whitespace, "
                "got {v!r}".format(v=value)
            )
