from .name import NameField
from .workers import WorkersField


__all__ = [
    "NameField",
    "WorkersField",
]
