from collections import OrderedDict
from typing import Dict, Iterable, List, Optional

from latmed.exceptions import ValidationError

from .abstract import AbstractModel
from .lattice import Lattice
from .profile import Profile


OUTCOMES = ("holds", "fails", "skipped")


class Tally(AbstractModel):
    """
    Holds/fails/skipped counters of one property.
    """

    __slots__ = [
        'holds',
        'fails',
        'skipped',
    ]

    def __init__(self, holds=0, fails=0, skipped=0):
        self.holds = self._is_valid_int(holds, "holds", 0)
        self.fails = self._is_valid_int(fails, "fails", 0)
        self.skipped = self._is_valid_int(skipped, "skipped", 0)

    @property
    def total(self) -> int:
        return self.holds + self.fails + self.skipped

    def __add__(self, other: "Tally") -> "Tally":
        return Tally(
            self.holds + other.holds,
            self.fails + other.fails,
            self.skipped + other.skipped,
        )

    def __eq__(self, other):
        if not isinstance(other, Tally):
            return NotImplemented
        return self.create_dict() == other.create_dict()

    def create_dict(self, **kwargs) -> dict:
        return dict(holds=self.holds, fails=self.fails, skipped=self.skipped)


class Violation(AbstractModel):
    """
    A failed property instance that can be re-checked independently.
    """

    __slots__ = [
        'prop',
        'lattice',
        'profile',
        'witness',
        'detail',
    ]

    def __init__(
        self,
        prop: str,
        lattice: Lattice,
        profile: Optional[Profile] = None,
        witness: Optional[int] = None,
        detail: str = "",
    ):
        self.prop = prop
        self.lattice = lattice
        self.profile = profile
        self.witness = witness
        self.detail = detail

    def create_dict(self, **kwargs) -> dict:
        return dict(
            property=self.prop,
            lattice=self.lattice.to_dict(),
            profile=list(self.profile) if self.profile is not None else None,
            witness=self.witness,
            detail=self.detail,
        )

    def to_text(self) -> str:
        parts = [
            "violation",
            self.prop,
            "lattice={name}".format(name=self.lattice.name or self.lattice.n),
        ]
        if self.profile is not None:
            parts.append("profile={p}".format(p=self.profile))
        if self.witness is not None:
            parts.append("witness={w}".format(w=self.witness))
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


class CampaignResult(AbstractModel):
    """
    Aggregate outcome of one property campaign. Results over disjoint sets
    of lattices are combined with ``merge``, which is associative.
    """

    __slots__ = [
        'suite',
        'family',
        'examined',
        'tallies',
        'violations',
        'max_size',
        'max_k',
    ]

    def __init__(
        self,
        suite: str,
        family: str,
        max_size: Optional[int] = None,
        max_k: Optional[int] = None,
        properties: Iterable[str] = (),
    ):
        self.suite = suite
        self.family = family
        self.examined = 0
        self.tallies: Dict[str, Tally] = OrderedDict(
            (p, Tally()) for p in properties
        )
        self.violations: List[Violation] = []
        self.max_size = max_size
        self.max_k = max_k

    def record(self, prop: str, outcome: str):
        if outcome not in OUTCOMES:
            raise ValidationError(
                "outcome must be one of {o}".format(o=", ".join(OUTCOMES))
            )
        tally = self.tallies.setdefault(prop, Tally())
        setattr(tally, outcome, getattr(tally, outcome) + 1)

    def fail(self, violation: Violation):
        self.violations.append(violation)

    @property
    def failed(self) -> bool:
        return bool(self.violations) or any(
            t.fails for t in self.tallies.values()
        )

    def merge(self, other: "CampaignResult") -> "CampaignResult":
        merged = CampaignResult(
            self.suite, self.family, self.max_size, self.max_k, self.tallies
        )
        merged.examined = self.examined + other.examined
        for prop in list(self.tallies) + list(other.tallies):
            merged.tallies[prop] = self.tallies.get(
                prop, Tally()
            ) + other.tallies.get(prop, Tally())
        merged.violations = self.violations + other.violations
        return merged

    def create_dict(self, **kwargs) -> dict:
        return dict(
            suite=self.suite,
            family=self.family,
            examined=self.examined,
            max_size=self.max_size,
            max_k=self.max_k,
            tallies={p: t.to_dict() for p, t in self.tallies.items()},
            violations=[v.to_dict() for v in self.violations],
        )

    def to_text(self) -> str:
        lines = [
            "suite {s}".format(s=self.suite),
            "family {f}".format(f=self.family),
        ]
        params = []
        if self.max_size is not None:
            params.append("max_size={m}".format(m=self.max_size))
        if self.max_k is not None:
            params.append("max_k={k}".format(k=self.max_k))
        if params:
            lines.append("parameters " + " ".join(params))
        lines.append("examined {e}".format(e=self.examined))
        for prop, tally in self.tallies.items():
            lines.append(
                "property {p} holds={t.holds} fails={t.fails} "
                "skipped={t.skipped}".format(p=prop, t=tally)
            )
        lines.extend(v.to_text() for v in self.violations)
        if self.failed:
            lines.append("{c} violation(s)".format(c=len(self.violations)))
        elif self.max_k is not None:
            lines.append("no violation up to k={k}".format(k=self.max_k))
        else:
            lines.append("no violation")
        return "\n".join(lines) + "\n"
