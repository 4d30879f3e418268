from typing import Optional, Sequence, Tuple

from latmed.exceptions import ValidationError

from .abstract import AbstractModel
from .profile import Profile


class MedianReport(AbstractModel):
    """
    Remoteness table and median set of a profile together with the
    c1 and majority bounds.
    """

    __slots__ = [
        'profile',
        'remoteness',
        'medians',
        'c1',
        'm_lower',
        'm_upper',
        'violation',
    ]

    def __init__(
        self,
        profile: Profile,
        remoteness: Sequence[int],
        medians: Sequence[int],
        c1: int,
        m_lower: int,
        m_upper: int,
        violation: Optional[int] = None,
    ):
        medians = tuple(sorted(int(m) for m in medians))
        if not medians:
            raise ValidationError("a median set is never empty")
        self.profile = profile
        self.remoteness = tuple(int(r) for r in remoteness)
        self.medians = medians
        self.c1 = int(c1)
        self.m_lower = int(m_lower)
        self.m_upper = int(m_upper)
        self.violation = violation

    @property
    def minimum(self) -> int:
        return self.remoteness[self.medians[0]]

    @property
    def has_violation(self) -> bool:
        return self.violation is not None

    def create_dict(self, **kwargs) -> dict:
        return dict(
            profile=list(self.profile),
            medians=list(self.medians),
            minimum=self.minimum,
            c1=self.c1,
            m_lower=self.m_lower,
            m_upper=self.m_upper,
            violation=self.violation,
        )

    def to_text(self) -> str:
        lines = [
            "profile {p}".format(p=self.profile),
            "medians {m}".format(m=" ".join(str(x) for x in self.medians)),
            "remoteness {r}".format(r=self.minimum),
            "c1 {c}".format(c=self.c1),
            "m {m}".format(m=self.m_lower),
            "m' {m}".format(m=self.m_upper),
        ]
        if self.violation is None:
            lines.append("all medians below c1")
        else:
            lines.append(
                "violation {v} is a median not below c1".format(
                    v=self.violation
                )
            )
        return "\n".join(lines) + "\n"


class PBPartition(AbstractModel):
    """
    Split of profile positions relative to an element z not below c1:
    ``parallel`` holds the positions i with x_i ∥ z, ``below`` those with
    x_i < z.
    """

    __slots__ = [
        'z',
        'parallel',
        'below',
    ]

    def __init__(self, z: int, parallel: Sequence[int], below: Sequence[int]):
        if set(parallel) & set(below):
            raise ValidationError("P and B must be disjoint")
        self.z = z
        self.parallel: Tuple[int, ...] = tuple(parallel)
        self.below: Tuple[int, ...] = tuple(below)

    @property
    def k(self) -> int:
        return len(self.parallel) + len(self.below)

    @property
    def lemma_applies(self) -> bool:
        return len(self.parallel) <= len(self.below)

    def create_dict(self, **kwargs) -> dict:
        return dict(
            z=self.z, parallel=list(self.parallel), below=list(self.below)
        )


class C1Report(AbstractModel):
    """
    Outcome of a bounded c1-median property check.
    """

    __slots__ = [
        'lattice_name',
        'max_k',
        'profile',
        'witness',
    ]

    def __init__(
        self,
        lattice_name: Optional[str],
        max_k: int,
        profile: Optional[Profile] = None,
        witness: Optional[int] = None,
    ):
        if (profile is None) != (witness is None):
            raise ValidationError("profile and witness go together")
        self.lattice_name = lattice_name
        self.max_k = max_k
        self.profile = profile
        self.witness = witness

    @property
    def has_violation(self) -> bool:
        return self.witness is not None

    def create_dict(self, **kwargs) -> dict:
        return dict(
            lattice=self.lattice_name,
            max_k=self.max_k,
            profile=list(self.profile) if self.profile is not None else None,
            witness=self.witness,
        )

    def to_text(self) -> str:
        if not self.has_violation:
            return "no violation up to k={k}\n".format(k=self.max_k)
        return (
            "violation profile {p} median {w} is not below c1\n".format(
                p=self.profile, w=self.witness
            )
        )


class CounterexampleReport(AbstractModel):
    """
    Dossier on one profile: remoteness extremes, medians and how each
    median compares with c1. For L(n,k) it also carries the closed-form
    remoteness check and the ambient elements that beat z.
    """

    __slots__ = [
        'lattice_name',
        'median',
        'max_remoteness',
        'below_c1',
        'closed_form_checked',
        'closed_form_mismatches',
        'z',
        'z_remoteness',
        'ambient_improvers',
        'improvers_removed',
    ]

    def __init__(
        self,
        lattice_name: Optional[str],
        median: MedianReport,
        max_remoteness: int,
        below_c1: Sequence[bool] = (),
        closed_form_checked: int = 0,
        closed_form_mismatches: Sequence[int] = (),
        z: Optional[int] = None,
        z_remoteness: Optional[int] = None,
        ambient_improvers: Sequence[int] = (),
        improvers_removed: Optional[bool] = None,
    ):
        self.lattice_name = lattice_name
        self.median = median
        self.max_remoteness = int(max_remoteness)
        self.below_c1: Tuple[bool, ...] = tuple(bool(b) for b in below_c1)
        self.closed_form_checked = closed_form_checked
        self.closed_form_mismatches = tuple(closed_form_mismatches)
        self.z = z
        self.z_remoteness = z_remoteness
        self.ambient_improvers = tuple(ambient_improvers)
        self.improvers_removed = improvers_removed

    @property
    def has_violation(self) -> bool:
        return self.median.has_violation

    def create_dict(self, **kwargs) -> dict:
        data = self.median.create_dict()
        data.update(
            lattice=self.lattice_name,
            max_remoteness=self.max_remoteness,
            below_c1=list(self.below_c1),
            closed_form_checked=self.closed_form_checked or None,
            closed_form_mismatches=list(self.closed_form_mismatches),
            z=self.z,
            z_remoteness=self.z_remoteness,
            ambient_improvers=list(self.ambient_improvers),
            improvers_removed=self.improvers_removed,
        )
        return data

    def to_text(self) -> str:
        report = self.median
        lines = [
            "lattice {name}".format(name=self.lattice_name),
            "profile {p}".format(p=report.profile),
            "c1 {c}".format(c=report.c1),
            "m {m}".format(m=report.m_lower),
            "m' {m}".format(m=report.m_upper),
            "remoteness min {a} max {b}".format(
                a=report.minimum, b=self.max_remoteness
            ),
            "medians {m}".format(m=" ".join(str(x) for x in report.medians)),
        ]
        for y, below in zip(report.medians, self.below_c1):
            lines.append(
                "median {y} {rel} c1".format(
                    y=y, rel="below" if below else "not below"
                )
            )
        if report.has_violation:
            lines.append(
                "violation {v} is a median not below c1".format(
                    v=report.violation
                )
            )
        else:
            lines.append("no violation")
        if self.z is not None:
            lines.append(
                "z {z} remoteness {r}".format(z=self.z, r=self.z_remoteness)
            )
        if self.closed_form_checked:
            if self.closed_form_mismatches:
                lines.append(
                    "closed form differs at {m}".format(
                        m=" ".join(str(y) for y in self.closed_form_mismatches)
                    )
                )
            else:
                lines.append(
                    "closed form matches metric on {c} elements".format(
                        c=self.closed_form_checked
                    )
                )
        if self.improvers_removed is not None:
            lines.append(
                "ambient improvers {c} {where}".format(
                    c=len(self.ambient_improvers),
                    where="all inside [e,f]" if self.improvers_removed
                    else "not all inside [e,f]",
                )
            )
        return "\n".join(lines) + "\n"
