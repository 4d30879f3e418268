"""
Remoteness, median sets and the bounds around them.

For a profile xi = (x_1, ..., x_k) the remoteness of y is the sum of the
covering-graph distances d(y, x_i); the medians minimise it.
"""
import logging
from itertools import combinations, combinations_with_replacement
from math import ceil
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from latmed.exceptions import PreconditionFailed, ValidationError
from latmed.models import (
    C1Report,
    Lattice,
    MedianReport,
    PBPartition,
    Profile,
)


logger = logging.getLogger(__name__)

# Threshold readings for the index sets I of m(xi) and m'(xi):
# LITERAL takes |I| >= k/2 + 1 over the reals (k = 1 uses I = {1}),
# MAJORITY takes |I| > k/2. They differ only for odd k >= 3.
LITERAL = "literal"
MAJORITY = "majority"


def _profile(lattice: Lattice, xi) -> Profile:
    if isinstance(xi, Profile):
        return xi.check_range(lattice.n)
    return Profile(xi, lattice.n)


def c1(lattice: Lattice, xi) -> int:
    """
    Join of all profile entries.
    """
    return lattice.join_all(_profile(lattice, xi))


def remoteness(lattice: Lattice, y, xi) -> int:
    xi = _profile(lattice, xi)
    y = lattice._is_valid_index(y, lattice.n)
    return int(lattice.dist_matrix[y, list(xi.entries)].sum())


def remoteness_vector(lattice: Lattice, xi) -> np.ndarray:
    """
    Remoteness of every element, indexed by element.
    """
    xi = _profile(lattice, xi)
    return lattice.dist_matrix[:, list(xi.entries)].sum(axis=1)


def majority_size(k: int, rule: str = LITERAL) -> int:
    """
    Smallest admissible |I| for a profile of length k. Larger sets only
    shrink meets and grow joins, so the bounds use sets of exactly this size.
    """
    if rule == LITERAL:
        return min(k, ceil(k / 2 + 1))
    if rule == MAJORITY:
        return k // 2 + 1
    raise ValidationError(
        "rule must be {a!r} or {b!r}".format(a=LITERAL, b=MAJORITY)
    )


def m_lower(lattice: Lattice, xi, rule: str = LITERAL) -> int:
    """
    Join over the admissible index sets I of the meet of x_i, i in I.
    """
    xi = _profile(lattice, xi)
    size = majority_size(xi.k, rule)
    return lattice.join_all(
        lattice.meet_all(subset)
        for subset in combinations(xi.entries, size)
    )


def m_upper(lattice: Lattice, xi, rule: str = LITERAL) -> int:
    """
    Meet over the admissible index sets I of the join of x_i, i in I.
    """
    xi = _profile(lattice, xi)
    size = majority_size(xi.k, rule)
    return lattice.meet_all(
        lattice.join_all(subset)
        for subset in combinations(xi.entries, size)
    )


def median_set(lattice: Lattice, xi, rule: str = LITERAL) -> MedianReport:
    """
    Exhaustive argmin of the remoteness over all elements.
    """
    xi = _profile(lattice, xi)
    values = remoteness_vector(lattice, xi)
    medians = np.flatnonzero(values == values.min())
    top = c1(lattice, xi)
    outside = [int(y) for y in medians if not lattice.leq[y, top]]
    return MedianReport(
        profile=xi,
        remoteness=values,
        medians=medians,
        c1=top,
        m_lower=m_lower(lattice, xi, rule),
        m_upper=m_upper(lattice, xi, rule),
        violation=outside[0] if outside else None,
    )


def pb_partition(lattice: Lattice, xi, z) -> PBPartition:
    """
    Positions of the profile parallel to z and strictly below z. Requires
    z ≰ c1(xi), so no entry lies above z.
    """
    xi = _profile(lattice, xi)
    z = lattice._is_valid_index(z, lattice.n)
    if lattice.leq[z, c1(lattice, xi)]:
        raise PreconditionFailed(
            "z={z} lies below c1 of the profile".format(z=z)
        )
    parallel, below = [], []
    for i, x in enumerate(xi):
        (parallel if lattice.parallel(x, z) else below).append(i)
    return PBPartition(z, parallel, below)


def repair_witness(lattice: Lattice, xi, z) -> Optional[int]:
    """
    For z ≰ c1(xi) with more parallel than lower entries: the least element
    of {z ∨ x_i : x_i ∥ z} when that set is a chain, otherwise None.
    """
    partition = pb_partition(lattice, xi, z)
    if partition.lemma_applies:
        raise PreconditionFailed("|P| <= |B|: no repair needed")
    joins = sorted(
        {int(lattice.join_table[z, xi[i]]) for i in partition.parallel},
        key=lattice.depth,
    )
    for a, b in zip(joins, joins[1:]):
        if not lattice.leq[a, b]:
            return None
    return joins[0]


class ProfileBlock(NamedTuple):
    """
    All profiles sharing ``prefix`` and ending in one of ``lasts``; column j
    of ``values`` is the remoteness vector of prefix + (lasts[j],).
    """
    prefix: Tuple[int, ...]
    lasts: np.ndarray
    values: np.ndarray
    joins: np.ndarray

    def profile(self, j: int) -> Profile:
        return Profile(self.prefix + (int(self.lasts[j]),))

    def median_mask(self) -> np.ndarray:
        return self.values == self.values.min(axis=0)[None, :]


def profile_blocks(lattice: Lattice, k_max: int) -> Iterator[ProfileBlock]:
    """
    Every multiset of size 1..k_max exactly once, as sorted tuples in
    lexicographic order within each size.
    """
    if k_max < 1:
        raise ValidationError("k_max must be at least 1")
    dist, join = lattice.dist_matrix, lattice.join_table
    n = lattice.n
    for k in range(1, k_max + 1):
        for prefix in combinations_with_replacement(range(n), k - 1):
            start = prefix[-1] if prefix else 0
            lasts = np.arange(start, n)
            base = dist[:, list(prefix)].sum(axis=1)
            top = lattice.join_all(prefix)
            yield ProfileBlock(
                prefix=prefix,
                lasts=lasts,
                values=base[:, None] + dist[:, lasts],
                joins=join[top, lasts],
            )


def first_violation(
    lattice: Lattice, k_max: int
) -> Optional[Tuple[Profile, int]]:
    """
    Lexicographically first profile having a median not below its join,
    with the smallest such median.
    """
    for block in profile_blocks(lattice, k_max):
        bad = block.median_mask() & ~lattice.leq[:, block.joins]
        columns = np.flatnonzero(bad.any(axis=0))
        if len(columns):
            j = int(columns[0])
            return block.profile(j), int(np.flatnonzero(bad[:, j])[0])
    return None


def check_c1_property(lattice: Lattice, k_max: int) -> C1Report:
    """
    Bounded check of the c1-median property over all profiles of size at
    most k_max. Absence of a witness says nothing about larger profiles.
    """
    k_max = lattice._is_valid_int(k_max, "k_max", 1)
    found = first_violation(lattice, k_max)
    if found is None:
        logger.debug("%s: no violation up to k=%d", lattice.name, k_max)
        return C1Report(lattice.name, k_max)
    profile, witness = found
    logger.info(
        "%s: median %d of %s is not below c1", lattice.name, witness, profile
    )
    return C1Report(lattice.name, k_max, profile, witness)


def lnk_remoteness(n: int, k: int, y: Sequence[int]) -> int:
    """
    Closed-form remoteness in L(n,k) of the element with coordinates
    y = (y_1, ..., y_{k+1}) from the designated three-entry profile.
    """
    y = tuple(y)
    if len(y) != k + 1:
        raise ValidationError(
            "expected {c} coordinates, got {g}".format(c=k + 1, g=len(y))
        )
    middle = sum(3 * y[i] for i in range(2, k - 1))
    return 4 * (n - 1) + y[0] + y[1] - y[k - 1] + 3 * y[k] + middle
