"""
Order-theoretic predicates over a built ``Lattice``.

All checks scan the precomputed tables; none of them modify the lattice.
"""
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from latmed.exceptions import CycleError, NotALattice, TransitiveCoverError
from latmed.models import Lattice


def is_lattice(n, covers: Iterable[Sequence[int]]) -> bool:
    """
    Whether the cover list describes a lattice. Malformed input such as
    out-of-range indices still raises.
    """
    try:
        Lattice(n, covers)
    except (NotALattice, CycleError, TransitiveCoverError):
        return False
    return True


def is_graded(lattice: Lattice) -> bool:
    return lattice.heights() is not None


def length(lattice: Lattice) -> int:
    return lattice.length()


def is_semimodular(lattice: Lattice) -> bool:
    """
    x ∧ y ≺ x implies y ≺ x ∨ y, for all x, y.
    """
    cover = lattice.cover_matrix
    rows = np.arange(lattice.n)[:, None]
    cols = np.arange(lattice.n)[None, :]
    premise = cover[lattice.meet_table, rows]
    conclusion = cover[cols, lattice.join_table]
    return not (premise & ~conclusion).any()


def is_lower_semimodular(lattice: Lattice) -> bool:
    """
    x ≺ x ∨ y implies x ∧ y ≺ y, for all x, y.
    """
    cover = lattice.cover_matrix
    rows = np.arange(lattice.n)[:, None]
    cols = np.arange(lattice.n)[None, :]
    premise = cover[rows, lattice.join_table]
    conclusion = cover[lattice.meet_table, cols]
    return not (premise & ~conclusion).any()


def is_modular(lattice: Lattice) -> bool:
    """
    x <= z implies x ∨ (y ∧ z) = (x ∨ y) ∧ z, for all x, y, z.
    """
    join, meet, leq = lattice.join_table, lattice.meet_table, lattice.leq
    cols = np.arange(lattice.n)[None, :]
    for x in lattice.elements:
        # [y, z] grids
        lhs = join[x][meet]
        rhs = meet[join[x][:, None], cols]
        if ((lhs != rhs) & leq[x][None, :]).any():
            return False
    return True


def is_distributive(lattice: Lattice) -> bool:
    """
    x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z), for all x, y, z.
    """
    join, meet = lattice.join_table, lattice.meet_table
    for x in lattice.elements:
        lhs = meet[x][join]
        rhs = join[meet[x][:, None], meet[x][None, :]]
        if (lhs != rhs).any():
            return False
    return True


def join_irreducibles(lattice: Lattice) -> frozenset:
    """
    Elements with exactly one lower cover.
    """
    return frozenset(
        x for x in lattice.elements if len(lattice.lower_covers(x)) == 1
    )


def is_join_prime(lattice: Lattice, u) -> bool:
    """
    u <= x ∨ y forces u <= x or u <= y. The bottom is excluded because it
    lies below the empty join.
    """
    u = lattice._is_valid_index(u, lattice.n)
    if u == lattice.bottom:
        return False
    below = lattice.leq[u]
    premise = below[lattice.join_table]
    conclusion = below[:, None] | below[None, :]
    return not (premise & ~conclusion).any()


def is_codistributive(lattice: Lattice, u) -> bool:
    """
    u ∧ (x ∨ y) = (u ∧ x) ∨ (u ∧ y), for all x, y.
    """
    u = lattice._is_valid_index(u, lattice.n)
    join, meet = lattice.join_table, lattice.meet_table
    lhs = meet[u][join]
    rhs = join[meet[u][:, None], meet[u][None, :]]
    return bool((lhs == rhs).all())


def metric_violation(lattice: Lattice) -> Optional[str]:
    """
    Checks the metric axioms of the distance matrix and its agreement with
    the cover relation; returns a description of the first failure.
    """
    dist = lattice.dist_matrix
    if (dist != dist.T).any():
        return "distance is not symmetric"
    zero = dist == 0
    if not (zero == np.eye(lattice.n, dtype=bool)).all():
        return "distance vanishes off the diagonal"
    adjacent = lattice.cover_matrix | lattice.cover_matrix.T
    if not ((dist == 1) == adjacent).all():
        return "distance 1 does not match the cover pairs"
    for y in lattice.elements:
        # d(x, z) <= d(x, y) + d(y, z) through every midpoint y
        if (dist > dist[:, y][:, None] + dist[y][None, :]).any():
            return "triangle inequality fails through {y}".format(y=y)
    return None


def distance_identity_violation(
    lattice: Lattice,
) -> Optional[Tuple[int, int]]:
    """
    First pair (x, y) with d(x, y) != length[x, x∨y] + length[y, x∨y],
    using the height function. Meaningful for graded lattices only.
    """
    heights = lattice.heights()
    if heights is None:
        return None
    h = np.asarray(heights)
    join = lattice.join_table
    expected = 2 * h[join] - h[:, None] - h[None, :]
    bad = np.argwhere(lattice.dist_matrix != expected)
    if len(bad):
        return int(bad[0][0]), int(bad[0][1])
    return None


def chain_additivity_violation(
    lattice: Lattice,
) -> Optional[Tuple[int, int, int]]:
    """
    First u <= v <= w with d(u, w) != d(u, v) + d(v, w).
    """
    leq, dist = lattice.leq, lattice.dist_matrix
    for v in lattice.elements:
        below = np.flatnonzero(leq[:, v])
        above = np.flatnonzero(leq[v])
        through = dist[below, v][:, None] + dist[v, above][None, :]
        direct = dist[np.ix_(below, above)]
        bad = np.argwhere(direct != through)
        if len(bad):
            return (
                int(below[bad[0][0]]), v, int(above[bad[0][1]])
            )
    return None


def is_join_subsemilattice(
    lattice: Lattice, ambient: Lattice, embedding: Sequence[int]
) -> bool:
    """
    Whether ``embedding`` maps joins of ``lattice`` to joins of ``ambient``.
    """
    image = np.asarray(embedding)
    return bool(
        (image[lattice.join_table]
         == ambient.join_table[np.ix_(image, image)]).all()
    )


def covers_agree(
    lattice: Lattice, ambient: Lattice, embedding: Sequence[int]
) -> bool:
    """
    Whether the covers of ``lattice`` are exactly the ambient covers between
    embedded elements.
    """
    image = np.asarray(embedding)
    return bool(
        (lattice.cover_matrix
         == ambient.cover_matrix[np.ix_(image, image)]).all()
    )
