"""
Breadth of a finite lattice: the largest size of an irredundant join.

A join ⋁S is irredundant when no joinand can be dropped, that is
s ≰ ⋁(S ∖ {s}) for every s in S. Irredundance is inherited by subsets, so
the search grows sets one element at a time and prunes as soon as a set
stops being irredundant.
"""
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from latmed.models import Lattice
from latmed.properties import join_irreducibles


def is_irredundant(lattice: Lattice, elements: Sequence[int]) -> bool:
    elements = list(elements)
    for i, s in enumerate(elements):
        rest = lattice.join_all(elements[:i] + elements[i + 1:])
        if lattice.leq[s, rest]:
            return False
    return True


def _largest_irredundant(
    lattice: Lattice, candidates: Sequence[int], cap: Optional[int] = None
) -> Tuple[int, ...]:
    """
    Depth-first search over increasing tuples of candidates; each node keeps
    the joins of the set with one member left out.
    """
    leq, join = lattice.leq, lattice.join_table
    best: List[Tuple[int, ...]] = [()]

    def extend(chosen, rests, total, start):
        if len(chosen) > len(best[0]):
            best[0] = tuple(chosen)
        if cap is not None and len(chosen) >= cap:
            return
        if len(chosen) + len(candidates) - start <= len(best[0]):
            return
        for pos in range(start, len(candidates)):
            x = candidates[pos]
            if leq[x, total]:
                continue
            new_rests = [int(join[r, x]) for r in rests]
            if any(leq[s, r] for s, r in zip(chosen, new_rests)):
                continue
            extend(
                chosen + [x],
                new_rests + [total],
                int(join[total, x]),
                pos + 1,
            )

    extend([], [], lattice.bottom, 0)
    return best[0]


def irredundant_witness(lattice: Lattice) -> Tuple[int, ...]:
    """
    A largest irredundant set of join-irreducibles.
    """
    return _largest_irredundant(lattice, sorted(join_irreducibles(lattice)))


def breadth(lattice: Lattice) -> int:
    """
    Searches irredundant sets among join-irreducibles only: every
    irredundant join can be rewritten as one of join-irreducibles of the
    same size. The singleton lattice has breadth 0.
    """
    if lattice.n == 1:
        return 0
    return len(irredundant_witness(lattice))


def breadth_bruteforce(lattice: Lattice, size_cap: int) -> int:
    """
    Largest m <= size_cap admitting an irredundant m-element subset, over
    all subsets of all elements.
    """
    best = 0
    for size in range(1, size_cap + 1):
        if any(
            is_irredundant(lattice, subset)
            for subset in combinations(lattice.elements, size)
        ):
            best = size
        else:
            break
    return best
