"""
Enumeration of finite lattices up to isomorphism.

Removing the top of an n-element lattice leaves a meet-semilattice on n-1
elements, and every finite meet-semilattice with at least two elements
keeps being one after removing a maximal element. So all meet-semilattices
are grown level by level by adding one new maximal element over a nonempty
antichain, keeping the extensions in which every pair still has a meet;
lattices are the semilattices with a new top added.

Down-sets are bitmasks over the element indices. New elements are appended
in index order, so that order is always a linear extension.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, NamedTuple, Tuple

import networkx as nx

from latmed import settings
from latmed.exceptions import CapExceeded, ValidationError
from latmed.models import Lattice


logger = logging.getLogger(__name__)


class Semilattice(NamedTuple):
    downs: Tuple[int, ...]
    covers: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.downs)

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(self.covers)
        return graph

    def maximal(self) -> Tuple[int, ...]:
        """
        Elements lying strictly below no other element.
        """
        return tuple(
            x for x in range(self.size)
            if not any(
                y != x and self.downs[y] >> x & 1 for y in range(self.size)
            )
        )


def _is_antichain(downs: Tuple[int, ...], mask: int) -> bool:
    x = 0
    rest = mask
    while rest:
        if rest & 1 and downs[x] & mask != 1 << x:
            return False
        rest >>= 1
        x += 1
    return True


def _has_meets(downs: Tuple[int, ...], below: int) -> bool:
    """
    Whether the new element with strict down-set ``below`` has a meet with
    every old element: each intersection with an old down-set must itself
    be a principal down-set.
    """
    principal = set(downs)
    return all(below & d in principal for d in downs)


def _extensions(parent: Semilattice) -> Iterator[Semilattice]:
    downs = parent.downs
    n = parent.size
    for mask in range(1, 1 << n):
        if not _is_antichain(downs, mask):
            continue
        lower = [x for x in range(n) if mask >> x & 1]
        below = 0
        for x in lower:
            below |= downs[x]
        if not _has_meets(downs, below):
            continue
        yield Semilattice(
            downs + (below | 1 << n,),
            parent.covers + tuple((x, n) for x in lower),
        )


@lru_cache(maxsize=None)
def semilattices(size: int) -> Tuple[Semilattice, ...]:
    """
    One representative per isomorphism class of meet-semilattices with
    ``size`` elements, in a deterministic order.
    """
    if size == 1:
        return (Semilattice((1,), ()),)
    seen: Dict[str, List[nx.DiGraph]] = {}
    found = []
    for parent in semilattices(size - 1):
        for candidate in _extensions(parent):
            graph = candidate.graph()
            key = nx.weisfeiler_lehman_graph_hash(graph)
            bucket = seen.setdefault(key, [])
            if any(nx.is_isomorphic(graph, other) for other in bucket):
                continue
            bucket.append(graph)
            found.append(candidate)
    logger.debug("%d meet-semilattices on %d elements", len(found), size)
    return tuple(found)


def _with_top(semilattice: Semilattice, name: str) -> Lattice:
    top = semilattice.size
    covers = list(semilattice.covers)
    covers.extend((x, top) for x in semilattice.maximal())
    return Lattice(top + 1, covers, name=name)


def enumerate_lattices(n) -> Iterator[Lattice]:
    """
    Yields one lattice per isomorphism class of n-element lattices, named
    ``lat<n>_<i>`` in generation order.
    """
    n = Lattice._is_valid_int(n, "n")
    if n < 1:
        raise ValidationError("n must be at least 1, got {n}".format(n=n))
    cap = settings.enumeration_cap()
    if n > cap:
        raise CapExceeded(
            "enumeration is capped at n={c}, got n={n}".format(c=cap, n=n)
        )
    if n == 1:
        yield Lattice(1, [], name="lat1_0")
        return
    for i, semilattice in enumerate(semilattices(n - 1)):
        yield _with_top(semilattice, "lat{n}_{i}".format(n=n, i=i))


def lattices_up_to(max_n) -> Iterator[Lattice]:
    """
    All enumerated lattices with 1..max_n elements, smallest first.
    """
    for n in range(1, Lattice._is_valid_int(max_n, "max_n", 1) + 1):
        yield from enumerate_lattices(n)


def count_lattices(n) -> int:
    return sum(1 for _ in enumerate_lattices(n))
