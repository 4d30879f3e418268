from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from latmed.exceptions import (
    CycleError,
    EmptyInterval,
    NotALattice,
    TransitiveCoverError,
    ValidationError,
)

from .abstract import AbstractModel
from .fields import NameField


Cover = Tuple[int, int]
ElementSet = FrozenSet[int]


def _read_only(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


class Lattice(NameField, AbstractModel):
    """
    Immutable finite lattice given by its cover relation.

    Elements are the integers 0..n-1 in the caller's numbering, which is
    preserved. All derived tables are computed eagerly on construction:

        - leq[a, b] is True iff a <= b;
        - join_table[a, b], meet_table[a, b] hold a ∨ b and a ∧ b;
        - dist_matrix[a, b] is the path length between a and b in the
          undirected covering graph.

    Optional ``coords`` carry the coordinate tuple of every element when the
    lattice was obtained from a direct product, and ``factors`` the factor
    lattices when it *is* a direct product.
    """

    __slots__ = [
        '_n',
        '_covers',
        '_order',
        '_leq',
        '_cover_matrix',
        '_join',
        '_meet',
        '_dist',
        '_lower',
        '_upper',
        '_depth',
        '_graded',
        '_bottom',
        '_top',
        '_coords',
        '_factors',
    ]

    def __init__(
        self,
        n,
        covers: Iterable[Sequence[int]],
        name: str = None,
        coords: Sequence[Tuple[int, ...]] = None,
        factors: Sequence["Lattice"] = None,
    ):
        self._n = self._is_valid_int(n, "n", 1)
        self.name = name
        self._covers = self._validate_covers(covers)

        graph = nx.DiGraph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._covers)
        if not nx.is_directed_acyclic_graph(graph):
            raise CycleError(nx.find_cycle(graph))

        self._order = tuple(nx.lexicographical_topological_sort(graph))
        self._lower = tuple(
            tuple(sorted(graph.predecessors(v))) for v in range(self._n)
        )
        self._upper = tuple(
            tuple(sorted(graph.successors(v))) for v in range(self._n)
        )
        self._leq = _read_only(self._closure())
        self._check_reduced()
        self._bottom, self._top = self._bounds()
        self._join = _read_only(self._bound_table(self._leq, "join"))
        self._meet = _read_only(self._bound_table(self._leq.T, "meet"))

        cover_matrix = np.zeros((self._n, self._n), dtype=bool)
        for a, b in self._covers:
            cover_matrix[a, b] = True
        self._cover_matrix = _read_only(cover_matrix)

        self._dist = _read_only(self._distances(graph))
        self._depth, self._graded = self._heights()

        self._coords = None
        if coords is not None:
            coords = tuple(tuple(int(c) for c in t) for t in coords)
            if len(coords) != self._n:
                raise ValidationError(
                    "coords must list one tuple per element"
                )
            self._coords = coords
        self._factors = tuple(factors) if factors is not None else None

    def _validate_covers(self, covers) -> Tuple[Cover, ...]:
        pairs = []
        seen = set()
        for pair in covers:
            try:
                a, b = pair
            except (TypeError, ValueError):
                raise ValidationError(
                    "cover must be a pair, got {p!r}".format(p=pair)
                )
            a = self._is_valid_index(a, self._n)
            b = self._is_valid_index(b, self._n)
            if a == b:
                raise CycleError([(a, b)])
            if (a, b) in seen:
                raise ValidationError(
                    "duplicate cover ({a},{b})".format(a=a, b=b)
                )
            seen.add((a, b))
            pairs.append((a, b))
        return tuple(sorted(pairs))

    def _closure(self) -> np.ndarray:
        leq = np.zeros((self._n, self._n), dtype=bool)
        for v in reversed(self._order):
            leq[v, v] = True
            for w in self._upper[v]:
                leq[v] |= leq[w]
        return leq

    def _check_reduced(self):
        for a, b in self._covers:
            between = self._leq[a] & self._leq[:, b]
            between[a] = between[b] = False
            if between.any():
                raise TransitiveCoverError(
                    (a, b), int(np.flatnonzero(between)[0])
                )

    def _bounds(self) -> Tuple[int, int]:
        bottoms = np.flatnonzero(self._leq.all(axis=1))
        tops = np.flatnonzero(self._leq.all(axis=0))
        if len(bottoms) != 1:
            raise NotALattice("no unique bottom element")
        if len(tops) != 1:
            raise NotALattice("no unique top element")
        return int(bottoms[0]), int(tops[0])

    def _bound_table(self, above: np.ndarray, what: str) -> np.ndarray:
        """
        Least common element of ``above`` rows for every pair; for joins
        ``above`` is leq, for meets its transpose.
        """
        n = self._n
        size = above.sum(axis=1)
        table = np.empty((n, n), dtype=np.intp)
        for i in range(n):
            common = above[i] & above
            count = common.sum(axis=1)
            least = common & (size[None, :] == count[:, None])
            found = least.sum(axis=1)
            if (found != 1).any():
                j = int(np.flatnonzero(found != 1)[0])
                raise NotALattice(
                    "{a} and {b} have no {w}".format(a=i, b=j, w=what)
                )
            table[i] = least.argmax(axis=1)
        return table

    def _distances(self, graph: nx.DiGraph) -> np.ndarray:
        dist = np.zeros((self._n, self._n), dtype=np.int64)
        lengths = nx.all_pairs_shortest_path_length(graph.to_undirected())
        for source, targets in lengths:
            for target, d in targets.items():
                dist[source, target] = d
        return dist

    def _heights(self) -> Tuple[Tuple[int, ...], bool]:
        depth = [0] * self._n
        for v in self._order:
            for w in self._upper[v]:
                depth[w] = max(depth[w], depth[v] + 1)
        graded = all(depth[b] == depth[a] + 1 for a, b in self._covers)
        return tuple(depth), graded

    @property
    def n(self) -> int:
        return self._n

    @property
    def covers(self) -> Tuple[Cover, ...]:
        return self._covers

    @property
    def leq(self) -> np.ndarray:
        return self._leq

    @property
    def cover_matrix(self) -> np.ndarray:
        return self._cover_matrix

    @property
    def join_table(self) -> np.ndarray:
        return self._join

    @property
    def meet_table(self) -> np.ndarray:
        return self._meet

    @property
    def dist_matrix(self) -> np.ndarray:
        return self._dist

    @property
    def bottom(self) -> int:
        return self._bottom

    @property
    def top(self) -> int:
        return self._top

    @property
    def topological_order(self) -> Tuple[int, ...]:
        return self._order

    @property
    def coords(self) -> Optional[Tuple[Tuple[int, ...], ...]]:
        return self._coords

    @property
    def factors(self) -> Optional[Tuple["Lattice", ...]]:
        return self._factors

    @property
    def elements(self) -> range:
        return range(self._n)

    def lower_covers(self, x) -> Tuple[int, ...]:
        return self._lower[self._is_valid_index(x, self._n)]

    def upper_covers(self, x) -> Tuple[int, ...]:
        return self._upper[self._is_valid_index(x, self._n)]

    def le(self, x, y) -> bool:
        x = self._is_valid_index(x, self._n)
        y = self._is_valid_index(y, self._n)
        return bool(self._leq[x, y])

    def parallel(self, x, y) -> bool:
        return not self.le(x, y) and not self.le(y, x)

    def join(self, x, y) -> int:
        x = self._is_valid_index(x, self._n)
        y = self._is_valid_index(y, self._n)
        return int(self._join[x, y])

    def meet(self, x, y) -> int:
        x = self._is_valid_index(x, self._n)
        y = self._is_valid_index(y, self._n)
        return int(self._meet[x, y])

    def join_all(self, xs: Iterable[int]) -> int:
        """
        Join of any number of elements; the empty join is the bottom.
        """
        result = self._bottom
        for x in xs:
            result = int(self._join[result, self._is_valid_index(x, self._n)])
        return result

    def meet_all(self, xs: Iterable[int]) -> int:
        """
        Meet of any number of elements; the empty meet is the top.
        """
        result = self._top
        for x in xs:
            result = int(self._meet[result, self._is_valid_index(x, self._n)])
        return result

    def distance(self, x, y) -> int:
        x = self._is_valid_index(x, self._n)
        y = self._is_valid_index(y, self._n)
        return int(self._dist[x, y])

    def interval(self, a, b) -> ElementSet:
        """
        All z with a <= z <= b.
        """
        a = self._is_valid_index(a, self._n)
        b = self._is_valid_index(b, self._n)
        if not self._leq[a, b]:
            raise EmptyInterval(
                "[{a},{b}] is empty: {a} is not below {b}".format(a=a, b=b)
            )
        members = self._leq[a] & self._leq[:, b]
        return frozenset(int(z) for z in np.flatnonzero(members))

    def depth(self, x) -> int:
        """
        Length of the longest chain from the bottom up to x.
        """
        return self._depth[self._is_valid_index(x, self._n)]

    def heights(self) -> Optional[Tuple[int, ...]]:
        """
        The height function if the lattice is graded, otherwise None.
        """
        return self._depth if self._graded else None

    def length(self) -> int:
        return self._depth[self._top]

    def create_dict(self, **kwargs) -> dict:
        return dict(
            n=self._n,
            name=self.name,
            covers=[list(pair) for pair in self._covers],
        )

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self._n, self._covers, self.name) == (
            other._n, other._covers, other.name
        )

    def __hash__(self):
        return hash((self._n, self._covers, self.name))

    def __len__(self):
        return self._n


def build_from_covers(n, covers, name: str = None) -> Lattice:
    """
    Validates a cover list and returns the lattice with all tables filled.
    """
    return Lattice(n, covers, name=name)
