import os
from itertools import combinations
from unittest import mock

import networkx as nx
import pytest

from tests.cases import LatticeTestCase
from latmed.enumeration import (
    count_lattices,
    enumerate_lattices,
    lattices_up_to,
    semilattices,
)
from latmed.exceptions import CapExceeded, ValidationError
from latmed.properties import is_lattice


def _graph(lattice):
    graph = nx.DiGraph()
    graph.add_nodes_from(lattice.elements)
    graph.add_edges_from(lattice.covers)
    return graph


class EnumerationTestCase(LatticeTestCase):
    def test_counts(self):
        self.assertEqual(
            [count_lattices(n) for n in range(1, 8)], [1, 1, 1, 2, 5, 15, 53]
        )

    @pytest.mark.slow
    def test_count_eight(self):
        self.assertEqual(count_lattices(8), 222)

    def test_names(self):
        self.assertEqual(
            [lat.name for lat in enumerate_lattices(4)], ["lat4_0", "lat4_1"]
        )
        self.assertEqual(next(enumerate_lattices(1)).name, "lat1_0")

    def test_valid_lattices(self):
        for lattice in lattices_up_to(6):
            self.assertTrue(is_lattice(lattice.n, lattice.covers))
            self.assertEqual(lattice.bottom, 0)
            self.assertEqual(lattice.top, lattice.n - 1)

    def test_pairwise_non_isomorphic(self):
        for n in range(1, 7):
            graphs = [_graph(lat) for lat in enumerate_lattices(n)]
            for a, b in combinations(graphs, 2):
                self.assertFalse(nx.is_isomorphic(a, b))

    def test_deterministic(self):
        first = [lat.covers for lat in enumerate_lattices(6)]
        semilattices.cache_clear()
        self.assertEqual([lat.covers for lat in enumerate_lattices(6)], first)

    def test_up_to(self):
        self.assertEqual(len(list(lattices_up_to(5))), 10)

    def test_invalid_size(self):
        with self.assertRaises(ValidationError):
            list(enumerate_lattices(0))

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            list(enumerate_lattices(9))

    @mock.patch.dict(os.environ, {"LATMED_MAX_SIZE": "3"})
    def test_cap_from_environment(self):
        self.assertEqual(count_lattices(3), 1)
        with self.assertRaises(CapExceeded):
            list(enumerate_lattices(4))
