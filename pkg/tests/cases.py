from unittest import TestCase

import numpy as np
from faker import Faker

from latmed.models import Lattice

fake = Faker()


class LatticeTestCase(TestCase):
    def assertLatticeEqual(self, lattice: Lattice, expected: Lattice):
        self.assertEqual(lattice.n, expected.n)
        self.assertEqual(lattice.covers, expected.covers)

    def assertMetric(self, lattice: Lattice):
        dist = lattice.dist_matrix
        self.assertTrue((dist == dist.T).all())
        self.assertTrue(((dist == 0) == np.eye(lattice.n, dtype=bool)).all())
        for y in lattice.elements:
            self.assertTrue(
                (dist <= dist[:, y][:, None] + dist[y][None, :]).all()
            )
        adjacent = lattice.cover_matrix | lattice.cover_matrix.T
        self.assertTrue(((dist == 1) == adjacent).all())
