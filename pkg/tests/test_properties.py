from hypothesis import given, settings as hsettings, strategies as st

from tests.cases import LatticeTestCase
from latmed import lat
from latmed.constructions import boolean, build_lnk, chain, figure1, product
from latmed.enumeration import lattices_up_to
from latmed.exceptions import ElementIndexError
from latmed.properties import (
    chain_additivity_violation,
    covers_agree,
    distance_identity_violation,
    is_codistributive,
    is_distributive,
    is_graded,
    is_join_prime,
    is_join_subsemilattice,
    is_lattice,
    is_lower_semimodular,
    is_modular,
    is_semimodular,
    join_irreducibles,
    length,
    metric_violation,
)
from tests.fixtures import fixture_path


SMALL = list(lattices_up_to(5))


class PropertiesTestCase(LatticeTestCase):
    @classmethod
    def setUpClass(cls):
        cls.n5 = lat.parse(fixture_path("n5.lat"))
        cls.m3 = lat.parse(fixture_path("m3.lat"))
        cls.b2 = lat.parse(fixture_path("b2.lat"))

    def test_is_lattice(self):
        self.assertTrue(is_lattice(4, self.b2.covers))
        self.assertFalse(is_lattice(3, [(0, 1), (0, 2)]))
        self.assertFalse(is_lattice(2, [(0, 1), (1, 0)]))
        with self.assertRaises(ElementIndexError):
            is_lattice(2, [(0, 5)])

    def test_graded(self):
        self.assertTrue(is_graded(chain(5)))
        self.assertFalse(is_graded(self.n5))
        self.assertTrue(is_graded(figure1()))

    def test_length(self):
        self.assertEqual(length(chain(6)), 5)
        self.assertEqual(length(boolean(4)), 4)

    def test_semimodular(self):
        self.assertTrue(is_semimodular(boolean(3)))
        self.assertTrue(is_semimodular(figure1()))
        self.assertFalse(is_semimodular(self.n5))
        self.assertFalse(is_lower_semimodular(self.n5))
        self.assertTrue(is_lower_semimodular(self.m3))

    def test_modular_and_distributive(self):
        self.assertTrue(is_modular(chain(4)))
        self.assertTrue(is_distributive(chain(4)))
        self.assertTrue(is_modular(self.m3))
        self.assertFalse(is_distributive(self.m3))
        self.assertFalse(is_modular(self.n5))
        self.assertTrue(is_distributive(boolean(3)))

    def test_join_irreducibles(self):
        self.assertEqual(join_irreducibles(chain(4)), frozenset([1, 2, 3]))
        self.assertEqual(join_irreducibles(boolean(3)), frozenset([1, 2, 4]))
        self.assertEqual(
            join_irreducibles(figure1()), frozenset([1, 2, 4, 5, 8])
        )

    def test_join_prime(self):
        c5 = chain(5)
        for u in range(1, 5):
            self.assertTrue(is_join_prime(c5, u))
        self.assertFalse(is_join_prime(c5, 0))
        self.assertFalse(is_join_prime(self.b2, 3))
        self.assertTrue(is_join_prime(self.b2, 1))
        # (1, 1) in C4 x C2
        self.assertFalse(is_join_prime(product([chain(4), chain(2)]), 3))

    def test_codistributive(self):
        for u in self.b2.elements:
            self.assertTrue(is_codistributive(self.b2, u))
        self.assertFalse(is_codistributive(self.m3, 1))
        self.assertTrue(is_codistributive(self.m3, 4))

    def test_join_prime_implies_join_irreducible(self):
        for lattice in SMALL:
            irreducible = join_irreducibles(lattice)
            for u in lattice.elements:
                if is_join_prime(lattice, u):
                    self.assertIn(u, irreducible)

    def test_hierarchy(self):
        for lattice in SMALL:
            if is_distributive(lattice):
                self.assertTrue(is_modular(lattice))
            if is_modular(lattice):
                self.assertTrue(is_semimodular(lattice))
            if is_semimodular(lattice):
                self.assertTrue(is_graded(lattice))

    def test_metric_identities(self):
        for lattice in (figure1(), boolean(3), self.m3):
            self.assertIsNone(metric_violation(lattice))
            self.assertIsNone(distance_identity_violation(lattice))
            self.assertIsNone(chain_additivity_violation(lattice))
        self.assertIsNone(metric_violation(self.n5))
        self.assertIsNone(distance_identity_violation(self.n5))

    def test_chain_additivity_fails_on_pentagon(self):
        # d(0, 4) = 2 but d(0, 1) + d(1, 4) = 3
        self.assertEqual(chain_additivity_violation(self.n5), (0, 1, 4))

    def test_interval_removal_is_join_subsemilattice(self):
        lnk = build_lnk(4, 3)
        self.assertTrue(
            is_join_subsemilattice(lnk.lattice, lnk.ambient, lnk.embedding)
        )
        self.assertTrue(covers_agree(lnk.lattice, lnk.ambient, lnk.embedding))

    @hsettings(max_examples=30, deadline=None)
    @given(st.sampled_from(SMALL))
    def test_metric_axioms(self, lattice):
        self.assertMetric(lattice)
        self.assertIsNone(metric_violation(lattice))
