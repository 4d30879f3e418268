from tests.cases import LatticeTestCase
from tests.factories import ChainFactory
from latmed import lat
from latmed.breadth import (
    breadth,
    breadth_bruteforce,
    irredundant_witness,
    is_irredundant,
)
from latmed.constructions import boolean, build_lnk, chain, figure1
from latmed.enumeration import lattices_up_to
from tests.fixtures import fixture_path


class BreadthTestCase(LatticeTestCase):
    def test_chains(self):
        self.assertEqual(breadth(chain(1)), 0)
        c = ChainFactory()
        self.assertEqual(breadth(c), 0 if c.n == 1 else 1)

    def test_boolean(self):
        for k in range(1, 6):
            self.assertEqual(breadth(boolean(k)), k)

    def test_known(self):
        self.assertEqual(breadth(figure1()), 2)
        self.assertEqual(breadth(build_lnk(4, 3).lattice), 3)
        n5 = lat.parse(fixture_path("n5.lat"))
        self.assertEqual(breadth(n5), 2)
        self.assertEqual(breadth_bruteforce(n5, 5), 2)
        self.assertEqual(breadth_bruteforce(boolean(3), 8), 3)

    def test_witness(self):
        b3 = boolean(3)
        witness = irredundant_witness(b3)
        self.assertEqual(len(witness), 3)
        self.assertTrue(is_irredundant(b3, witness))

    def test_irredundant(self):
        b2 = boolean(2)
        self.assertTrue(is_irredundant(b2, [1, 2]))
        self.assertFalse(is_irredundant(b2, [1, 2, 3]))
        self.assertFalse(is_irredundant(b2, [0]))

    def test_bruteforce_cap(self):
        self.assertEqual(breadth_bruteforce(boolean(3), 2), 2)

    def test_agrees_with_bruteforce(self):
        for lattice in lattices_up_to(7):
            self.assertEqual(
                breadth(lattice),
                breadth_bruteforce(lattice, lattice.n),
                lattice.name,
            )
