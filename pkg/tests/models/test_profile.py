from tests.cases import LatticeTestCase
from latmed.exceptions import ElementIndexError, ValidationError
from latmed.models import Profile


class ProfileModelTestCase(LatticeTestCase):
    def test_parse(self):
        xi = Profile.parse("0, 2,1", 3)
        self.assertEqual(xi.entries, (0, 2, 1))
        self.assertEqual(xi.k, 3)
        self.assertEqual(str(xi), "0,2,1")

    def test_parse_errors(self):
        with self.assertRaises(ValidationError):
            Profile.parse("0,a", 3)
        with self.assertRaises(ValidationError):
            Profile.parse("", 3)
        with self.assertRaises(ElementIndexError):
            Profile.parse("0,3", 3)

    def test_empty(self):
        with self.assertRaises(ValidationError):
            Profile([])

    def test_check_range(self):
        xi = Profile([0, 4])
        self.assertIs(xi.check_range(5), xi)
        with self.assertRaises(ElementIndexError):
            xi.check_range(4)

    def test_sequence_protocol(self):
        xi = Profile([3, 1])
        self.assertEqual(list(xi), [3, 1])
        self.assertEqual(len(xi), 2)
        self.assertEqual(xi[1], 1)
        self.assertEqual(xi.to_dict(), dict(entries=[3, 1]))
