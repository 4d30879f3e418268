from tests.cases import LatticeTestCase
from latmed.constructions import chain
from latmed.exceptions import ValidationError
from latmed.models import CampaignResult, Profile, Tally, Violation


def _result(holds=0, fails=0, examined=1):
    result = CampaignResult("lemmas", "test", max_k=3, properties=["metric"])
    result.examined = examined
    for _ in range(holds):
        result.record("metric", "holds")
    for _ in range(fails):
        result.record("metric", "fails")
        result.fail(Violation("metric", chain(2), detail="broken"))
    return result


class TallyModelTestCase(LatticeTestCase):
    def test_add(self):
        total = Tally(1, 2, 3) + Tally(1, 0, 1)
        self.assertEqual(total, Tally(2, 2, 4))
        self.assertEqual(total.total, 8)

    def test_negative(self):
        with self.assertRaises(ValidationError):
            Tally(-1)


class CampaignResultModelTestCase(LatticeTestCase):
    def test_record_unknown_outcome(self):
        with self.assertRaises(ValidationError):
            _result().record("metric", "maybe")

    def test_merge_is_associative(self):
        a, b, c = _result(1), _result(0, 1), _result(1)
        left = a.merge(b).merge(c)
        right = a.merge(b.merge(c))
        self.assertEqual(left.to_dict(), right.to_dict())
        self.assertEqual(left.examined, 3)
        self.assertEqual(left.tallies["metric"], Tally(2, 1, 0))

    def test_text_without_violation(self):
        text = _result(1).to_text()
        self.assertIn("property metric holds=1 fails=0 skipped=0\n", text)
        self.assertTrue(text.endswith("no violation up to k=3\n"))
        self.assertFalse(_result(1).failed)

    def test_text_with_violation(self):
        result = _result(0, 1)
        self.assertTrue(result.failed)
        self.assertIn("violation metric lattice=C2 broken\n", result.to_text())
        self.assertTrue(result.to_text().endswith("1 violation(s)\n"))

    def test_violation_to_dict(self):
        violation = Violation("c1-median", chain(2), Profile([1]), 1)
        d = violation.to_dict()
        self.assertEqual(d["property"], "c1-median")
        self.assertEqual(d["profile"], [1])
        self.assertEqual(d["lattice"]["n"], 2)
