import io
import json
import os
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from unittest import TestCase, mock

from latmed import lat
from latmed.cli import EXIT_ERROR, EXIT_FAILED, EXIT_OK, main
from latmed.models import CampaignResult
from tests.fixtures import fixture_path


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class CLITestCase(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.directory = tempfile.TemporaryDirectory()
        cls.l43_path = os.path.join(cls.directory.name, "l43.lat")
        cls.build_result = run_cli(
            "build", "lnk", "--n", "4", "--k", "3", "--o", cls.l43_path
        )

    @classmethod
    def tearDownClass(cls):
        cls.directory.cleanup()

    def test_build_lnk(self):
        code, out, _ = self.build_result
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        for expected in ("size 101", "length 10", "breadth 3",
                         "semimodular yes", "ambient-e 2", "ambient-f 86", "z 4",
                         "xi 0,75,21"):
            self.assertIn(expected, lines)
        lattice = lat.parse(self.l43_path)
        self.assertEqual(lattice.n, 101)
        self.assertEqual(lattice.name, "L4_3")

    def test_build_to_stdout(self):
        code, out, _ = run_cli("build", "chain", "--n", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("# size 1\n", out)
        self.assertTrue(out.endswith("lat 1\nn 1\nname C1\ncovers\n"))
        self.assertEqual(lat.loads(out).n, 1)

    def test_build_figure1(self):
        code, out, _ = run_cli("build", "figure1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lat.loads(out), lat.parse(fixture_path("figure1.lat")))

    def test_build_from_inputs(self):
        code, out, _ = run_cli(
            "build", "product",
            "--input", fixture_path("c3.lat"),
            "--input", fixture_path("b2.lat"),
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lat.loads(out).n, 12)

    def test_build_errors(self):
        code, _, err = run_cli(
            "build", "remove-interval", "--e", "3", "--f", "3",
            "--input", fixture_path("b2.lat"),
        )
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("e is not join-prime", err)

        code, _, err = run_cli("build", "lnk", "--n", "4")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("lnk needs --k", err)

        code, _, _ = run_cli("build", "pentagon")
        self.assertEqual(code, EXIT_ERROR)

    def test_check(self):
        code, out, _ = run_cli(
            "check", fixture_path("figure1.lat"), "semimodular"
        )
        self.assertEqual((code, out), (EXIT_OK, "semimodular yes\n"))

        code, out, _ = run_cli("check", fixture_path("n5.lat"), "graded")
        self.assertEqual((code, out), (EXIT_FAILED, "graded no\n"))

        code, out, _ = run_cli("check", self.l43_path, "breadth")
        self.assertEqual((code, out), (EXIT_OK, "breadth 3\n"))

        code, out, _ = run_cli(
            "check", fixture_path("not_lattice.lat"), "lattice"
        )
        self.assertEqual((code, out), (EXIT_FAILED, "lattice no\n"))

    def test_check_errors(self):
        code, _, err = run_cli(
            "check", fixture_path("bad_syntax.lat"), "graded"
        )
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("line 5", err)

        code, _, err = run_cli(
            "check", fixture_path("missing.lat"), "graded"
        )
        self.assertEqual(code, EXIT_ERROR)
        self.assertTrue(err.startswith("error: "))

        code, _, err = run_cli(
            "check", fixture_path("not_lattice.lat"), "graded"
        )
        self.assertEqual(code, EXIT_ERROR)

    def test_not_utf8(self):
        path = os.path.join(self.directory.name, "latin1.lat")
        with open(path, "wb") as f:
            f.write(b"# caf\xe9\nlat 1\nn 1\ncovers\n")
        for argv in ((path, "semimodular"), (path, "lattice")):
            code, _, err = run_cli("check", *argv)
            self.assertEqual(code, EXIT_ERROR)
            self.assertIn("not valid UTF-8", err)

    def test_median(self):
        code, out, _ = run_cli(
            "median", fixture_path("c3.lat"), "--profile", "0,2"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("medians 0 1 2\n", out)

        code, out, _ = run_cli(
            "median", self.l43_path, "--profile", "0,75,21"
        )
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("c1 99\n", out)
        self.assertIn("m' 99\n", out)

    def test_median_report(self):
        code, out, _ = run_cli(
            "median", self.l43_path, "--profile", "0,75,21", "--report"
        )
        self.assertEqual(code, EXIT_FAILED)
        self.assertIn("lattice L4_3\n", out)
        self.assertIn("z 4 remoteness 12\n", out)
        self.assertIn("closed form matches metric on 101 elements\n", out)
        self.assertIn("all inside [e,f]\n", out)
        self.assertNotIn("not all inside", out)

    def test_median_bad_profile(self):
        code, _, _ = run_cli(
            "median", fixture_path("c3.lat"), "--profile", "0,7"
        )
        self.assertEqual(code, EXIT_ERROR)
        code, _, _ = run_cli(
            "median", fixture_path("c3.lat"), "--profile", "a,b"
        )
        self.assertEqual(code, EXIT_ERROR)

    def test_c1check(self):
        code, out, _ = run_cli("c1check", fixture_path("figure1.lat"))
        self.assertEqual((code, out), (EXIT_OK, "no violation up to k=3\n"))

        code, out, _ = run_cli(
            "c1check", self.l43_path, "--max-k", "3", "--json"
        )
        self.assertEqual(code, EXIT_FAILED)
        data = json.loads(out)
        self.assertEqual(data["lattice"], "L4_3")
        self.assertEqual(data["max_k"], 3)
        self.assertIsNotNone(data["witness"])

    def test_verify(self):
        code, out, _ = run_cli(
            "verify", "--suite", "lemmas", "--max-size", "4", "--max-k", "2"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("suite lemmas\n", out)
        self.assertTrue(out.endswith("no violation up to k=2\n"))

    def test_verify_json(self):
        code, out, _ = run_cli(
            "verify", "--suite", "survey", "--max-size", "4", "--max-k", "2",
            "--json",
        )
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["examined"], 5)
        self.assertEqual(data["violations"], [])

    def test_verify_caps(self):
        code, _, err = run_cli("verify", "--max-size", "8")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("--extended", err)

        code, _, _ = run_cli("verify", "--max-k", "5", "--extended")
        self.assertEqual(code, EXIT_ERROR)

    @mock.patch("latmed.harness.verify_lemmas")
    def test_verify_default_size(self, lemmas):
        lemmas.return_value = CampaignResult("lemmas", "stub", 6, 2)
        code, out, _ = run_cli("verify", "--suite", "lemmas", "--max-k", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("parameters max_size=6 max_k=2", out.splitlines())
        lemmas.assert_called_once_with(6, 2, None)

    def test_usage_errors(self):
        self.assertEqual(run_cli()[0], EXIT_ERROR)
        self.assertEqual(run_cli("check")[0], EXIT_ERROR)
        self.assertEqual(
            run_cli("c1check", fixture_path("c3.lat"), "--max-k", "0")[0],
            EXIT_ERROR,
        )
