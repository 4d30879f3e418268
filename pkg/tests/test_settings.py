import logging
import os
from unittest import TestCase, mock

from latmed import settings
from latmed.exceptions import ValidationError


class SettingsTestCase(TestCase):
    @mock.patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        self.assertEqual(settings.enumeration_cap(), settings.ENUMERATION_CAP)
        self.assertEqual(settings.repro_dir(), settings.DEFAULT_REPRO_DIR)
        self.assertEqual(settings.worker_count(), os.cpu_count() or 1)
        self.assertEqual(settings.log_level(), logging.WARNING)

    @mock.patch.dict(os.environ, {
        "LATMED_MAX_SIZE": "5",
        "LATMED_THREADS": "4",
        "LATMED_REPRO_DIR": "/tmp/repro",
        "LATMED_LOG_LEVEL": "debug",
    })
    def test_environment(self):
        self.assertEqual(settings.enumeration_cap(), 5)
        self.assertEqual(settings.worker_count(), 4)
        self.assertEqual(settings.repro_dir(), "/tmp/repro")
        self.assertEqual(settings.log_level(), logging.DEBUG)

    @mock.patch.dict(os.environ, {"LATMED_THREADS": " "})
    def test_blank_is_default(self):
        self.assertEqual(settings.worker_count(), os.cpu_count() or 1)

    def test_invalid(self):
        for raw in ("zero", "0", "-2"):
            with mock.patch.dict(os.environ, {"LATMED_MAX_SIZE": raw}):
                with self.assertRaises(ValidationError):
                    settings.enumeration_cap()

    @mock.patch.dict(os.environ, {"LATMED_LOG_LEVEL": "error"})
    def test_verbosity_wins(self):
        self.assertEqual(settings.log_level(0), logging.ERROR)
        self.assertEqual(settings.log_level(1), logging.INFO)
        self.assertEqual(settings.log_level(3), logging.DEBUG)

    @mock.patch.dict(os.environ, {"LATMED_LOG_LEVEL": "chatty"})
    def test_unknown_level(self):
        self.assertEqual(settings.log_level(), logging.WARNING)
