import json
import logging
import os
import tempfile
import unittest

from toolkit import Toolkit
from utils.config import DEFAULT_CONFIG, load_config, merge
from utils.decorators import decorate_all_functions, log, log_exempt, stage
from utils.errors import DecompositionError, InvalidRequestError, ParseError


class TestConfig(unittest.TestCase):
    """JSON configuration over built-in defaults."""

    def _write(self, directory: str, content: str) -> str:
        path = os.path.join(directory, "config.json")
        with open(path, "w", encoding="utf-8") as file:
            file.write(content)
        return path

    def test_merge_keeps_unset_keys(self):
        """Nested sections are merged key by key."""
        res = merge(DEFAULT_CONFIG, {"synthesis": {"workers": 1}})
        self.assertEqual(res["synthesis"]["workers"], 1)
        self.assertFalse(res["synthesis"]["ensure_observer"])
        self.assertEqual(DEFAULT_CONFIG["synthesis"]["workers"], 4)

    def test_file(self):
        """A file overrides the defaults it names."""
        with tempfile.TemporaryDirectory() as directory:
            path = self._write(directory, json.dumps({"verifier": {"max_agents": 3}}))
            config = load_config(path)
        self.assertEqual(config["verifier"]["max_agents"], 3)
        self.assertEqual(config["decentralized"]["enriched_control"], "coordinator")

    def test_bad_files(self):
        """Unreadable, non-JSON and invalid settings are input errors."""
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(InvalidRequestError):
                load_config(os.path.join(directory, "missing.json"))
            with self.assertRaises(InvalidRequestError):
                load_config(self._write(directory, "{"))
            with self.assertRaises(InvalidRequestError):
                load_config(self._write(directory, "[]"))
            with self.assertRaises(InvalidRequestError):
                load_config(self._write(directory, json.dumps({"decentralized": {"enriched_control": "all"}})))


class TestDecorators(unittest.TestCase):
    """Call logging and stage tagging."""

    def test_log_all_methods(self):
        """Every public method is logged with its arguments and result."""
        logger = logging.getLogger("coordsynth.test")

        @decorate_all_functions(log, logger)
        class Adder:
            def __init__(self, base):
                self.base = base

            def add(self, n):
                return self.base + n

        with self.assertLogs(logger, level="DEBUG") as logs:
            self.assertEqual(Adder(2).add(3), 5)
        self.assertEqual(len(logs.output), 1)
        self.assertIn(".add(3)", logs.output[0])
        self.assertIn("-->  5", logs.output[0])

    def test_exempt_names_exist(self):
        """Names kept out of call logging are methods the toolkit has."""
        for name in log_exempt:
            with self.subTest(name=name):
                self.assertTrue(callable(getattr(Toolkit, name, None)))

    def test_stage(self):
        """Errors leaving a stage are tagged once, with the innermost stage winning."""

        @stage("outer")
        @stage("inner")
        def fail():
            raise DecompositionError("no", ("a",), 2)

        with self.assertRaises(DecompositionError) as caught:
            fail()
        self.assertEqual(caught.exception.stage, "inner")

        @stage("translate")
        def bad():
            raise InvalidRequestError("bad")

        with self.assertRaises(InvalidRequestError) as caught_input:
            bad()
        self.assertEqual(getattr(caught_input.exception, "stage"), "translate")


class TestErrors(unittest.TestCase):
    """Error messages."""

    def test_parse_error_location(self):
        """The source and line prefix the message."""
        self.assertEqual(str(ParseError("bad", 3, "x.aut")), "x.aut:3: bad")
        self.assertEqual(str(ParseError("bad", 0, "x.aut")), "x.aut: bad")


if __name__ == "__main__":
    unittest.main()
