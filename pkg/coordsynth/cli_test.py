import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from cli import run
from formats import parse_report, read_automaton
from testing.fixtures import fixture

M1 = fixture("example", "M1.aut")
M2 = fixture("example", "M2.aut")
K2 = fixture("example", "K2.aut")
GREEDY = fixture("example", "example_greedy.prob")


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestSingleAutomatonCommands(unittest.TestCase):
    """Commands that print one automaton."""

    def test_supc(self):
        """F1: the supremal controllable sublanguage is only the empty word."""
        code, out, _ = call("supc", "--plant", fixture("f1", "L.aut"), "--spec", fixture("f1", "K.aut"))
        self.assertEqual(code, 0)
        self.assertEqual(out, "alphabet: a b u\ncontrollable: a b\nstates: 1\ninitial: 0\ntrans:\n")

    def test_supc_report_and_output(self):
        """With -o the automaton goes to a file and --report gets the summary."""
        with tempfile.TemporaryDirectory() as directory:
            target = os.path.join(directory, "sup.aut")
            report = os.path.join(directory, "report.txt")
            code, out, _ = call(
                "supc", "--plant", fixture("f1", "L.aut"), "--spec", fixture("f1", "K.aut"), "-o", target,
                "--report", report,
            )
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            self.assertEqual(read_automaton(target).num_states, 1)
            with open(report, encoding="utf-8") as file:
                values = parse_report(file.read())
            self.assertEqual(values["states"], "1")

    def test_project(self):
        """Projecting M1 onto its controllable event leaves a single a."""
        code, out, _ = call("project", "--plant", M1, "--onto", "a")
        self.assertEqual(code, 0)
        self.assertIn("states: 2\n", out)
        self.assertIn("0 a 1\n", out)

    def test_enumerate(self):
        """Words up to the bound, one per line."""
        code, out, _ = call("enumerate", "--plant", fixture("f1", "K.aut"), "--maxlen", "1")
        self.assertEqual(code, 0)
        self.assertIn("a\n", out)
        self.assertNotIn("a b", out)


class TestChecks(unittest.TestCase):
    """Property checks print a report and exit with the verdict."""

    def test_controllable_fails(self):
        """The example specification is not controllable."""
        code, out, _ = call("check", "controllable", "--plant", M1, M2, "--spec", M1, K2)
        self.assertEqual(code, 1)
        report = parse_report(out)
        self.assertEqual(report["check"], "controllable")
        self.assertEqual(report["controllable"], "false")
        self.assertEqual(report["witness.s"], "v2 v1 b")
        self.assertEqual(report["witness.event"], "b")

    def test_observer_holds(self):
        """Projection onto the whole alphabet is an observer."""
        code, out, _ = call("check", "observer", "--plant", M1, "--onto", "a u u1 u2")
        self.assertEqual(code, 0)
        self.assertEqual(parse_report(out)["observer"], "true")

    def test_shared(self):
        """Agents from a problem file are checked for shared-event consistency."""
        code, out, _ = call("check", "shared", "--problem", GREEDY)
        self.assertIn(code, (0, 1))
        self.assertIn("shared", parse_report(out))


class TestSolve(unittest.TestCase):
    """The decentralized pipeline from a problem file."""

    def test_outputs(self):
        """Supervisors, global language, communication and report are written to the directory."""
        with tempfile.TemporaryDirectory() as directory:
            code, _, _ = call("solve", "decentralized", "--problem", GREEDY, "-o", directory)
            self.assertEqual(code, 0)
            names = set(os.listdir(directory))
            for name in ("global.aut", "communication.txt", "report.txt"):
                self.assertIn(name, names)
            for i in range(1, 5):
                self.assertIn(f"supervisor_{i}.aut", names)
            with open(os.path.join(directory, "report.txt"), encoding="utf-8") as file:
                report = parse_report(file.read())
            self.assertEqual(report["tier"], "OPTIMAL_THM3")
            self.assertEqual(report["communication.3"], "b2")
            self.assertEqual(report["communication.4"], "v1")
            self.assertEqual(report["communication.1"], "")
            self.assertEqual(report["provenance.001.event"], "b2")

    def test_deterministic(self):
        """Two runs write identical files."""
        contents = []
        for _ in range(2):
            with tempfile.TemporaryDirectory() as directory:
                self.assertEqual(call("solve", "decentralized", "--problem", GREEDY, "-o", directory)[0], 0)
                files = {}
                for name in sorted(os.listdir(directory)):
                    with open(os.path.join(directory, name), encoding="utf-8") as file:
                        files[name] = file.read()
                contents.append(files)
        self.assertEqual(contents[0], contents[1])

    def test_no_extension(self):
        """Without extension group 2 is not decomposable and b2 is suggested."""
        code, out, _ = call("solve", "decentralized", "--problem", GREEDY, "--no-extend")
        self.assertEqual(code, 1)
        report = parse_report(out)
        self.assertEqual(report["decomposable"], "false")
        self.assertEqual(report["decomposable.group"], "2")
        self.assertEqual(report["decomposable.stage"], "synthesis")
        self.assertEqual(report["decomposable.suggestion"], "b2")

    def test_timing(self):
        """Elapsed time is reported only on request."""
        code, out, _ = call("solve", "decentralized", "--problem", GREEDY, "--timing")
        self.assertEqual(code, 0)
        self.assertIn("timing.seconds", parse_report(out))
        self.assertNotIn("timing.seconds", parse_report(call("solve", "decentralized", "--problem", GREEDY)[1]))


class TestSynth(unittest.TestCase):
    """Two-level synthesis with the machines as plants."""

    def test_one_group(self):
        """M1 and M2 share nothing, so the coordinator is trivial and the result is optimal."""
        with tempfile.TemporaryDirectory() as directory:
            code, _, _ = call("synth", "two-level", "--plant", M1, M2, "--spec", M1, K2, "-o", directory)
            self.assertEqual(code, 0)
            names = set(os.listdir(directory))
            for name in ("global.aut", "coordinator_1.aut", "supervisor_k1.aut", "supervisor_1.aut", "report.txt"):
                self.assertIn(name, names)
            self.assertEqual(read_automaton(os.path.join(directory, "coordinator_1.aut")).num_states, 1)


class TestInputErrors(unittest.TestCase):
    """Bad input exits with code 2 and a message on standard error."""

    def test_bad_arguments(self):
        """Unknown commands and missing required options."""
        self.assertEqual(call("bogus")[0], 2)
        self.assertEqual(call("enumerate", "--plant", M1)[0], 2)

    def test_missing_file(self):
        """Unreadable automata are input errors."""
        code, _, err = call("supc", "--plant", fixture("example", "nothere.aut"), "--spec", M1)
        self.assertEqual(code, 2)
        self.assertIn("\nerror: ", "\n" + err)

    def test_missing_options(self):
        """Checks that need a projection alphabet say so."""
        code, _, err = call("check", "observer", "--plant", M1)
        self.assertEqual(code, 2)
        self.assertIn("--onto", err)

    def test_coordinator_count_mismatch(self):
        """A single coord alphabet for the two computed groups is rejected."""
        with open(GREEDY, encoding="utf-8") as file:
            agent_lines = file.read().split("spec:", 1)[1].split("\n", 1)[1]
        with tempfile.TemporaryDirectory() as directory:
            problem = os.path.join(directory, "one_coord.prob")
            with open(problem, "w", encoding="utf-8") as file:
                file.write(f"plant: {M1} {M2}\nspec: {M1} {K2}\ncoord: a u b\n{agent_lines}")
            code, _, err = call("solve", "decentralized", "--problem", problem)
        self.assertEqual(code, 2)
        self.assertIn("one coordinator alphabet per group", err)

    def test_bad_event_name(self):
        """Event names are validated."""
        self.assertEqual(call("project", "--plant", M1, "--onto", "a-b")[0], 2)


if __name__ == "__main__":
    unittest.main()
