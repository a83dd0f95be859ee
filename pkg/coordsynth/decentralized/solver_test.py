import random
import unittest
from dataclasses import replace

from hypothesis import given, settings, strategies as st

from automata import alphabet, from_words, language_equal, word
from decentralized import (
    DecentralizedProblem,
    communication_map,
    enrich,
    global_controllable,
    solve,
    translate,
)
from formats import load_problem
from synthesis import Tier, sup_c
from testing.fixtures import EXAMPLE_AGENTS, EXAMPLE_PLAN, fixture, example_plant, example_spec
from testing.instances import decentralized_instance
from utils.errors import DecompositionError, InvalidRequestError
from verify import AgentAlphabet, check_shared_consistency

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


def pref(*words: str):
    return from_words([word(w) for w in words])


class TestTranslation(unittest.TestCase):
    """Restating the decentralized problem as a coordination problem."""

    def setUp(self):
        self.problem = load_problem(fixture("example", "example_greedy.prob"))

    def test_uncontrollable_events_dropped(self):
        """Agents 1 and 2 cannot keep b, which the plant declares uncontrollable."""
        with self.assertLogs("coordsynth", level="WARNING") as logs:
            translation = translate(self.problem)
        self.assertTrue(any("cannot control uncontrollable events b" in line for line in logs.output))
        self.assertEqual(translation.agents, EXAMPLE_AGENTS)
        self.assertEqual(translation.controllable[0], alphabet("a"))
        self.assertEqual(translation.uncontrollable, alphabet("b u u1 u2"))

    def test_consistency_uses_normalized_sets(self):
        """The b listed by agents 1 and 2 would break shared-event consistency if it were kept."""
        self.assertFalse(check_shared_consistency(self.problem.agents)[0])
        with self.assertLogs("coordsynth", level="WARNING") as logs:
            translation = translate(self.problem)
        self.assertFalse(any("not guaranteed" in line for line in logs.output))
        self.assertTrue(check_shared_consistency(translation.agents)[0])

    def test_agent_plants(self):
        """Each agent's plant is the projection of L onto what it observes."""
        translation = translate(self.problem)
        self.assertTrue(language_equal(translation.plants[2], pref("v b1", "v1 b")))
        self.assertTrue(language_equal(translation.plants[3], pref("v b2", "v2 b")))
        self.assertEqual(translation.alphabets[2], alphabet("v b v1 b1"))

    def test_global_controllable(self):
        """The plant's controllable set wins; otherwise the agents' sets are joined."""
        self.assertEqual(global_controllable(self.problem), alphabet("a b1 b2 v v1 v2"))
        bare = replace(self.problem, plant=self.problem.plant.with_controllable(()))
        self.assertEqual(global_controllable(bare), alphabet("a b v v1 b1 v2 b2"))

    def test_unobserved_event(self):
        """Every plant event must be observed by some agent."""
        problem = replace(self.problem, agents=self.problem.agents[:3])
        with self.assertRaises(InvalidRequestError) as caught:
            translate(problem)
        self.assertEqual(getattr(caught.exception, "stage", None), "translate")

    def test_spec_outside_plant(self):
        """The specification must be a sublanguage of the plant."""
        problem = replace(self.problem, spec=self.problem.plant, plant=self.problem.spec)
        with self.assertRaises(InvalidRequestError):
            translate(problem)

    def test_foreign_agent_event(self):
        """Agents may only name plant events."""
        agents = self.problem.agents + (AgentAlphabet.of("zz", ""),)
        with self.assertRaises(InvalidRequestError):
            translate(replace(self.problem, agents=agents))


class TestCommunication(unittest.TestCase):
    """What coordinators forward and what agents then observe and control."""

    def test_example_map(self):
        """Agent 3 receives b2, agent 4 receives v1, the first group needs nothing."""
        comm = communication_map(EXAMPLE_PLAN, EXAMPLE_AGENTS)
        self.assertEqual(comm.receive, {1: frozenset(), 2: frozenset(), 3: alphabet("b2"), 4: alphabet("v1")})
        self.assertEqual(comm.group_of, {1: 1, 2: 1, 3: 2, 4: 2})
        self.assertEqual(
            comm.to_text(),
            "coordinator 1: a b u\n"
            "coordinator 2: b b2 v v1\n"
            "agent 1 group 1 receives:\n"
            "agent 2 group 1 receives:\n"
            "agent 3 group 2 receives: b2\n"
            "agent 4 group 2 receives: v1\n",
        )

    def test_enrich_modes(self):
        """Coordinator mode lets agent 4 disable v1; observation-only mode does not."""
        sigma_c = example_plant().controllable
        full = enrich(EXAMPLE_PLAN, EXAMPLE_AGENTS, sigma_c)
        self.assertEqual(full[3].observable, alphabet("v b v2 b2 v1"))
        self.assertEqual(full[3].controllable, alphabet("v v2 b2 v1"))
        limited = enrich(EXAMPLE_PLAN, EXAMPLE_AGENTS, sigma_c, "observation-only")
        self.assertEqual(limited[3].controllable, alphabet("v v2 b2"))
        with self.assertRaises(InvalidRequestError):
            enrich(EXAMPLE_PLAN, EXAMPLE_AGENTS, sigma_c, "everything")


class TestSolve(unittest.TestCase):
    """End-to-end decentralized synthesis on the example."""

    @classmethod
    def setUpClass(cls):
        cls.problem = load_problem(fixture("example", "example_greedy.prob"))
        cls.solution = solve(cls.problem)

    def test_plan(self):
        """Grouping and greedy alphabets reproduce the hand-made plan."""
        self.assertEqual(self.solution.result.plan, EXAMPLE_PLAN)
        self.assertEqual([(s.group, s.event) for s in self.solution.provenance], [(2, "b2"), (2, "v1")])

    def test_verdicts(self):
        """The solution is safe, coobservable after communication and verified optimal."""
        for key in ("within_spec", "controllable", "coobservable", "separable"):
            self.assertTrue(self.solution.verdicts[key], key)
        self.assertEqual(self.solution.result.tier, Tier.OPTIMAL_THM3)
        self.assertTrue(self.solution.holds)
        self.assertEqual(self.solution.notes, ())

    def test_global_language(self):
        """The agents reach supC(K, L)."""
        plant = example_plant()
        self.assertTrue(
            language_equal(self.solution.result.global_language, sup_c(example_spec(), plant, plant.uncontrollable))
        )
        self.assertTrue(language_equal(self.solution.supervisors[4], pref("v b2", "v1 v2 b", "v2")))

    def test_given_alphabets(self):
        """The problem file with explicit coordinators gives the same supervisors."""
        other = solve(load_problem(fixture("example", "example.prob")))
        self.assertEqual(other.result.plan, EXAMPLE_PLAN)
        self.assertEqual(other.provenance, ())
        for i in range(1, 5):
            self.assertEqual(other.supervisors[i], self.solution.supervisors[i])

    def test_observation_only(self):
        """Without extra control rights agent 3 cannot tell v2 apart and v1 stays enabled."""
        other = solve(self.problem, enriched_control="observation-only")
        verdict = other.verdicts["coobservable"]
        self.assertFalse(verdict)
        self.assertEqual(verdict.counterexample.word, ("v2",))
        self.assertEqual(verdict.counterexample.event, "v1")
        self.assertFalse(other.holds)

    def test_no_extension(self):
        """Shared events alone do not decompose group 2."""
        with self.assertRaises(DecompositionError) as caught:
            solve(self.problem, extend=False)
        self.assertEqual(caught.exception.stage, "synthesis")
        self.assertEqual(caught.exception.group, 2)

    def test_single_group_note(self):
        """One group is accepted and noted."""
        other = solve(replace(self.problem, groups=((1, 2, 3, 4),)))
        self.assertTrue(any(note.startswith("single group") for note in other.notes))
        self.assertTrue(other.verdicts["within_spec"])

    def test_coordinator_count_mismatch(self):
        """One coordinator alphabet for two computed groups is an input error."""
        with self.assertRaises(InvalidRequestError) as caught:
            solve(replace(self.problem, coordinator_alphabets=(alphabet("a u b"),)))
        self.assertEqual(getattr(caught.exception, "stage", None), "grouping")
        self.assertIn("2 groups", str(caught.exception))


class TestRandomInstances(unittest.TestCase):
    """Safety of the decentralized solution on random problems."""

    @settings(max_examples=50, deadline=None)
    @given(SEEDS, st.integers(min_value=1, max_value=3))
    def test_safety(self, seed, agents):
        """Within the specification, controllable, coobservable and separable."""
        rng = random.Random(seed)
        instance = decentralized_instance(rng, agents=agents, events=4)
        solution = solve(DecentralizedProblem(instance.plant, instance.spec, instance.agents))
        for key in ("within_spec", "controllable", "coobservable", "separable"):
            self.assertTrue(solution.verdicts[key], f"{key}: {solution.verdicts[key].counterexample}")
        self.assertEqual(set(solution.supervisors), set(range(1, agents + 1)))


if __name__ == "__main__":
    unittest.main()
