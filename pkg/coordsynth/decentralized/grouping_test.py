import unittest

import numpy as np
from hypothesis import given, strategies as st

from decentralized import group_agents, incidence, shared_matrix
from testing.fixtures import EXAMPLE_AGENTS
from utils.errors import InvalidRequestError
from verify import AgentAlphabet


def agents(*observations: str) -> list[AgentAlphabet]:
    return [AgentAlphabet.of(obs, "") for obs in observations]


class TestMatrices(unittest.TestCase):
    """Observation incidence and pairwise sharing."""

    def test_incidence(self):
        """One row per agent, columns in event-name order."""
        matrix, events = incidence(agents("b a", "c"))
        self.assertEqual(events, ["a", "b", "c"])
        np.testing.assert_array_equal(matrix, [[1, 1, 0], [0, 0, 1]])

    def test_shared_matrix(self):
        """Counts of commonly observed events with a zero diagonal."""
        shared = shared_matrix(EXAMPLE_AGENTS)
        self.assertEqual(shared[0, 1], 3)
        self.assertEqual(shared[2, 3], 2)
        self.assertEqual(shared[0, 2], 1)
        self.assertEqual(int(np.trace(shared)), 0)
        np.testing.assert_array_equal(shared, shared.T)


class TestGrouping(unittest.TestCase):
    """Agglomerative grouping by shared observations."""

    def test_example_agents(self):
        """The two machine-level pairs form the groups."""
        self.assertEqual(group_agents(EXAMPLE_AGENTS), ((1, 2), (3, 4)))

    def test_target_groups(self):
        """A target count overrides the stopping rule."""
        self.assertEqual(group_agents(EXAMPLE_AGENTS, 1), ((1, 2, 3, 4),))
        self.assertEqual(group_agents(EXAMPLE_AGENTS, 4), ((1,), (2,), (3,), (4,)))
        for bad in (0, 5):
            with self.assertRaises(InvalidRequestError):
                group_agents(EXAMPLE_AGENTS, bad)

    def test_nothing_shared(self):
        """Agents without common events stay alone."""
        self.assertEqual(group_agents(agents("a", "b")), ((1,), (2,)))
        self.assertEqual(group_agents([]), ())

    def test_ties_go_to_smallest_numbers(self):
        """Equal scores merge the pair with the smallest agent numbers first."""
        self.assertEqual(group_agents(agents("a", "a", "b", "b")), ((1, 2), (3, 4)))
        self.assertEqual(group_agents(agents("a", "b", "a")), ((1, 3), (2,)))

    def test_events_seen_by_all_do_not_count(self):
        """Sharing only what every agent observes is no reason to merge."""
        self.assertEqual(group_agents(agents("a x", "a y", "a z")), ((1,), (2,), (3,)))

    @given(st.lists(st.sets(st.sampled_from("abcdef"), min_size=1), min_size=1, max_size=6))
    def test_partition(self, observations):
        """Groups always partition the agents and are sorted."""
        groups = group_agents([AgentAlphabet(frozenset(o), frozenset()) for o in observations])
        members = [i for g in groups for i in g]
        self.assertEqual(sorted(members), list(range(1, len(observations) + 1)))
        self.assertEqual([g[0] for g in groups], sorted(g[0] for g in groups))
        for g in groups:
            self.assertEqual(list(g), sorted(g))


if __name__ == "__main__":
    unittest.main()
