import random
import unittest

from hypothesis import given, settings, strategies as st

from automata import enumerate_bounded, epsilon, from_words, language_equal, sync_product, word
from synthesis import closed_loop, sup_c
from testing import oracles
from testing.fixtures import f1, example_plant, example_spec
from testing.instances import random_language, random_sublanguage
from utils.errors import InvalidRequestError
from verify import is_controllable

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


class TestSupremalControllable(unittest.TestCase):
    """supC on fixed examples."""

    def test_f1(self):
        """Only the empty word survives when u may follow a."""
        plant, spec = f1()
        res = sup_c(spec, plant, "u")
        self.assertEqual(enumerate_bounded(res, 4), [()])

    def test_example(self):
        """The controllable v1 after v2 is cut, everything else stays."""
        plant = example_plant()
        res = sup_c(example_spec(), plant, plant.uncontrollable)
        n2 = from_words([word("v b1 b2"), word("v1 v2 b"), word("v2")])
        m1 = from_words([word("u u1 a u2")])
        self.assertTrue(language_equal(res, sync_product([m1, n2])))
        self.assertEqual(res.alphabet, plant.alphabet)

    def test_empty_result(self):
        """An uncontrollable event at the start empties the language."""
        res = sup_c(epsilon("u"), from_words([("u",)]), "u")
        self.assertTrue(res.is_empty)

    def test_controllable_spec_is_kept(self):
        """A controllable specification is its own supremal sublanguage."""
        plant, _ = f1()
        spec = from_words([word("a u b")], plant.alphabet)
        self.assertTrue(language_equal(sup_c(spec, plant, "u"), spec))

    @settings(max_examples=200, deadline=None)
    @given(SEEDS)
    def test_matches_enumeration(self, seed):
        """Agrees with the union of all controllable sublanguages on small random languages."""
        rng = random.Random(seed)
        events = ["a", "b", "u", "w"]
        plant = random_language(rng, events, max_words=4, maxlen=3)
        spec = random_language(rng, events, max_words=4, maxlen=3)
        unctrl = frozenset(rng.sample(events, rng.randint(0, 2)))
        spec_words, plant_words = oracles.words(spec), oracles.words(plant)
        if len(spec_words & plant_words) > 8:
            return
        res = sup_c(spec, plant, unctrl)
        self.assertEqual(oracles.words(res, plant.num_states), oracles.sup_c(spec_words, plant_words, unctrl))
        self.assertTrue(is_controllable(res, plant, unctrl))

    def test_enumeration_counts_sublanguages(self):
        """A chain of two events has four prefix-closed sublanguages, the empty one included."""
        chain = frozenset({(), ("a",), ("a", "b")})
        self.assertEqual(len(oracles.prefix_closed_sublanguages(chain)), 4)
        fork = frozenset({(), ("a",), ("b",)})
        self.assertEqual(len(oracles.prefix_closed_sublanguages(fork)), 5)


class TestControllabilityLemmas(unittest.TestCase):
    """Closure properties of controllable languages."""

    @settings(max_examples=100, deadline=None)
    @given(SEEDS)
    def test_product_of_controllable_is_controllable(self, seed):
        """K_i controllable w.r.t. L_i gives ‖K_i controllable w.r.t. ‖L_i."""
        rng = random.Random(seed)
        unctrl = frozenset({"u1", "u2", "s"} if rng.random() < 0.5 else {"u1", "u2"})
        plants = [random_language(rng, ["a", "u1", "s"]), random_language(rng, ["b", "u2", "s"])]
        locals_ = [sup_c(random_sublanguage(rng, p), p, unctrl & p.alphabet) for p in plants]
        self.assertTrue(is_controllable(sync_product(locals_), sync_product(plants), unctrl))

    @settings(max_examples=100, deadline=None)
    @given(SEEDS)
    def test_controllability_is_transitive(self, seed):
        """K controllable w.r.t. L and L w.r.t. M gives K controllable w.r.t. M."""
        rng = random.Random(seed)
        unctrl = frozenset(e for e in ("a", "b", "u") if rng.random() < 0.5)
        outer = random_language(rng, ["a", "b", "c", "u"], max_words=6)
        middle = sup_c(random_sublanguage(rng, outer), outer, unctrl)
        if middle.is_empty:
            return
        inner = sup_c(random_sublanguage(rng, middle), middle, unctrl)
        self.assertTrue(is_controllable(inner, middle, unctrl))
        self.assertTrue(is_controllable(inner, outer, unctrl))


class TestClosedLoop(unittest.TestCase):
    """Plant behaviour under a supervisor."""

    def test_closed_loop(self):
        """A supervisor inside the plant is its own closed loop."""
        plant, spec = f1()
        self.assertTrue(language_equal(closed_loop(spec, plant), spec))

    def test_foreign_events(self):
        """Supervisors may not use events unknown to the plant."""
        plant, _ = f1()
        with self.assertRaises(InvalidRequestError):
            closed_loop(from_words([("z",)]), plant)


if __name__ == "__main__":
    unittest.main()
