""" Unittest """
import unittest
import random
from knotoid.moves import enumerate_moves, apply_move, explore, certify_heights, Explorer, ExploreResult, MoveSite
from knotoid.moves import R1_PLUS, R1_MINUS, R1_UNDO, R2, S1, S1_UNDO, S2, S2_UNDO, LEFT, RIGHT, EXACT
from knotoid.config import Budget
from knotoid.canon import isomorphic
from knotoid.invariants import index_polynomial, bracket, normalized_bracket, normalized_turaev, height_lower_bounds
from knotoid.skein import skein_bracket
from knotoid.seqcalc import SignSequence, consecutive_subsum_exists, negate
from knotoid.ops import involution, lift_cover, product, SYM
from knotoid.errors import KnotoidMoveError
from knotoid.fixtures import fixture_names, load_fixture, kinked
from knotoid.diagram import MultiShortcutMap, TAIL, HEAD

GROWTH = {R1_PLUS: 1, R1_MINUS: 1, R2: 2}


def _random_walk(kmap, rand, steps, max_crossings, max_height=3):
    for _ in range(steps):
        sites = []
        for site in enumerate_moves(kmap):
            if len(kmap.crossings()) + GROWTH.get(site.kind, 0) > max_crossings:
                continue
            if site.kind in (S1, S2) and len(kmap.flats()) + (2 if site.kind == S2 else 1) > max_height:
                continue
            sites.append(site)
        kmap = apply_move(kmap, rand.choice(sites))
    return kmap


class TestEnumerateMoves(unittest.TestCase):
    def _kinds(self, kmap):
        return set(site.kind for site in enumerate_moves(kmap))

    def test_trivial_diagram(self):
        kinds = self._kinds(load_fixture("trivial"))
        self.assertIn(R1_PLUS, kinds)
        self.assertIn(S1, kinds)
        self.assertIn(S2, kinds)
        self.assertNotIn(R2, kinds)
        self.assertNotIn(R1_UNDO, kinds)

    def test_reduced_diagram_has_no_kink_removal(self):
        self.assertNotIn(R1_UNDO, self._kinds(load_fixture("bifoil")))

    def test_order_is_deterministic(self):
        kmap = load_fixture("cloud")
        self.assertEqual(enumerate_moves(kmap), enumerate_moves(load_fixture("cloud")))

    def test_closed_diagrams_have_no_shortcut_moves(self):
        kinds = self._kinds(load_fixture("trefoil"))
        self.assertFalse(any(kind.startswith("S") for kind in kinds))

    def test_site_equality(self):
        self.assertEqual(MoveSite(R1_PLUS, (0, LEFT)), MoveSite(R1_PLUS, (0, LEFT)))
        self.assertNotEqual(MoveSite(R1_PLUS, (0, LEFT)), MoveSite(R1_MINUS, (0, LEFT)))


class TestApplyMove(unittest.TestCase):
    def test_kink_and_undo(self):
        trivial = load_fixture("trivial")
        kmap = kinked(trivial, [1])
        undo = [s for s in enumerate_moves(kmap) if s.kind == R1_UNDO]
        self.assertEqual(len(undo), 1)
        self.assertTrue(isomorphic(apply_move(kmap, undo[0]), trivial))

    def test_kink_signs(self):
        trivial = load_fixture("trivial")
        for side in (LEFT, RIGHT):
            plus = apply_move(trivial, MoveSite(R1_PLUS, (0, side)))
            minus = apply_move(trivial, MoveSite(R1_MINUS, (0, side)))
            self.assertEqual(plus.writhe(), 1, side)
            self.assertEqual(minus.writhe(), -1, side)

    def test_stale_site_is_rejected(self):
        with self.assertRaises(KnotoidMoveError):
            apply_move(load_fixture("bifoil"), MoveSite(R1_UNDO, 99))

    def test_swing_around_tail(self):
        trivial = load_fixture("trivial")
        tail = trivial.endpoint(TAIL)
        seqs = set()
        for side in (LEFT, RIGHT):
            kmap = apply_move(trivial, MoveSite(S1, tail, side))
            self.assertEqual(kmap.height(), 1)
            seqs.add(str(kmap.seq()))
        self.assertEqual(seqs, set(["+", "-"]))

    def test_swing_around_head(self):
        kmap = load_fixture("bifoil")
        head = kmap.endpoint(HEAD)
        swung = apply_move(kmap, MoveSite(S1, head, LEFT))
        self.assertEqual(swung.height(), 2)
        self.assertEqual(str(swung.seq()), "++")
        self.assertEqual(index_polynomial(swung), index_polynomial(kmap))

    def test_finger_across_shortcut(self):
        trivial = load_fixture("trivial")
        site = [s for s in enumerate_moves(trivial) if s.kind == S2][0]
        kmap = apply_move(trivial, site)
        self.assertEqual(kmap.height(), 2)
        self.assertIn(str(kmap.seq()), ("+-", "-+"))
        undo = [s for s in enumerate_moves(kmap) if s.kind == S2_UNDO]
        self.assertEqual(len(undo), 1)
        self.assertTrue(isomorphic(apply_move(kmap, undo[0]), trivial))

    def test_random_moves_keep_invariants(self):
        rand = random.Random(2024)
        for name, limit in (("bifoil", 5), ("cloud", 7), ("trefoil_knotoid", 5), ("trivial", 3)):
            kmap = load_fixture(name)
            f = index_polynomial(kmap)
            bracket = normalized_bracket(kmap)
            turaev = normalized_turaev(kmap)
            for walk in range(4):
                moved = _random_walk(kmap, rand, 4, limit)
                label = "{} walk {}".format(name, walk)
                self.assertTrue(moved.validate().valid, label)
                self.assertEqual(index_polynomial(moved), f, label)
                self.assertEqual(normalized_bracket(moved), bracket, label)
                self.assertEqual(normalized_turaev(moved), turaev, label)

    def test_random_moves_on_larger_diagrams(self):
        rand = random.Random(7)
        for name in ("kinoshita", "spiral", "borromean"):
            kmap = load_fixture(name)
            f = index_polynomial(kmap)
            turaev = normalized_turaev(kmap)
            for walk in range(2):
                moved = _random_walk(kmap, rand, 3, len(kmap.crossings()) + 1, max_height=4)
                label = "{} walk {}".format(name, walk)
                self.assertTrue(moved.validate().valid, label)
                self.assertEqual(index_polynomial(moved), f, label)
                self.assertEqual(normalized_turaev(moved), turaev, label)

    def test_skein_oracle_on_random_diagrams(self):
        rand = random.Random(31)
        trivial = load_fixture("trivial")
        for walk in range(6):
            moved = _random_walk(trivial, rand, 4, 3, max_height=2)
            self.assertEqual(bracket(moved), skein_bracket(moved), "walk {}".format(walk))

    def test_every_enumerated_site_applies(self):
        diagrams = [load_fixture(name) for name in fixture_names()]
        diagrams = [kmap for kmap in diagrams if not isinstance(kmap, MultiShortcutMap)]
        diagrams.append(kinked(load_fixture("trivial"), [1, -1]))
        for kmap in diagrams:
            for site in enumerate_moves(kmap):
                moved = apply_move(kmap, site)
                self.assertTrue(moved.validate().valid, "{} {}".format(kmap, site))

    def test_swing_back_at_either_end(self):
        trivial = load_fixture("trivial")
        for side in (LEFT, RIGHT):
            swung = apply_move(trivial, MoveSite(S1, trivial.endpoint(TAIL), side))
            undo = [s for s in enumerate_moves(swung) if s.kind == S1_UNDO]
            self.assertTrue(undo, side)
            for site in undo:
                back = apply_move(swung, site)
                self.assertTrue(back.validate().valid, site)
                self.assertTrue(isomorphic(back, trivial), site)

    def test_random_moves_respect_bounds(self):
        rand = random.Random(99)
        kmap = load_fixture("kinoshita")
        bounds = height_lower_bounds(kmap)
        f = index_polynomial(kmap)
        for _ in range(5):
            moved = _random_walk(kmap, rand, 3, 6, max_height=4)
            seq = moved.seq()
            self.assertGreaterEqual(seq.h_plus, bounds.lower_plus)
            self.assertGreaterEqual(seq.h_minus, bounds.lower_minus)
            self.assertTrue(consecutive_subsum_exists(seq, f.maxdeg()))
            self.assertTrue(consecutive_subsum_exists(seq, f.mindeg()))


class TestExplore(unittest.TestCase):
    def test_trivial_search(self):
        result = explore(load_fixture("trivial"), Budget(1, 1, max_states=200))
        self.assertEqual(result.min_height, 0)
        self.assertGreater(result.visited, 1)
        self.assertIn(SignSequence.parse("+"), result.sequences)
        self.assertEqual(result.as_dict()["minimal_sequences"], [""])

    def test_search_stays_within_budget(self):
        result = explore(load_fixture("bifoil"), Budget(3, 2, max_states=60))
        for seq in result.sequences:
            self.assertLessEqual(len(seq), 2)
            self.assertGreaterEqual(seq.h_plus, 1)
            self.assertTrue(consecutive_subsum_exists(seq, 1))

    def test_state_budget_marks_partial(self):
        result = Explorer(Budget(4, 2, max_states=5)).run(load_fixture("bifoil"))
        self.assertTrue(result.partial)
        self.assertEqual(result.visited, 5)

    def test_stop_condition(self):
        result = explore(load_fixture("bifoil"), Budget(4, 2, max_states=1000), stop=lambda r: True)
        self.assertTrue(result.partial)
        self.assertEqual(result.visited, 1)

    def test_exhausted_search_is_not_partial(self):
        trivial = load_fixture("trivial")
        full = explore(trivial, Budget(0, 1, max_states=1000))
        self.assertFalse(full.partial)
        self.assertGreater(full.visited, 1)
        exact = explore(trivial, Budget(0, 1, max_states=full.visited))
        self.assertFalse(exact.partial)
        self.assertEqual(exact.visited, full.visited)
        short = explore(trivial, Budget(0, 1, max_states=full.visited - 1))
        self.assertTrue(short.partial)

    def test_partial_search_warns(self):
        trivial = load_fixture("trivial")
        limit = explore(trivial, Budget(0, 1, max_states=1000)).visited - 1
        with self.assertLogs(level="WARNING") as logs:
            result = explore(trivial, Budget(0, 1, max_states=limit))
        self.assertTrue(result.partial)
        self.assertIn("Search stopped after {} diagrams; results are partial".format(limit), logs.output[-1])

    def test_reflection_negates_reached_sequences(self):
        kmap = load_fixture("bifoil")
        budget = Budget(2, 1, max_states=2000)
        plain = explore(kmap, budget)
        reflected = explore(involution(kmap, SYM), budget)
        self.assertFalse(plain.partial or reflected.partial)
        self.assertEqual(set(negate(s) for s in plain.sequences), reflected.sequences)

    def test_several_seeds(self):
        kmap = load_fixture("trivial")
        result = explore([kmap, kinked(kmap, [1])], Budget(1, 0, max_states=50))
        self.assertGreaterEqual(result.visited, 2)


class TestExploreResult(unittest.TestCase):
    def _make_one(self, *diagrams):
        result = ExploreResult(Budget(1, 1))
        for kmap in diagrams:
            result.observe(kmap)
        return result

    def _swung(self, side):
        trivial = load_fixture("trivial")
        return apply_move(trivial, MoveSite(S1, trivial.endpoint(TAIL), side))

    def test_merge_lower_level_replaces_best(self):
        result = self._make_one(self._swung(LEFT))
        result.merge(self._make_one(load_fixture("trivial")))
        self.assertEqual(result.visited, 2)
        self.assertEqual(result.min_height, 0)
        self.assertEqual(result.best_sequences, set([SignSequence()]))
        self.assertEqual(len(result.best_diagrams), 1)
        self.assertEqual((result.min_plus, result.min_minus), (0, 0))

    def test_merge_same_level_unions_sequences(self):
        result = self._make_one(self._swung(LEFT))
        other = self._make_one(self._swung(RIGHT), self._swung(LEFT))
        result.merge(other)
        self.assertEqual(result.visited, 3)
        self.assertEqual(result.as_dict()["minimal_sequences"], ["+", "-"])
        self.assertEqual(len(result.best_diagrams), 2)

    def test_merge_empty_result(self):
        result = self._make_one(self._swung(LEFT))
        result.merge(ExploreResult(Budget(1, 1)))
        self.assertEqual(result.min_height, 1)
        self.assertEqual(result.visited, 1)


class TestCertify(unittest.TestCase):
    def test_kinoshita(self):
        result = certify_heights(load_fixture("kinoshita"), Budget(5, 2, max_states=100))
        self.assertEqual(result.status, EXACT)
        self.assertEqual((result.h_plus, result.h_minus, result.height), (1, 1, 2))
        self.assertEqual(result.as_dict()["minimal_sequences"], ["+-"])

    def test_small_diagrams(self):
        for name, heights in (("bifoil", (1, 0)), ("spiral", (2, 0)), ("cloud", (1, 1)),
                              ("trivial", (0, 0)), ("trefoil_knotoid", (0, 0))):
            kmap = load_fixture(name)
            result = certify_heights(kmap, Budget.for_map(kmap, max_states=100))
            self.assertTrue(result.exact, name)
            self.assertEqual((result.h_plus, result.h_minus), heights, name)

    def test_turaev_bounds_certify_borromean(self):
        kmap = load_fixture("borromean")
        result = certify_heights(kmap, Budget(5, 2, max_states=40))
        self.assertTrue(result.exact)
        self.assertEqual(result.height, 2)
        self.assertEqual(result.bounds.source_plus, "turaev")

    def test_cloud_minimal_level(self):
        kmap = load_fixture("cloud")
        result = certify_heights(kmap, Budget.for_map(kmap, max_states=100))
        self.assertEqual(result.status, EXACT)
        self.assertEqual(result.bounds.source_plus, "index")
        self.assertEqual(result.bounds.source_minus, "turaev")
        self.assertIn("+-", result.as_dict()["minimal_sequences"])

    def test_each_shortcut_seeds_the_search(self):
        lifted = lift_cover(load_fixture("spiral"), 2)
        seed = lifted.shortcut_map(0)
        result = certify_heights(lifted.lifted, Budget.for_map(seed, max_states=100))
        self.assertEqual(result.status, EXACT)
        self.assertEqual((result.h_plus, result.h_minus), (1, 0))
        self.assertEqual(result.as_dict()["minimal_sequences"], ["+"])

    def test_bifoil_product_height_adds(self):
        kmap = product(load_fixture("bifoil"), load_fixture("bifoil"))
        result = certify_heights(kmap, Budget.for_map(kmap, max_states=200))
        self.assertEqual(result.status, EXACT)
        self.assertEqual((result.h_plus, result.h_minus, result.height), (2, 0, 2))
        self.assertEqual(result.as_dict()["minimal_sequences"], ["++"])

    def test_both_shortcuts_reach_the_minimal_level(self):
        kmap = load_fixture("cloud_pair")
        result = certify_heights(kmap, Budget.for_map(kmap, max_states=100))
        self.assertEqual(result.status, EXACT)
        self.assertEqual((result.h_plus, result.h_minus), (1, 1))
        self.assertEqual(result.as_dict()["minimal_sequences"], ["+-", "-+"])

    def test_interval_when_search_is_short(self):
        kmap = load_fixture("bifoil")
        swung = apply_move(kmap, MoveSite(S1, kmap.endpoint(HEAD), LEFT))
        result = certify_heights(swung, Budget(0, 2, max_states=10))
        self.assertFalse(result.exact)
        self.assertEqual(result.h_plus[0], 1)
        self.assertEqual(result.height[0], 1)


if __name__ == "__main__":
    unittest.main()
