""" Unittest """
import unittest
from knotoid.invariants import intersection_index, crossing_data, n_writhes, index_polynomial
from knotoid.invariants import affine_index_polynomial, bracket, normalized_bracket, states
from knotoid.invariants import turaev_polynomial, normalized_turaev, height_lower_bounds, invariant_report
from knotoid.invariants import WritheTable
from knotoid.laurent import Laurent1, Laurent2, signed_degree, PLUS, MINUS
from knotoid.seqcalc import consecutive_subsum_exists
from knotoid.skein import skein_bracket
from knotoid.ops import closure, restrict_shortcut
from knotoid.errors import KnotoidGenericError, KnotoidBudgetError
from knotoid.fixtures import fixture_names, load_fixture, kinked

KNOTOIDS = ["bifoil", "borromean", "cloud", "kinoshita", "spiral", "trefoil_knotoid", "trivial"]
TREFOIL = "-A^-16 + A^-12 + A^-4"


def _poly(text):
    return Laurent1.parse(text)


class TestIntersectionIndex(unittest.TestCase):
    def _indices(self, name):
        kmap = load_fixture(name)
        return dict((c, intersection_index(kmap, c)) for c in kmap.crossings())

    def test_bifoil(self):
        self.assertEqual(self._indices("bifoil"), {2: 1, 3: 1})

    def test_spiral(self):
        self.assertEqual(self._indices("spiral"), {2: 2, 3: 2, 4: 1, 5: 1})

    def test_shared_layout(self):
        expect = {2: 1, 3: 1, 4: -1, 5: -1, 6: 0}
        for name in ("kinoshita", "borromean"):
            self.assertEqual(self._indices(name), expect, name)

    def test_cloud(self):
        self.assertEqual(self._indices("cloud"), {2: 0, 3: 0, 4: 0, 5: 1, 6: 1})

    def test_knot_type_crossings_have_index_zero(self):
        self.assertEqual(set(self._indices("trefoil_knotoid").values()), set([0]))

    def test_closed_diagram_is_rejected(self):
        with self.assertRaises(KnotoidGenericError):
            intersection_index(load_fixture("trefoil"), 0)

    def test_unknown_crossing(self):
        with self.assertRaises(KnotoidGenericError):
            intersection_index(load_fixture("bifoil"), 4)

    def test_crossing_data_signs(self):
        data = crossing_data(load_fixture("cloud"))
        self.assertEqual([d.sign for d in data], [1, 1, 1, -1, -1])
        self.assertEqual(data[0].as_dict()["index"], 0)
        self.assertEqual(data[3].as_dict()["index"], 1)


class TestWrithes(unittest.TestCase):
    def test_tables(self):
        self.assertEqual(n_writhes(load_fixture("kinoshita")), WritheTable({1: 1, -1: 1}))
        self.assertEqual(n_writhes(load_fixture("cloud")), WritheTable({1: -1}))
        self.assertEqual(n_writhes(load_fixture("spiral")), WritheTable({2: 1}))
        self.assertEqual(n_writhes(load_fixture("trefoil_knotoid")), WritheTable())

    def test_table_ignores_zero_entries(self):
        table = WritheTable({0: 4, 3: 0, -2: 1})
        self.assertEqual(table.as_dict(), {"-2": 1})
        self.assertEqual(table[5], 0)

    def test_tables_add(self):
        total = WritheTable({1: 1}) + WritheTable({1: -1, 2: 3})
        self.assertEqual(total, WritheTable({2: 3}))


class TestIndexPolynomials(unittest.TestCase):
    def test_expected_values(self):
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            expected = kmap.meta["expected"]["index_polynomial"]
            self.assertEqual(str(index_polynomial(kmap)), expected, name)

    def test_affine_polynomial_is_symmetrized_index(self):
        self.assertEqual(affine_index_polynomial(load_fixture("kinoshita")), _poly("2*t^-1 - 4 + 2*t"))
        self.assertEqual(affine_index_polynomial(load_fixture("spiral")), _poly("t^-2 - 2 + t^2"))
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            f = index_polynomial(kmap)
            self.assertEqual(affine_index_polynomial(kmap, check=False), f + f.substitute_inverse(), name)

    def test_index_vanishes_at_one(self):
        for name in KNOTOIDS:
            f = index_polynomial(load_fixture(name))
            self.assertEqual(sum(f.terms.values()), 0, name)

    def test_degrees_bound_signed_heights(self):
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            f = index_polynomial(kmap)
            seq = kmap.seq()
            self.assertGreaterEqual(seq.h_plus, signed_degree(f, PLUS), name)
            self.assertGreaterEqual(seq.h_minus, signed_degree(f, MINUS), name)

    def test_degrees_are_consecutive_sums(self):
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            f = index_polynomial(kmap)
            self.assertTrue(consecutive_subsum_exists(kmap.seq(), signed_degree(f, PLUS)), name)
            self.assertTrue(consecutive_subsum_exists(kmap.seq(), -signed_degree(f, MINUS)), name)


class TestBracket(unittest.TestCase):
    def test_trivial(self):
        self.assertEqual(bracket(load_fixture("trivial")), Laurent1.constant(1, "A"))

    def test_unknot_without_crossings(self):
        unknot = closure(load_fixture("trivial"))
        self.assertEqual(unknot.free_loops, 1)
        self.assertEqual(bracket(unknot), Laurent1.constant(1, "A"))

    def test_trefoil(self):
        self.assertEqual(normalized_bracket(load_fixture("trefoil")), _poly(TREFOIL))

    def test_knot_type_knotoid_matches_its_knot(self):
        self.assertEqual(normalized_bracket(load_fixture("trefoil_knotoid")), _poly(TREFOIL))

    def test_positive_kink(self):
        kmap = kinked(load_fixture("trivial"), [1])
        self.assertEqual(bracket(kmap), _poly("-A^3"))
        self.assertEqual(normalized_bracket(kmap), Laurent1.constant(1, "A"))

    def test_kinks_leave_normalized_bracket_unchanged(self):
        kmap = load_fixture("bifoil")
        more = kinked(kmap, [1, -1, -1])
        self.assertEqual(normalized_bracket(more), normalized_bracket(kmap))

    def test_skein_oracle_agrees(self):
        for name in fixture_names():
            kmap = load_fixture(name)
            if len(kmap.crossings()) > 3:
                continue
            self.assertEqual(bracket(kmap), skein_bracket(kmap), name)
        kmap = kinked(load_fixture("bifoil"), [-1])
        self.assertEqual(bracket(kmap), skein_bracket(kmap))

    def test_crossing_order_does_not_matter(self):
        kmap = load_fixture("kinoshita")
        order = list(reversed(kmap.crossings()))
        self.assertEqual(bracket(kmap, ordering=order), bracket(kmap))

    def test_ordering_must_be_complete(self):
        kmap = load_fixture("kinoshita")
        with self.assertRaises(KnotoidGenericError):
            bracket(kmap, ordering=kmap.crossings()[1:])

    def test_parallel_state_sum(self):
        kmap = load_fixture("spiral")
        self.assertEqual(bracket(kmap, workers=3), bracket(kmap))

    def test_guard_refuses_large_sums(self):
        with self.assertRaises(KnotoidBudgetError):
            bracket(load_fixture("kinoshita"), guard=4)

    def test_states_cover_all_choices(self):
        every = list(states(load_fixture("bifoil")))
        self.assertEqual(len(every), 4)
        self.assertEqual(every[0].choice, ("+", "+"))
        self.assertEqual(every[0].n, 2)
        self.assertEqual(every[-1].n, -2)

    def test_normalized_exponents_are_even(self):
        for name in KNOTOIDS + ["trefoil"]:
            for exponent in normalized_bracket(load_fixture(name)).terms:
                self.assertEqual(exponent % 2, 0, name)


class TestTuraev(unittest.TestCase):
    def test_cloud_u2_coefficient(self):
        turaev = normalized_turaev(load_fixture("cloud"))
        self.assertEqual(str(turaev.u_coefficient(2)), "-A^-10 + 2*A^-6 - A^-2")
        self.assertEqual(str(turaev.u_coefficient(-2)), "A^-6 - A^-2")
        self.assertEqual(sorted(turaev.u_exponents()), [-2, 0, 2])

    def test_cloud_shortcuts_agree(self):
        pair = load_fixture("cloud_pair")
        plus_first, minus_first = [restrict_shortcut(pair, arc) for arc in pair.arcs()]
        self.assertEqual(str(plus_first.seq()), "+-")
        self.assertEqual(str(minus_first.seq()), "-+")
        self.assertEqual(normalized_turaev(plus_first), normalized_turaev(load_fixture("cloud")))
        self.assertEqual(normalized_turaev(minus_first), normalized_turaev(plus_first))
        self.assertEqual(index_polynomial(minus_first), index_polynomial(plus_first))

    def test_borromean_coefficients(self):
        turaev = normalized_turaev(load_fixture("borromean"))
        self.assertEqual(str(turaev.u_coefficient(2)), "A^-2 - 2*A^2 + A^6")
        self.assertEqual(str(turaev.u_coefficient(-2)), "A^-2 - 2*A^2 + A^6")
        self.assertEqual(max(turaev.u_exponents()), 2)
        self.assertEqual(min(turaev.u_exponents()), -2)

    def test_specializes_to_the_bracket(self):
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            self.assertEqual(normalized_turaev(kmap).specialize_u(), normalized_bracket(kmap), name)

    def test_knot_type_has_no_u(self):
        kmap = load_fixture("trefoil_knotoid")
        turaev = normalized_turaev(kmap)
        self.assertEqual(turaev, Laurent2.from_laurent1(_poly(TREFOIL)))

    def test_raw_polynomial_carries_algebraic_height(self):
        kmap = load_fixture("bifoil")
        raw = turaev_polynomial(kmap)
        self.assertTrue(all(u % 2 == 1 for u in raw.u_exponents()))

    def test_needs_shortcut(self):
        with self.assertRaises(KnotoidGenericError):
            turaev_polynomial(load_fixture("trefoil"))

    def test_kinks_leave_normalized_turaev_unchanged(self):
        kmap = load_fixture("cloud")
        self.assertEqual(normalized_turaev(kinked(kmap, [1])), normalized_turaev(kmap))


class TestHeightBounds(unittest.TestCase):
    def test_index_bounds(self):
        bounds = height_lower_bounds(load_fixture("kinoshita"))
        self.assertEqual(bounds.as_tuple(), (1, 1))
        self.assertEqual((bounds.source_plus, bounds.source_minus), ("index", "index"))

    def test_turaev_bounds_beat_index(self):
        bounds = height_lower_bounds(load_fixture("borromean"))
        self.assertEqual(bounds.as_tuple(), (1, 1))
        self.assertEqual((bounds.source_plus, bounds.source_minus), ("turaev", "turaev"))

    def test_no_bounds(self):
        bounds = height_lower_bounds(load_fixture("trivial"))
        self.assertEqual(bounds.as_dict(), {"lower_plus": 0, "lower_minus": 0,
                                            "source_plus": "none", "source_minus": "none"})

    def test_bounds_never_exceed_the_diagram(self):
        for name in KNOTOIDS:
            kmap = load_fixture(name)
            bounds = height_lower_bounds(kmap)
            seq = kmap.seq()
            self.assertLessEqual(bounds.lower_plus, seq.h_plus, name)
            self.assertLessEqual(bounds.lower_minus, seq.h_minus, name)


class TestInvariantReport(unittest.TestCase):
    def test_shortcut_report(self):
        report = invariant_report(load_fixture("kinoshita"))
        self.assertEqual(report["index_polynomial"], "t^-1 - 2 + t")
        self.assertEqual(report["seq"], "+-")
        self.assertEqual(report["writhes"], {"-1": 1, "1": 1})
        self.assertEqual(report["framing"], [3, 0])
        self.assertFalse(report["knot_type"])
        self.assertEqual(report["bounds"]["lower_plus"], 1)

    def test_knot_report(self):
        report = invariant_report(load_fixture("trefoil"))
        self.assertEqual(report["normalized_bracket"], TREFOIL)
        self.assertNotIn("seq", report)


if __name__ == "__main__":
    unittest.main()
