""" Unittest """
import unittest
import random
from knotoid.ops import involution, involution_group, forget_shortcut, restrict_shortcut, product
from knotoid.ops import closure, connected_sum, lift_cover, stabilize, INVOLUTIONS, REV, MIR, SYM, ROT
from knotoid.ops import OVER, UNDER
from knotoid.diagram import KnotoidMap, ShortcutMap, KnotMap
from knotoid.canon import isomorphic
from knotoid.invariants import n_writhes, index_polynomial, normalized_bracket, WritheTable
from knotoid.laurent import Laurent1
from knotoid.seqcalc import lift_subsequence, reverse, negate, concat
from knotoid.errors import KnotoidGenericError
from knotoid.fixtures import load_fixture

SHORTCUT_FIXTURES = ["bifoil", "borromean", "cloud", "kinoshita", "spiral", "trefoil_knotoid", "trivial"]


def _negated(table, flip_index=False):
    return WritheTable(dict(((-n if flip_index else n), -j) for n, j in table.values.items()))


class TestInvolutions(unittest.TestCase):
    def test_each_is_an_involution(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            for which in INVOLUTIONS:
                twice = involution(involution(kmap, which), which)
                self.assertTrue(isomorphic(twice, kmap), "{} {}".format(name, which))

    def test_images_are_valid(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            for which in INVOLUTIONS:
                self.assertTrue(involution(kmap, which).validate().valid, "{} {}".format(name, which))

    def test_writhe_tables(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            table = n_writhes(kmap)
            self.assertEqual(n_writhes(involution(kmap, REV)), table, name)
            self.assertEqual(n_writhes(involution(kmap, MIR)), _negated(table), name)
            self.assertEqual(n_writhes(involution(kmap, SYM)), _negated(table, flip_index=True), name)
            self.assertEqual(n_writhes(involution(kmap, ROT)),
                             WritheTable(dict((-n, j) for n, j in table.values.items())), name)

    def test_sign_sequences(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            seq = kmap.seq()
            self.assertEqual(involution(kmap, REV).seq(), reverse(seq), name)
            self.assertEqual(involution(kmap, MIR).seq(), seq, name)
            self.assertEqual(involution(kmap, SYM).seq(), negate(seq), name)

    def test_rotated_kinoshita(self):
        rotated = involution(load_fixture("kinoshita"), ROT)
        self.assertEqual(str(rotated.seq()), "-+")
        self.assertEqual(str(index_polynomial(rotated)), "t^-1 - 2 + t")

    def test_mirror_of_trefoil(self):
        mirror = involution(load_fixture("trefoil"), MIR)
        self.assertEqual(mirror.writhe(), -3)
        self.assertEqual(normalized_bracket(mirror), Laurent1.parse("A^4 + A^12 - A^16"))

    def test_closed_diagram_has_no_reverse(self):
        with self.assertRaises(KnotoidGenericError):
            involution(load_fixture("trefoil"), REV)

    def test_unknown_involution(self):
        with self.assertRaises(KnotoidGenericError):
            involution(load_fixture("bifoil"), "flip")

    def test_group_has_eight_elements(self):
        kmap = load_fixture("cloud")
        group = involution_group(kmap)
        self.assertEqual(len(group), 8)
        self.assertIn("rev.mir.sym", group)
        self.assertNotEqual(group["id"], group["mir"])


class TestShortcutHelpers(unittest.TestCase):
    def test_forget_shortcut(self):
        kmap = forget_shortcut(load_fixture("spiral"))
        self.assertIsInstance(kmap, KnotoidMap)
        self.assertNotIsInstance(kmap, ShortcutMap)
        self.assertEqual(kmap.flats(), [])
        self.assertTrue(kmap.validate().valid)
        self.assertEqual(str(index_polynomial(kmap)), "-1 + t^2")

    def test_forget_keeps_plain_diagrams(self):
        kmap = load_fixture("trefoil")
        self.assertIs(forget_shortcut(kmap), kmap)


class TestProduct(unittest.TestCase):
    def test_sequences_concatenate(self):
        left = load_fixture("bifoil")
        right = load_fixture("kinoshita")
        res = product(left, right)
        self.assertIsInstance(res, ShortcutMap)
        self.assertTrue(res.validate().valid)
        self.assertEqual(res.seq(), concat(left.seq(), right.seq()))

    def test_writhes_add(self):
        rand = random.Random(7)
        for _ in range(20):
            first, second = rand.choice(SHORTCUT_FIXTURES), rand.choice(SHORTCUT_FIXTURES)
            m1, m2 = load_fixture(first), load_fixture(second)
            res = product(m1, m2)
            self.assertEqual(n_writhes(res), n_writhes(m1) + n_writhes(m2), "{} {}".format(first, second))
            self.assertEqual(index_polynomial(res), index_polynomial(m1) + index_polynomial(m2))
            self.assertEqual(res.writhe(), m1.writhe() + m2.writhe())

    def test_product_with_trivial(self):
        kmap = load_fixture("cloud")
        self.assertTrue(isomorphic(product(kmap, load_fixture("trivial")), kmap))

    def test_bracket_is_multiplicative(self):
        m1 = load_fixture("bifoil")
        m2 = load_fixture("trefoil_knotoid")
        self.assertEqual(normalized_bracket(product(m1, m2)), normalized_bracket(m1) * normalized_bracket(m2))

    def test_plain_diagrams_give_plain_product(self):
        res = product(forget_shortcut(load_fixture("bifoil")), load_fixture("spiral"))
        self.assertNotIsInstance(res, ShortcutMap)
        self.assertTrue(res.validate().valid)


class TestClosure(unittest.TestCase):
    def test_knot_type_knotoid_closes_to_its_knot(self):
        kmap = load_fixture("trefoil_knotoid")
        for mode in (OVER, UNDER):
            knot = closure(kmap, mode)
            self.assertIsInstance(knot, KnotMap)
            self.assertTrue(isomorphic(knot, load_fixture("trefoil")), mode)

    def test_closures_are_knots(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            for mode in (OVER, UNDER):
                knot = closure(kmap, mode)
                self.assertTrue(knot.validate().valid, "{} {}".format(name, mode))
                self.assertEqual(len(knot.crossings()), len(kmap.crossings()) + len(kmap.flats()))

    def test_closures_differ_in_flat_crossings_only(self):
        kmap = load_fixture("bifoil")
        over = closure(kmap, OVER)
        under = closure(kmap, UNDER)
        self.assertFalse(isomorphic(over, under))
        self.assertEqual(over.writhe() - under.writhe(), 2 * over.crossing_sign(4))

    def test_needs_shortcut(self):
        with self.assertRaises(KnotoidGenericError):
            closure(forget_shortcut(load_fixture("bifoil")))

    def test_bad_mode(self):
        with self.assertRaises(KnotoidGenericError):
            closure(load_fixture("bifoil"), "sideways")

    def test_connected_sum(self):
        trefoil = load_fixture("trefoil")
        twice = connected_sum(trefoil, trefoil)
        self.assertTrue(twice.validate().valid)
        self.assertEqual(twice.writhe(), 6)
        self.assertEqual(normalized_bracket(twice), normalized_bracket(trefoil) ** 2)

    def test_connected_sum_with_round_unknot(self):
        unknot = closure(load_fixture("trivial"))
        trefoil = load_fixture("trefoil")
        self.assertTrue(isomorphic(connected_sum(unknot, trefoil), trefoil))


class TestLift(unittest.TestCase):
    def test_spiral_double_cover(self):
        res = lift_cover(load_fixture("spiral"), 2)
        self.assertEqual(res.surviving, [2, 3])
        self.assertFalse(res.stabilized)
        self.assertEqual(str(index_polynomial(res.knotoid_map())), "-1 + t")
        self.assertEqual(str(res.seq(0)), "+")
        self.assertEqual(str(res.seq(1)), "+")

    def test_spiral_double_cover_is_the_bifoil(self):
        res = lift_cover(load_fixture("spiral"), 2)
        bifoil = load_fixture("bifoil")
        for arc in range(2):
            kmap = res.shortcut_map(arc)
            self.assertEqual(normalized_bracket(kmap), normalized_bracket(bifoil))
            self.assertEqual(index_polynomial(kmap), index_polynomial(bifoil))
            self.assertEqual(n_writhes(kmap), n_writhes(bifoil))

    def test_spiral_triple_cover_stabilizes(self):
        res = lift_cover(load_fixture("spiral"), 3)
        self.assertEqual(res.surviving, [])
        self.assertTrue(res.stabilized)
        self.assertEqual(str(index_polynomial(res.knotoid_map())), "0")
        self.assertEqual(normalized_bracket(res.knotoid_map()), Laurent1.constant(1, "A"))

    def test_stabilize_keeps_index_zero_crossings(self):
        res = stabilize(load_fixture("kinoshita"))
        self.assertEqual(res.n, 2)
        self.assertEqual(res.surviving, [6])
        self.assertTrue(res.stabilized)

    def test_lifted_sequences_are_lift_subsequences(self):
        for name in SHORTCUT_FIXTURES:
            kmap = load_fixture(name)
            for n in (2, 3):
                res = lift_cover(kmap, n)
                for arc in range(n):
                    self.assertEqual(res.seq(arc), lift_subsequence(kmap.seq(), n, arc),
                                     "{} /{} arc {}".format(name, n, arc))

    def test_restricted_lifts_are_shortcut_diagrams(self):
        res = lift_cover(load_fixture("kinoshita"), 2)
        for arc in range(2):
            kmap = res.shortcut_map(arc)
            self.assertIsInstance(kmap, ShortcutMap)
            self.assertTrue(kmap.validate().valid)
            self.assertEqual(kmap.seq(), res.seq(arc))

    def test_restrict_needs_existing_arc(self):
        res = lift_cover(load_fixture("bifoil"), 2)
        with self.assertRaises(KnotoidGenericError):
            restrict_shortcut(res.lifted, 5)

    def test_sheet_choice_does_not_matter(self):
        for name in ("spiral", "kinoshita", "cloud"):
            kmap = load_fixture(name)
            for n in (2, 3):
                values = set()
                for sheet in range(n):
                    res = lift_cover(kmap, n, start_sheet=sheet)
                    values.add(str(index_polynomial(res.knotoid_map())))
                self.assertEqual(len(values), 1, "{} /{}".format(name, n))

    def test_trivial_cover(self):
        kmap = load_fixture("bifoil")
        res = lift_cover(kmap, 1)
        self.assertEqual(res.surviving, kmap.crossings())
        self.assertEqual(res.seq(0), kmap.seq())

    def test_bad_degree(self):
        with self.assertRaises(KnotoidGenericError):
            lift_cover(load_fixture("bifoil"), 0)


if __name__ == "__main__":
    unittest.main()
