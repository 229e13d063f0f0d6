import unittest

from sarcverify import (CapacityError, ParameterError, action_family, affine_action, affine_subgroup,
                        enumerate_family_actions, partition_action, product_action, subsets_action,
                        wreath_subgroup)


class TestStructuredActions(unittest.TestCase):

    def test_subsets(self):
        action = subsets_action(5, 2, 'sym')
        self.assertEqual(action.degree, 10)
        self.assertEqual(action.labels[0], (0, 1))
        self.assertEqual(action.stabilizer_order(), 12)
        self.assertTrue(action.check_homomorphism())
        self.assertEqual(subsets_action(5, 1, 'sym').degree, 5)
        alt = subsets_action(6, 2, 'alt')
        self.assertEqual(alt.degree, 15)
        self.assertEqual(alt.stabilizer_order(), 24)
        self.assertEqual(alt.render_label(0), '(1,2)')

    def test_subsets_errors(self):
        for n, m in ((5, 3), (4, 2), (5, 0)):
            with self.assertRaises(ParameterError):
                subsets_action(n, m, 'sym')
        with self.assertRaises(ParameterError):
            subsets_action(5, 2, 'cyclic')

    def test_partitions(self):
        self.assertEqual(partition_action(4, 2, 2, 'sym').degree, 3)
        action = partition_action(6, 2, 3, 'sym')
        self.assertEqual(action.degree, 15)
        self.assertEqual(action.stabilizer_order(), 48)
        self.assertEqual(partition_action(6, 3, 2, 'alt').degree, 10)
        self.assertEqual(action.render_label(0), '{1,2}|{3,4}|{5,6}')
        with self.assertRaises(ParameterError):
            partition_action(6, 4, 2, 'sym')
        with self.assertRaises(ParameterError):
            partition_action(6, 6, 1, 'sym')


class TestAffine(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(affine_subgroup(1, 5).order(), 20)
        self.assertEqual(affine_subgroup(2, 3).order(), 432)
        self.assertEqual(affine_subgroup(3, 2).order(), 1344)
        self.assertEqual(affine_subgroup(2, 3).alternating_part().order(), 216)
        self.assertEqual(affine_subgroup(2, 3).degree, 9)
        with self.assertRaises(ParameterError):
            affine_subgroup(2, 4)

    def test_actions(self):
        self.assertEqual(affine_action(5, 'sym').degree, 6)
        self.assertEqual(affine_action(5, 'alt').degree, 6)
        alt8 = affine_action(8, 'alt')
        self.assertEqual(alt8.degree, 15)
        self.assertTrue(alt8.induced.is_primitive())
        sym8 = affine_action(8, 'sym')
        self.assertEqual(sym8.degree, 30)
        self.assertFalse(sym8.induced.is_primitive())
        with self.assertRaises(ParameterError):
            affine_action(6, 'sym')


class TestWreath(unittest.TestCase):

    def test_orders(self):
        W = wreath_subgroup(5, 2, 'sym')
        self.assertEqual(W.degree, 25)
        self.assertEqual(W.order(), 28800)
        self.assertTrue(W.is_transitive())
        self.assertEqual(wreath_subgroup(5, 2, 'alt').order(), 14400)

    def test_errors(self):
        with self.assertRaises(ParameterError):
            product_action(4, 2, 'sym')
        with self.assertRaises(ParameterError):
            wreath_subgroup(5, 1, 'sym')

    def test_capacity_carries_subgroup(self):
        with self.assertRaises(CapacityError) as ctx:
            product_action(5, 2, 'sym')
        self.assertEqual(ctx.exception.subgroup.order(), 28800)
        self.assertEqual(ctx.exception.cap_name, 'DEGREE_CAP')


class TestFamilies(unittest.TestCase):

    def test_action_family(self):
        fam = action_family('a', 7, m=2)
        self.assertEqual(fam.tag, 'intransitive')
        self.assertEqual(fam.param('k'), 5)
        self.assertEqual(str(fam), 'intransitive(k=5,m=2)')
        self.assertEqual(action_family('affine', 9, k=2, p=3).param('p'), 3)
        with self.assertRaises(ParameterError):
            action_family('wreath', 16, m=4, k=2)
        with self.assertRaises(ParameterError):
            action_family('affine', 10, k=1, p=10)
        with self.assertRaises(ParameterError):
            action_family('imprimitive', 7, m=2, k=3)
        with self.assertRaises(ParameterError):
            action_family('sporadic', 7)

    def test_enumeration_n6(self):
        specs, exclusions = enumerate_family_actions(6, 'sym', ['a', 'b', 'c'], 1000)
        self.assertEqual(sorted(s.degree for s in specs), [6, 10, 15, 15])
        self.assertEqual(exclusions, [])
        specs, exclusions = enumerate_family_actions(6, 'sym', ['a', 'b', 'c'], 10)
        self.assertEqual(sorted(s.degree for s in specs), [6, 10])
        self.assertEqual(len(exclusions), 2)
        self.assertTrue(all(e['cap_name'] == 'degree_cap' for e in exclusions))

    def test_enumeration_affine(self):
        specs, _ = enumerate_family_actions(9, 'alt', ['c'], 1000)
        self.assertEqual(len(specs), 1)
        self.assertEqual(specs[0].degree, 840)
        self.assertEqual(specs[0].describe()['parameters'], {'k': 2, 'p': 3})
        specs, exclusions = enumerate_family_actions(8, 'sym', ['b'], 1000)
        self.assertEqual(sorted(s.degree for s in specs), [35, 105])
        self.assertEqual(exclusions, [])

    def test_built_actions_are_primitive(self):
        for n in (5, 6):
            for group_type in ('alt', 'sym'):
                specs, _ = enumerate_family_actions(n, group_type, ['a', 'b', 'c'], 1000)
                for spec in specs:
                    action = spec.build()
                    G = action.induced
                    self.assertEqual(action.degree, spec.degree)
                    self.assertEqual(G.stabilizer_orders([0])[0] * spec.degree, G.order())
                    self.assertTrue(G.is_primitive(), spec.describe())


if __name__ == '__main__':
    unittest.main()
