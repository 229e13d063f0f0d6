import unittest

import numpy as np

from sarcverify import (CapacityError, NotSubgroupError, NotTransitiveError, ParameterError, WreathContext,
                        affine_subgroup, alternating_group, group_from_cycles, homogeneous_factorizations,
                        is_factorization, subgroup_classes, symmetric_group, verify_factorization_sampling,
                        wreath_projection_check)


class TestIsFactorization(unittest.TestCase):

    def test_a6_by_two_a5(self):
        A6 = alternating_group(6)
        H = A6.point_stabilizer(0)
        K = group_from_cycles(['(2 3 4 5 6)', '(1 2)(3 6)'], 6)
        for method in ('backtrack', 'brute_force'):
            res = is_factorization(A6, H, K, method=method)
            self.assertTrue(res.holds)
            self.assertEqual(res.order_intersection, 10)
            self.assertEqual(res.product_order, 360)
        self.assertTrue(verify_factorization_sampling(A6, H, K, samples=200, rng=np.random.default_rng(0)))

    def test_point_stabilizers_of_s4(self):
        S4 = symmetric_group(4)
        H, K = S4.point_stabilizer(0), S4.point_stabilizer(1)
        res = is_factorization(S4, H, K)
        self.assertFalse(res.holds)
        self.assertEqual(res.order_intersection, 2)
        self.assertEqual(res.to_dict()['product_order'], 18)
        self.assertFalse(verify_factorization_sampling(S4, H, K, samples=200, rng=np.random.default_rng(1)))

    def test_symmetric_in_factors(self):
        S5 = symmetric_group(5)
        H = S5.point_stabilizer(0)
        K = group_from_cycles(['(1 2 3 4 5)'], 5)
        self.assertTrue(is_factorization(S5, H, K).holds)
        self.assertEqual(is_factorization(S5, H, K).holds, is_factorization(S5, K, H).holds)
        trivial = group_from_cycles(['()'], 5)
        self.assertTrue(is_factorization(S5, S5, trivial).holds)

    def test_not_subgroup(self):
        with self.assertRaises(NotSubgroupError):
            is_factorization(alternating_group(4), group_from_cycles(['(1 2)'], 4), alternating_group(4))


class TestSubgroupClasses(unittest.TestCase):

    def test_s4(self):
        lattice = subgroup_classes(symmetric_group(4))
        self.assertEqual([c.order for c in lattice.classes], [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24])
        self.assertEqual(sum(c.length for c in lattice.classes), 30)
        df = lattice.to_dataframe()
        self.assertEqual(len(df), 11)
        self.assertEqual(df['index'].iloc[0], 24)

    def test_a4(self):
        lattice = subgroup_classes(alternating_group(4))
        self.assertEqual([c.order for c in lattice.classes], [1, 2, 3, 4, 12])
        self.assertEqual([c.length for c in lattice.classes], [1, 3, 4, 1, 1])

    def test_representatives_are_subgroups(self):
        S4 = symmetric_group(4)
        lattice = subgroup_classes(S4)
        for c in lattice.classes:
            H = c.to_group(lattice.table)
            self.assertEqual(H.order(), c.order)
            self.assertTrue(S4.is_subgroup(H))
            self.assertEqual(c.length * len(c.normalizer), 24)

    def test_cap(self):
        with self.assertRaises(CapacityError):
            subgroup_classes(symmetric_group(8), cap=100)


class TestHomogeneous(unittest.TestCase):

    def test_a6(self):
        A6 = alternating_group(6)
        found = homogeneous_factorizations(A6, min_index=3)
        pairs = [f for f in found if f.order == 60]
        self.assertEqual(len(pairs), 1)
        self.assertEqual(pairs[0].evidence, 'order-equal')
        self.assertEqual(pairs[0].order_intersection, 10)
        self.assertEqual(pairs[0].index, 6)
        for f in found:
            self.assertTrue(is_factorization(A6, f.A, f.B).holds)
            self.assertTrue(verify_factorization_sampling(A6, f.A, f.B, samples=100, rng=np.random.default_rng(2)))

    def test_same_class_never_factorizes(self):
        for f in homogeneous_factorizations(symmetric_group(4), min_index=2):
            self.assertEqual(f.evidence, 'order-equal')

    def test_affine_point_stabilizers(self):
        AGL = affine_subgroup(2, 3)
        self.assertEqual(homogeneous_factorizations(AGL, min_index=3), [])
        self.assertEqual(homogeneous_factorizations(AGL.alternating_part(), min_index=3), [])


class TestWreathProjections(unittest.TestCase):

    def test_s2_wr_s2(self):
        G = group_from_cycles(['(1 2)', '(1 3)(2 4)'], 4)
        report = wreath_projection_check(G, WreathContext([[0, 1], [2, 3]]))
        self.assertTrue(report.equal)
        self.assertEqual(report.kernel_order, 4)
        self.assertEqual(report.projection_orders, [2, 2])
        self.assertEqual(report.primes, {2})

    def test_diagonal(self):
        G = group_from_cycles(['(1 2 3)(4 5 6)', '(1 2)(4 5)', '(1 4)(2 5)(3 6)'], 6)
        context = WreathContext([[0, 1, 2], [3, 4, 5]])
        report = wreath_projection_check(G, context, T_order=6)
        self.assertTrue(report.equal)
        self.assertEqual(report.kernel_order, 6)
        self.assertEqual(report.projection_orders, [6, 6])
        self.assertTrue(report.prime_containment)
        self.assertFalse(wreath_projection_check(G, context, T_order=60).prime_containment)

    def test_errors(self):
        context = WreathContext([[0, 1], [2, 3]])
        with self.assertRaises(NotTransitiveError):
            wreath_projection_check(group_from_cycles(['(1 2)'], 4), context)
        with self.assertRaises(ParameterError):
            wreath_projection_check(group_from_cycles(['(2 3)'], 4), context)
        with self.assertRaises(ParameterError):
            WreathContext([[0, 1], [2]])
        with self.assertRaises(ParameterError):
            WreathContext([[0, 1, 2, 3]])


if __name__ == '__main__':
    unittest.main()
