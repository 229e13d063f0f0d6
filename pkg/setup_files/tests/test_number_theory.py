import unittest

import sympy

from sarcverify import (CUBE_BOUND_ROWS, INLINE_CUBE_BOUND_ROWS, SQUARE_BOUND_ROWS, CapacityError,
                        InequalityInstance, ParameterError, PPart, cyclotomic_value, factorial_p_part,
                        lemma44_holds, lemma45_exponents, lemma45_holds, p_part, prime_set,
                        table_contradictions, zsigmondy)


def is_power_of_two(x):
    return x & (x - 1) == 0


class TestParts(unittest.TestCase):

    def test_p_part(self):
        self.assertEqual(p_part(48, 2), PPart(2, 4))
        self.assertEqual(p_part(48, 3).value, 3)
        self.assertEqual(p_part(7, 5).exponent, 0)
        self.assertEqual(str(p_part(72, 3)), '3^2')
        with self.assertRaises(ParameterError):
            p_part(12, 4)
        with self.assertRaises(ParameterError):
            p_part(0, 2)

    def test_prime_set(self):
        self.assertEqual(prime_set(60), {2, 3, 5})
        self.assertEqual(prime_set(1), set())

    def test_legendre(self):
        part, strict = factorial_p_part(10, 2)
        self.assertEqual(part.value, 2 ** 8)
        self.assertTrue(strict)
        for n in range(1, 201):
            for p in sympy.primerange(2, n + 1):
                part, strict = factorial_p_part(n, p)
                self.assertTrue(strict, (n, p))
                self.assertEqual(part.exponent, sympy.multiplicity(p, sympy.factorial(n)))


class TestZsigmondy(unittest.TestCase):

    def test_cyclotomic(self):
        self.assertEqual(cyclotomic_value(1, 5), 4)
        self.assertEqual(cyclotomic_value(4, 2), 5)
        self.assertEqual(cyclotomic_value(6, 2), 3)
        self.assertEqual(cyclotomic_value(12, 3), 73)

    def test_examples(self):
        self.assertEqual(zsigmondy(2, 3), 7)
        self.assertEqual(zsigmondy(2, 4), 5)
        self.assertEqual(zsigmondy(10, 2), 11)
        self.assertIsNone(zsigmondy(2, 6))
        self.assertIsNone(zsigmondy(3, 2))
        self.assertIsNone(zsigmondy(7, 2))

    def test_scan(self):
        for a in range(2, 65):
            for m in range(2, 21):
                r = zsigmondy(a, m)
                exceptional = (a, m) == (2, 6) or (m == 2 and is_power_of_two(a + 1))
                if exceptional:
                    self.assertIsNone(r, (a, m))
                    continue
                self.assertIsNotNone(r, (a, m))
                self.assertTrue(sympy.isprime(r))
                self.assertEqual(r % m, 1)
                self.assertEqual((a ** m - 1) % r, 0)
                for j in range(1, m):
                    self.assertNotEqual((a ** j - 1) % r, 0)

    def test_errors(self):
        with self.assertRaises(ParameterError):
            zsigmondy(1, 3)
        with self.assertRaises(ParameterError):
            zsigmondy(3, 1)
        with self.assertRaises(CapacityError):
            zsigmondy(2, 100, bit_cap=64)


class TestInequalities(unittest.TestCase):

    def test_instance_checks_primes(self):
        with self.assertRaises(ParameterError):
            InequalityInstance(T_r=PPart(3, 2), r=3, phi_r=PPart(2, 1), out_r=PPart(3, 0))

    def test_square_rows_all_fail(self):
        for row in SQUARE_BOUND_ROWS:
            self.assertFalse(lemma44_holds(row.instance()), row.label)
        df = table_contradictions(SQUARE_BOUND_ROWS)
        self.assertEqual(len(df), len(SQUARE_BOUND_ROWS))
        self.assertTrue(df['contradiction'].all())

    def test_cube_rows(self):
        for k in (2, 3):
            for row in CUBE_BOUND_ROWS:
                holds = lemma45_holds(row.instance(k))
                self.assertEqual(holds, row.label in ('M12', 'M24'), (row.label, k))
        df = table_contradictions(CUBE_BOUND_ROWS, k_values=(2, 3), inequality='cube')
        self.assertEqual(sorted(set(df.loc[df['holds'], 'label'])), ['M12', 'M24'])

    def test_cube_exponents(self):
        m12 = next(row for row in CUBE_BOUND_ROWS if row.label == 'M12')
        self.assertEqual(lemma45_exponents(m12.instance(2)), (24, 26))
        with self.assertRaises(ParameterError):
            lemma45_exponents(m12.instance(1))

    def test_inline_rows_fail(self):
        for row in INLINE_CUBE_BOUND_ROWS:
            for k in (2, 3, 4):
                self.assertFalse(lemma45_holds(row.instance(k)), (row.label, k))


if __name__ == '__main__':
    unittest.main()
