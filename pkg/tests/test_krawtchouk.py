"""
Unit tester for Krawtchouk-polynomer og binomialtelling.

Rekursjonen sammenlignes med binomialsummen, og kjente identiteter
kontrolleres eksakt.
"""

import unittest
from scipy.special import comb
from ctcodes.gf2core import binomial_census, krawtchouk, krawtchouk_direct, krawtchouk_table


class TestKrawtchouk(unittest.TestCase):
    """Test cases for Krawtchouk-verdier."""

    def test_recurrence_matches_direct_sum(self):
        """Test rekursjon mot binomialsummen for n ≤ 12."""
        for n in range(1, 13):
            for j in range(n + 1):
                for w in range(n + 1):
                    with self.subTest(n=n, j=j, w=w):
                        self.assertEqual(krawtchouk(j, w, n), krawtchouk_direct(j, w, n))

    def test_known_values(self):
        """Test kjente verdier."""
        test_cases = [
            # (j, w, n, forventet)
            (0, 5, 15, 1),
            (1, 3, 15, 9),
            (2, 1, 15, 77),
            (3, 0, 15, 455),
            (15, 15, 15, -1),
            (2, 8, 16, -8),
        ]
        for j, w, n, expected in test_cases:
            with self.subTest(j=j, w=w, n=n):
                self.assertEqual(krawtchouk(j, w, n), expected)

    def test_symmetry(self):
        """Test C(n,w)·K_j(w) = C(n,j)·K_w(j)."""
        n = 16
        for j in range(n + 1):
            for w in range(n + 1):
                with self.subTest(j=j, w=w):
                    left = comb(n, w, exact=True) * krawtchouk(j, w, n)
                    right = comb(n, j, exact=True) * krawtchouk(w, j, n)
                    self.assertEqual(left, right)

    def test_column_sums(self):
        """Test Σ_j K_j(w) = 2^n for w = 0 og 0 ellers."""
        n = 15
        for w in range(n + 1):
            with self.subTest(w=w):
                total = sum(krawtchouk(j, w, n) for j in range(n + 1))
                self.assertEqual(total, 2 ** n if w == 0 else 0)

    def test_orthogonality(self):
        """Test Σ_w C(n,w)·K_j(w)·K_l(w) = 2^n·C(n,j)·δ_jl for n ≤ 16."""
        for n in range(1, 17):
            table = krawtchouk_table(n)
            weights = [comb(n, w, exact=True) for w in range(n + 1)]
            for j in range(n + 1):
                for l in range(n + 1):
                    with self.subTest(n=n, j=j, l=l):
                        total = sum(c * a * b for c, a, b in zip(weights, table[j], table[l]))
                        expected = 2 ** n * comb(n, j, exact=True) if j == l else 0
                        self.assertEqual(total, expected)

    def test_table(self):
        """Test tabellen mot enkeltverdier."""
        table = krawtchouk_table(15)
        self.assertEqual(len(table), 16)
        self.assertEqual(table[2][1], 77)
        self.assertEqual(table[4][7], krawtchouk(4, 7, 15))

    def test_input_validation(self):
        """Test argumenter utenfor området."""
        with self.assertRaises(ValueError):
            krawtchouk(5, 0, 4)
        with self.assertRaises(ValueError):
            krawtchouk(0, 0, 0)
        with self.assertRaises(ValueError):
            krawtchouk_direct(0, 5, 4)

    def test_binomial_census(self):
        """Test antall vektorer av hver vekt."""
        self.assertEqual(binomial_census(4), {0: 1, 1: 4, 2: 6, 3: 4, 4: 1})
        self.assertEqual(sum(binomial_census(15).values()), 2 ** 15)


if __name__ == '__main__':
    unittest.main()
