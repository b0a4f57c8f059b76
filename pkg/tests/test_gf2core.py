"""
Tester for gf2core modulen.
"""

import pytest
import numpy as np
from ctcodes.gf2core import (
    BitVec, BitMatrix, bits_to_int, hamming_distance, in_row_space, int_to_bits, popcount,
    rank, weight, weight_mod,
)
from ctcodes.construct import augmented_parity, hamming_parity


class TestBitVec:
    """Test klasse for BitVec."""

    def test_from_string_and_support(self):
        """Test lesing fra streng og støtte."""
        v = BitVec.from_string("0110")
        assert v.support() == (1, 2)
        assert v.to_int() == 6
        assert v.to_string() == "0110"
        assert len(v) == 4

    def test_addition_and_dot(self):
        """Test addisjon og indreprodukt over GF(2)."""
        x = BitVec.from_string("1101")
        y = BitVec.from_string("1011")
        assert (x + y).to_string() == "0110"
        assert x.dot(y) == 0
        assert x.dot(x) == 1

    def test_length_mismatch(self):
        """Test at ulik lengde gir feil."""
        with pytest.raises(ValueError):
            BitVec([1, 1]) + BitVec([1, 0, 1])
        with pytest.raises(ValueError):
            BitVec([1, 1]).dot(BitVec([1, 0, 1]))

    def test_immutable(self):
        """Test at bitene ikke kan endres."""
        v = BitVec.ones(3)
        assert not v.bits.flags.writeable
        with pytest.raises(ValueError):
            v.bits[0] = 0

    def test_constructors(self):
        """Test konstruktørene."""
        assert BitVec.unit(5, 2).support() == (2,)
        assert BitVec.from_support(5, [0, 4]).to_string() == "10001"
        assert BitVec.from_int(5, 4).to_string() == "0101"
        assert BitVec([3, 2, 1]).to_string() == "101"
        with pytest.raises(ValueError):
            BitVec.unit(3, 3)
        with pytest.raises(ValueError):
            BitVec.from_string("012")

    def test_equality_and_hash(self):
        """Test verdisemantikk."""
        assert BitVec.from_string("101") == BitVec([1, 0, 1])
        assert len({BitVec.from_string("101"), BitVec([1, 0, 1])}) == 1
        assert BitVec.from_string("10") != BitVec.from_string("100")


class TestHelpers:
    """Test klasse for vekter og bitkonvertering."""

    def test_weight_functions(self):
        """Test vekt, vekt modulo i og Hamming-avstand."""
        v = BitVec.from_string("1110111")
        assert weight(v) == 6
        assert weight_mod(v, 4) == 2
        assert hamming_distance(v, BitVec.zeros(7)) == 6
        assert hamming_distance(v, v) == 0
        with pytest.raises(ValueError):
            weight_mod(v, 1)

    def test_bit_conversion(self):
        """Test heltall til bit og tilbake (mest signifikante bit først)."""
        assert list(int_to_bits(6, 4)) == [0, 1, 1, 0]
        assert bits_to_int([0, 1, 1, 0]) == 6
        assert popcount(0b10110) == 3
        with pytest.raises(ValueError):
            int_to_bits(16, 4)


class TestBitMatrix:
    """Test klasse for BitMatrix."""

    def test_from_columns(self):
        """Test kolonner gitt som heltall."""
        matrix = BitMatrix.from_columns([1, 2, 3], 2)
        assert matrix.array.tolist() == [[0, 1, 1], [1, 0, 1]]
        assert matrix.column_ints == (1, 2, 3)

    def test_text_format(self):
        """Test tekstformatet med header 'r n'."""
        h = hamming_parity(4)
        text = h.to_text()
        assert text.splitlines()[0] == "4 15"
        assert len(text.splitlines()) == 5
        assert BitMatrix.from_text(text) == h

    def test_text_format_errors(self):
        """Test feil i matrisefiler."""
        with pytest.raises(ValueError):
            BitMatrix.from_text("")
        with pytest.raises(ValueError):
            BitMatrix.from_text("2 3\n101\n")
        with pytest.raises(ValueError):
            BitMatrix.from_text("x y\n101\n")

    def test_rank_and_nullspace(self):
        """Test rang og nullrom for Hamming-matrisen."""
        h = hamming_parity(4)
        assert rank(h) == 4
        kernel = h.nullspace()
        assert kernel.shape == (11, 15)
        assert kernel.rank == 11
        for row in kernel.rows():
            assert not h.multiply_vector(row).bits.any()

    def test_row_space(self):
        """Test radromstest og reduksjon."""
        h = hamming_parity(4)
        row_sum = BitVec(h.array.sum(axis=0))
        assert in_row_space(h, row_sum)
        assert not in_row_space(h, BitVec.unit(15, 0))
        assert not h.reduce(row_sum).bits.any()

    def test_independent_rows_keep_order(self):
        """Test at grådig valg hopper over avhengige rader."""
        matrix = augmented_parity(4, "1,3")
        assert matrix.rank == 4
        chosen = matrix.independent_rows()
        assert chosen == hamming_parity(4)

    def test_permute_columns(self):
        """Test at kolonne i flyttes til posisjon perm[i]."""
        matrix = BitMatrix([[1, 0, 0], [0, 1, 0]])
        moved = matrix.permute_columns((2, 0, 1))
        assert moved.array.tolist() == [[0, 0, 1], [1, 0, 0]]
        with pytest.raises(ValueError):
            matrix.permute_columns((0, 0, 1))

    def test_products(self):
        """Test matriseprodukt og transponering."""
        a = BitMatrix([[1, 1], [0, 1]])
        assert (a @ a).array.tolist() == [[1, 0], [0, 1]]
        assert a.transpose().array.tolist() == [[1, 0], [1, 1]]
        with pytest.raises(ValueError):
            a @ BitMatrix.identity(3)
        with pytest.raises(ValueError):
            a.multiply_vector(BitVec.ones(3))

    def test_span(self):
        """Test opplisting av radrommet."""
        words = BitMatrix.identity(3).span()
        assert words.shape == (8, 3)
        assert len({tuple(w) for w in words.tolist()}) == 8
        with pytest.raises(ValueError):
            BitMatrix.identity(21).span()

    def test_ragged_rows(self):
        """Test at rader med ulik lengde avvises."""
        with pytest.raises(ValueError):
            BitMatrix([[1, 0], [1, 0, 1]])

    def test_stack(self):
        """Test stabling av rader."""
        h = hamming_parity(3)
        stacked = h.stack(BitVec.ones(7))
        assert stacked.shape == (4, 7)
        assert np.array_equal(stacked.array[:3], h.array)
        with pytest.raises(ValueError):
            h.stack(BitVec.ones(5))


class TestRandomMatrices:
    """Test klasse for tilfeldige matriser med fast frø."""

    @pytest.mark.parametrize("seed", range(5))
    def test_rank_invariance(self, seed):
        """Test at rangen er uendret under radpermutasjon og radaddisjon."""
        rng = np.random.default_rng(seed)
        array = rng.integers(0, 2, size=(8, 12), dtype=np.uint8)
        array[7] = array[0] ^ array[1]
        expected = rank(BitMatrix(array))
        assert expected <= 7
        assert rank(BitMatrix(array[rng.permutation(8)])) == expected
        i, j = rng.choice(8, size=2, replace=False)
        added = array.copy()
        added[j] ^= added[i]
        assert rank(BitMatrix(added)) == expected

    @pytest.mark.parametrize("r", [3, 7, 12])
    def test_in_row_space_matches_enumeration(self, r):
        """Test in_row_space mot alle 2^r kombinasjoner av radene."""
        rng = np.random.default_rng(100 + r)
        n = r + 4
        array = rng.integers(0, 2, size=(r, n), dtype=np.uint8)
        array[-1] = array[0] ^ array[1]
        matrix = BitMatrix(array)
        combinations = (np.arange(1 << r)[:, np.newaxis] >> np.arange(r)) & 1
        words = {tuple(w) for w in ((combinations @ array) % 2).tolist()}
        candidates = rng.integers(0, 2, size=(200, n), dtype=np.uint8)
        members = (combinations[rng.integers(0, 1 << r, size=50)] @ array) % 2
        for v in np.vstack([candidates, members]).tolist():
            assert in_row_space(matrix, BitVec(v)) == (tuple(v) in words)
