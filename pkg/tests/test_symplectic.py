"""
Tester for symplectic modulen.
"""

import itertools

import pytest
import numpy as np
from ctcodes.construct import CodeFactory
from ctcodes.gf2core import BitMatrix, BitVec
from ctcodes.symplectic import (
    AffineElement, GroupElement, UnionFind, all_transvections, boolean_f, count_aut_in_gl,
    extended_group, general_linear_group, gl_orbit_check_even_part, gram_matrix, group_closure,
    induced_action, induced_permutation, orbit_count, orbit_count_extended, preserves_form,
    symplectic_form, symplectic_form_int, symplectic_group_order, translation,
    translation_witness, translations_normal, translations_preserve, transvection,
    verify_nondegenerate, verify_quadratic_identities, weight_two_coset_check,
)

ODD_PAIRS = ["0,1", "0,3", "1,2", "2,3"]


@pytest.fixture(scope="module")
def sp4():
    """Lukningen av transveksjonene for m = 4."""
    return group_closure(all_transvections(4))


class TestQuadraticForms:
    """Test klasse for vektklassefunksjoner og den symplektiske formen."""

    def test_group_orders(self):
        """Test |Sp(m,2)|."""
        assert symplectic_group_order(4) == 720
        assert symplectic_group_order(6) == 1451520
        with pytest.raises(ValueError):
            symplectic_group_order(5)

    def test_boolean_f(self):
        """Test f_{i1,i2} inkludert x = 0."""
        assert boolean_f(4, "0,1", 0) == 1
        assert boolean_f(4, "1,2", 0b0011) == 1
        assert boolean_f(4, "1,2", 0b0111) == 0
        assert boolean_f(4, "2,3", BitVec.from_string("1110")) == 1

    def test_boolean_f_errors(self):
        """Test ugyldige argumenter."""
        with pytest.raises(ValueError):
            boolean_f(5, "0,1", 1)
        with pytest.raises(ValueError):
            boolean_f(4, "0,1", 16)
        with pytest.raises(ValueError):
            boolean_f(4, "0,1", BitVec.ones(3))

    @pytest.mark.parametrize("m", [4, 6, 8])
    def test_quadratic_identities(self, m):
        """Test de fire kvadratiske identitetene."""
        result = verify_quadratic_identities(m)
        assert set(result) == set(ODD_PAIRS)
        assert all(result.values())

    @pytest.mark.parametrize("label", ODD_PAIRS)
    def test_form_is_pair_independent(self, label):
        """Test at B fra f_{i1,i2} er lik wt(u)wt(v) + |u ∩ v|."""
        form = symplectic_form(4, label)
        for u, v in itertools.product(range(16), repeat=2):
            assert form(u, v) == symplectic_form_int(u, v)

    def test_bilinear_random_m6(self):
        """Test bilinearitet og alternering for B ved m = 6 med tilfeldige vektorer."""
        rng = np.random.default_rng(6)
        form = symplectic_form(6, "1,2")
        for u, v, w in rng.integers(0, 64, size=(200, 3)).tolist():
            assert form(u ^ w, v) == form(u, v) ^ form(w, v)
            assert form(u, v) == form(v, u)
            assert form(u, u) == 0

    def test_even_pair_has_no_form(self):
        """Test at par med like differanse avvises."""
        with pytest.raises(ValueError):
            symplectic_form(4, "0,2")

    def test_gram_matrix(self):
        """Test at Gram-matrisen er J + I og ikke-degenerert."""
        gram = gram_matrix(4, "0,1")
        expected = np.ones((4, 4), dtype=np.uint8) - np.eye(4, dtype=np.uint8)
        assert np.array_equal(gram.array, expected)
        assert verify_nondegenerate(4, "2,3")
        assert verify_nondegenerate(6, "1,2")
        with pytest.raises(ValueError):
            verify_nondegenerate(5, "0,1")


class TestGroupElement:
    """Test klasse for GroupElement og transveksjoner."""

    def test_identity_and_keys(self):
        """Test identitet og pakkede nøkler."""
        identity = GroupElement.identity(4)
        assert identity.is_identity()
        element = transvection(4, 5)
        assert GroupElement.from_key(4, element.key) == element
        assert GroupElement.from_matrix(element.matrix) == element

    def test_invalid_elements(self):
        """Test singulære matriser og feil antall bilder."""
        with pytest.raises(ValueError):
            GroupElement(2, [1, 1])
        with pytest.raises(ValueError):
            GroupElement(3, [1, 2])

    def test_transvections_are_involutions(self):
        """Test at T_a ∘ T_a er identiteten."""
        for t in all_transvections(4):
            assert (t * t).is_identity()
            assert (t * t.inverse()).is_identity()
            assert preserves_form(t)

    def test_transvection_errors(self):
        """Test a = 0 og a utenfor rommet."""
        with pytest.raises(ValueError):
            transvection(4, 0)
        with pytest.raises(ValueError):
            transvection(4, 16)

    def test_non_symplectic_element(self):
        """Test et element som ikke bevarer formen og ikke induserer automorfi."""
        element = GroupElement(4, [1, 3, 4, 8])
        assert not preserves_form(element)
        parity = CodeFactory.weight_class_code(4, "0,1").parity
        assert induced_permutation(element, parity) is None

    def test_column_permutation(self):
        """Test permutasjon av kolonner."""
        swap = GroupElement(2, [2, 1])
        assert swap.column_permutation([1, 2, 3]) == (1, 0, 2)
        with pytest.raises(ValueError):
            swap.column_permutation([1, 3])

    def test_induced_permutation_requires_hamming_rows(self):
        """Test at de øverste radene må være H_m."""
        with pytest.raises(ValueError):
            induced_permutation(transvection(4, 1), BitMatrix.identity(4))


class TestClosure:
    """Test klasse for gruppelukning."""

    def test_order_m4(self, sp4):
        """Test at transveksjonene genererer Sp(4,2)."""
        assert sp4.order == 720
        assert transvection(4, 7) in sp4
        assert GroupElement(4, [1, 3, 4, 8]) not in sp4
        assert sum(count for _, count in sp4.generator_log) == 720
        assert sp4.generator_log[0] == (0, 1)
        assert all(preserves_form(element) for element in sp4)

    def test_single_transvection(self):
        """Test at én transveksjon genererer en gruppe av orden 2."""
        closure = group_closure([transvection(4, 9)])
        assert closure.order == 2
        assert GroupElement.identity(4) in closure

    def test_dump_hex(self, sp4):
        """Test heksdumpen."""
        lines = sp4.dump_hex().splitlines()
        assert len(lines) == 720
        assert all(len(line) == 4 for line in lines)
        assert lines == sorted(lines)

    def test_threads(self, sp4):
        """Test at tråder gir samme lukning."""
        threaded = group_closure(all_transvections(4), threads=3)
        assert np.array_equal(threaded.keys, sp4.keys)

    def test_errors(self):
        """Test tom liste, for stor m og grensen."""
        with pytest.raises(ValueError):
            group_closure([])
        with pytest.raises(ValueError):
            group_closure([transvection(8, 1)])
        with pytest.raises(RuntimeError):
            group_closure(all_transvections(4), cap=100)

    @pytest.mark.slow
    def test_order_m6(self):
        """Test at transveksjonene genererer Sp(6,2)."""
        assert group_closure(all_transvections(6)).order == 1451520


class TestOrbits:
    """Test klasse for baneopptelling."""

    def test_union_find(self):
        """Test disjunkte mengder."""
        union = UnionFind(range(5))
        union.union(0, 3)
        union.union(4, 3)
        assert union.groups() == [(0, 3, 4), (1,), (2,)]

    @pytest.mark.parametrize("label", ODD_PAIRS)
    def test_four_orbits(self, sp4, label):
        """Test fire baner, én per ledervekt."""
        code = CodeFactory.weight_class_code(4, label)
        table = orbit_count(induced_action(sp4, code.parity), code)
        assert table.count == 4
        assert table.action_size == 720
        assert table.refines_leader_weights()
        assert sorted(table.orbit_sizes) == [1, 1, 15, 15]
        assert table.orbit_of(0) == (0,)

    def test_generators_suffice(self):
        """Test at generatorene gir samme baner som gruppen."""
        code = CodeFactory.weight_class_code(6, "1,2")
        table = orbit_count(induced_action(all_transvections(6), code.parity), code)
        assert table.count == 4
        assert table.refines_leader_weights()
        assert sorted(table.leader_weights) == [(0,), (1,), (2,), (3,)]

    def test_identity_action(self):
        """Test at identiteten gir 2^{m+1} baner."""
        code = CodeFactory.weight_class_code(4, "0,1")
        assert orbit_count([tuple(range(15))], code).count == 32

    def test_rejects_non_automorphism(self):
        """Test at en permutasjon som ikke bevarer koden avvises."""
        code = CodeFactory.weight_class_code(4, "0,1")
        swap = tuple([2, 1, 0] + list(range(3, 15)))
        with pytest.raises(ValueError):
            orbit_count([swap], code)

    @pytest.mark.parametrize("label", ["1,2", "2,3"])
    def test_extended_orbits(self, sp4, label):
        """Test fem baner for den utvidede koden."""
        assert orbit_count_extended(4, label).count == 5
        assert orbit_count_extended(4, label, sp4).refines_leader_weights()

    def test_extended_orbits_reject_zero(self):
        """Test at par med 0 avvises."""
        with pytest.raises(ValueError):
            orbit_count_extended(4, "0,1")

    @pytest.mark.slow
    def test_gl_orbits_even_part(self):
        """Test fire baner for C_{0,2} under GL(4,2)."""
        assert gl_orbit_check_even_part(4).count == 4
        with pytest.raises(ValueError):
            gl_orbit_check_even_part(6)


class TestExtendedGroup:
    """Test klasse for den affine gruppen til den utvidede koden."""

    def test_order(self, sp4):
        """Test |Aut(C*)| = 720 · 16."""
        group = extended_group(4, sp4)
        assert group.order == 11520
        assert group.enumerated

    def test_structural_certificate(self, sp4):
        """Test ordenen uten opplisting."""
        group = extended_group(4, sp4, cap=1000)
        assert not group.enumerated
        assert group.order == 11520

    def test_translations(self):
        """Test at translasjonene er normale og bevarer koden."""
        assert translations_normal(4, all_transvections(4))
        assert translations_preserve(4, "1,2")
        assert translations_preserve(4, "2,3")

    def test_affine_algebra(self):
        """Test sammensetning og invers for affine elementer."""
        element = AffineElement(transvection(4, 3), 5)
        product = element.compose(element.inverse())
        assert product == translation(4, 0)
        assert sorted(element.permutation) == list(range(16))

    @pytest.mark.slow
    def test_gl_counts(self, sp4):
        """Test at automorfiene i GL(4,2) er nøyaktig Sp(4,2)."""
        counts = count_aut_in_gl(4, "0,1", sp4)
        assert counts["gl_order"] == 20160
        assert counts["accepted"] == 720
        assert counts["form_preserving"] == 720
        assert counts["agree"] == 1
        assert counts["in_closure"] == 1

    def test_small_gl(self):
        """Test |GL(2,2)| = 6."""
        assert len(general_linear_group(2)) == 6
        with pytest.raises(ValueError):
            general_linear_group(5)


class TestWitnesses:
    """Test klasse for vekt 2-sjekken og translasjonsvitner."""

    @pytest.mark.parametrize("label", ODD_PAIRS)
    def test_weight_two(self, label):
        """Test vekt 2-betingelsen og transitivitet."""
        report = weight_two_coset_check(4, label)
        assert report.form_condition
        assert report.transitive
        assert report.holds

    def test_weight_two_even_pair(self):
        """Test at like differanse avvises."""
        with pytest.raises(ValueError):
            weight_two_coset_check(4, "0,2")

    @pytest.mark.parametrize("label", ["1,2", "2,3"])
    def test_translation_witness(self, label):
        """Test vitnene for ledervekt 1, 2 og 3."""
        witnesses = translation_witness(4, label)
        assert [w.weight for w in witnesses] == [1, 2, 3]
        assert all(w.holds for w in witnesses)
