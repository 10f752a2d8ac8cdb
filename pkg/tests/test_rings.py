#!/usr/bin/env python3
"""
Tests for finite rings: table validation, units, annihilators, the radical
and the isomorphism search.
"""

import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from algebra.caps import Caps
from algebra.constructors import ring_zmod
from algebra.errors import AxiomViolation, SizeOverflow
from algebra.rings import (ElementSubset, are_isomorphic, find_ring_isomorphism, inverse,
                           is_invertible_scalar, is_regular_ring, is_two_sided_ideal, jacobson_radical,
                           left_annihilator, left_ideal_generated, make_ring_from_tables, quotient_ring,
                           right_annihilator, two_sided_ideal_generated, units)
from workflow.catalog import get_ring


class TestRingTables(unittest.TestCase):
    """Validation of operation tables."""

    def test_zmod_tables(self):
        ring = ring_zmod(6)
        self.assertEqual(ring.size, 6)
        self.assertEqual(ring.add[4, 5], 3)
        self.assertEqual(ring.mul[4, 5], 2)
        self.assertEqual((ring.zero, ring.one), (0, 1))
        self.assertTrue(ring.is_commutative)

    def test_missing_multiplicative_identity(self):
        with self.assertRaises(AxiomViolation) as ctx:
            make_ring_from_tables(2, [[0, 1], [1, 0]], [[0, 0], [0, 0]], 0, 1, "bad")
        self.assertEqual(ctx.exception.axiom, 'multiplicative-identity')
        self.assertIn("bad", str(ctx.exception))

    def test_zero_equal_to_one(self):
        with self.assertRaises(AxiomViolation) as ctx:
            make_ring_from_tables(2, [[0, 1], [1, 0]], [[0, 1], [1, 0]], 0, 0)
        self.assertEqual(ctx.exception.axiom, 'zero-one')

    def test_entries_out_of_range(self):
        with self.assertRaises(AxiomViolation) as ctx:
            make_ring_from_tables(2, [[0, 5], [1, 0]], [[0, 0], [0, 1]], 0, 1)
        self.assertEqual(ctx.exception.axiom, 'closure')

    def test_zero_ring_is_accepted(self):
        ring = ring_zmod(1)
        self.assertEqual(ring.size, 1)
        self.assertEqual(ring.zero, ring.one)

    def test_noncommutative_catalog_rings(self):
        self.assertFalse(get_ring('tri2-f2').is_commutative)
        self.assertFalse(get_ring('m2-f2').is_commutative)


class TestUnitsAndIdeals(unittest.TestCase):
    """Units, annihilators, ideals and quotients."""

    def test_units_of_zmod8(self):
        self.assertEqual(units(ring_zmod(8)).to_set(), {1, 3, 5, 7})
        self.assertEqual(inverse(ring_zmod(8), 3), 3)
        self.assertIsNone(inverse(ring_zmod(8), 2))

    def test_invertible_scalars(self):
        self.assertFalse(is_invertible_scalar(get_ring('f2'), 2))
        self.assertTrue(is_invertible_scalar(get_ring('f3'), 2))
        self.assertTrue(is_invertible_scalar(get_ring('f2'), 3))
        with self.assertRaises(ValueError):
            is_invertible_scalar(get_ring('f2'), -1)

    def test_annihilators_in_zmod12(self):
        ring = ring_zmod(12)
        self.assertEqual(left_annihilator(ring, [4]).to_set(), {0, 3, 6, 9})
        self.assertEqual(right_annihilator(ring, [4]).to_set(), {0, 3, 6, 9})
        self.assertEqual(left_annihilator(ring, []).size, 12)

    def test_quotient_ring(self):
        ring = ring_zmod(12)
        ideal = two_sided_ideal_generated(ring, [4])
        self.assertEqual(ideal.to_set(), {0, 4, 8})
        self.assertTrue(is_two_sided_ideal(ideal))
        q = quotient_ring(ring, ideal, "zmod12/4")
        self.assertEqual(q.size, 4)
        self.assertTrue(are_isomorphic(q, ring_zmod(4)))

    def test_quotient_by_one_sided_ideal_is_rejected(self):
        ring = get_ring('tri2-f2')
        ideals = [left_ideal_generated(ring, [x]) for x in range(ring.size)]
        one_sided = [i for i in ideals if not is_two_sided_ideal(i)]
        self.assertTrue(one_sided)
        with self.assertRaises(ValueError):
            quotient_ring(ring, one_sided[0])

    def test_regularity(self):
        self.assertTrue(is_regular_ring(ring_zmod(6)))
        self.assertFalse(is_regular_ring(ring_zmod(4)))
        self.assertTrue(is_regular_ring(get_ring('m2-f2')))
        self.assertFalse(is_regular_ring(get_ring('f2-dual')))

    def test_jacobson_radical(self):
        self.assertEqual(jacobson_radical(ring_zmod(4)).to_set(), {0, 2})
        self.assertEqual(jacobson_radical(ring_zmod(8)).to_set(), {0, 2, 4, 6})
        self.assertTrue(jacobson_radical(ring_zmod(6)).is_zero())
        self.assertTrue(jacobson_radical(get_ring('m2-f2')).is_zero())
        # strictly upper triangular part
        self.assertEqual(jacobson_radical(get_ring('tri2-f2')).to_set(), {0, 2})

    def test_element_subset_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            ElementSubset.from_indices(ring_zmod(4), [0, 4])


class TestIsomorphism(unittest.TestCase):
    """Ring isomorphism search."""

    def test_crt_isomorphism(self):
        bijection = find_ring_isomorphism(ring_zmod(6), get_ring('f2xf3'))
        self.assertIsNotNone(bijection)
        self.assertEqual(sorted(bijection), list(range(6)))

    def test_non_isomorphic_rings_of_order_four(self):
        self.assertFalse(are_isomorphic(ring_zmod(4), get_ring('f4')))
        self.assertFalse(are_isomorphic(ring_zmod(4), get_ring('f2-dual')))
        self.assertFalse(are_isomorphic(get_ring('f4'), get_ring('f2-dual')))

    def test_group_ring_of_c2_over_f2_is_dual_numbers(self):
        self.assertTrue(are_isomorphic(get_ring('f2-c2'), get_ring('f2-dual')))

    def test_search_cap(self):
        with self.assertRaises(SizeOverflow):
            find_ring_isomorphism(ring_zmod(6), get_ring('f2xf3'), Caps(iso_limit=4))


class TestAnnihilatorLaws(unittest.TestCase):
    """Galois-connection identities on random subsets."""

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=15), max_size=6))
    def test_left_right_left_is_left(self, xs):
        ring = get_ring('m2-f2')
        left = left_annihilator(ring, xs)
        self.assertEqual(left_annihilator(ring, right_annihilator(ring, left)).to_set(), left.to_set())

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.integers(min_value=0, max_value=15), max_size=6))
    def test_annihilators_are_ideals(self, xs):
        ring = get_ring('m2-f2')
        left = left_annihilator(ring, xs)
        right = right_annihilator(ring, xs)
        self.assertEqual(left_ideal_generated(ring, left.indices).to_set(), left.to_set())
        self.assertTrue(set(int(v) for v in ring.mul[right.indices, :].ravel()) <= right.to_set())

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=11), st.integers(min_value=0, max_value=11))
    def test_units_closed_under_products(self, a, b):
        ring = ring_zmod(12)
        u = units(ring)
        if a in u and b in u:
            self.assertIn(int(ring.mul[a, b]), u)


if __name__ == '__main__':
    unittest.main()
