#!/usr/bin/env python3
"""
Tests for finitely presented modules, submodule lattices and homs.
"""

import sys
import unittest
from functools import reduce
from pathlib import Path

import numpy as np
from hypothesis import given, settings, strategies as st

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from algebra.caps import Caps
from algebra.constructors import ring_zmod
from algebra.errors import NotAHomomorphism, ParentMismatch, SideMismatch, SizeOverflow
from algebra.modules import (LEFT, RIGHT, ModuleHom, Submodule, cyclic_submodules, find_module_isomorphism,
                             free_module, hom_values, identity_hom, intersect_sub, is_essential,
                             minimal_submodules, module_from_concrete, present_module, quotient_with_map,
                             regular_module, represent, socle, submodule_module, submodules, sum_sub, zero_hom,
                             zero_submodule)
from workflow.catalog import get_ring


class TestPresentations(unittest.TestCase):
    """Realizing R^m modulo relations."""

    def setUp(self):
        self.zmod4 = get_ring('zmod4')

    def test_cyclic_quotient(self):
        module = present_module(self.zmod4, LEFT, 1, [[2]])
        self.assertEqual(module.size, 2)
        self.assertEqual(module.gens, 1)

    def test_free_module_indices_are_codes(self):
        free = free_module(self.zmod4, LEFT, 2)
        self.assertEqual(free.size, 16)
        # code 1 + 4*3 has coordinates (1, 3)
        self.assertEqual(free.coords_of(13), (1, 3))
        self.assertEqual(free.element((1, 3)), 13)

    def test_regular_module_indices_are_ring_indices(self):
        ring = get_ring('tri2-f2')
        left = regular_module(ring, LEFT)
        right = regular_module(ring, RIGHT)
        for r in range(ring.size):
            for x in range(ring.size):
                self.assertEqual(left.act[r, x], ring.mul[r, x])
                self.assertEqual(right.act[r, x], ring.mul[x, r])

    def test_size_cap(self):
        with self.assertRaises(SizeOverflow):
            present_module(self.zmod4, LEFT, 3, caps=Caps(max_module=32))

    def test_malformed_relation(self):
        with self.assertRaises(ValueError):
            present_module(self.zmod4, LEFT, 2, [[1]])
        with self.assertRaises(ValueError):
            present_module(self.zmod4, LEFT, 1, [[7]])

    def test_bad_side(self):
        with self.assertRaises(ValueError):
            present_module(self.zmod4, 'middle', 1)

    def test_module_from_concrete_keeps_indices(self):
        regular = regular_module(self.zmod4, LEFT)
        module = module_from_concrete(self.zmod4, LEFT, regular.add, regular.act, regular.zero)
        self.assertEqual(module.size, 4)
        self.assertTrue(np.array_equal(module.act, regular.act))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(st.integers(min_value=0, max_value=3), min_size=2, max_size=2), max_size=3))
    def test_random_presentations(self, relations):
        module = present_module(get_ring('zmod4'), LEFT, 2, relations)
        self.assertEqual(16 % module.size, 0)
        self.assertTrue(Submodule.generated(module, module.generators).is_whole())
        for x in range(module.size):
            self.assertEqual(module.element(module.coords_of(x)), x)


class TestSubmodules(unittest.TestCase):
    """Submodule lattices, socles and quotients."""

    def test_ideal_lattice_of_zmod8(self):
        lattice = submodules(regular_module(get_ring('zmod8'), LEFT))
        self.assertEqual([s.size for s in lattice], [1, 2, 4, 8])
        self.assertTrue(all(s.is_closed() for s in lattice))

    def test_ideal_lattice_of_zmod6(self):
        lattice = submodules(regular_module(get_ring('zmod6'), LEFT))
        self.assertEqual([s.size for s in lattice], [1, 2, 3, 6])

    def test_socle_and_essential(self):
        module = regular_module(get_ring('zmod8'), LEFT)
        soc = socle(module)
        self.assertEqual(soc.indices.tolist(), [0, 4])
        self.assertTrue(is_essential(soc, module))
        self.assertEqual(len(minimal_submodules(module)), 1)

    def test_semisimple_socle_is_whole(self):
        module = regular_module(get_ring('zmod6'), LEFT)
        self.assertTrue(socle(module).is_whole())

    def test_sum_and_intersection(self):
        module = regular_module(get_ring('zmod6'), LEFT)
        two = Submodule.generated(module, [2])
        three = Submodule.generated(module, [3])
        self.assertTrue(sum_sub(two, three).is_whole())
        self.assertTrue(intersect_sub(two, three).is_zero())
        self.assertEqual(len(cyclic_submodules(module)), 4)

    def test_mixed_parents(self):
        first = Submodule.generated(regular_module(get_ring('zmod6'), LEFT), [2])
        second = Submodule.generated(regular_module(get_ring('zmod6'), RIGHT), [2])
        with self.assertRaises(ParentMismatch):
            sum_sub(first, second)

    def test_quotient_with_map(self):
        module = regular_module(get_ring('zmod8'), LEFT)
        sub = Submodule.generated(module, [4])
        quot, proj = quotient_with_map(module, sub)
        self.assertEqual(quot.size, 4)
        self.assertTrue(proj.verify().is_surjective())
        self.assertEqual(proj.kernel().indices.tolist(), [0, 4])

    def test_submodule_module(self):
        module = regular_module(get_ring('zmod8'), LEFT)
        sub_module, inclusion = submodule_module(Submodule.generated(module, [2]))
        self.assertEqual(sub_module.size, 4)
        self.assertTrue(inclusion.verify().is_injective())
        self.assertEqual(inclusion.image().indices.tolist(), [0, 2, 4, 6])

    def test_zero_submodule_is_bottom(self):
        module = regular_module(get_ring('zmod8'), LEFT)
        bottom = zero_submodule(module)
        self.assertTrue(bottom.is_zero())
        for sub in submodules(module):
            self.assertTrue(bottom.issubset(sub))

    def test_represent_keeps_elements(self):
        module = present_module(get_ring('zmod4'), LEFT, 2, [[2, 0]])
        again = represent(module)
        self.assertEqual((again.size, again.side), (module.size, LEFT))
        self.assertTrue(np.array_equal(again.add, module.add))
        self.assertTrue(np.array_equal(again.act, module.act))


class TestLatticeInvariants(unittest.TestCase):
    """Identities that hold on every submodule lattice."""

    def setUp(self):
        self.modules = [regular_module(get_ring(label), side)
                        for label in ['zmod8', 'zmod12', 'f2-dual', 'tri2-f2', 'm2-f2', 'f2-c2']
                        for side in (LEFT, RIGHT)]
        self.modules.append(present_module(get_ring('zmod4'), LEFT, 2, [[2, 0]]))

    def test_socle_is_intersection_of_essential_submodules(self):
        for module in self.modules:
            with self.subTest(module=module.label):
                meet = reduce(intersect_sub, [s for s in submodules(module) if is_essential(s, module)])
                self.assertTrue(np.array_equal(meet.members, socle(module).members))

    def test_quotient_sizes_multiply(self):
        for module in self.modules:
            for sub in submodules(module):
                with self.subTest(module=module.label, sub=sub.indices.tolist()):
                    quot, _ = quotient_with_map(module, sub)
                    self.assertEqual(quot.size * sub.size, module.size)

    def test_regular_module_cache_is_bounded(self):
        self.assertEqual(regular_module.cache_info().maxsize, 64)
        ring = get_ring('zmod4')
        self.assertIs(regular_module(ring, LEFT), regular_module(ring, LEFT))


class TestHoms(unittest.TestCase):
    """Hom enumeration and hom checks."""

    def test_endomorphisms_of_zmod4(self):
        regular = regular_module(get_ring('zmod4'), LEFT)
        images, values = hom_values(regular, regular)
        self.assertEqual(images.shape[0], 4)
        self.assertEqual(values.shape, (4, 4))

    def test_hom_from_torsion(self):
        ring = get_ring('zmod4')
        torsion = present_module(ring, LEFT, 1, [[2]])
        images, _ = hom_values(torsion, regular_module(ring, LEFT))
        self.assertEqual(sorted(images[:, 0].tolist()), [0, 2])

    def test_hom_from_free(self):
        ring = get_ring('f2-dual')
        images, _ = hom_values(free_module(ring, LEFT, 2), regular_module(ring, LEFT))
        self.assertEqual(images.shape[0], 16)

    def test_every_enumerated_hom_verifies(self):
        ring = get_ring('tri2-f2')
        regular = regular_module(ring, RIGHT)
        _, values = hom_values(regular, regular)
        for v in values:
            ModuleHom(regular, regular, v).verify()

    def test_not_a_homomorphism(self):
        regular = regular_module(get_ring('zmod4'), LEFT)
        with self.assertRaises(NotAHomomorphism):
            ModuleHom(regular, regular, [0, 1, 1, 1]).verify()

    def test_side_mismatch(self):
        ring = get_ring('zmod4')
        with self.assertRaises(SideMismatch):
            ModuleHom(regular_module(ring, LEFT), regular_module(ring, RIGHT), [0, 1, 2, 3])
        with self.assertRaises(SideMismatch):
            hom_values(regular_module(ring, LEFT), regular_module(ring, RIGHT))

    def test_identity_and_zero(self):
        regular = regular_module(ring_zmod(5), LEFT)
        self.assertTrue(identity_hom(regular).is_injective())
        self.assertTrue(zero_hom(regular, regular).is_zero())

    def test_module_isomorphism(self):
        ring = get_ring('f2-dual')
        presented = present_module(ring, LEFT, 1, label="R")
        iso = find_module_isomorphism(presented, regular_module(ring, LEFT))
        self.assertIsNotNone(iso)
        self.assertTrue(iso.verify().is_injective())
        torsion = present_module(ring, LEFT, 2, [[2, 0], [0, 2]])
        self.assertIsNone(find_module_isomorphism(torsion, free_module(ring, LEFT, 1)))


if __name__ == '__main__':
    unittest.main()
