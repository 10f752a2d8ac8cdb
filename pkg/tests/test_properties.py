#!/usr/bin/env python3
"""
Tests for ring properties: Baer self-injectivity, Kasch, QF/WQF,
annihilator identities, IF/CF, semiregularity and the property registry.
"""

import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from algebra.modules import LEFT, RIGHT, regular_module
from algebra.properties import (PROPERTIES, PropertyVerdict, annihilator_conditions, annihilator_flags,
                                evaluate_property, ext_route_self_injective, is_cf_ring, is_fp_cogenerator,
                                is_if_ring, is_kasch, is_left_cf_ring, is_left_if_ring, is_left_kasch,
                                is_left_self_injective, is_qf, is_regular_verdict, is_right_cf_ring,
                                is_right_if_ring, is_right_kasch, is_right_self_injective, is_self_injective,
                                is_semiregular, is_semisimple, is_wqf, socle_essential, socle_essential_left,
                                socle_essential_right, structural_constants)
from workflow.catalog import get_ring
from workflow.corpus import CorpusSettings, build_ring_corpus

SELF_INJECTIVE = ['zmod2', 'zmod4', 'zmod6', 'zmod8', 'zmod9', 'zmod12', 'f4', 'f2-dual', 'm2-f2',
                  'f2-c2', 'f2-c3', 'f3-c3', 'zmod4-c2']
SMALL_CORPUS = CorpusSettings(seed=3, random_modules=2, max_gens=1, max_relations=1, max_monos=12)


class TestSelfInjectivity(unittest.TestCase):
    """Baer test and the Ext route."""

    def test_self_injective_catalog_rings(self):
        for label in SELF_INJECTIVE:
            with self.subTest(ring=label):
                ring = get_ring(label)
                self.assertTrue(is_self_injective(ring, LEFT).value)
                self.assertTrue(is_self_injective(ring, RIGHT).value)

    def test_triangular_ring_fails_with_witness(self):
        verdict = is_self_injective(get_ring('tri2-f2'), LEFT)
        self.assertFalse(verdict.value)
        self.assertIn("ideal", verdict.witness)
        self.assertFalse(is_qf(get_ring('tri2-f2')).value)

    def test_ext_route_agrees_with_baer(self):
        for label in ['zmod4', 'f2-dual', 'tri2-f2']:
            ring = get_ring(label)
            for side in (LEFT, RIGHT):
                with self.subTest(ring=label, side=side):
                    self.assertEqual(ext_route_self_injective(ring, side).value,
                                     is_self_injective(ring, side).value)

    @settings(max_examples=11, deadline=None)
    @given(st.integers(min_value=2, max_value=12))
    def test_zmod_rings_are_qf(self, n):
        ring = get_ring(f"zmod{n}")
        self.assertTrue(is_qf(ring).value)
        self.assertTrue(is_wqf(ring).value)
        squarefree = all(n % (p * p) for p in range(2, n + 1))
        self.assertEqual(is_semisimple(ring).value, squarefree)
        self.assertEqual(is_regular_verdict(ring).value, squarefree)


class TestStructure(unittest.TestCase):
    """Semisimplicity, regularity, Kasch, socles and annihilators."""

    def test_group_algebras(self):
        self.assertTrue(is_semisimple(get_ring('f2-c3')).value)
        self.assertFalse(is_semisimple(get_ring('f2-c2')).value)
        self.assertTrue(is_qf(get_ring('f2-c2')).value)
        self.assertTrue(is_wqf(get_ring('f2-c2')).value)

    def test_regular_witness(self):
        verdict = is_regular_verdict(get_ring('zmod4'))
        self.assertFalse(verdict)
        self.assertIn("a = 2", verdict.witness)

    def test_every_finite_ring_is_semiregular(self):
        for label in ['zmod4', 'tri2-f2', 'f2-dual', 'm2-f2']:
            with self.subTest(ring=label):
                self.assertTrue(is_semiregular(get_ring(label)).value)

    def test_kasch(self):
        verdict = is_kasch(get_ring('zmod4'), LEFT)
        self.assertTrue(verdict.value)
        self.assertEqual(verdict.conditions, {'all_proper_ideals': True, 'maximal_ideals': True})

    def test_socle_essential(self):
        self.assertTrue(socle_essential(get_ring('zmod8'), LEFT).value)
        self.assertTrue(socle_essential(get_ring('f2-dual'), RIGHT).value)

    def test_annihilator_conditions(self):
        verdict = annihilator_conditions(get_ring('zmod8'))
        self.assertTrue(verdict.value)
        self.assertTrue(verdict.conditions['flag_a'])
        self.assertTrue(verdict.conditions['flag_b'])

    def test_wqf_takes_every_annihilator_condition(self):
        for label in ['zmod8', 'f2-dual', 'tri2-f2', 'm2-f2', 'f2-c2']:
            with self.subTest(ring=label):
                ring = get_ring(label)
                verdict = is_wqf(ring)
                flags = annihilator_flags(ring)
                self.assertEqual(verdict.conditions['flag_a'], flags['intersection_sum'][0])
                self.assertEqual(verdict.conditions['flag_a_mirror'], flags['intersection_sum_mirror'][0])
                self.assertEqual(verdict.conditions['flag_b'], flags['double_annihilator_left'][0]
                                 and flags['double_annihilator_right'][0])
                self.assertEqual(verdict.value, all(value for value, _ in flags.values()))
                self.assertEqual(verdict.value, is_qf(ring).value)
        self.assertIsNotNone(is_wqf(get_ring('tri2-f2')).witness)

    def test_structural_constants(self):
        verdicts = structural_constants(get_ring('zmod4'))
        self.assertEqual([v.name for v in verdicts], ['artinian', 'noetherian', 'coherent', 'semiperfect'])
        self.assertTrue(all(verdicts))


class TestCorpusProperties(unittest.TestCase):
    """IF, CF and FP-cogenerator verdicts on a small corpus."""

    def setUp(self):
        self.ring = get_ring('zmod4')
        self.corpus = build_ring_corpus(self.ring, SMALL_CORPUS)

    def test_qf_ring_is_if(self):
        verdict = is_if_ring(self.ring, LEFT, self.corpus.side_modules(LEFT))
        self.assertTrue(verdict.value)
        self.assertTrue(verdict.corpus_bounded)
        self.assertIn("unbounded rank", verdict.note)

    def test_qf_ring_is_cf(self):
        self.assertTrue(is_cf_ring(self.ring, LEFT).value)
        self.assertTrue(is_cf_ring(self.ring, RIGHT, kmax=1).value)

    def test_sided_forms_match_generic(self):
        ring = self.ring
        self.assertEqual(is_left_self_injective(ring).value, is_self_injective(ring, LEFT).value)
        self.assertEqual(is_right_self_injective(ring).value, is_self_injective(ring, RIGHT).value)
        self.assertEqual(is_left_kasch(ring).value, is_kasch(ring, LEFT).value)
        self.assertEqual(is_right_kasch(ring).value, is_kasch(ring, RIGHT).value)
        self.assertTrue(socle_essential_left(ring).value)
        self.assertTrue(socle_essential_right(ring).value)
        self.assertTrue(is_left_cf_ring(ring).value)
        self.assertTrue(is_right_cf_ring(ring).value)
        self.assertTrue(is_left_if_ring(ring, self.corpus.side_modules(LEFT)).value)
        self.assertTrue(is_right_if_ring(ring, self.corpus.side_modules(RIGHT)).value)

    def test_regular_module_is_fp_cogenerator(self):
        verdict = is_fp_cogenerator(regular_module(self.ring, LEFT), self.corpus.side_modules(LEFT))
        self.assertTrue(verdict.value)
        self.assertEqual(set(verdict.conditions.values()), {True})


class TestRegistry(unittest.TestCase):
    """The named property registry."""

    def test_registry_names(self):
        for name in ['self-injective-left', 'self-injective-right', 'qf', 'wqf', 'kasch-left',
                     'annihilators', 'if-left', 'cf-right', 'fp-cogenerator-left', 'semisimple']:
            self.assertIn(name, PROPERTIES)
        self.assertTrue(PROPERTIES['if-left'].needs_corpus)
        self.assertFalse(PROPERTIES['qf'].needs_corpus)

    def test_evaluate_property(self):
        self.assertTrue(evaluate_property('qf', get_ring('zmod6')).value)
        self.assertFalse(evaluate_property('self-injective-left', get_ring('tri2-f2')).value)
        with self.assertRaises(KeyError):
            evaluate_property('no-such-property', get_ring('zmod6'))

    def test_verdict_serialization(self):
        verdict = PropertyVerdict('qf', 'two-sided', True, conditions={'self_injective_left': True})
        data = verdict.to_dict()
        self.assertEqual(data['name'], 'qf')
        self.assertTrue(data['value'])
        self.assertEqual(data['conditions'], {'self_injective_left': True})
        self.assertTrue(verdict)


if __name__ == '__main__':
    unittest.main()
