#!/usr/bin/env python3
"""
Tests for report rendering: JSON payloads, tables and the agreement matrix.
"""

import json
import sys
import unittest
from pathlib import Path

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from algebra.properties import PropertyVerdict
from record.reports import (render_reports, render_verdict, reports_frame, reports_to_json, reports_to_table,
                            summary_matrix)
from workflow.theorems import CORPUS_BOUNDED, EXACT, OBSERVED, ConditionValue, make_report


def _reports():
    return [
        make_report('thm-wqf', 'zmod4', [ConditionValue('wqf', True, EXACT),
                                         ConditionValue('cogenerator', True, CORPUS_BOUNDED)]),
        make_report('thm-wqf', 'tri2-f2', [ConditionValue('wqf', True, EXACT),
                                           ConditionValue('double_annihilator', False, EXACT, "ideal {0,2}")]),
        make_report('finite-collapse', 'zmod4', [ConditionValue('qf', True, EXACT),
                                                 ConditionValue('example', False, OBSERVED)]),
    ]


class TestReportRendering(unittest.TestCase):
    """Theorem reports as JSON and tables."""

    def test_json_summary(self):
        payload = json.loads(reports_to_json(_reports()))
        self.assertEqual(payload['summary'], {'total': 3, 'disagreements': 1})
        self.assertEqual(len(payload['reports']), 3)
        self.assertEqual(payload['reports'][1]['ring'], 'tri2-f2')

    def test_json_is_stable(self):
        self.assertEqual(reports_to_json(_reports()), reports_to_json(_reports()))

    def test_frame_marks(self):
        frame = reports_frame(_reports())
        self.assertEqual(list(frame['agreement']), ['agree', 'DISAGREE', 'agree'])
        self.assertEqual(frame['conditions'][0], "wqf=T cogenerator=T~")
        self.assertEqual(frame['conditions'][2], "qf=T example=F?")

    def test_summary_matrix(self):
        matrix = summary_matrix(_reports())
        self.assertEqual(matrix.loc['zmod4', 'thm-wqf'], '1/1')
        self.assertEqual(matrix.loc['tri2-f2', 'thm-wqf'], '0/1')
        self.assertEqual(matrix.loc['tri2-f2', 'finite-collapse'], '')
        self.assertTrue(summary_matrix([]).empty)

    def test_table(self):
        text = reports_to_table(_reports())
        self.assertIn("witnesses:", text)
        self.assertIn("ideal {0,2}", text)
        self.assertTrue(text.endswith("3 report(s), 1 disagreement(s)\n"))
        self.assertEqual(reports_to_table([]), "no reports\n")

    def test_render_dispatch(self):
        self.assertEqual(render_reports(_reports(), 'json'), reports_to_json(_reports()))
        self.assertEqual(render_reports([], 'table'), "no reports\n")
        with self.assertRaises(ValueError):
            render_reports(_reports(), 'csv')


class TestVerdictRendering(unittest.TestCase):
    """Single property verdicts."""

    def test_table_verdict(self):
        verdict = PropertyVerdict('self-injective-left', 'left', False, "ideal {0,2}")
        text = render_verdict(verdict, 'tri2-f2')
        self.assertTrue(text.startswith("self-injective-left on tri2-f2: fails\n"))
        self.assertIn("  witness: ideal {0,2}", text)

    def test_json_verdict(self):
        verdict = PropertyVerdict('qf', 'two-sided', True, conditions={'kasch': True})
        data = json.loads(render_verdict(verdict, 'zmod4', 'json'))
        self.assertEqual(data['ring'], 'zmod4')
        self.assertTrue(data['value'])
        self.assertEqual(data['conditions'], {'kasch': True})

    def test_unknown_format(self):
        with self.assertRaises(ValueError):
            render_verdict(PropertyVerdict('qf', 'two-sided', True), 'zmod4', 'xml')


if __name__ == '__main__':
    unittest.main()
