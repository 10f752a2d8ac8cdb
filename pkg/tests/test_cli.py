#!/usr/bin/env python3
"""
Tests for the command line: list, check, verify and groupring, with their
exit codes and output formats.
"""

import io
import json
import shutil
import sys
import tempfile
import unittest
from pathlib import Path

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from cli.commands import EXIT_ERROR, EXIT_FAIL, EXIT_OK, run
from record.formats import load_ring
from workflow.catalog import DEFAULT_RINGS

CONFIG_TEMPLATE = """output_format: table
log_dir: {log_dir}
log_level: DEBUG
harness:
  seed: 0
  jobs: 1
  random_modules: 1
  max_gens: 1
  max_relations: 1
  max_monos: 8
"""


class TestCommandLine(unittest.TestCase):
    """End-to-end runs of the CLI entry point."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = Path(tempfile.mkdtemp())
        self.config_path = self.temp_dir / "config.yaml"
        self.config_path.write_text(CONFIG_TEMPLATE.format(log_dir=self.temp_dir / "logs"))

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def invoke(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(['--config', str(self.config_path), *argv], out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    def test_list(self):
        code, out, _ = self.invoke('list')
        self.assertEqual(code, EXIT_OK)
        for name in ['rings:', 'zmod4', 'groups:', 's3', 'properties:', 'qf', 'theorems:', 'thm-wqf']:
            self.assertIn(name, out)

    def test_list_filter(self):
        _, out, _ = self.invoke('list', '--filter', 'tri2')
        self.assertIn('tri2-f2', out)
        self.assertNotIn('zmod4', out)
        self.assertNotIn('theorems:', out)

    def test_logs_go_to_configured_directory(self):
        self.invoke('list')
        self.assertTrue((self.temp_dir / "logs" / "fpring_lab_all.log").exists())

    def test_check_holds(self):
        code, out, _ = self.invoke('check', 'self-injective-left', 'zmod4')
        self.assertEqual(code, EXIT_OK)
        self.assertIn("self-injective-left on zmod4: holds", out)

    def test_check_fails_with_witness(self):
        code, out, _ = self.invoke('check', 'self-injective-left', 'tri2-f2')
        self.assertEqual(code, EXIT_FAIL)
        self.assertIn("witness:", out)

    def test_check_json(self):
        code, out, _ = self.invoke('--format', 'json', 'check', 'qf', 'zmod6')
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual((data['name'], data['ring'], data['value']), ('qf', 'zmod6', True))

    def test_check_corpus_property(self):
        code, out, _ = self.invoke('check', 'if-left', 'zmod4')
        self.assertEqual(code, EXIT_OK)
        self.assertIn("relative to the module corpus", out)

    def test_check_unknown_names(self):
        code, out, err = self.invoke('check', 'no-such-property', 'zmod4')
        self.assertEqual(code, EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("unknown property", err)
        code, _, err = self.invoke('check', 'qf', 'zmod99')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("UnknownSelectorError", err)

    def test_check_ring_over_cap(self):
        code, _, err = self.invoke('--max-ring', '4', 'check', 'qf', 'zmod8')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("SizeOverflow", err)

    def test_check_module_property(self):
        module_path = self.temp_dir / "m.txt"
        module_path.write_text("module left zmod4 gens 1\n2\n")
        code, out, _ = self.invoke('check', 'embeds-in-free', 'zmod4', '--module', str(module_path))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("embeds in", out)
        code, _, _ = self.invoke('check', 'reflexive', 'zmod4', '--module', str(module_path))
        self.assertEqual(code, EXIT_OK)

    def test_module_property_needs_module(self):
        code, _, err = self.invoke('check', 'reflexive', 'zmod4')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("--module", err)

    def test_missing_module_file(self):
        code, _, err = self.invoke('check', 'reflexive', 'zmod4', '--module', str(self.temp_dir / "nope.txt"))
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("File not found", err)

    def test_verify_json_and_out(self):
        out_path = self.temp_dir / "reports" / "wqf.json"
        code, out, _ = self.invoke('--format', 'json', 'verify', 'thm-wqf', '--ring', 'zmod4', '--ring', 'zmod2',
                                   '--out', str(out_path))
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload['summary'], {'total': 2, 'disagreements': 0})
        self.assertEqual(out_path.read_text(), out)

    def test_verify_table(self):
        code, out, _ = self.invoke('verify', 'prop-annihilators', '--ring', 'zmod4')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.endswith("1 report(s), 0 disagreement(s)\n"))

    def test_verify_lift_alias(self):
        code, out, _ = self.invoke('--format', 'json', 'verify', 'lemma-mmm', '--ring', 'f2', '--group', 'c2')
        self.assertEqual(code, EXIT_OK)
        reports = json.loads(out)['reports']
        self.assertEqual({r['theorem_id'] for r in reports}, {'group-ring-lift'})
        self.assertEqual(reports[0]['ring'], 'f2-c2')

    def test_list_shows_aliases(self):
        _, out, _ = self.invoke('list', '--filter', 'lemma')
        self.assertIn('lemma-mmm', out)
        self.assertIn('alias of group-ring-lift', out)

    def test_verify_unknown_theorem(self):
        code, _, err = self.invoke('verify', 'thm-nothing', '--ring', 'zmod4')
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("thm-nothing", err)

    def test_groupring(self):
        out_path = self.temp_dir / "f2-c3.ring"
        code, out, _ = self.invoke('groupring', 'f2', 'c3', str(out_path))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("(8 elements)", out)
        ring = load_ring(out_path)
        self.assertEqual((ring.label, ring.size), ('f2-c3', 8))

    def test_groupring_over_cap(self):
        out_path = self.temp_dir / "big.ring"
        code, _, err = self.invoke('groupring', 'zmod4', 's3', str(out_path))
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("SizeOverflow", err)
        self.assertFalse(out_path.exists())

    def test_bad_config_file(self):
        out, err = io.StringIO(), io.StringIO()
        code = run(['--config', str(self.temp_dir / "missing.yaml"), 'list'], out=out, err=err)
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("config file not found", err.getvalue())


class TestDefaultCorpus(unittest.TestCase):
    """Every theorem over every default ring, run twice through the CLI."""

    @classmethod
    def setUpClass(cls):
        cls.temp_dir = Path(tempfile.mkdtemp())
        config_path = cls.temp_dir / "config.yaml"
        config_path.write_text(CONFIG_TEMPLATE.format(log_dir=cls.temp_dir / "logs"))
        cls.runs = []
        for _ in range(2):
            out, err = io.StringIO(), io.StringIO()
            code = run(['--config', str(config_path), '--format', 'json', 'verify', 'all', '--corpus', 'default'],
                       out=out, err=err)
            cls.runs.append((code, out.getvalue(), err.getvalue()))

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.temp_dir)

    def test_full_run_agrees(self):
        code, out, err = self.runs[0]
        self.assertEqual(err, "")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['summary']['disagreements'], 0)

    def test_runs_are_byte_identical(self):
        self.assertEqual(self.runs[0][1], self.runs[1][1])

    def test_wqf_on_every_default_ring(self):
        reports = json.loads(self.runs[0][1])['reports']
        wqf = {r['ring']: r['agreement'] for r in reports if r['theorem_id'] == 'thm-wqf'}
        self.assertEqual(sorted(wqf), sorted(DEFAULT_RINGS))
        self.assertTrue(all(wqf.values()))

    def test_matrix_ring_gets_flatness_reports(self):
        reports = json.loads(self.runs[0][1])['reports']
        theorems = {r['theorem_id'] for r in reports if r['ring'] == 'm2-f2'}
        self.assertIn('thm-fp-injective', theorems)
        self.assertIn('prop-if-embedding', theorems)


if __name__ == '__main__':
    unittest.main()
