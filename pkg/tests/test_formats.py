#!/usr/bin/env python3
"""
Tests for the ring, group and module file formats.
"""

import shutil
import sys
import tempfile
import unittest
from pathlib import Path

import numpy as np

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from algebra.errors import AxiomViolation
from algebra.modules import LEFT
from record.formats import (ParseError, load_group, load_module, load_ring, parse_group, parse_module,
                            parse_ring, serialize_group, serialize_module, serialize_ring)
from workflow.catalog import get_group, get_ring

F2_TEXT = """# the field with two elements
ring f2 2
zero 0
one 1
add
0 1
1 0
mul
0 0
0 1
"""

F2_PLAIN = """# F2
n 2
zero 0
one 1
0 1
1 0
0 0
0 1
"""

C2_PLAIN = """n 2
id 0
0 1
1 0
"""


class TestRingFiles(unittest.TestCase):
    """Ring file parsing and serialization."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def test_parse_with_comments(self):
        ring = parse_ring(F2_TEXT)
        self.assertEqual((ring.label, ring.size, ring.zero, ring.one), ('f2', 2, 0, 1))

    def test_plain_format(self):
        ring = parse_ring(F2_PLAIN, label='f2')
        self.assertEqual((ring.label, ring.size, ring.zero, ring.one), ('f2', 2, 0, 1))
        self.assertEqual(ring.mul.tolist(), [[0, 0], [0, 1]])

    def test_plain_format_with_other_indexing(self):
        # zero stored at index 1
        text = "n 2\nzero 1\none 0\n1 0\n0 1\n0 1\n1 1\n"
        ring = parse_ring(text)
        self.assertEqual((ring.zero, ring.one), (1, 0))

    def test_serialization_writes_plain_format(self):
        text = serialize_ring(get_ring('f2'))
        self.assertEqual(text, "n 2\nzero 0\none 1\n0 1\n1 0\n0 0\n0 1\n")

    def test_catalog_ring_survives_serialization(self):
        for label in ['tri2-f2', 'f4', 'zmod4-c2']:
            with self.subTest(ring=label):
                ring = get_ring(label)
                parsed = parse_ring(serialize_ring(ring), label=label)
                self.assertEqual(parsed.label, label)
                self.assertTrue(np.array_equal(parsed.add, ring.add))
                self.assertTrue(np.array_equal(parsed.mul, ring.mul))

    def test_load_ring(self):
        path = self.temp_dir / "f2.ring"
        path.write_text(F2_TEXT)
        self.assertEqual(load_ring(path).size, 2)

    def test_load_plain_ring_takes_file_stem(self):
        path = self.temp_dir / "two.ring"
        path.write_text(F2_PLAIN)
        self.assertEqual(load_ring(path).label, 'two')

    def test_plain_short_table(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring("n 2\nzero 0\none 1\n0 1\n1 0\n0 0\n")
        self.assertIn("unexpected end of file", str(ctx.exception))

    def test_unknown_header(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring("size 2\n")
        self.assertEqual(ctx.exception.line_number, 1)

    def test_short_row_reports_line(self):
        text = F2_TEXT.replace("1 0\nmul", "1\nmul")
        with self.assertRaises(ParseError) as ctx:
            parse_ring(text)
        self.assertEqual(ctx.exception.line_number, 7)

    def test_out_of_range_entry(self):
        with self.assertRaises(ParseError):
            parse_ring(F2_TEXT.replace("0 1\n1 0", "0 1\n1 2", 1))

    def test_truncated_file(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ring("ring f2 2\nzero 0\n")
        self.assertIn("unexpected end of file", str(ctx.exception))

    def test_trailing_content(self):
        with self.assertRaises(ParseError):
            parse_ring(F2_TEXT + "extra\n")

    def test_non_integer(self):
        with self.assertRaises(ParseError):
            parse_ring(F2_TEXT.replace("zero 0", "zero x"))

    def test_valid_syntax_invalid_ring(self):
        # multiplication without an identity
        text = F2_TEXT.replace("mul\n0 0\n0 1", "mul\n0 0\n0 0")
        with self.assertRaises(AxiomViolation):
            parse_ring(text)


class TestGroupAndModuleFiles(unittest.TestCase):
    """Group and module files."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def test_group_serialization(self):
        group = get_group('s3')
        parsed = parse_group(serialize_group(group))
        self.assertEqual(parsed.size, 6)
        self.assertTrue(np.array_equal(parsed.op, group.op))

    def test_plain_group(self):
        group = parse_group(C2_PLAIN, label='c2')
        self.assertEqual((group.label, group.size, group.identity), ('c2', 2, 0))
        self.assertEqual(serialize_group(group), C2_PLAIN)

    def test_plain_group_file(self):
        path = self.temp_dir / "c2.group"
        path.write_text(C2_PLAIN)
        self.assertEqual(load_group(path).label, 'c2')
        with self.assertRaises(ParseError):
            parse_group("n 2\nidentity 0\n0 1\n1 0\n")

    def test_load_group(self):
        path = self.temp_dir / "c2.group"
        path.write_text("group c2 2\nidentity 0\nop\n0 1\n1 0\n")
        self.assertEqual(load_group(path).label, 'c2')

    def test_parse_module(self):
        spec = parse_module("module left zmod4 gens 2\n2 0\n0 2  # torsion\n")
        self.assertEqual((spec.side, spec.ring_label, spec.gens), (LEFT, 'zmod4', 2))
        self.assertEqual(spec.relations, [(2, 0), (0, 2)])
        module = spec.build(get_ring('zmod4'))
        self.assertEqual(module.size, 4)

    def test_module_serialization(self):
        module = parse_module("module right f2-dual gens 1\n2\n").build(get_ring('f2-dual'))
        spec = parse_module(serialize_module(module))
        self.assertEqual(spec.side, 'right')
        self.assertEqual(spec.build(get_ring('f2-dual')).size, 2)

    def test_load_module(self):
        path = self.temp_dir / "m.txt"
        path.write_text("module left zmod4 gens 1\n2\n")
        self.assertEqual(load_module(path).build(get_ring('zmod4')).size, 2)

    def test_module_errors(self):
        with self.assertRaises(ParseError):
            parse_module("module middle zmod4 gens 1\n")
        with self.assertRaises(ParseError):
            parse_module("module left zmod4 gens 2\n1\n")
        with self.assertRaises(ParseError):
            parse_module("module left zmod4 2\n")

    def test_module_over_wrong_ring(self):
        spec = parse_module("module left zmod4 gens 1\n2\n")
        with self.assertRaises(ParseError):
            spec.build(get_ring('zmod8'))
        spec = parse_module("module left zmod4 gens 1\n9\n")
        with self.assertRaises(ParseError):
            spec.build(get_ring('zmod4'))


if __name__ == '__main__':
    unittest.main()
