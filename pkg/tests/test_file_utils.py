#!/usr/bin/env python3
"""
Test script for the file utility helpers.
"""

import shutil
import sys
import tempfile
import unittest
from pathlib import Path

# Add project root to Python path
project_root = str(Path(__file__).resolve().parent.parent)
if project_root not in sys.path:
    sys.path.append(project_root)

from utils.file_utils import FileUtils


class TestFileUtils(unittest.TestCase):
    """Test cases for FileUtils."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = Path(tempfile.mkdtemp())

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def test_format_file_size(self):
        self.assertEqual(FileUtils.format_file_size(0), "0 B")
        self.assertEqual(FileUtils.format_file_size(512), "512.0 B")
        self.assertEqual(FileUtils.format_file_size(1024), "1.0 KB")
        self.assertEqual(FileUtils.format_file_size(1536 * 1024), "1.5 MB")

    def test_write_text_creates_parents(self):
        path = FileUtils.write_text(self.temp_dir / "a" / "b" / "out.txt", "ring f2 2\n")
        self.assertTrue(path.is_file())
        self.assertEqual(path.read_text(), "ring f2 2\n")

    def test_ensure_directory(self):
        directory = FileUtils.ensure_directory(self.temp_dir / "x" / "y")
        self.assertTrue(directory.is_dir())
        FileUtils.ensure_directory(directory)

    def test_safe_read_text(self):
        path = self.temp_dir / "m.txt"
        path.write_text("module left zmod4 gens 1\n")
        self.assertEqual(FileUtils.safe_read_text(path), (True, "module left zmod4 gens 1\n"))
        ok, message = FileUtils.safe_read_text(self.temp_dir / "missing.txt")
        self.assertFalse(ok)
        self.assertTrue(message.startswith("File not found"))

    def test_safe_read_directory(self):
        ok, _ = FileUtils.safe_read_text(self.temp_dir)
        self.assertFalse(ok)


if __name__ == '__main__':
    unittest.main()
