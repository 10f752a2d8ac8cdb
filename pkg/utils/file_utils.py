#!/usr/bin/env python3
"""
File Utilities for fpring-lab

Filesystem helpers for report and ring files.
"""

from pathlib import Path
from typing import Tuple, Union

from config.logging_config import get_logger

logger = get_logger(__name__)


class FileUtils:
    """Utility class for common file operations."""

    @staticmethod
    def format_file_size(size_bytes: int) -> str:
        """
        Format file size in human readable format.

        Args:
            size_bytes: File size in bytes

        Returns:
            Formatted size string (e.g., "1.5 MB", "256 KB")
        """
        if size_bytes == 0:
            return "0 B"

        size_names = ["B", "KB", "MB", "GB", "TB"]
        i = 0
        while size_bytes >= 1024 and i < len(size_names) - 1:
            size_bytes /= 1024.0
            i += 1

        return f"{size_bytes:.1f} {size_names[i]}"

    @staticmethod
    def ensure_directory(directory: Path) -> Path:
        """
        Ensure a directory exists, creating it if necessary.

        Args:
            directory: Directory path to ensure

        Returns:
            Path to the directory
        """
        directory.mkdir(parents=True, exist_ok=True)
        return directory

    @staticmethod
    def write_text(path: Union[str, Path], text: str) -> Path:
        """
        Write text to a file, creating parent directories.

        Args:
            path: Destination file
            text: Content to write

        Returns:
            Path of the written file

        Raises:
            OSError: If the file cannot be written.
        """
        path = Path(path)
        FileUtils.ensure_directory(path.parent)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f"Wrote {path} ({FileUtils.format_file_size(path.stat().st_size)})")
        return path

    @staticmethod
    def safe_read_text(path: Union[str, Path]) -> Tuple[bool, str]:
        """
        Read a text file with error handling.

        Returns:
            Tuple of (success, content or error message)
        """
        path = Path(path)
        try:
            if not path.is_file():
                return False, f"File not found: {path}"
            with open(path, encoding='utf-8') as f:
                return True, f.read()
        except PermissionError:
            return False, f"Permission denied: {path}"
        except OSError as e:
            return False, f"Error reading file: {e}"
