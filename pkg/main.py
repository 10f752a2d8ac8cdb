#!/usr/bin/env python3
"""
fpring-lab entry point.
"""
import sys

from cli.commands import run


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
