"""
Argument parser for the fpring-lab command line.
"""

import argparse

from record.reports import FORMATS


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpring-lab",
        description="Exact checks of FP-injectivity and WQF properties on finite rings",
    )
    parser.add_argument('--config', metavar='PATH', help='YAML config file (default: config/config.yaml)')
    parser.add_argument('--max-ring', type=_positive, help='largest ring size accepted')
    parser.add_argument('--max-module', type=_positive, help='largest module size realized')
    parser.add_argument('--kmax', type=_positive, help='largest free rank tried for embeddings')
    parser.add_argument('--format', choices=FORMATS, dest='output_format', help='output format')
    parser.add_argument('--seed', type=_non_negative, help='seed for random module presentations')
    parser.add_argument('--jobs', type=_positive, help='worker processes for verify')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='file logging level')

    sub = parser.add_subparsers(dest='command', required=True)

    p_list = sub.add_parser('list', help='list built-in rings, groups, properties and theorems')
    p_list.add_argument('--filter', default='', help='only show names containing TEXT')

    p_check = sub.add_parser('check', help='evaluate one property on one ring')
    p_check.add_argument('property', help='property name (see list)')
    p_check.add_argument('ring', help='catalog label or ring file')
    p_check.add_argument('--module', metavar='FILE', help='module file, for module properties')

    p_verify = sub.add_parser('verify', help='run a theorem suite')
    p_verify.add_argument('theorem', help="theorem id (see list) or 'all'")
    p_verify.add_argument('--corpus', choices=['default'], default='default', help='built-in corpus')
    p_verify.add_argument('--ring', action='append', dest='rings', metavar='SEL',
                          help='ring selector (repeatable); replaces the corpus rings')
    p_verify.add_argument('--group', action='append', dest='groups', metavar='SEL',
                          help='group selector (repeatable); replaces the corpus groups')
    p_verify.add_argument('--out', metavar='PATH', help='also write the report to PATH')

    p_group = sub.add_parser('groupring', help='write the group ring R(G) as a ring file')
    p_group.add_argument('ring', help='catalog label or ring file')
    p_group.add_argument('group', help='catalog label or group file')
    p_group.add_argument('out', help='output path')
    return parser
