"""
Resolved settings of one CLI invocation: flags over environment over the
config file over built-in defaults.
"""

import argparse
import builtins
from dataclasses import dataclass
from typing import List, Optional

from algebra.caps import Caps
from config.config_manager import ConfigManager
from config.harness_config import HarnessConfig
from record.reports import FORMATS
from workflow.corpus import CorpusSettings


@dataclass
class CliConfig:
    """Everything a command needs, with caps validated on construction."""
    command: str
    caps: Caps
    output_format: str
    seed: int
    jobs: int
    harness: HarnessConfig
    log_dir: str = 'logs'
    log_level: str = 'INFO'
    property: Optional[str] = None
    theorem: Optional[str] = None
    ring: Optional[str] = None
    group: Optional[str] = None
    module: Optional[str] = None
    rings: Optional[List[str]] = None
    groups: Optional[List[str]] = None
    out: Optional[str] = None
    filter: str = ''

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown output format '{self.output_format}', expected one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")

    @builtins.property
    def corpus_settings(self) -> CorpusSettings:
        return self.harness.corpus_settings(self.seed)

    @classmethod
    def from_args(cls, args: argparse.Namespace, manager: Optional[ConfigManager] = None) -> 'CliConfig':
        manager = manager or ConfigManager(args.config)
        harness = manager.harness
        caps = manager.caps.with_overrides(max_ring=args.max_ring, max_module=args.max_module, kmax=args.kmax)
        return cls(
            command=args.command,
            caps=caps,
            output_format=args.output_format or manager.output_format,
            seed=harness.seed if args.seed is None else args.seed,
            jobs=args.jobs or harness.jobs,
            harness=harness,
            log_dir=manager.log_dir,
            log_level=args.log_level or manager.log_level,
            property=getattr(args, 'property', None),
            theorem=getattr(args, 'theorem', None),
            ring=getattr(args, 'ring', None),
            group=getattr(args, 'group', None),
            module=getattr(args, 'module', None),
            rings=getattr(args, 'rings', None),
            groups=getattr(args, 'groups', None),
            out=getattr(args, 'out', None),
            filter=getattr(args, 'filter', '') or '',
        )
