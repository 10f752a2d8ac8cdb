#!/usr/bin/env python3
"""
CLI commands
list, check, verify and groupring. Each returns the process exit code:
0 when the property holds or every report agrees, 1 when it fails or a
report disagrees, 2 on errors (bad selectors, parse errors, caps exceeded).
"""

import sys
from typing import Callable, Dict, List, Optional, TextIO

import numpy as np

from config.logging_config import get_logger, setup_logging
from algebra.constructors import group_ring
from algebra.errors import AlgebraError, InvariantViolation
from algebra.homological import find_embedding_into_free, is_reflexive, is_semireflexive
from algebra.modules import LEFT, RIGHT, FModule
from algebra.properties import PROPERTIES, PropertyVerdict, evaluate_property
from config.config_manager import ConfigError
from record.formats import ParseError, parse_module, parse_ring, serialize_ring
from record.reports import render_reports, render_verdict
from utils.file_utils import FileUtils
from workflow.catalog import (THEOREM_ALIASES, THEOREMS, HarnessError, UnknownSelectorError, group_labels, ring_labels,
                              resolve_group, resolve_ring)
from workflow.corpus import build_ring_corpus
from workflow.runner import all_agree, run_corpus
from .config import CliConfig
from .parser import build_parser

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def _semireflexive(module: FModule, cfg: CliConfig) -> PropertyVerdict:
    value = is_semireflexive(module, cfg.caps)
    return PropertyVerdict('semireflexive', module.side, value,
                           None if value else f"evaluation map of {module.label} is not injective")


def _reflexive(module: FModule, cfg: CliConfig) -> PropertyVerdict:
    value = is_reflexive(module, cfg.caps)
    return PropertyVerdict('reflexive', module.side, value,
                           None if value else f"evaluation map of {module.label} is not bijective")


def _embeds_in_free(module: FModule, cfg: CliConfig) -> PropertyVerdict:
    hom = find_embedding_into_free(module, cfg.caps.kmax, cfg.caps)
    if hom is None:
        return PropertyVerdict('embeds-in-free', module.side, False,
                               f"{module.label} embeds in no R^k with k <= {cfg.caps.kmax}")
    return PropertyVerdict('embeds-in-free', module.side, True, note=f"embeds in {hom.target.label}")


MODULE_PROPERTIES: Dict[str, Callable[[FModule, CliConfig], PropertyVerdict]] = {
    'embeds-in-free': _embeds_in_free,
    'reflexive': _reflexive,
    'semireflexive': _semireflexive,
}


def cmd_list(cfg: CliConfig, out: TextIO = sys.stdout) -> int:
    """Built-in rings, groups, properties and theorem ids, sorted within each section."""
    def keep(name: str) -> bool:
        return cfg.filter in name

    sections = [
        ('rings', [(n, "") for n in ring_labels()]),
        ('groups', [(n, "") for n in group_labels()]),
        ('properties', [(n, e.description) for n, e in sorted(PROPERTIES.items())]
         + [(n, "module property, needs --module") for n in sorted(MODULE_PROPERTIES)]),
        ('theorems', sorted(THEOREMS.items()) + [(a, f"alias of {t}") for a, t in sorted(THEOREM_ALIASES.items())]),
    ]
    for title, items in sections:
        shown = [(n, d) for n, d in items if keep(n)]
        if not shown:
            continue
        out.write(f"{title}:\n")
        for name, description in shown:
            out.write(f"  {name:<28} {description}".rstrip() + "\n")
    return EXIT_OK


def _read_module(cfg: CliConfig, ring) -> FModule:
    ok, content = FileUtils.safe_read_text(cfg.module)
    if not ok:
        raise FileNotFoundError(content)
    return parse_module(content).build(ring, cfg.caps, label=f"M({ring.label})")


def cmd_check(cfg: CliConfig, out: TextIO = sys.stdout) -> int:
    name = cfg.property
    if name not in PROPERTIES and name not in MODULE_PROPERTIES:
        raise UnknownSelectorError(f"unknown property '{name}'")
    ring = resolve_ring(cfg.ring, cfg.caps.max_ring)
    if name in MODULE_PROPERTIES:
        if not cfg.module:
            raise UnknownSelectorError(f"property '{name}' needs --module FILE")
        verdict = MODULE_PROPERTIES[name](_read_module(cfg, ring), cfg)
    else:
        modules: List[FModule] = []
        if PROPERTIES[name].needs_corpus:
            side = RIGHT if name.endswith('-right') else LEFT
            modules = build_ring_corpus(ring, cfg.corpus_settings, cfg.caps).side_modules(side)
        verdict = evaluate_property(name, ring, cfg.caps, modules)
    logger.info(f"check {name} on '{ring.label}': {verdict.value}")
    out.write(render_verdict(verdict, ring.label, cfg.output_format))
    return EXIT_OK if verdict.value else EXIT_FAIL


def cmd_verify(cfg: CliConfig, out: TextIO = sys.stdout) -> int:
    theorem_ids = cfg.harness.theorems if cfg.theorem == 'all' else [cfg.theorem]
    reports = run_corpus(theorem_ids, cfg.rings, cfg.groups, cfg.corpus_settings, cfg.caps, cfg.jobs,
                         cfg.harness.selector_defaults())
    text = render_reports(reports, cfg.output_format)
    out.write(text)
    if cfg.out:
        FileUtils.write_text(cfg.out, text)
    return EXIT_OK if all_agree(reports) else EXIT_FAIL


def cmd_groupring(cfg: CliConfig, out: TextIO = sys.stdout) -> int:
    """Build R(G), check it survives a serialize/parse round trip, and write it."""
    base, group = resolve_ring(cfg.ring, cfg.caps.max_ring), resolve_group(cfg.group)
    ring = group_ring(base, group, f"{base.label}-{group.label}", max_size=cfg.caps.max_ring, caps=cfg.caps)
    text = serialize_ring(ring)
    parsed = parse_ring(text)
    if not (np.array_equal(parsed.add, ring.add) and np.array_equal(parsed.mul, ring.mul)):
        raise InvariantViolation(f"ring file for '{ring.label}' does not round-trip")
    path = FileUtils.write_text(cfg.out, text)
    out.write(f"wrote {ring.label} ({ring.size} elements) to {path}\n")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    'check': cmd_check,
    'groupring': cmd_groupring,
    'list': cmd_list,
    'verify': cmd_verify,
}

HANDLED = (AlgebraError, ParseError, HarnessError, ConfigError, OSError, ValueError)


def dispatch(cfg: CliConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Run a command, mapping handled failures to exit code 2."""
    try:
        return COMMANDS[cfg.command](cfg, out)
    except HANDLED as e:
        logger.error(f"Command '{cfg.command}' failed: {e}", exc_info=True)
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_ERROR


def run(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Parse arguments, configure logging and dispatch."""
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig.from_args(args)
    except (ConfigError, OSError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_ERROR
    setup_logging(cfg.log_dir, level=cfg.log_level)
    return dispatch(cfg, out, err)
