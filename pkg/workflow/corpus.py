#!/usr/bin/env python3
"""
Module corpus
Per-ring test modules (cyclic quotients and seeded random presentations,
deduplicated up to isomorphism) and test monomorphisms (every ideal
inclusion, then cyclic-submodule inclusions).
"""

import zlib
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from algebra.caps import Caps, DEFAULT_CAPS
from algebra.errors import SizeOverflow
from algebra.modules import (SIDES, FModule, ModuleHom, Submodule, cyclic_submodules, find_module_isomorphism,
                             present_module, submodule_module)
from algebra.properties import cyclic_quotients, ideal_lattice
from algebra.rings import FiniteRing

logger = get_logger(__name__)


@dataclass(frozen=True)
class CorpusSettings:
    """Knobs of corpus generation."""
    seed: int = 0
    random_modules: int = 6
    max_gens: int = 2
    max_relations: int = 2
    max_monos: int = 40


@dataclass
class RingCorpus:
    """Test modules and monos of one ring, keyed by side."""
    ring: FiniteRing
    caps: Caps
    modules: Dict[str, List[FModule]] = field(default_factory=dict)
    cyclic: Dict[str, List[Tuple[Submodule, FModule]]] = field(default_factory=dict)
    monos: Dict[str, List[ModuleHom]] = field(default_factory=dict)

    def side_modules(self, side: str) -> List[FModule]:
        return self.modules.get(side, [])

    def side_monos(self, side: str) -> List[ModuleHom]:
        return self.monos.get(side, [])

    def all_modules(self) -> List[FModule]:
        return [m for side in SIDES for m in self.side_modules(side)]


def module_rng(seed: int, ring: FiniteRing, side: str) -> np.random.Generator:
    """Generator seeded by the run seed and the ring label, independent of run order."""
    return np.random.default_rng([seed, zlib.crc32(f"{ring.label}:{side}".encode())])


def random_presentations(ring: FiniteRing, side: str, settings: CorpusSettings,
                         caps: Caps = DEFAULT_CAPS) -> List[FModule]:
    """Seeded presentations with at most max_gens generators and max_relations relations."""
    rng = module_rng(settings.seed, ring, side)
    modules = []
    for t in range(settings.random_modules):
        m = int(rng.integers(1, settings.max_gens + 1))
        while m > 1 and ring.size ** m > caps.max_module:
            m -= 1
        count = int(rng.integers(0, settings.max_relations + 1))
        relations = [tuple(int(v) for v in rng.integers(0, ring.size, size=m)) for _ in range(count)]
        label = f"{ring.label}^{m}/p{t}" if side == 'left' else f"{ring.label}^{m}/p{t}_R"
        try:
            modules.append(present_module(ring, side, m, relations, caps, label))
        except SizeOverflow as e:
            logger.warning(f"Skipping random presentation {label}: {e}")
    return modules


def _isomorphic_to_any(module: FModule, kept: Sequence[FModule], caps: Caps) -> bool:
    for other in kept:
        if other.size != module.size:
            continue
        try:
            if find_module_isomorphism(module, other, caps) is not None:
                return True
        except SizeOverflow:
            continue
    return False


def deduplicate(modules: Sequence[FModule], caps: Caps = DEFAULT_CAPS) -> List[FModule]:
    """Keep the first module of each isomorphism class, in input order."""
    kept: List[FModule] = []
    for module in modules:
        if not _isomorphic_to_any(module, kept, caps):
            kept.append(module)
    return kept


def build_monos(ring: FiniteRing, side: str, modules: Sequence[FModule], max_monos: int,
                caps: Caps = DEFAULT_CAPS) -> List[ModuleHom]:
    """Every ideal inclusion I -> R, then cyclic-submodule inclusions up to max_monos.

    The ideal inclusions make the fp-injective and fp-flat tests exact
    (Baer's criterion and the ideal test for flatness).
    """
    monos = []
    for ideal in ideal_lattice(ring, side, caps):
        _, inclusion = submodule_module(ideal, caps)
        monos.append(inclusion)
    for module in modules:
        for sub in cyclic_submodules(module):
            if len(monos) >= max_monos:
                break
            if sub.is_zero() or sub.is_whole():
                continue
            _, inclusion = submodule_module(sub, caps)
            monos.append(inclusion)
    for mono in monos:
        if not mono.verify().is_injective():
            raise ValueError(f"corpus map {mono!r} is not injective")
    return monos


def build_ring_corpus(ring: FiniteRing, settings: Optional[CorpusSettings] = None,
                      caps: Caps = DEFAULT_CAPS) -> RingCorpus:
    """Cyclic modules R/I on both sides plus random presentations, with test monos."""
    settings = settings or CorpusSettings()
    corpus = RingCorpus(ring, caps)
    for side in SIDES:
        cyclic = cyclic_quotients(ring, side, caps)
        corpus.cyclic[side] = cyclic
        candidates = [m for _, m in cyclic] + random_presentations(ring, side, settings, caps)
        corpus.modules[side] = deduplicate(candidates, caps)
        corpus.monos[side] = build_monos(ring, side, corpus.modules[side], settings.max_monos, caps)
        logger.info(f"Corpus for '{ring.label}' ({side}): {len(corpus.modules[side])} modules, "
                    f"{len(corpus.monos[side])} monos")
    return corpus


class Corpus:
    """Rings and groups of a harness run, with per-ring module corpora built on demand."""

    def __init__(self, rings: Sequence[FiniteRing], groups: Sequence = (),
                 settings: Optional[CorpusSettings] = None, caps: Caps = DEFAULT_CAPS):
        self.rings = list(rings)
        self.groups = list(groups)
        self.settings = settings or CorpusSettings()
        self.caps = caps
        self._by_ring: Dict[int, RingCorpus] = {}

    def for_ring(self, ring: FiniteRing) -> RingCorpus:
        key = id(ring)
        if key not in self._by_ring:
            self._by_ring[key] = build_ring_corpus(ring, self.settings, self.caps)
        return self._by_ring[key]

    def __len__(self) -> int:
        return len(self.rings)
