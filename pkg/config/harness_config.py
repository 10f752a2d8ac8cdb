#!/usr/bin/env python3
"""
Harness Configuration
Section accessor for the ``harness:`` block: corpus selection, seed and
corpus-generation limits.
"""

from typing import Any, Dict, List, Optional

from workflow.catalog import (DEFAULT_GROUP_RING_BASES, DEFAULT_GROUPS, DEFAULT_LIFT_BASES, DEFAULT_LIFT_GROUPS,
                              DEFAULT_RINGS, THEOREMS)
from workflow.corpus import CorpusSettings
from workflow.runner import SelectorDefaults
from .logging_config import get_logger

logger = get_logger(__name__)


class HarnessConfig:
    """Manages harness settings."""

    def __init__(self, config_data: Dict[str, Any]):
        """
        Initialize harness configuration.

        Args:
            config_data: Configuration dictionary containing a harness section
        """
        self._config = config_data.get('harness', {}) or {}
        logger.debug("HarnessConfig initialized")

    def _int(self, key: str, default: int) -> int:
        value = int(self._config.get(key, default))
        if value < 0:
            raise ValueError(f"harness.{key} must be non-negative, got {value}")
        return value

    @property
    def seed(self) -> int:
        return self._int('seed', 0)

    @property
    def jobs(self) -> int:
        """Worker processes for the harness (at least 1)."""
        return max(1, self._int('jobs', 1))

    @property
    def rings(self) -> List[str]:
        return list(self._config.get('rings', DEFAULT_RINGS))

    @property
    def groups(self) -> List[str]:
        return list(self._config.get('groups', DEFAULT_GROUPS))

    @property
    def group_ring_bases(self) -> List[str]:
        return list(self._config.get('group_ring_bases', DEFAULT_GROUP_RING_BASES))

    @property
    def lift_bases(self) -> List[str]:
        return list(self._config.get('lift_bases', DEFAULT_LIFT_BASES))

    @property
    def lift_groups(self) -> List[str]:
        return list(self._config.get('lift_groups', DEFAULT_LIFT_GROUPS))

    @property
    def theorems(self) -> List[str]:
        return list(self._config.get('theorems', sorted(THEOREMS)))

    def corpus_settings(self, seed: Optional[int] = None) -> CorpusSettings:
        """Corpus knobs, with an optional seed override."""
        return CorpusSettings(seed=self.seed if seed is None else seed,
                              random_modules=self._int('random_modules', 6),
                              max_gens=max(1, self._int('max_gens', 2)),
                              max_relations=self._int('max_relations', 2),
                              max_monos=self._int('max_monos', 40))

    def selector_defaults(self) -> SelectorDefaults:
        """Rings and groups used when a run names none."""
        return SelectorDefaults(tuple(self.rings), tuple(self.groups), tuple(self.group_ring_bases),
                                tuple(self.lift_bases), tuple(self.lift_groups))
