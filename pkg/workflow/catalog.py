#!/usr/bin/env python3
"""
Built-in catalog
Named rings and groups, theorem ids, and selector resolution (a catalog
label or a path to a ring/group file).
"""

import dataclasses
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional

from config.logging_config import get_logger
from algebra.caps import DEFAULT_CAPS
from algebra.constructors import (group_ring, matrix_ring, product_ring, ring_quotient_poly, ring_zmod,
                                  triangular_ring)
from algebra.errors import SizeOverflow
from algebra.groups import (FiniteGroup, cyclic_group, direct_product_group, symmetric_group,
                            trivial_group)
from algebra.rings import FiniteRing
from record.formats import load_group, load_ring

logger = get_logger(__name__)


class HarnessError(Exception):
    """Failure while running a theorem check, with ring/theorem context."""
    pass


class UnknownSelectorError(HarnessError):
    """A ring, group, property or theorem name that resolves to nothing."""
    pass


def _named(ring: FiniteRing, label: str) -> FiniteRing:
    return dataclasses.replace(ring, label=label)


def _field(p: int) -> FiniteRing:
    return _named(ring_zmod(p), f"f{p}")


def _group_ring(base: str, group: str) -> Callable[[], FiniteRing]:
    return lambda: group_ring(get_ring(base), get_group(group), f"{base}-{group}")


GROUPS: Dict[str, Callable[[], FiniteGroup]] = {
    'c1': trivial_group,
    'c2': lambda: cyclic_group(2),
    'c3': lambda: cyclic_group(3),
    'c4': lambda: cyclic_group(4),
    'c2xc2': lambda: direct_product_group(cyclic_group(2), cyclic_group(2), "c2xc2"),
    's3': lambda: symmetric_group(3),
}

RINGS: Dict[str, Callable[[], FiniteRing]] = {
    **{f"zmod{n}": (lambda n=n: ring_zmod(n)) for n in range(1, 13)},
    'f2': lambda: _field(2),
    'f3': lambda: _field(3),
    'f4': lambda: ring_quotient_poly(get_ring('f2'), [1, 1, 1], "f4"),
    'f2-dual': lambda: ring_quotient_poly(get_ring('f2'), [0, 0, 1], "f2-dual"),
    'zmod4-c2': _group_ring('zmod4', 'c2'),
    'tri2-f2': lambda: triangular_ring(get_ring('f2'), 2, "tri2-f2"),
    'm2-f2': lambda: matrix_ring(get_ring('f2'), 2, "m2-f2"),
    'f2xf3': lambda: product_ring(get_ring('f2'), get_ring('f3'), "f2xf3"),
    'f2-c2': _group_ring('f2', 'c2'),
    'f2-c3': _group_ring('f2', 'c3'),
    'f3-c3': _group_ring('f3', 'c3'),
    'f2-c2xc2': _group_ring('f2', 'c2xc2'),
}

DEFAULT_RINGS = ['zmod2', 'zmod3', 'zmod4', 'zmod6', 'zmod8', 'zmod9', 'zmod12', 'f4', 'f2-dual',
                 'zmod4-c2', 'tri2-f2', 'm2-f2', 'f2xf3', 'f2-c2', 'f2-c3', 'f3-c3', 'f2-c2xc2']
DEFAULT_GROUPS = ['c2', 'c3', 'c2xc2', 's3']
DEFAULT_GROUP_RING_BASES = ['f2', 'f3', 'zmod4', 'f4']
DEFAULT_LIFT_BASES = ['f2', 'f3', 'zmod4']
DEFAULT_LIFT_GROUPS = ['c1', 'c2', 'c3', 'c2xc2']

THEOREMS: Dict[str, str] = {
    'finite-collapse': "conditions every finite ring satisfies, checked as invariants",
    'group-ring': "self-injectivity, WQF, Maschke and regularity of R(G) against R and G",
    'group-ring-lift': "lifting jointly injective R-maps on an R(G)-module to an R(G)-monomorphism",
    'lemma-fp-cogenerator': "three characterizations of an FP-cogenerator agree",
    'prop-annihilators': "right self-injectivity against the annihilator identities",
    'prop-if-embedding': "left IF against embeddings into flat modules",
    'thm-fp-injective': "right FP-injectivity of R against its left-module characterizations",
    'thm-if-wqf': "WQF against two-sided IF and left FP-injective CF",
    'thm-wqf': "WQF characterizations for two-sided coherent rings",
}

# Other names accepted on the command line.
THEOREM_ALIASES: Dict[str, str] = {
    'lemma-mmm': 'group-ring-lift',
}

# Theorems run once per (ring, group) pair rather than once per ring.
GROUP_THEOREMS = ('group-ring', 'group-ring-lift')


def ring_labels() -> List[str]:
    return sorted(RINGS)


def group_labels() -> List[str]:
    return sorted(GROUPS)


@lru_cache(maxsize=None)
def get_ring(label: str) -> FiniteRing:
    """A catalog ring by label.

    Raises:
        UnknownSelectorError: If the label is not in the catalog.
    """
    if label not in RINGS:
        raise UnknownSelectorError(f"unknown ring '{label}'")
    ring = RINGS[label]()
    logger.debug(f"Built catalog ring '{label}' of size {ring.size}")
    return ring


@lru_cache(maxsize=None)
def get_group(label: str) -> FiniteGroup:
    if label not in GROUPS:
        raise UnknownSelectorError(f"unknown group '{label}'")
    return GROUPS[label]()


def resolve_ring(selector: str, max_size: Optional[int] = None) -> FiniteRing:
    """A catalog label or the path of a ring file.

    Raises:
        UnknownSelectorError: If the selector is neither.
        SizeOverflow: If the ring exceeds max_size.
    """
    if selector in RINGS:
        ring = get_ring(selector)
    elif Path(selector).is_file():
        ring = load_ring(selector)
    else:
        raise UnknownSelectorError(f"'{selector}' is neither a catalog ring nor a ring file")
    cap = max_size or DEFAULT_CAPS.max_ring
    if ring.size > cap:
        raise SizeOverflow(f"ring '{ring.label}'", ring.size, cap)
    return ring


def resolve_group(selector: str) -> FiniteGroup:
    if selector in GROUPS:
        return get_group(selector)
    if Path(selector).is_file():
        return load_group(selector)
    raise UnknownSelectorError(f"'{selector}' is neither a catalog group nor a group file")


def check_theorem_id(theorem_id: str) -> str:
    """The registered id for a theorem id or alias."""
    theorem_id = THEOREM_ALIASES.get(theorem_id, theorem_id)
    if theorem_id not in THEOREMS:
        raise UnknownSelectorError(f"unknown theorem '{theorem_id}'")
    return theorem_id
