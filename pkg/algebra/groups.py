"""
Finite groups given by composition tables, the standard constructors used by
the group-ring corpus, and subgroup enumeration.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional

import numpy as np

from config.logging_config import get_logger
from .errors import AxiomViolation
from .tables import (INDEX_DTYPE, as_index_table, first_index, freeze, magma_closure,
                     mask_key, scan_associative)

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group; elements are the indices 0..size-1."""
    size: int
    op: np.ndarray
    identity: int
    inv: np.ndarray
    label: str = ""

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def power(self, a: int, k: int) -> int:
        result = self.identity
        for _ in range(k % self.element_order(a)):
            result = int(self.op[result, a])
        return result

    def element_order(self, a: int) -> int:
        order, x = 1, int(a)
        while x != self.identity:
            x = int(self.op[x, a])
            order += 1
        return order

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, size={self.size})"


def make_group_from_table(op, identity: int, label: str = "") -> FiniteGroup:
    """Validate a composition table and build a FiniteGroup.

    Args:
        op: n x n table with entries in [0, n).
        identity: Index of the identity element.
        label: Display name.

    Returns:
        The validated group, with its inverse table computed.

    Raises:
        AxiomViolation: On the first failing axiom, with a witness tuple.
    """
    raw = np.asarray(op)
    n = raw.shape[0] if raw.ndim == 2 else 0
    if n == 0:
        raise AxiomViolation('shape', raw.shape, label)
    table = as_index_table(raw, n, n)

    out_of_range = np.argwhere((table < 0) | (table >= n))
    if out_of_range.size:
        raise AxiomViolation('closure', tuple(out_of_range[0]), label)
    if not 0 <= identity < n:
        raise AxiomViolation('identity', (identity,), label)

    bad = first_index((table[identity, :] != np.arange(n)) | (table[:, identity] != np.arange(n)))
    if bad is not None:
        raise AxiomViolation('identity', (bad,), label)

    is_id = table == identity
    has_inverse = np.any(is_id & is_id.T, axis=1)
    bad = first_index(~has_inverse)
    if bad is not None:
        raise AxiomViolation('inverse', (bad,), label)
    inv = np.argmax(is_id & is_id.T, axis=1).astype(INDEX_DTYPE)

    witness = scan_associative(table)
    if witness is not None:
        raise AxiomViolation('associativity', witness, label)

    logger.debug(f"Validated group '{label}' of order {n}")
    return FiniteGroup(n, freeze(table), int(identity), freeze(inv), label)


def trivial_group() -> FiniteGroup:
    return make_group_from_table([[0]], 0, "c1")


def cyclic_group(n: int) -> FiniteGroup:
    """The cyclic group of order n, element k standing for g^k."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    return make_group_from_table((idx[:, None] + idx[None, :]) % n, 0, f"c{n}")


def direct_product_group(first: FiniteGroup, second: FiniteGroup, label: Optional[str] = None) -> FiniteGroup:
    """G x H with (g, h) stored at index g + |G|*h."""
    g = np.arange(first.size * second.size) % first.size
    h = np.arange(first.size * second.size) // first.size
    op = first.op[g[:, None], g[None, :]] + first.size * second.op[h[:, None], h[None, :]]
    name = label or f"{first.label}x{second.label}"
    return make_group_from_table(op, first.identity + first.size * second.identity, name)


def symmetric_group(k: int) -> FiniteGroup:
    """Permutations of k points in lexicographic order; (a*b)(i) = a(b(i))."""
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    op = [[index[tuple(a[b[i]] for i in range(k))] for b in perms] for a in perms]
    return make_group_from_table(op, 0, f"s{k}")


def subgroups(group: FiniteGroup) -> List[np.ndarray]:
    """All subgroups as sorted index arrays, ordered by (order, elements).

    The lattice is built from the cyclic subgroups by closing under joins.
    """
    found = {}
    worklist = []
    for a in range(group.size):
        mask = magma_closure(group.op, [group.identity, a])
        key = mask_key(mask)
        if key not in found:
            found[key] = mask
            worklist.append(mask)
    while worklist:
        mask = worklist.pop()
        for other in list(found.values()):
            joined = magma_closure(group.op, np.flatnonzero(mask | other))
            key = mask_key(joined)
            if key not in found:
                found[key] = joined
                worklist.append(joined)
    result = [np.flatnonzero(m) for m in found.values()]
    result.sort(key=lambda s: (s.size, tuple(s)))
    logger.debug(f"Group '{group.label}' has {len(result)} subgroups")
    return result


def subgroup_orders(group: FiniteGroup) -> List[int]:
    return sorted({int(s.size) for s in subgroups(group)})
