"""
Low-level helpers over operation tables.

Element sets are numpy boolean masks, operation tables are read-only
``int32`` arrays indexed ``table[a, b]``.  Free modules ``R^m`` are handled
through integer codes (little-endian digits base ``|R|``) so that no
``|R|^m x |R|^m`` table is ever materialized.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

INDEX_DTYPE = np.int32
CODE_DTYPE = np.int64

# Element budget for one vectorized block of a cubic table scan.
SCAN_BLOCK = 1 << 22


def freeze(array: np.ndarray) -> np.ndarray:
    """Mark an array read-only and return it."""
    array.setflags(write=False)
    return array


def as_index_table(data, rows: int, cols: int) -> np.ndarray:
    """Copy table data into a fresh ``int32`` array of the given shape.

    Raises:
        ValueError: If the data does not have shape (rows, cols).
    """
    table = np.array(data, dtype=np.int64)
    if table.shape != (rows, cols):
        raise ValueError(f"expected a {rows}x{cols} table, got shape {table.shape}")
    return table.astype(INDEX_DTYPE)


def mask_of(size: int, indices: Iterable[int]) -> np.ndarray:
    mask = np.zeros(size, dtype=bool)
    idx = np.fromiter((int(i) for i in indices), dtype=np.int64)
    if idx.size:
        mask[idx] = True
    return mask


def mask_key(mask: np.ndarray) -> bytes:
    """Hashable key of a boolean mask."""
    return np.packbits(mask).tobytes()


def first_index(mask: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[Tuple[int, ...]]:
    """Index tuple of the first position where two arrays differ, in C order."""
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def cyclic_multiples(add: np.ndarray, zero: int, x: int) -> List[int]:
    """The additive cyclic group generated by x, in order 0, x, 2x, ..."""
    out = [zero]
    y = int(x)
    while y != zero:
        out.append(y)
        y = int(add[y, x])
    return out


def additive_span(add: np.ndarray, zero: int, seeds: Iterable[int]) -> np.ndarray:
    """Mask of the additive subgroup generated by the seeds.

    ``add`` must already be a verified abelian group table.
    """
    members = np.zeros(add.shape[0], dtype=bool)
    members[zero] = True
    current = np.array([zero], dtype=np.int64)
    for s in np.unique(np.fromiter((int(v) for v in seeds), dtype=np.int64)):
        if members[s]:
            continue
        multiples = np.array(cyclic_multiples(add, zero, int(s)), dtype=np.int64)
        current = np.unique(add[np.ix_(current, multiples)])
        members[current] = True
    return members


def magma_closure(table: np.ndarray, seeds: Iterable[int]) -> np.ndarray:
    """Mask of the closure of the seeds under a binary operation (no axioms assumed)."""
    members = mask_of(table.shape[0], seeds)
    while True:
        idx = np.flatnonzero(members)
        grown = members.copy()
        grown[np.unique(table[np.ix_(idx, idx)])] = True
        if grown.sum() == members.sum():
            return members
        members = grown


def magma_generators(table: np.ndarray, start: Sequence[int] = ()) -> List[int]:
    """Greedy generating set: repeatedly add the least element outside the closure."""
    gens = [int(s) for s in start]
    closure = magma_closure(table, gens) if gens else np.zeros(table.shape[0], dtype=bool)
    while not closure.all():
        nxt = int(np.flatnonzero(~closure)[0])
        gens.append(nxt)
        closure = magma_closure(table, gens)
    return gens


def coset_labels(add: np.ndarray, sub_indices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Label the cosets of an additive subgroup.

    Cosets are numbered in order of their least element, which is also the
    recorded representative.

    Returns:
        Tuple of (labels per element, representatives in ascending order).
    """
    n = add.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    reps = []
    sub = np.asarray(sub_indices, dtype=np.int64)
    for v in range(n):
        if labels[v] < 0:
            labels[add[v, sub]] = len(reps)
            reps.append(v)
    return labels, np.array(reps, dtype=np.int64)


def scan_associative(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First triple (a, b, c) with (ab)c != a(bc), by full scan."""
    n = table.shape[0]
    block = max(1, SCAN_BLOCK // max(1, n * n))
    for start in range(0, n, block):
        rows = table[start:start + block]
        lhs = table[rows]
        rhs = rows[:, table]
        bad = first_mismatch(lhs, rhs)
        if bad is not None:
            return (start + bad[0], bad[1], bad[2])
    return None


def light_associative(table: np.ndarray, gens: Sequence[int]) -> Optional[Tuple[int, int, int]]:
    """Light's test: (x g) y == x (g y) for all x, y and every generator g.

    The set of elements satisfying the middle-associativity identity is closed
    under the operation, so checking a generating set proves associativity.
    """
    for g in gens:
        lhs = table[table[:, g]]
        rhs = table[:, table[g, :]]
        bad = first_mismatch(lhs, rhs)
        if bad is not None:
            return (bad[0], int(g), bad[1])
    return None


def digit_weights(base: int, length: int) -> np.ndarray:
    return base ** np.arange(length, dtype=CODE_DTYPE)


def decode(codes, base: int, length: int) -> np.ndarray:
    """Little-endian digits of each code, shape (len(codes), length)."""
    codes = np.asarray(codes, dtype=CODE_DTYPE)
    return (codes[..., None] // digit_weights(base, length)) % base


def encode(digits: np.ndarray, base: int) -> np.ndarray:
    """Inverse of decode along the last axis."""
    digits = np.asarray(digits, dtype=CODE_DTYPE)
    return digits @ digit_weights(base, digits.shape[-1])


def lex_product(candidates: Sequence[np.ndarray]) -> np.ndarray:
    """All tuples from the candidate lists, lexicographic with the first slot most significant."""
    if not candidates:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.asarray(c, dtype=np.int64) for c in candidates], indexing='ij')
    return np.stack([g.ravel() for g in grids], axis=1)


def format_subset(indices: Iterable[int]) -> str:
    return "{" + ",".join(str(int(i)) for i in indices) + "}"
