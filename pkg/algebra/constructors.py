"""
Ring constructors for the corpus.

Every derived ring is a free module over its base with a coordinate
encoding (little-endian digits base |R|) and bilinear structure constants
``(i, j, k, c)`` meaning ``e_i * e_j`` contributes ``c`` to coordinate k.
Tables are built one output coordinate at a time and then validated by
make_ring_from_tables.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from .caps import Caps, DEFAULT_CAPS
from .errors import NonCommutativeBase, SizeOverflow
from .groups import FiniteGroup
from .rings import FiniteRing, GroupRingData, make_ring_from_tables
from .tables import CODE_DTYPE, decode

logger = get_logger(__name__)

StructureConstant = Tuple[int, int, int, int]


def ring_zmod(n: int) -> FiniteRing:
    """Integers modulo n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    idx = np.arange(n)
    return make_ring_from_tables(n, (idx[:, None] + idx[None, :]) % n,
                                 (idx[:, None] * idx[None, :]) % n, 0, 1 % n, f"zmod{n}")


def _check_size(base: FiniteRing, length: int, max_size: Optional[int], caps: Caps, what: str) -> int:
    cap = min(max_size or caps.group_ring_hard, caps.group_ring_hard)
    size = base.size ** length
    if size > cap:
        raise SizeOverflow(what, size, cap)
    return size


def _coordinate_ring(base: FiniteRing, length: int, constants: Sequence[StructureConstant],
                     one_digits: Sequence[int], label: str, max_size: Optional[int], caps: Caps = DEFAULT_CAPS,
                     group_ring_of: Optional[GroupRingData] = None) -> FiniteRing:
    size = _check_size(base, length, max_size, caps, f"ring '{label}'")
    b = base.size
    digits = decode(np.arange(size), b, length)
    add = np.zeros((size, size), dtype=CODE_DTYPE)
    mul = np.zeros((size, size), dtype=CODE_DTYPE)
    by_output: List[List[StructureConstant]] = [[] for _ in range(length)]
    for const in constants:
        by_output[const[2]].append(const)

    for k in range(length):
        weight = b ** k
        add += base.add[digits[:, k][:, None], digits[:, k][None, :]].astype(CODE_DTYPE) * weight
        acc = np.full((size, size), base.zero, dtype=np.int64)
        for i, j, _, coef in by_output[k]:
            term = base.mul[digits[:, i][:, None], digits[:, j][None, :]]
            if coef != base.one:
                term = base.mul[coef, term]
            acc = base.add[acc, term]
        mul += acc.astype(CODE_DTYPE) * weight
        logger.debug(f"Built coordinate {k + 1}/{length} of '{label}'")

    one = int(sum(int(d) * b ** k for k, d in enumerate(one_digits)))
    zero = int(sum(base.zero * b ** k for k in range(length)))
    return make_ring_from_tables(size, add, mul, zero, one, label, group_ring_of)


def _poly_reduce(base: FiniteRing, coeffs: Sequence[int], power: int) -> List[int]:
    """Coordinates of x^power modulo the monic polynomial (low to high coefficients)."""
    d = len(coeffs) - 1
    vec = [base.zero] * d
    if power < d:
        vec[power] = base.one
        return vec
    # x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
    vec = [int(base.neg[c]) for c in coeffs[:d]]
    for _ in range(power - d):
        top = vec[-1]
        shifted = [base.zero] + vec[:-1]
        vec = [int(base.add[shifted[i], base.mul[top, base.neg[coeffs[i]]]]) for i in range(d)]
    return vec


def ring_quotient_poly(base: FiniteRing, coeffs: Sequence[int], label: Optional[str] = None,
                       max_size: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """base[x]/(f) for a monic f given by coefficients from low to high degree.

    Raises:
        NonCommutativeBase: If the base ring is not commutative.
        ValueError: If f is not monic of degree at least one.
    """
    if not base.is_commutative:
        raise NonCommutativeBase(f"polynomial quotient needs a commutative base, '{base.label}' is not")
    coeffs = [int(c) for c in coeffs]
    d = len(coeffs) - 1
    if d < 1 or coeffs[-1] != base.one:
        raise ValueError(f"polynomial {coeffs} is not monic of degree >= 1")
    constants: List[StructureConstant] = []
    for i in range(d):
        for j in range(d):
            for k, c in enumerate(_poly_reduce(base, coeffs, i + j)):
                if c != base.zero:
                    constants.append((i, j, k, c))
    one = [base.one] + [base.zero] * (d - 1)
    name = label or f"{base.label}[x]/({','.join(map(str, coeffs))})"
    return _coordinate_ring(base, d, constants, one, name, max_size, caps)


def matrix_ring(base: FiniteRing, k: int, label: Optional[str] = None,
                max_size: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Full k x k matrices; entry (i, j) is coordinate i*k + j."""
    if k < 1:
        raise ValueError(f"matrix size must be positive, got {k}")
    constants = [(i * k + l, l * k + j, i * k + j, base.one)
                 for i in range(k) for j in range(k) for l in range(k)]
    one = [base.one if i == j else base.zero for i in range(k) for j in range(k)]
    return _coordinate_ring(base, k * k, constants, one, label or f"m{k}-{base.label}", max_size, caps)


def triangular_ring(base: FiniteRing, k: int, label: Optional[str] = None,
                    max_size: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Upper-triangular k x k matrices; entries (i, j), i <= j, in row-major order."""
    if k < 1:
        raise ValueError(f"matrix size must be positive, got {k}")
    positions = [(i, j) for i in range(k) for j in range(i, k)]
    slot = {p: n for n, p in enumerate(positions)}
    constants = [(slot[(i, l)], slot[(l, j)], slot[(i, j)], base.one)
                 for (i, j) in positions for l in range(i, j + 1)]
    one = [base.one if i == j else base.zero for (i, j) in positions]
    return _coordinate_ring(base, len(positions), constants, one, label or f"tri{k}-{base.label}", max_size, caps)


def product_ring(first: FiniteRing, second: FiniteRing, label: Optional[str] = None) -> FiniteRing:
    """R x S with (r, s) stored at index r + |R|*s."""
    n1, n2 = first.size, second.size
    r = np.arange(n1 * n2) % n1
    s = np.arange(n1 * n2) // n1
    add = first.add[r[:, None], r[None, :]] + n1 * second.add[s[:, None], s[None, :]]
    mul = first.mul[r[:, None], r[None, :]] + n1 * second.mul[s[:, None], s[None, :]]
    return make_ring_from_tables(n1 * n2, add, mul, first.zero + n1 * second.zero,
                                 first.one + n1 * second.one, label or f"{first.label}x{second.label}")


def group_ring(base: FiniteRing, group: FiniteGroup, label: Optional[str] = None,
               max_size: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """R(G): functions G -> R with convolution, coefficient of g at coordinate g.

    Raises:
        SizeOverflow: If |R|^|G| exceeds max_size (and always above caps.group_ring_hard).
    """
    constants = [(h, k, int(group.op[h, k]), base.one)
                 for h in range(group.size) for k in range(group.size)]
    one = [base.one if g == group.identity else base.zero for g in range(group.size)]
    name = label or f"{base.label}-{group.label}"
    ring = _coordinate_ring(base, group.size, constants, one, name, max_size, caps, GroupRingData(base, group))
    logger.info(f"Constructed group ring '{name}' of size {ring.size}")
    return ring
