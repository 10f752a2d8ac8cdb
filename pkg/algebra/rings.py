"""
Finite unital rings stored as full addition and multiplication tables.

Provides validation, element subsets, units, annihilators, ideal generation,
the Jacobson radical, quotient rings, the regularity test and a small-ring
isomorphism search.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from config.logging_config import get_logger
from .caps import Caps, DEFAULT_CAPS
from .errors import AxiomViolation, InvariantViolation, NotAGroupRing, SizeOverflow
from .groups import FiniteGroup
from .tables import (additive_span, as_index_table, coset_labels, first_index,
                     first_mismatch, format_subset, freeze, light_associative, magma_generators,
                     mask_key, mask_of, scan_associative)

logger = get_logger(__name__)

# Rings up to this size are validated by a full cubic table scan.
FULL_SCAN_LIMIT = 256


@dataclass(frozen=True)
class GroupRingData:
    """Coefficient layout of a ring built by group_ring: x = sum_g c_g * |R|^g."""
    base: 'FiniteRing'
    group: FiniteGroup

    def coefficients(self, x: int) -> List[int]:
        n = self.base.size
        return [(int(x) // n ** g) % n for g in range(self.group.size)]

    def element(self, coeffs: Dict[int, int]) -> int:
        n = self.base.size
        digits = [self.base.zero] * self.group.size
        for g, c in coeffs.items():
            digits[g] = int(c)
        return sum(d * n ** g for g, d in enumerate(digits))

    def scalar(self, r: int) -> int:
        """The image of r under R -> R(G), r -> r*e."""
        return self.element({self.group.identity: r})

    def group_element(self, g: int) -> int:
        """The image of g under G -> R(G), g -> 1*g."""
        return self.element({g: self.base.one})


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A validated finite unital ring; elements are indices 0..size-1."""
    size: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str = ""
    group_ring_of: Optional[GroupRingData] = None

    @cached_property
    def neg(self) -> np.ndarray:
        return freeze(np.argmax(self.add == self.zero, axis=1).astype(np.int32))

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def additive_generators(self) -> List[int]:
        gens: List[int] = []
        span = additive_span(self.add, self.zero, gens)
        while not span.all():
            gens.append(int(np.flatnonzero(~span)[0]))
            span = additive_span(self.add, self.zero, gens)
        return gens

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def scalar(self, k: int) -> int:
        """k * 1_R for a non-negative integer k."""
        x = self.zero
        for _ in range(k):
            x = int(self.add[x, self.one])
        return x

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"


class ElementSubset:
    """A subset of a ring's elements stored as a boolean membership mask."""

    def __init__(self, ring: FiniteRing, members: np.ndarray):
        if members.shape != (ring.size,):
            raise ValueError(f"membership mask must have length {ring.size}")
        self.ring = ring
        self.members = freeze(members.astype(bool, copy=True))

    @classmethod
    def from_indices(cls, ring: FiniteRing, indices: Iterable[int]) -> 'ElementSubset':
        idx = [int(i) for i in indices]
        bad = [i for i in idx if not 0 <= i < ring.size]
        if bad:
            raise ValueError(f"element indices out of range for ring of size {ring.size}: {bad}")
        return cls(ring, mask_of(ring.size, idx))

    @property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    @property
    def size(self) -> int:
        return int(self.members.sum())

    @property
    def key(self) -> bytes:
        return mask_key(self.members)

    def is_zero(self) -> bool:
        return self.size == 1 and bool(self.members[self.ring.zero])

    def issubset(self, other: 'ElementSubset') -> bool:
        return bool(np.all(~self.members | other.members))

    def to_set(self) -> frozenset:
        return frozenset(int(i) for i in self.indices)

    def __contains__(self, x) -> bool:
        return bool(self.members[int(x)])

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return (int(i) for i in self.indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSubset):
            return NotImplemented
        return self.ring is other.ring and bool(np.array_equal(self.members, other.members))

    def __hash__(self) -> int:
        return hash((id(self.ring), self.key))

    def __repr__(self) -> str:
        return f"ElementSubset({self.ring.label!r}, {format_subset(self.indices)})"


def _check_ring_tables(n: int, add: np.ndarray, mul: np.ndarray, zero: int, one: int, label: str) -> None:
    elements = np.arange(n)
    for name, table in (('closure', add), ('closure', mul)):
        bad = np.argwhere((table < 0) | (table >= n))
        if bad.size:
            raise AxiomViolation(name, tuple(bad[0]), label)
    for name, value in (('zero', zero), ('one', one)):
        if not 0 <= value < n:
            raise AxiomViolation(name, (value,), label)

    bad = first_index((add[zero, :] != elements) | (add[:, zero] != elements))
    if bad is not None:
        raise AxiomViolation('additive-identity', (bad,), label)
    bad = first_mismatch(add, add.T)
    if bad is not None:
        raise AxiomViolation('additive-commutativity', bad, label)
    bad = first_index(~np.any(add == zero, axis=1))
    if bad is not None:
        raise AxiomViolation('additive-inverse', (bad,), label)

    bad = first_index((mul[one, :] != elements) | (mul[:, one] != elements))
    if bad is not None:
        raise AxiomViolation('multiplicative-identity', (bad,), label)
    if n > 1 and zero == one:
        raise AxiomViolation('zero-one', (zero, one), label)

    if n <= FULL_SCAN_LIMIT:
        _full_scan(n, add, mul, label)
    else:
        _generator_scan(n, add, mul, zero, label)


def _full_scan(n: int, add: np.ndarray, mul: np.ndarray, label: str) -> None:
    witness = scan_associative(add)
    if witness is not None:
        raise AxiomViolation('additive-associativity', witness, label)
    block = max(1, (1 << 22) // max(1, n * n))
    for start in range(0, n, block):
        rows = mul[start:start + block]
        # a(b+c) == ab + ac
        bad = first_mismatch(rows[:, add], add[rows[:, :, None], rows[:, None, :]])
        if bad is not None:
            raise AxiomViolation('left-distributivity', (start + bad[0], bad[1], bad[2]), label)
        # (a+b)c == ac + bc
        bad = first_mismatch(mul[add[start:start + block]], add[rows[:, None, :], mul[None, :, :]])
        if bad is not None:
            raise AxiomViolation('right-distributivity', (start + bad[0], bad[1], bad[2]), label)
    witness = scan_associative(mul)
    if witness is not None:
        raise AxiomViolation('multiplicative-associativity', witness, label)


def _generator_scan(n: int, add: np.ndarray, mul: np.ndarray, zero: int, label: str) -> None:
    gens = magma_generators(add)
    witness = light_associative(add, gens)
    if witness is not None:
        raise AxiomViolation('additive-associativity', witness, label)
    for g in gens:
        # a(b+g) == ab + ag proves x -> ax additive once g ranges over generators
        bad = first_mismatch(mul[:, add[:, g]], add[mul, mul[:, g][:, None]])
        if bad is not None:
            raise AxiomViolation('left-distributivity', (bad[0], bad[1], g), label)
        bad = first_mismatch(mul[add[:, g], :], add[mul, mul[g, :][None, :]])
        if bad is not None:
            raise AxiomViolation('right-distributivity', (bad[0], g, bad[1]), label)
    # the associator is additive in each slot, so generators suffice
    g = np.array(gens)
    lhs = mul[mul[np.ix_(g, g)][:, :, None], g[None, None, :]]
    rhs = mul[g[:, None, None], mul[np.ix_(g, g)][None, :, :]]
    bad = first_mismatch(lhs, rhs)
    if bad is not None:
        raise AxiomViolation('multiplicative-associativity', tuple(int(g[i]) for i in bad), label)


def make_ring_from_tables(n: int, add, mul, zero: int, one: int, label: str = "",
                          group_ring_of: Optional[GroupRingData] = None) -> FiniteRing:
    """Validate operation tables and build a FiniteRing.

    Args:
        n: Number of elements.
        add: n x n addition table.
        mul: n x n multiplication table.
        zero: Index of the additive identity.
        one: Index of the multiplicative identity.
        label: Display name.
        group_ring_of: Coefficient layout when the tables come from group_ring.

    Returns:
        The validated ring.

    Raises:
        AxiomViolation: On the first failing axiom, with a witness tuple.
    """
    if n < 1:
        raise AxiomViolation('size', (n,), label)
    try:
        add_t = as_index_table(add, n, n)
        mul_t = as_index_table(mul, n, n)
    except ValueError as e:
        raise AxiomViolation('shape', (n,), label) from e
    _check_ring_tables(n, add_t, mul_t, int(zero), int(one), label)
    logger.debug(f"Validated ring '{label}' of size {n}")
    return FiniteRing(n, freeze(add_t), freeze(mul_t), int(zero), int(one), label, group_ring_of)


def units(ring: FiniteRing) -> ElementSubset:
    is_one = ring.mul == ring.one
    return ElementSubset(ring, np.any(is_one & is_one.T, axis=1))


def inverse(ring: FiniteRing, a: int) -> Optional[int]:
    hits = np.flatnonzero((ring.mul[a, :] == ring.one) & (ring.mul[:, a] == ring.one))
    return int(hits[0]) if hits.size else None


def is_invertible_scalar(ring: FiniteRing, k: int) -> bool:
    """True iff k * 1_R is a unit."""
    if k < 0:
        raise ValueError(f"scalar must be non-negative, got {k}")
    return ring.scalar(k) in units(ring)


def _as_indices(xs) -> np.ndarray:
    if isinstance(xs, ElementSubset):
        return xs.indices
    return np.array(sorted({int(x) for x in xs}), dtype=np.int64)


def left_annihilator(ring: FiniteRing, xs) -> ElementSubset:
    """l(X) = {r : rX = 0}."""
    idx = _as_indices(xs)
    return ElementSubset(ring, np.all(ring.mul[:, idx] == ring.zero, axis=1))


def right_annihilator(ring: FiniteRing, xs) -> ElementSubset:
    """r(X) = {r : Xr = 0}."""
    idx = _as_indices(xs)
    return ElementSubset(ring, np.all(ring.mul[idx, :] == ring.zero, axis=0))


def left_ideal_generated(ring: FiniteRing, xs) -> ElementSubset:
    idx = _as_indices(xs)
    return ElementSubset(ring, additive_span(ring.add, ring.zero, ring.mul[:, idx].ravel()))


def right_ideal_generated(ring: FiniteRing, xs) -> ElementSubset:
    idx = _as_indices(xs)
    return ElementSubset(ring, additive_span(ring.add, ring.zero, ring.mul[idx, :].ravel()))


def two_sided_ideal_generated(ring: FiniteRing, xs) -> ElementSubset:
    idx = _as_indices(xs)
    left = ring.mul[:, idx]
    seeds = ring.mul[left[:, :, None], np.arange(ring.size)[None, None, :]]
    return ElementSubset(ring, additive_span(ring.add, ring.zero, seeds.ravel()))


def is_two_sided_ideal(subset: ElementSubset) -> bool:
    ring, idx = subset.ring, subset.indices
    closed = subset.members[ring.add[np.ix_(idx, idx)]].all()
    return bool(closed and subset.members[ring.mul[:, idx]].all() and subset.members[ring.mul[idx, :]].all())


def ideal_product(first: ElementSubset, second: ElementSubset) -> ElementSubset:
    """Additive span of all products ab, a in first, b in second."""
    ring = first.ring
    products = ring.mul[np.ix_(first.indices, second.indices)]
    return ElementSubset(ring, additive_span(ring.add, ring.zero, products.ravel()))


def quotient_ring(ring: FiniteRing, ideal: ElementSubset, label: Optional[str] = None) -> FiniteRing:
    """R/I for a two-sided ideal I; cosets are numbered by least representative."""
    if not is_two_sided_ideal(ideal):
        raise ValueError(f"{ideal!r} is not a two-sided ideal")
    labels, reps = coset_labels(ring.add, ideal.indices)
    add = labels[ring.add[np.ix_(reps, reps)]]
    mul = labels[ring.mul[np.ix_(reps, reps)]]
    return make_ring_from_tables(len(reps), add, mul, labels[ring.zero], labels[ring.one],
                                 label or f"{ring.label}/I")


def is_regular_ring(ring: FiniteRing) -> bool:
    """Von Neumann regularity: every a has some x with axa = a."""
    ax = ring.mul
    axa = ring.mul[ax, np.arange(ring.size)[:, None]]
    return bool(np.all(np.any(axa == np.arange(ring.size)[:, None], axis=1)))


def jacobson_radical(ring: FiniteRing) -> ElementSubset:
    """The radical as {x : 1 - rx is a unit for every r}.

    The result is checked to be a nilpotent two-sided ideal with a regular
    (hence semisimple) quotient.

    Raises:
        InvariantViolation: If any of those checks fails.
    """
    unit_mask = units(ring).members
    one_minus = ring.add[ring.one, ring.neg[ring.mul]]
    radical = ElementSubset(ring, unit_mask[one_minus].all(axis=0))

    if not is_two_sided_ideal(radical):
        raise InvariantViolation(f"radical of '{ring.label}' is not a two-sided ideal")
    power, steps = radical, 1
    while not power.is_zero():
        power = ideal_product(power, radical)
        steps += 1
        if steps > ring.size + 1:
            raise InvariantViolation(f"radical of '{ring.label}' is not nilpotent")
    if not is_regular_ring(quotient_ring(ring, radical, f"{ring.label}/rad")):
        raise InvariantViolation(f"'{ring.label}' modulo its radical is not regular")
    logger.debug(f"Radical of '{ring.label}' has {radical.size} elements, nilpotency index {steps}")
    return radical


def omega_ideal(ring: FiniteRing, subgroup: Sequence[int]) -> ElementSubset:
    """The right ideal of R(G) generated by {1 - h : h in H}.

    Raises:
        NotAGroupRing: If the ring was not built by group_ring.
    """
    data = ring.group_ring_of
    if data is None:
        raise NotAGroupRing(f"'{ring.label}' was not constructed as a group ring")
    seeds = [ring.sub(ring.one, data.group_element(int(h))) for h in subgroup]
    return right_ideal_generated(ring, seeds)


def _ring_generators(ring: FiniteRing) -> List[int]:
    def closure(gens):
        members = mask_of(ring.size, [ring.zero, ring.one] + list(gens))
        while True:
            idx = np.flatnonzero(members)
            grown = members.copy()
            grown[ring.add[np.ix_(idx, idx)]] = True
            grown[ring.mul[np.ix_(idx, idx)]] = True
            if grown.sum() == members.sum():
                return members
            members = grown

    gens: List[int] = []
    span = closure(gens)
    while not span.all():
        gens.append(int(np.flatnonzero(~span)[0]))
        span = closure(gens)
    return gens


def _extend_assignment(first: FiniteRing, second: FiniteRing, partial: Dict[int, int]) -> Optional[Dict[int, int]]:
    images = dict(partial)
    changed = True
    while changed:
        changed = False
        items = list(images.items())
        for a, fa in items:
            for b, fb in items:
                for t1, t2 in ((first.add, second.add), (first.mul, second.mul)):
                    c, fc = int(t1[a, b]), int(t2[fa, fb])
                    known = images.get(c)
                    if known is None:
                        images[c] = fc
                        changed = True
                    elif known != fc:
                        return None
        if len(set(images.values())) != len(images):
            return None
    return images


def find_ring_isomorphism(first: FiniteRing, second: FiniteRing,
                          caps: Caps = DEFAULT_CAPS) -> Optional[List[int]]:
    """Search for a ring isomorphism first -> second.

    Assignments are made on a ring generating set and extended by closure,
    pruning on the first inconsistency.

    Returns:
        The bijection as a list (element -> image), or None.

    Raises:
        SizeOverflow: If either ring exceeds the isomorphism cap.
    """
    for ring in (first, second):
        if ring.size > caps.iso_limit:
            raise SizeOverflow(f"isomorphism search on '{ring.label}'", ring.size, caps.iso_limit)
    if first.size != second.size or first.is_commutative != second.is_commutative:
        return None

    gens = _ring_generators(first)
    start = _extend_assignment(first, second, {first.zero: second.zero, first.one: second.one})
    if start is None:
        return None

    def search(depth: int, assigned: Dict[int, int]) -> Optional[Dict[int, int]]:
        if depth == len(gens):
            return assigned
        g = gens[depth]
        if g in assigned:
            return search(depth + 1, assigned)
        used = set(assigned.values())
        for image in range(second.size):
            if image in used:
                continue
            extended = _extend_assignment(first, second, {**assigned, g: image})
            if extended is not None:
                found = search(depth + 1, extended)
                if found is not None:
                    return found
        return None

    result = search(0, start)
    if result is None or len(result) != first.size:
        return None
    bijection = [result[a] for a in range(first.size)]
    fmap = np.array(bijection)
    if not (np.array_equal(fmap[first.add], second.add[np.ix_(fmap, fmap)])
            and np.array_equal(fmap[first.mul], second.mul[np.ix_(fmap, fmap)])):
        raise InvariantViolation(f"isomorphism search produced a non-homomorphism {first.label} -> {second.label}")
    return bijection


def are_isomorphic(first: FiniteRing, second: FiniteRing, caps: Caps = DEFAULT_CAPS) -> bool:
    return find_ring_isomorphism(first, second, caps) is not None
