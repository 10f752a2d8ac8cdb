"""
Sided finitely presented modules over a FiniteRing.

A module is stored twice: as a presentation (m generators, relation vectors)
and in realized form (addition table, action table, generator images).  The
action table is indexed ``act[r, x]`` and holds ``r*x`` for left modules and
``x*r`` for right modules.

Relation convention: a relation vector (r_1, ..., r_m) means
``r_1 g_1 + ... + r_m g_m = 0`` for left modules and
``g_1 r_1 + ... + g_m r_m = 0`` for right modules.

Free modules R^m are handled through integer codes (little-endian digits
base |R|); the realized element of code c is ``cover[c]``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from .caps import Caps, DEFAULT_CAPS
from .errors import NotAGroupRing, NotAHomomorphism, ParentMismatch, SideMismatch, SizeOverflow
from .rings import ElementSubset, FiniteRing
from .tables import (CODE_DTYPE, INDEX_DTYPE, additive_span, coset_labels, decode,
                     digit_weights, first_mismatch, format_subset, freeze, lex_product,
                     mask_key, mask_of)

logger = get_logger(__name__)

LEFT = 'left'
RIGHT = 'right'
SIDES = (LEFT, RIGHT)

# Element budget for one block of a pairwise code computation.
PAIR_BLOCK = 1 << 21
# Largest hom value table (homs x source elements) held in memory.
HOM_TABLE_LIMIT = 1 << 26


def opposite(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return RIGHT if side == LEFT else LEFT


class FreeCodes:
    """R^m as integer codes, with coordinatewise addition and action."""

    def __init__(self, ring: FiniteRing, side: str, m: int):
        opposite(side)
        self.ring = ring
        self.side = side
        self.m = m
        self.size = ring.size ** m
        self.weights = digit_weights(ring.size, m)
        self.zero_code = int(ring.zero * self.weights.sum())

    def coords(self, codes) -> np.ndarray:
        return decode(codes, self.ring.size, self.m)

    def encode(self, coords) -> np.ndarray:
        return np.asarray(coords, dtype=CODE_DTYPE) @ self.weights

    def unit_code(self, i: int) -> int:
        return int(self.zero_code + (self.ring.one - self.ring.zero) * self.weights[i])

    def add(self, a, b) -> np.ndarray:
        return self.encode(self.ring.add[self.coords(a), self.coords(b)])

    def act(self, r, codes) -> np.ndarray:
        r = np.asarray(r)[..., None]
        c = self.coords(codes)
        prod = self.ring.mul[r, c] if self.side == LEFT else self.ring.mul[c, r]
        return self.encode(prod)

    def multiples(self, code: int) -> List[int]:
        out, x = [self.zero_code], int(code)
        while x != self.zero_code:
            out.append(x)
            x = int(self.add(x, code))
        return out

    def span(self, seeds: Iterable[int]) -> np.ndarray:
        """Sorted codes of the submodule generated by the seeds."""
        seeds = np.asarray(list(seeds), dtype=CODE_DTYPE)
        current = np.array([self.zero_code], dtype=CODE_DTYPE)
        if seeds.size == 0:
            return current
        orbit = np.unique(self.act(np.arange(self.ring.size)[:, None], seeds[None, :]))
        for s in orbit:
            pos = np.searchsorted(current, s)
            if pos < current.size and current[pos] == s:
                continue
            mult = np.array(self.multiples(int(s)), dtype=CODE_DTYPE)
            current = np.unique(self.add(current[:, None], mult[None, :]))
        return current


def lin_comb(add: np.ndarray, act: np.ndarray, zero: int, coeffs: np.ndarray, images: Sequence[int]) -> np.ndarray:
    """Evaluate sum_i coeffs[:, i] * images[i] for every row of coeffs."""
    acc = np.full(coeffs.shape[0], zero, dtype=np.int64)
    for i, y in enumerate(images):
        acc = add[acc, act[coeffs[:, i], y]]
    return acc


def _pairwise(free: FreeCodes, reps: np.ndarray, labels: np.ndarray) -> np.ndarray:
    k = reps.size
    out = np.empty((k, k), dtype=INDEX_DTYPE)
    block = max(1, PAIR_BLOCK // max(1, k * max(1, free.m)))
    for start in range(0, k, block):
        rows = reps[start:start + block]
        out[start:start + block] = labels[free.add(rows[:, None], reps[None, :])]
    return out


@dataclass(frozen=True, eq=False)
class FModule:
    """A finitely presented module together with its realized form."""
    ring: FiniteRing
    side: str
    gens: int
    relations: Tuple[Tuple[int, ...], ...]
    add: np.ndarray
    act: np.ndarray
    zero: int
    generators: Tuple[int, ...]
    cover: np.ndarray
    representatives: np.ndarray
    label: str = ""

    @property
    def size(self) -> int:
        return int(self.add.shape[0])

    def is_zero(self) -> bool:
        return self.size == 1

    @cached_property
    def neg(self) -> np.ndarray:
        return freeze(np.argmax(self.add == self.zero, axis=1).astype(INDEX_DTYPE))

    @cached_property
    def free(self) -> FreeCodes:
        return FreeCodes(self.ring, self.side, self.gens)

    @cached_property
    def rep_coords(self) -> np.ndarray:
        return freeze(decode(self.representatives, self.ring.size, self.gens))

    def coords_of(self, x: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.rep_coords[x])

    def element(self, coords: Sequence[int]) -> int:
        return int(self.cover[int(self.free.encode(coords))])

    def __repr__(self) -> str:
        return f"FModule({self.label!r}, {self.side}, size={self.size}, gens={self.gens})"


def _module_tables(ring: FiniteRing, add, act, zero: int) -> Tuple[np.ndarray, np.ndarray]:
    add = np.asarray(add, dtype=INDEX_DTYPE)
    act = np.asarray(act, dtype=INDEX_DTYPE)
    s = add.shape[0]
    if add.shape != (s, s) or act.shape != (ring.size, s) or not 0 <= zero < s:
        raise ValueError(f"inconsistent module tables: add {add.shape}, act {act.shape}, zero {zero}")
    return add, act


def choose_generators(add: np.ndarray, act: np.ndarray, zero: int, lookahead: int = 32) -> List[int]:
    """Greedy generating set, preferring elements whose span grows the current span most."""
    s = add.shape[0]
    if s == 1:
        return []
    sorted_cols = np.sort(act, axis=0)
    cyclic_sizes = 1 + (np.diff(sorted_cols, axis=0) != 0).sum(axis=0)
    order = np.lexsort((np.arange(s), -cyclic_sizes))
    gens: List[int] = []
    span = mask_of(s, [zero])
    while not span.all():
        best, best_span = None, None
        for x in [int(x) for x in order if not span[x]][:lookahead]:
            cand = additive_span(add, zero, act[:, gens + [x]].ravel())
            if best_span is None or cand.sum() > best_span.sum():
                best, best_span = x, cand
        gens.append(best)
        span = best_span
    return gens


def _kernel_generators(free: FreeCodes, kernel: np.ndarray) -> List[int]:
    chosen: List[int] = []
    span = np.array([free.zero_code], dtype=CODE_DTYPE)
    remaining = kernel[~np.isin(kernel, span)]
    while remaining.size:
        chosen.append(int(remaining[0]))
        span = free.span(chosen)
        remaining = remaining[~np.isin(remaining, span)]
    return chosen


def module_from_concrete(ring: FiniteRing, side: str, add, act, zero: int,
                         generators: Optional[Sequence[int]] = None,
                         caps: Caps = DEFAULT_CAPS, label: str = "") -> FModule:
    """Present an explicitly tabulated module without re-indexing its elements.

    Args:
        ring: Coefficient ring.
        side: 'left' or 'right'.
        add: Addition table of the module.
        act: Action table, act[r, x].
        zero: Index of the zero element.
        generators: Optional generator images; chosen greedily when omitted.
        caps: Computation caps (the free cover must fit max_free).
        label: Display name.

    Raises:
        SizeOverflow: If the free cover R^k exceeds caps.max_free.
        ValueError: If the given generators do not generate.
    """
    opposite(side)
    add, act = _module_tables(ring, add, act, zero)
    gens = choose_generators(add, act, zero) if generators is None else [int(g) for g in generators]
    free = FreeCodes(ring, side, len(gens))
    if free.size > caps.max_free:
        raise SizeOverflow(f"free cover of module '{label}'", free.size, caps.max_free)

    coords = free.coords(np.arange(free.size))
    cover = lin_comb(add, act, zero, coords, gens)
    hit = np.zeros(add.shape[0], dtype=bool)
    hit[cover] = True
    if not hit.all():
        raise ValueError(f"generators {gens} do not generate module '{label}'")

    kernel = np.flatnonzero(cover == zero).astype(CODE_DTYPE)
    relations = tuple(tuple(int(v) for v in free.coords(c)) for c in _kernel_generators(free, kernel))
    reps = np.full(add.shape[0], free.size, dtype=CODE_DTYPE)
    np.minimum.at(reps, cover, np.arange(free.size, dtype=CODE_DTYPE))
    return FModule(ring, side, len(gens), relations, freeze(add.copy()), freeze(act.copy()), int(zero),
                   tuple(gens), freeze(cover.astype(INDEX_DTYPE)), freeze(reps), label)


def present_module(ring: FiniteRing, side: str, m: int, relations: Sequence[Sequence[int]] = (),
                   caps: Caps = DEFAULT_CAPS, label: str = "") -> FModule:
    """Realize R^m modulo the submodule generated by the relation vectors.

    Raises:
        SizeOverflow: If |R|^m exceeds caps.max_module.
        ValueError: On malformed relation vectors.
    """
    opposite(side)
    if m < 0:
        raise ValueError(f"generator count must be non-negative, got {m}")
    rels = tuple(tuple(int(v) for v in rel) for rel in relations)
    for rel in rels:
        if len(rel) != m or any(not 0 <= v < ring.size for v in rel):
            raise ValueError(f"relation {rel} is not a vector of {m} elements of '{ring.label}'")
    free = FreeCodes(ring, side, m)
    if free.size > caps.max_module:
        raise SizeOverflow(f"free module {ring.label}^{m}", free.size, caps.max_module)

    kernel = free.span(free.encode(rels) if rels else [])
    labels = np.full(free.size, -1, dtype=np.int64)
    reps = []
    for v in range(free.size):
        if labels[v] < 0:
            labels[free.add(v, kernel)] = len(reps)
            reps.append(v)
    reps = np.array(reps, dtype=CODE_DTYPE)

    add = _pairwise(free, reps, labels)
    act = labels[free.act(np.arange(ring.size)[:, None], reps[None, :])].astype(INDEX_DTYPE)
    generators = tuple(int(labels[free.unit_code(i)]) for i in range(m))
    name = label or f"{ring.label}^{m}/<{len(rels)}>"
    logger.debug(f"Presented {side} module '{name}' with {reps.size} elements")
    return FModule(ring, side, m, rels, freeze(add), freeze(act), int(labels[free.zero_code]),
                   generators, freeze(labels.astype(INDEX_DTYPE)), freeze(reps), name)


def free_module(ring: FiniteRing, side: str, m: int, caps: Caps = DEFAULT_CAPS) -> FModule:
    """R^m; element indices coincide with codes."""
    return present_module(ring, side, m, (), caps, label=f"{ring.label}^{m}" if side == LEFT else f"{ring.label}^{m}_R")


@lru_cache(maxsize=64)
def regular_module(ring: FiniteRing, side: str) -> FModule:
    """The ring as a module over itself; element indices are ring indices."""
    module = present_module(ring, side, 1, (), Caps(max_module=max(ring.size, 1)),
                            label=f"{ring.label}({side})")
    return module


class Submodule:
    """A submodule of a realized module, stored as a membership mask."""

    def __init__(self, parent: FModule, members: np.ndarray):
        if members.shape != (parent.size,):
            raise ValueError(f"membership mask must have length {parent.size}")
        self.parent = parent
        self.members = freeze(members.astype(bool, copy=True))

    @classmethod
    def generated(cls, parent: FModule, xs: Iterable[int]) -> 'Submodule':
        idx = np.array(sorted({int(x) for x in xs}), dtype=np.int64)
        return cls(parent, additive_span(parent.add, parent.zero, parent.act[:, idx].ravel()))

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
        return self.size == 1

    def is_whole(self) -> bool:
        return bool(self.members.all())

    def issubset(self, other: 'Submodule') -> bool:
        _same_parent(self, other)
        return bool(np.all(~self.members | other.members))

    def is_closed(self) -> bool:
        idx = self.indices
        p = self.parent
        return bool(self.members[p.zero] and self.members[p.add[np.ix_(idx, idx)]].all()
                    and self.members[p.act[:, idx]].all())

    def as_subset(self) -> ElementSubset:
        """The same element set as a ring subset (parent must be a regular module)."""
        if self.parent.size != self.parent.ring.size:
            raise ValueError("only submodules of a regular module are ideals")
        return ElementSubset(self.parent.ring, self.members)

    def __contains__(self, x) -> bool:
        return bool(self.members[int(x)])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.parent is other.parent and bool(np.array_equal(self.members, other.members))

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __repr__(self) -> str:
        return f"Submodule({self.parent.label!r}, {format_subset(self.indices)})"


def _same_parent(first: Submodule, second: Submodule) -> None:
    if first.parent is not second.parent:
        raise ParentMismatch(f"submodules of '{first.parent.label}' and '{second.parent.label}' cannot be combined")


def zero_submodule(module: FModule) -> Submodule:
    return Submodule(module, mask_of(module.size, [module.zero]))


def whole_submodule(module: FModule) -> Submodule:
    return Submodule(module, np.ones(module.size, dtype=bool))


def sum_sub(first: Submodule, second: Submodule) -> Submodule:
    _same_parent(first, second)
    p = first.parent
    sums = p.add[np.ix_(first.indices, second.indices)]
    return Submodule(p, mask_of(p.size, np.unique(sums)))


def intersect_sub(first: Submodule, second: Submodule) -> Submodule:
    _same_parent(first, second)
    return Submodule(first.parent, first.members & second.members)


def cyclic_submodules(module: FModule) -> List[Submodule]:
    """Distinct submodules Rx (or xR), ordered by (size, elements)."""
    seen = {}
    for x in range(module.size):
        mask = mask_of(module.size, module.act[:, x])
        seen.setdefault(mask_key(mask), mask)
    subs = [Submodule(module, m) for m in seen.values()]
    subs.sort(key=lambda s: (s.size, tuple(s.indices)))
    return subs


def submodules(module: FModule, caps: Caps = DEFAULT_CAPS) -> List[Submodule]:
    """The full submodule lattice, ordered by (size, elements).

    Cyclic submodules are closed under sums with cyclic submodules until no
    new member appears; every submodule is a finite sum of cyclic ones.

    Raises:
        SizeOverflow: If the module or the lattice exceeds the caps.
    """
    if module.size > caps.max_module:
        raise SizeOverflow(f"submodule lattice of '{module.label}'", module.size, caps.max_module)
    cyclic = [s.members for s in cyclic_submodules(module)]
    found = {mask_key(m): m for m in cyclic}
    worklist = list(found.values())
    while worklist:
        current = worklist.pop()
        cur_idx = np.flatnonzero(current)
        for c in cyclic:
            if np.all(~c | current):
                continue
            grown = mask_of(module.size, np.unique(module.add[np.ix_(cur_idx, np.flatnonzero(c))]))
            key = mask_key(grown)
            if key not in found:
                found[key] = grown
                worklist.append(grown)
                if len(found) > caps.max_submodules:
                    raise SizeOverflow(f"submodule lattice of '{module.label}'", len(found), caps.max_submodules)
    subs = [Submodule(module, m) for m in found.values()]
    subs.sort(key=lambda s: (s.size, tuple(s.indices)))
    logger.debug(f"Module '{module.label}' has {len(subs)} submodules")
    return subs


def minimal_submodules(module: FModule) -> List[Submodule]:
    """Minimal nonzero submodules; each is cyclic, generated by any of its nonzero elements."""
    keys = {}
    for x in range(module.size):
        keys[x] = mask_key(mask_of(module.size, module.act[:, x]))
    result = []
    for sub in cyclic_submodules(module):
        if sub.is_zero():
            continue
        if all(keys[int(x)] == sub.key for x in sub.indices if int(x) != module.zero):
            result.append(sub)
    return result


def maximal_submodules(lattice: Sequence[Submodule]) -> List[Submodule]:
    """Maximal proper members of a full submodule lattice."""
    proper = [s for s in lattice if not s.is_whole()]
    return [s for s in proper
            if not any(t is not s and t.size > s.size and s.issubset(t) for t in proper)]


def socle(module: FModule) -> Submodule:
    """Sum of the minimal nonzero submodules."""
    seeds = [int(x) for s in minimal_submodules(module) for x in s.indices]
    return Submodule(module, additive_span(module.add, module.zero, seeds))


def is_essential(sub: Submodule, module: FModule) -> bool:
    """True iff sub meets every nonzero submodule; nonzero cyclic submodules suffice."""
    if sub.parent is not module:
        raise ParentMismatch(f"{sub!r} is not a submodule of '{module.label}'")
    for x in range(module.size):
        if x == module.zero:
            continue
        cyc = module.act[:, x]
        if not np.any(sub.members[cyc] & (cyc != module.zero)):
            return False
    return True


def restrict_scalars(module: FModule, caps: Caps = DEFAULT_CAPS) -> FModule:
    """A right R(G)-module viewed as a right R-module along r -> r*e.

    Element indexing is unchanged.
    """
    data = module.ring.group_ring_of
    if data is None:
        raise NotAGroupRing(f"'{module.ring.label}' was not constructed as a group ring")
    if module.side != RIGHT:
        raise SideMismatch("restriction of scalars is defined here for right modules")
    embed = np.array([data.scalar(r) for r in range(data.base.size)])
    return module_from_concrete(data.base, RIGHT, module.add, module.act[embed, :], module.zero,
                                caps=caps, label=f"{module.label}|{data.base.label}")


def represent(module: FModule, caps: Caps = DEFAULT_CAPS) -> FModule:
    """Re-present a realized module from its generators and a kernel generating set."""
    return module_from_concrete(module.ring, module.side, module.add, module.act, module.zero,
                                generators=module.generators, caps=caps, label=f"{module.label}'")


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """A map between realized modules given by its value table."""
    source: FModule
    target: FModule
    values: np.ndarray

    def __post_init__(self):
        if self.source.ring is not self.target.ring or self.source.side != self.target.side:
            raise SideMismatch(f"hom {self.source.label} -> {self.target.label} mixes rings or sides")
        values = np.asarray(self.values, dtype=INDEX_DTYPE)
        if values.shape != (self.source.size,):
            raise ValueError(f"value table must have length {self.source.size}")
        object.__setattr__(self, 'values', freeze(values.copy()))

    def __call__(self, x: int) -> int:
        return int(self.values[x])

    def verify(self) -> 'ModuleHom':
        """Check additivity and compatibility with the action.

        Raises:
            NotAHomomorphism: With the first failing pair (a, b) or (r, x).
        """
        s, t, v = self.source, self.target, self.values
        bad = first_mismatch(v[s.add], t.add[v[:, None], v[None, :]])
        if bad is not None:
            raise NotAHomomorphism(f"map {s.label} -> {t.label} is not additive at {bad}", bad)
        bad = first_mismatch(v[s.act], t.act[:, v])
        if bad is not None:
            raise NotAHomomorphism(f"map {s.label} -> {t.label} does not commute with the action at {bad}", bad)
        return self

    def is_injective(self) -> bool:
        return np.unique(self.values).size == self.source.size

    def is_surjective(self) -> bool:
        return np.unique(self.values).size == self.target.size

    def is_zero(self) -> bool:
        return bool(np.all(self.values == self.target.zero))

    def kernel(self) -> Submodule:
        return Submodule(self.source, self.values == self.target.zero)

    def image(self) -> Submodule:
        return Submodule(self.target, mask_of(self.target.size, self.values))

    def compose(self, inner: 'ModuleHom') -> 'ModuleHom':
        """self o inner."""
        if inner.target is not self.source:
            raise SideMismatch(f"cannot compose {inner.source.label} -> {inner.target.label} "
                               f"with {self.source.label} -> {self.target.label}")
        return ModuleHom(inner.source, self.target, self.values[inner.values])

    def __repr__(self) -> str:
        return f"ModuleHom({self.source.label!r} -> {self.target.label!r})"


def identity_hom(module: FModule) -> ModuleHom:
    return ModuleHom(module, module, np.arange(module.size))


def zero_hom(source: FModule, target: FModule) -> ModuleHom:
    return ModuleHom(source, target, np.full(source.size, target.zero))


def submodule_module(sub: Submodule, caps: Caps = DEFAULT_CAPS) -> Tuple[FModule, ModuleHom]:
    """A submodule as a module in its own right, with its inclusion."""
    parent, idx = sub.parent, sub.indices
    pos = np.full(parent.size, -1, dtype=np.int64)
    pos[idx] = np.arange(idx.size)
    add = pos[parent.add[np.ix_(idx, idx)]]
    act = pos[parent.act[:, idx]]
    module = module_from_concrete(parent.ring, parent.side, add, act, int(pos[parent.zero]),
                                  caps=caps, label=f"{parent.label}>{format_subset(idx)}")
    return module, ModuleHom(module, parent, idx)


def quotient_with_map(module: FModule, sub: Submodule, caps: Caps = DEFAULT_CAPS,
                      label: Optional[str] = None) -> Tuple[FModule, ModuleHom]:
    """M/S together with the projection M -> M/S."""
    if sub.parent is not module:
        raise ParentMismatch(f"{sub!r} is not a submodule of '{module.label}'")
    labels, reps = coset_labels(module.add, sub.indices)
    add = labels[module.add[np.ix_(reps, reps)]]
    act = labels[module.act[:, reps]]
    gens = [int(labels[g]) for g in module.generators]
    name = label or f"{module.label}/{format_subset(sub.indices)}"
    quot = module_from_concrete(module.ring, module.side, add, act, int(labels[module.zero]),
                                generators=gens, caps=caps, label=name)
    return quot, ModuleHom(module, quot, labels)


def quotient(module: FModule, sub: Submodule, caps: Caps = DEFAULT_CAPS, label: Optional[str] = None) -> FModule:
    return quotient_with_map(module, sub, caps, label)[0]


def hom_values(source: FModule, target: FModule,
               caps: Caps = DEFAULT_CAPS) -> Tuple[np.ndarray, np.ndarray]:
    """Enumerate Hom(source, target).

    Generator images are drawn per generator from the elements killed by its
    annihilator, combined in lexicographic order and filtered by every
    relation.

    Returns:
        Tuple (images, values): images[h] are the generator images of hom h,
        values[h] its full value table.

    Raises:
        SizeOverflow: If the candidate space or the value table exceeds the caps.
        SideMismatch: If rings or sides differ.
    """
    if source.ring is not target.ring or source.side != target.side:
        raise SideMismatch(f"Hom({source.label}, {target.label}) mixes rings or sides")
    m = source.gens
    candidates = []
    total = 1
    for g in source.generators:
        ann = np.flatnonzero(source.act[:, g] == source.zero)
        ok = np.all(target.act[ann, :] == target.zero, axis=0)
        candidates.append(np.flatnonzero(ok))
        total *= int(candidates[-1].size)
    if total > caps.max_hom_candidates:
        raise SizeOverflow(f"Hom({source.label}, {target.label}) candidates", total, caps.max_hom_candidates)

    images = lex_product(candidates)
    valid = np.ones(images.shape[0], dtype=bool)
    for rel in source.relations:
        acc = np.full(images.shape[0], target.zero, dtype=np.int64)
        for i, r in enumerate(rel):
            acc = target.add[acc, target.act[r, images[:, i]]]
        valid &= acc == target.zero
    images = images[valid]
    if images.shape[0] * source.size > HOM_TABLE_LIMIT:
        raise SizeOverflow(f"Hom({source.label}, {target.label}) table", images.shape[0] * source.size,
                           HOM_TABLE_LIMIT)

    values = np.full((images.shape[0], source.size), target.zero, dtype=np.int64)
    coords = source.rep_coords
    for i in range(m):
        values = target.add[values, target.act[coords[:, i][None, :], images[:, i][:, None]]]
    logger.debug(f"Hom({source.label}, {target.label}): {images.shape[0]} of {total} candidates")
    return images, values.astype(INDEX_DTYPE)


def find_module_isomorphism(first: FModule, second: FModule,
                            caps: Caps = DEFAULT_CAPS) -> Optional[ModuleHom]:
    """First bijective hom first -> second in generator-image order, or None."""
    if first.size != second.size or first.ring is not second.ring or first.side != second.side:
        return None
    _, values = hom_values(first, second, caps)
    if values.shape[1] > 1:
        ordered = np.sort(values, axis=1)
        bijective = np.all(np.diff(ordered, axis=1) != 0, axis=1)
    else:
        bijective = np.ones(values.shape[0], dtype=bool)
    hits = np.flatnonzero(bijective)
    if hits.size == 0:
        return None
    return ModuleHom(first, second, values[hits[0]])
