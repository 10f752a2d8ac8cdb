"""
Hom-sets, duals, evaluation maps, tensor groups, Ext^1 and embeddings
into free modules.

Homs are identified by their generator-image tuples.  Those tuples come out
of hom_values in lexicographic order, so their big-endian codes are sorted
and a hom is looked up by binary search.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from .caps import Caps, DEFAULT_CAPS
from .errors import InvariantViolation, SideMismatch, SizeOverflow
from .modules import (HOM_TABLE_LIMIT, LEFT, RIGHT, FModule, ModuleHom, Submodule, free_module,
                      hom_values, module_from_concrete, opposite, regular_module, submodule_module)
from .tables import CODE_DTYPE, INDEX_DTYPE, coset_labels, decode, digit_weights, freeze, mask_key

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteAbGroup:
    """A finite abelian group by addition table.

    ``cover`` maps codes of the ambient group the elements were cut from
    (for tensor groups, N^m) onto element indices.  ``add`` is None for a
    tensor group built without its table.
    """
    size: int
    add: Optional[np.ndarray]
    zero: int
    label: str = ""
    cover: Optional[np.ndarray] = None
    tags: Tuple[str, ...] = ()

    def is_zero(self) -> bool:
        return self.size == 1

    def __repr__(self) -> str:
        return f"FiniteAbGroup({self.label!r}, size={self.size})"


@dataclass(frozen=True, eq=False)
class AbGroupHom:
    source: FiniteAbGroup
    target: FiniteAbGroup
    values: np.ndarray

    def is_injective(self) -> bool:
        return np.unique(self.values).size == self.source.size

    def is_zero(self) -> bool:
        return bool(np.all(self.values == self.target.zero))

    def kernel_size(self) -> int:
        return int(np.sum(self.values == self.target.zero))


class ImageIndex:
    """Binary-search lookup of generator-image rows produced by hom_values."""

    def __init__(self, images: np.ndarray, base: int):
        self.images = images
        self.base = base
        self.weights = digit_weights(base, images.shape[1])[::-1].copy()
        self.codes = images.astype(CODE_DTYPE) @ self.weights

    def __len__(self) -> int:
        return int(self.images.shape[0])

    def lookup(self, rows) -> np.ndarray:
        """Indices of the given rows (last axis = generator images).

        Raises:
            InvariantViolation: If some row is not an enumerated hom.
        """
        codes = np.asarray(rows, dtype=CODE_DTYPE) @ self.weights
        pos = np.searchsorted(self.codes, codes)
        pos = np.minimum(pos, len(self) - 1)
        if not np.array_equal(self.codes[pos], codes):
            raise InvariantViolation("generator images do not belong to an enumerated hom")
        return pos


def _group_table(index: ImageIndex, add: np.ndarray, what: str) -> np.ndarray:
    h = len(index)
    if h * h > HOM_TABLE_LIMIT:
        raise SizeOverflow(what, h * h, HOM_TABLE_LIMIT)
    images = index.images
    out = np.empty((h, h), dtype=INDEX_DTYPE)
    block = max(1, (1 << 21) // max(1, h * max(1, images.shape[1])))
    for start in range(0, h, block):
        rows = images[start:start + block]
        out[start:start + block] = index.lookup(add[rows[:, None, :], images[None, :, :]])
    return out


def hom_set(source: FModule, target: FModule, caps: Caps = DEFAULT_CAPS) -> List[ModuleHom]:
    """All homs source -> target, in lexicographic generator-image order."""
    _, values = hom_values(source, target, caps)
    return [ModuleHom(source, target, v) for v in values]


@dataclass(frozen=True, eq=False)
class DualStructure:
    """M* = Hom(M, R) realized as a module of the opposite side.

    Element h of ``module`` is the hom whose value table is ``values[h]``.
    """
    module: FModule
    values: np.ndarray
    images: np.ndarray
    source: FModule
    regular: FModule
    index: ImageIndex = field(repr=False)

    def hom(self, h: int) -> ModuleHom:
        return ModuleHom(self.source, self.regular, self.values[h])

    def index_of(self, images) -> np.ndarray:
        """Element indices of the homs with the given generator images."""
        return self.index.lookup(images)

    def index_of_values(self, values: np.ndarray) -> np.ndarray:
        gens = list(self.source.generators)
        return self.index.lookup(np.asarray(values)[..., gens])


def dual_module(module: FModule, caps: Caps = DEFAULT_CAPS) -> DualStructure:
    """Hom(M, R) with (f.r)(x) = f(x)r for left M and (r.f)(x) = r f(x) for right M.

    Raises:
        SizeOverflow: If the hom enumeration or the dual's tables exceed the caps.
    """
    ring = module.ring
    regular = regular_module(ring, module.side)
    images, values = hom_values(module, regular, caps)
    index = ImageIndex(images, ring.size)
    add = _group_table(index, ring.add, f"dual of '{module.label}'")
    act = np.empty((ring.size, len(index)), dtype=INDEX_DTYPE)
    for r in range(ring.size):
        act[r] = index.lookup(ring.mul[images, r] if module.side == LEFT else ring.mul[r, images])
    zero = int(index.lookup(np.full(images.shape[1], ring.zero)))
    dual = module_from_concrete(ring, opposite(module.side), add, act, zero, caps=caps,
                                label=f"{module.label}*")
    logger.debug(f"Dual of '{module.label}' has {dual.size} elements")
    return DualStructure(dual, freeze(values), freeze(images), module, regular, index)


def dual_map(hom: ModuleHom, source_dual: Optional[DualStructure] = None,
             target_dual: Optional[DualStructure] = None, caps: Caps = DEFAULT_CAPS) -> ModuleHom:
    """f* : N* -> M*, phi -> phi o f, for f : M -> N."""
    m_dual = source_dual or dual_module(hom.source, caps)
    n_dual = target_dual or dual_module(hom.target, caps)
    pulled = n_dual.values[:, hom.values]
    return ModuleHom(n_dual.module, m_dual.module, m_dual.index_of_values(pulled))


def _eval_values(module: FModule, dual: DualStructure, double: DualStructure) -> np.ndarray:
    # eval(x) sends phi to phi(x); its images on the dual's generators identify it.
    gens = list(dual.module.generators)
    return double.index_of(dual.values[gens, :].T)


def eval_map(module: FModule, caps: Caps = DEFAULT_CAPS) -> ModuleHom:
    """The canonical map M -> M**, verified to be a hom."""
    dual = dual_module(module, caps)
    double = dual_module(dual.module, caps)
    return ModuleHom(module, double.module, _eval_values(module, dual, double)).verify()


def double_dual_map(hom: ModuleHom, caps: Caps = DEFAULT_CAPS) -> Tuple[ModuleHom, ModuleHom, ModuleHom]:
    """f** together with eval_M and eval_N, sharing the same dual structures."""
    m_dual = dual_module(hom.source, caps)
    n_dual = dual_module(hom.target, caps)
    mm_dual = dual_module(m_dual.module, caps)
    nn_dual = dual_module(n_dual.module, caps)
    f_star = dual_map(hom, m_dual, n_dual, caps)
    f_star_star = dual_map(f_star, nn_dual, mm_dual, caps)
    eval_m = ModuleHom(hom.source, mm_dual.module, _eval_values(hom.source, m_dual, mm_dual))
    eval_n = ModuleHom(hom.target, nn_dual.module, _eval_values(hom.target, n_dual, nn_dual))
    return f_star_star, eval_m, eval_n


def is_semireflexive(module: FModule, caps: Caps = DEFAULT_CAPS) -> bool:
    return eval_map(module, caps).is_injective()


def is_reflexive(module: FModule, caps: Caps = DEFAULT_CAPS) -> bool:
    ev = eval_map(module, caps)
    return ev.is_injective() and ev.is_surjective()


class _PowerCodes:
    """The abelian group A^m on little-endian codes, for an addition table of A."""

    def __init__(self, add: np.ndarray, zero: int, m: int):
        self.table = add
        self.base = add.shape[0]
        self.m = m
        self.size = self.base ** m
        self.weights = digit_weights(self.base, m)
        self.zero_code = int(zero * self.weights.sum())

    def coords(self, codes) -> np.ndarray:
        return decode(codes, self.base, self.m)

    def encode(self, coords) -> np.ndarray:
        return np.asarray(coords, dtype=CODE_DTYPE) @ self.weights

    def add(self, a, b) -> np.ndarray:
        return self.encode(self.table[self.coords(a), self.coords(b)])

    def span(self, seeds) -> np.ndarray:
        current = np.array([self.zero_code], dtype=CODE_DTYPE)
        for s in np.unique(np.asarray(seeds, dtype=CODE_DTYPE)):
            pos = np.searchsorted(current, s)
            if pos < current.size and current[pos] == s:
                continue
            mult, x = [self.zero_code], int(s)
            while x != self.zero_code:
                mult.append(x)
                x = int(self.add(x, s))
            current = np.unique(self.add(current[:, None], np.array(mult)[None, :]))
        return current


def _check_tensor_sides(right: FModule, left: FModule) -> None:
    if right.ring is not left.ring:
        raise SideMismatch(f"'{right.label}' and '{left.label}' are over different rings")
    if right.side != RIGHT or left.side != LEFT:
        raise SideMismatch(f"tensor needs a right and a left module, got {right.side} and {left.side}")


# pairwise sums allowed in one vectorized coset pass
_COSET_PASS_LIMIT = 1 << 24


def _coset_minima(codes: _PowerCodes, sub: np.ndarray) -> np.ndarray:
    """For every code, the least code of its coset modulo ``sub``."""
    everything = np.arange(codes.size, dtype=CODE_DTYPE)
    if codes.size * sub.size <= _COSET_PASS_LIMIT:
        block = max(1, (1 << 20) // sub.size)
        out = np.empty(codes.size, dtype=CODE_DTYPE)
        for start in range(0, codes.size, block):
            chunk = everything[start:start + block]
            out[start:start + block] = codes.add(chunk[:, None], sub[None, :]).min(axis=1)
        return out
    # few cosets: walk them in ascending order
    out = np.full(codes.size, -1, dtype=CODE_DTYPE)
    for v in range(codes.size):
        if out[v] < 0:
            out[codes.add(v, sub)] = v
    return out


def _tensor_cosets(right: FModule, left: FModule, caps: Caps) -> Tuple[_PowerCodes, np.ndarray, np.ndarray]:
    """The ambient codes of N^m, the coset label of each code and the sorted coset representatives."""
    _check_tensor_sides(right, left)
    codes = _PowerCodes(left.add, left.zero, right.gens)
    if codes.size > caps.max_free:
        raise SizeOverflow(f"tensor {right.label} (x) {left.label}", codes.size, caps.max_free)
    seeds = [codes.encode(left.act[list(rel), :].T) for rel in right.relations]
    sub = codes.span(np.concatenate(seeds) if seeds else [])
    reps, labels = np.unique(_coset_minima(codes, sub), return_inverse=True)
    return codes, labels.astype(np.int64), reps.astype(CODE_DTYPE)


def tensor(right: FModule, left: FModule, caps: Caps = DEFAULT_CAPS, table: bool = True) -> FiniteAbGroup:
    """M (x)_R N as N^m modulo the rows (r_1 n, ..., r_m n) for every relation of M.

    With ``table=False`` the addition table is left out and only the
    coset labels are kept; maps between tensor groups need nothing more.

    Raises:
        SideMismatch: Unless M is a right and N a left module over one ring.
        SizeOverflow: If |N|^m exceeds caps.max_free, or the group exceeds
            caps.max_module when its table is wanted.
    """
    codes, labels, reps = _tensor_cosets(right, left, caps)
    label = f"{right.label}(x){left.label}"
    add = None
    if table:
        if reps.size > caps.max_module:
            raise SizeOverflow(f"tensor {label}", int(reps.size), caps.max_module)
        add = freeze(labels[codes.add(reps[:, None], reps[None, :])].astype(INDEX_DTYPE))
    logger.debug(f"Tensor {label} has {reps.size} elements")
    return FiniteAbGroup(int(reps.size), add, int(labels[codes.zero_code]), label, freeze(labels),
                         (right.label, left.label))


def _induced_values(source: FiniteAbGroup, target: FiniteAbGroup, image_codes: np.ndarray) -> np.ndarray:
    image_labels = target.cover[image_codes]
    _, first = np.unique(source.cover, return_index=True)
    values = image_labels[first]
    if not np.array_equal(image_labels, values[source.cover]):
        raise InvariantViolation(f"induced map {source.label} -> {target.label} is not well defined")
    return values


def tensor_map(mono: ModuleHom, other: FModule, caps: Caps = DEFAULT_CAPS) -> AbGroupHom:
    """mu (x) F for mu between right modules, or F (x) mu for mu between left modules.

    The map is computed on every code of the source's ambient group and
    checked to be constant on cosets.
    """
    source, target = mono.source, mono.target
    if source.side == RIGHT and other.side == LEFT:
        src, tgt = tensor(source, other, caps, table=False), tensor(target, other, caps, table=False)
        f = _PowerCodes(other.add, other.zero, source.gens).coords(np.arange(src.cover.size))
        c = target.rep_coords[np.asarray(mono.values)[list(source.generators)]]
        out = np.full((f.shape[0], target.gens), other.zero, dtype=np.int64)
        for i in range(source.gens):
            for j in range(target.gens):
                out[:, j] = other.add[out[:, j], other.act[c[i, j], f[:, i]]]
        image_codes = _PowerCodes(other.add, other.zero, target.gens).encode(out)
    elif source.side == LEFT and other.side == RIGHT:
        src, tgt = tensor(other, source, caps, table=False), tensor(other, target, caps, table=False)
        k = _PowerCodes(source.add, source.zero, other.gens).coords(np.arange(src.cover.size))
        image_codes = _PowerCodes(target.add, target.zero, other.gens).encode(mono.values[k])
    else:
        raise SideMismatch(f"cannot tensor a {source.side} map with a {other.side} module")
    return AbGroupHom(src, tgt, _induced_values(src, tgt, image_codes))


def noninjective_tensor(module: FModule, monos: Sequence[ModuleHom],
                        caps: Caps = DEFAULT_CAPS) -> Optional[ModuleHom]:
    """The first mono whose tensor with the module is not injective."""
    for mono in monos:
        if not tensor_map(mono, module, caps).is_injective():
            return mono
    return None


def is_fp_flat(module: FModule, monos: Sequence[ModuleHom], caps: Caps = DEFAULT_CAPS) -> bool:
    """Relative to the given monos of the opposite side."""
    return noninjective_tensor(module, monos, caps) is None


def _row_set(rows: np.ndarray) -> set:
    return {r.tobytes() for r in np.ascontiguousarray(rows, dtype=np.int64)}


def nonextendable_hom(module: FModule, monos: Sequence[ModuleHom],
                      caps: Caps = DEFAULT_CAPS) -> Optional[Tuple[ModuleHom, ModuleHom]]:
    """The first (mu, f) with f : K -> M not of the form g o mu."""
    for mono in monos:
        small, big = mono.source, mono.target
        images, values = hom_values(small, module, caps)
        _, big_values = hom_values(big, module, caps)
        gens = np.asarray(mono.values)[list(small.generators)]
        extendable = _row_set(big_values[:, gens])
        for h, row in enumerate(np.ascontiguousarray(images, dtype=np.int64)):
            if row.tobytes() not in extendable:
                return mono, ModuleHom(small, module, values[h])
    return None


def is_fp_injective_mod(module: FModule, monos: Sequence[ModuleHom], caps: Caps = DEFAULT_CAPS) -> bool:
    """Relative to the given monos of the same side."""
    return nonextendable_hom(module, monos, caps) is None


def relation_kernel(module: FModule, caps: Caps = DEFAULT_CAPS) -> Tuple[FModule, Submodule]:
    """R^m and the kernel of its projection onto the module's stored presentation."""
    free = free_module(module.ring, module.side, module.gens, caps)
    return free, Submodule(free, np.asarray(module.cover) == module.zero)


def ext1(module: FModule, other: FModule, caps: Caps = DEFAULT_CAPS) -> FiniteAbGroup:
    """Ext^1(M, N) = Hom(K, N) / restrictions of Hom(R^m, N) for 0 -> K -> R^m -> M -> 0.

    Raises:
        SideMismatch: If the modules differ in ring or side.
        SizeOverflow: If R^m or the hom groups exceed the caps.
    """
    if module.ring is not other.ring or module.side != other.side:
        raise SideMismatch(f"Ext({module.label}, {other.label}) mixes rings or sides")
    free, kernel = relation_kernel(module, caps)
    k_module, inclusion = submodule_module(kernel, caps)
    k_images, _ = hom_values(k_module, other, caps)
    _, free_values = hom_values(free, other, caps)

    index = ImageIndex(k_images, other.size)
    restricted = free_values[:, np.asarray(inclusion.values)[list(k_module.generators)]]
    sub = np.unique(index.lookup(restricted))
    add = _group_table(index, other.add, f"Hom({k_module.label}, {other.label})")
    labels, reps = coset_labels(add, sub)
    quotient_add = labels[add[np.ix_(reps, reps)]].astype(INDEX_DTYPE)
    zero = int(labels[index.lookup(np.full(k_images.shape[1], other.zero))])
    logger.debug(f"Ext1({module.label}, {other.label}) has {reps.size} elements")
    return FiniteAbGroup(int(reps.size), freeze(quotient_add), zero, f"Ext1({module.label},{other.label})")


def free_rank_witness(module: FModule, caps: Caps) -> Tuple[Optional[int], Tuple[int, ...], DualStructure]:
    """Least k with k homs M -> R whose kernels meet in zero, and the homs.

    Breadth-first over distinct intersections of hom kernels.
    """
    dual = dual_module(module, caps)
    if module.is_zero():
        return 0, (), dual
    zero_values = dual.values == dual.regular.zero
    if np.any(np.all(zero_values, axis=0) & (np.arange(module.size) != module.zero)):
        return None, (), dual

    kernels: Dict[bytes, Tuple[np.ndarray, int]] = {}
    for h in range(zero_values.shape[0]):
        kernels.setdefault(mask_key(zero_values[h]), (zero_values[h], h))
    target = mask_key(np.arange(module.size) == module.zero)
    states = {mask_key(np.ones(module.size, dtype=bool)): (np.ones(module.size, dtype=bool), ())}
    seen = set(states)
    queue = deque(states.items())
    while queue:
        key, (mask, homs) = queue.popleft()
        for kmask, h in kernels.values():
            meet = mask & kmask
            mkey = mask_key(meet)
            if mkey in seen:
                continue
            seen.add(mkey)
            chosen = homs + (h,)
            if mkey == target:
                return len(chosen), chosen, dual
            queue.append((mkey, (meet, chosen)))
    raise InvariantViolation(f"kernels of homs on '{module.label}' meet in zero but no finite witness was found")


def minimal_free_rank(module: FModule, caps: Caps = DEFAULT_CAPS) -> Optional[int]:
    """Least k with M embedding in R^k, or None when no k works."""
    return free_rank_witness(module, caps)[0]


def embedding_hom(module: FModule, homs: Sequence[int], dual: DualStructure,
                  caps: Caps = DEFAULT_CAPS) -> ModuleHom:
    """The map M -> R^k assembled from k homs M -> R."""
    free = free_module(module.ring, module.side, len(homs), caps)
    weights = digit_weights(module.ring.size, len(homs))
    codes = np.zeros(module.size, dtype=CODE_DTYPE)
    for j, h in enumerate(homs):
        codes += dual.values[h].astype(CODE_DTYPE) * weights[j]
    return ModuleHom(module, free, np.asarray(free.cover)[codes])


def find_embedding_into_free(module: FModule, kmax: int, caps: Caps = DEFAULT_CAPS) -> Optional[ModuleHom]:
    """An injective hom M -> R^k with k <= kmax and k least, or None.

    None certifies that no such k exists: the search returns the least rank
    over all k.
    """
    rank, homs, dual = free_rank_witness(module, caps)
    if rank is None or rank > kmax:
        logger.debug(f"'{module.label}' has no embedding into a free module of rank <= {kmax}")
        return None
    hom = embedding_hom(module, homs, dual, caps)
    if not hom.verify().is_injective():
        raise InvariantViolation(f"embedding of '{module.label}' into rank {rank} is not injective")
    return hom


def impure_witness(mono: ModuleHom, corpus: Sequence[FModule], caps: Caps = DEFAULT_CAPS) -> Optional[FModule]:
    """The first corpus module K of the opposite side with K (x) mu not injective."""
    for other in corpus:
        if other.side == mono.source.side or other.ring is not mono.source.ring:
            continue
        if not tensor_map(mono, other, caps).is_injective():
            return other
    return None


def is_pure_mono(mono: ModuleHom, corpus: Sequence[FModule], caps: Caps = DEFAULT_CAPS) -> bool:
    """Relative to the corpus modules of the opposite side."""
    if not mono.is_injective():
        raise ValueError(f"{mono!r} is not injective")
    return impure_witness(mono, corpus, caps) is None
