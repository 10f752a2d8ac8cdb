"""
Ring-level predicates built on the lattice and homological primitives.

Every predicate returns a PropertyVerdict.  Exact predicates quantify over
all one-sided ideals of the ring; corpus-bounded predicates quantify over a
supplied list of modules and say so in the verdict.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from .caps import Caps, DEFAULT_CAPS
from .errors import InvariantViolation
from .homological import ext1, minimal_free_rank
from .modules import (LEFT, RIGHT, FModule, Submodule, hom_values, is_essential, maximal_submodules,
                      quotient, regular_module, socle, submodule_module, submodules)
from .rings import (FiniteRing, is_regular_ring, jacobson_radical, left_annihilator,
                    quotient_ring, right_annihilator)
from .tables import format_subset, mask_of

logger = get_logger(__name__)

TWO_SIDED = 'two-sided'


@dataclass
class PropertyVerdict:
    """Outcome of one predicate on one ring (or module)."""
    name: str
    side: str
    value: bool
    witness: Optional[str] = None
    corpus_bounded: bool = False
    conditions: Dict[str, bool] = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'side': self.side,
            'value': self.value,
            'witness': self.witness,
            'corpus_bounded': self.corpus_bounded,
            'conditions': dict(self.conditions),
            'note': self.note,
        }

    def __bool__(self) -> bool:
        return self.value


@lru_cache(maxsize=64)
def ideal_lattice(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> Tuple[Submodule, ...]:
    """All left or right ideals, as submodules of the regular module."""
    return tuple(submodules(regular_module(ring, side), caps))


def _fmt(sub) -> str:
    return format_subset(sub.indices)


def _proper_nonzero(lattice: Sequence[Submodule]) -> List[Submodule]:
    return [i for i in lattice if not i.is_zero() and not i.is_whole()]


def _extension_rows(ring: FiniteRing, side: str, elements: np.ndarray) -> np.ndarray:
    """Value rows of x -> x*r (left ideals) or x -> r*x (right ideals), one per r."""
    if side == LEFT:
        return ring.mul[elements, :].T
    return ring.mul[:, elements]


def _row_keys(rows: np.ndarray) -> set:
    return {r.tobytes() for r in np.ascontiguousarray(rows, dtype=np.int64)}


def nonextendable_ideal_hom(ring: FiniteRing, side: str,
                            caps: Caps = DEFAULT_CAPS) -> Optional[Tuple[Submodule, np.ndarray, np.ndarray]]:
    """The first ideal I and hom I -> R that is not multiplication by a ring element."""
    regular = regular_module(ring, side)
    for ideal in _proper_nonzero(ideal_lattice(ring, side, caps)):
        sub_module, inclusion = submodule_module(ideal, caps)
        _, values = hom_values(sub_module, regular, caps)
        elements = np.asarray(inclusion.values)
        extendable = _row_keys(_extension_rows(ring, side, elements))
        for row in np.ascontiguousarray(values, dtype=np.int64):
            if row.tobytes() not in extendable:
                return ideal, elements, row
    return None


def is_self_injective(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Baer test: every hom from a one-sided ideal into R is multiplication by some r."""
    found = nonextendable_ideal_hom(ring, side, caps)
    witness = None
    if found is not None:
        ideal, elements, row = found
        witness = f"ideal {_fmt(ideal)}, hom {dict(zip(elements.tolist(), row.tolist()))}"
    verdict = PropertyVerdict(f"self-injective-{side}", side, found is None, witness)
    logger.info(f"'{ring.label}' {side} self-injective: {verdict.value}")
    return verdict


def is_left_self_injective(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_self_injective(ring, LEFT, caps)


def is_right_self_injective(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_self_injective(ring, RIGHT, caps)


def cyclic_quotients(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> List[Tuple[Submodule, FModule]]:
    """(I, R/I) for every one-sided ideal I, in lattice order."""
    regular = regular_module(ring, side)
    return [(ideal, quotient(regular, ideal, caps, label=f"{ring.label}/{_fmt(ideal)}"))
            for ideal in ideal_lattice(ring, side, caps)]


def ext_route_self_injective(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Ext^1(R/I, R) = 0 for every one-sided ideal I."""
    regular = regular_module(ring, side)
    for ideal, cyclic in cyclic_quotients(ring, side, caps):
        group = ext1(cyclic, regular, caps)
        if not group.is_zero():
            return PropertyVerdict(f"self-injective-ext-{side}", side, False,
                                   f"|Ext1(R/{_fmt(ideal)}, R)| = {group.size}")
    return PropertyVerdict(f"self-injective-ext-{side}", side, True)


def cogenerator_conditions(cogenerator: FModule, modules: Sequence[FModule],
                           caps: Caps = DEFAULT_CAPS) -> Dict[str, Tuple[bool, Optional[str]]]:
    """The three separating conditions for K over the corpus modules of its side.

    ``separates_maps``: every nonzero f : M -> N between corpus modules has
    some g : N -> K with g o f != 0.  ``embeds_in_power``: x -> (phi(x))_phi
    into K^Hom(M, K) is injective.  ``kernels_meet_in_zero``: the kernels of
    all homs M -> K meet in zero.
    """
    same_side = [m for m in modules if m.side == cogenerator.side and m.ring is cogenerator.ring]
    common_kernels: Dict[int, np.ndarray] = {}
    embeds: Tuple[bool, Optional[str]] = (True, None)
    meets: Tuple[bool, Optional[str]] = (True, None)
    for n, module in enumerate(same_side):
        _, values = hom_values(module, cogenerator, caps)
        kernel = np.all(values == cogenerator.zero, axis=0)
        common_kernels[n] = kernel
        nonzero = np.flatnonzero(kernel & (np.arange(module.size) != module.zero))
        if nonzero.size and meets[0]:
            meets = (False, f"{module.label}: element {int(nonzero[0])} in every kernel")
        injective = np.unique(values.T, axis=0).shape[0] == module.size
        if not injective and embeds[0]:
            embeds = (False, f"{module.label}: x -> (phi(x)) is not injective")

    separates: Tuple[bool, Optional[str]] = (True, None)
    for n, target in enumerate(same_side):
        blind = common_kernels[n]
        if np.count_nonzero(blind) == 1:
            continue
        for source in [regular_module(target.ring, target.side)] + same_side:
            _, values = hom_values(source, target, caps)
            nonzero_maps = np.any(values != target.zero, axis=1)
            unseen = np.all(blind[values], axis=1) & nonzero_maps
            if unseen.any():
                separates = (False, f"nonzero map {source.label} -> {target.label} killed by every g")
                break
        if not separates[0]:
            break
    return {'separates_maps': separates, 'embeds_in_power': embeds, 'kernels_meet_in_zero': meets}


def is_fp_cogenerator(cogenerator: FModule, modules: Sequence[FModule],
                      caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Verdict by the kernel condition, with the other two conditions cross-evaluated.

    Raises:
        InvariantViolation: If the three conditions disagree.
    """
    conditions = cogenerator_conditions(cogenerator, modules, caps)
    values = {name: value for name, (value, _) in conditions.items()}
    if len(set(values.values())) > 1:
        raise InvariantViolation(f"cogenerator conditions disagree for '{cogenerator.label}': {values}")
    value, witness = conditions['kernels_meet_in_zero']
    return PropertyVerdict(f"fp-cogenerator-{cogenerator.side}", cogenerator.side, value, witness,
                           corpus_bounded=True, conditions=values,
                           note="relative to corpus")


def _has_nonzero_dual(module: FModule, caps: Caps) -> bool:
    images, _ = hom_values(module, regular_module(module.ring, module.side), caps)
    return images.shape[0] > 1


def is_kasch(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """(R/I)* != 0 for every proper one-sided ideal I.

    Computed over all proper ideals and over the maximal ones separately.

    Raises:
        InvariantViolation: If the two routes disagree.
    """
    lattice = ideal_lattice(ring, side, caps)
    maximal = {m.key for m in maximal_submodules(lattice)}
    all_route, max_route, witness = True, True, None
    for ideal, cyclic in cyclic_quotients(ring, side, caps):
        if ideal.is_whole() or _has_nonzero_dual(cyclic, caps):
            continue
        if all_route:
            witness = f"(R/{_fmt(ideal)})* = 0"
        all_route = False
        if ideal.key in maximal:
            max_route = False
    if all_route != max_route:
        raise InvariantViolation(f"Kasch routes disagree on '{ring.label}' ({side})")
    return PropertyVerdict(f"kasch-{side}", side, all_route, witness,
                           conditions={'all_proper_ideals': all_route, 'maximal_ideals': max_route})


def is_left_kasch(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_kasch(ring, LEFT, caps)


def is_right_kasch(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_kasch(ring, RIGHT, caps)


def is_semisimple(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    radical = jacobson_radical(ring)
    witness = None if radical.is_zero() else f"radical {_fmt(radical)}"
    return PropertyVerdict('semisimple', TWO_SIDED, radical.is_zero(), witness)


def is_regular_verdict(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    value = is_regular_ring(ring)
    witness = None
    if not value:
        axa = ring.mul[ring.mul, np.arange(ring.size)[:, None]]
        bad = int(np.flatnonzero(~np.any(axa == np.arange(ring.size)[:, None], axis=1))[0])
        witness = f"no x with a*x*a = a for a = {bad}"
    return PropertyVerdict('regular', TWO_SIDED, value, witness)


def is_semiregular(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """R/rad R is regular.

    True for every finite ring, since R/rad R is then semisimple.  The
    quotient is still built and tested, so a False value exposes a broken
    radical or quotient rather than a property of the ring.
    """
    radical = jacobson_radical(ring)
    value = is_regular_ring(quotient_ring(ring, radical, f"{ring.label}/rad"))
    return PropertyVerdict('semiregular', TWO_SIDED, value)


def _ideal_sum(ring: FiniteRing, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    return mask_of(ring.size, np.unique(ring.add[np.ix_(np.flatnonzero(first), np.flatnonzero(second))]))


def _intersection_sum(ring: FiniteRing, lattice: Sequence[Submodule],
                      annihilator: Callable) -> Tuple[bool, Optional[str]]:
    """ann(I cap J) = ann(I) + ann(J) over all pairs of the lattice."""
    anns = [annihilator(ring, ideal.indices).members for ideal in lattice]
    for i, first in enumerate(lattice):
        for j in range(i + 1, len(lattice)):
            second = lattice[j]
            meet = annihilator(ring, np.flatnonzero(first.members & second.members)).members
            if not np.array_equal(meet, _ideal_sum(ring, anns[i], anns[j])):
                return False, f"I={_fmt(first)}, J={_fmt(second)}"
    return True, None


def _double_annihilator(ring: FiniteRing, lattice: Sequence[Submodule], inner: Callable,
                        outer: Callable) -> Tuple[bool, Optional[str]]:
    for ideal in lattice:
        closure = outer(ring, inner(ring, ideal.indices))
        if not np.array_equal(closure.members, ideal.members):
            return False, f"{_fmt(ideal)} closes to {format_subset(closure.indices)}"
    return True, None


def annihilator_flags(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> Dict[str, Tuple[bool, Optional[str]]]:
    """The annihilator identities on both ideal lattices.

    ``intersection_sum``: l(I cap J) = l(I) + l(J) for right ideals.
    ``intersection_sum_mirror``: r(I cap J) = r(I) + r(J) for left ideals.
    ``double_annihilator_left``: l(r(I)) = I for left ideals.
    ``double_annihilator_right``: r(l(J)) = J for right ideals.
    """
    lefts = ideal_lattice(ring, LEFT, caps)
    rights = ideal_lattice(ring, RIGHT, caps)
    return {
        'intersection_sum': _intersection_sum(ring, rights, left_annihilator),
        'intersection_sum_mirror': _intersection_sum(ring, lefts, right_annihilator),
        'double_annihilator_left': _double_annihilator(ring, lefts, right_annihilator, left_annihilator),
        'double_annihilator_right': _double_annihilator(ring, rights, left_annihilator, right_annihilator),
    }


def annihilator_conditions(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Flag (a) on right ideals and flag (b) on both sides; the value is (a) and (b)."""
    flags = annihilator_flags(ring, caps)
    flag_a = flags['intersection_sum'][0]
    flag_b = flags['double_annihilator_left'][0] and flags['double_annihilator_right'][0]
    witness = next((f"{name}: {w}" for name, (v, w) in flags.items() if not v), None)
    conditions = {name: v for name, (v, _) in flags.items()}
    conditions.update({'flag_a': flag_a, 'flag_b': flag_b})
    return PropertyVerdict('annihilators', TWO_SIDED, flag_a and flag_b, witness, conditions=conditions)


def _embedding_scan(modules: Sequence[FModule], kmax: Optional[int],
                    caps: Caps) -> Tuple[bool, Optional[str], Dict[str, Optional[int]]]:
    ranks: Dict[str, Optional[int]] = {}
    for module in modules:
        rank = minimal_free_rank(module, caps)
        ranks[module.label] = rank
        if rank is None or (kmax is not None and rank > kmax):
            bound = "any rank" if rank is None else f"rank <= {kmax}"
            return False, f"{module.label} does not embed in a free module of {bound}", ranks
    return True, None, ranks


def is_if_ring(ring: FiniteRing, side: str, modules: Sequence[FModule], kmax: Optional[int] = None,
               caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Every corpus module of the side embeds in R^k, k <= kmax (None: any k)."""
    same_side = [m for m in modules if m.side == side and m.ring is ring]
    value, witness, _ = _embedding_scan(same_side, kmax, caps)
    bound = "unbounded rank" if kmax is None else f"rank <= {kmax}"
    return PropertyVerdict(f"if-{side}", side, value, witness, corpus_bounded=True,
                           note=f"relative to corpus, {bound}")


def is_left_if_ring(ring: FiniteRing, modules: Sequence[FModule], kmax: Optional[int] = None,
                    caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_if_ring(ring, LEFT, modules, kmax, caps)


def is_right_if_ring(ring: FiniteRing, modules: Sequence[FModule], kmax: Optional[int] = None,
                     caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_if_ring(ring, RIGHT, modules, kmax, caps)


def is_cf_ring(ring: FiniteRing, side: str, kmax: Optional[int] = None,
               caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Every cyclic module R/I embeds in R^k, k <= kmax (None: any k)."""
    cyclic = [m for _, m in cyclic_quotients(ring, side, caps)]
    value, witness, _ = _embedding_scan(cyclic, kmax, caps)
    return PropertyVerdict(f"cf-{side}", side, value, witness)


def is_left_cf_ring(ring: FiniteRing, kmax: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_cf_ring(ring, LEFT, kmax, caps)


def is_right_cf_ring(ring: FiniteRing, kmax: Optional[int] = None, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return is_cf_ring(ring, RIGHT, kmax, caps)


def is_fgf_ring(ring: FiniteRing, side: str, modules: Sequence[FModule],
                caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Finitely generated and finitely presented coincide here; the IF scan without a rank bound."""
    verdict = is_if_ring(ring, side, modules, None, caps)
    verdict.name = f"fgf-{side}"
    verdict.note = "relative to corpus; finitely generated modules are finitely presented over a finite ring"
    return verdict


def is_qf(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Self-injective on both sides (finite rings are noetherian)."""
    left = is_self_injective(ring, LEFT, caps)
    right = is_self_injective(ring, RIGHT, caps)
    return PropertyVerdict('qf', TWO_SIDED, left.value and right.value, left.witness or right.witness,
                           conditions={'self_injective_left': left.value, 'self_injective_right': right.value})


def is_wqf(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    """Both intersection-sum identities and both double annihilator identities.

    The conditions are flag (a) on right ideals, its mirror (a') on left
    ideals and flag (b) on both lattices.
    """
    flags = annihilator_flags(ring, caps)
    flag_a = flags['intersection_sum'][0]
    flag_a_mirror = flags['intersection_sum_mirror'][0]
    flag_b = flags['double_annihilator_left'][0] and flags['double_annihilator_right'][0]
    witness = next((f"{name}: {w}" for name, (v, w) in flags.items() if not v), None)
    return PropertyVerdict('wqf', TWO_SIDED, flag_a and flag_a_mirror and flag_b, witness,
                           conditions={'flag_a': flag_a, 'flag_a_mirror': flag_a_mirror, 'flag_b': flag_b,
                                       'double_annihilator_left': flags['double_annihilator_left'][0],
                                       'double_annihilator_right': flags['double_annihilator_right'][0]})


def socle_essential(ring: FiniteRing, side: str, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    regular = regular_module(ring, side)
    soc = socle(regular)
    value = is_essential(soc, regular)
    witness = None if value else f"socle {_fmt(soc)} is not essential"
    return PropertyVerdict(f"socle-essential-{side}", side, value, witness)


def socle_essential_left(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return socle_essential(ring, LEFT, caps)


def socle_essential_right(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> PropertyVerdict:
    return socle_essential(ring, RIGHT, caps)


def structural_constants(ring: FiniteRing) -> List[PropertyVerdict]:
    """Chain conditions that every finite ring satisfies."""
    note = "every finite ring satisfies this"
    return [PropertyVerdict(name, TWO_SIDED, True, note=note)
            for name in ('artinian', 'noetherian', 'coherent', 'semiperfect')]


@dataclass(frozen=True)
class PropertyEntry:
    """A named ring predicate; ``needs_corpus`` predicates take the module corpus."""
    func: Callable[..., PropertyVerdict]
    needs_corpus: bool = False
    description: str = ""


def _sided(func: Callable, side: str) -> Callable:
    return lambda ring, caps, kmax, modules: func(ring, side, caps)


def _cogenerator(side: str) -> Callable:
    return lambda ring, caps, kmax, modules: is_fp_cogenerator(regular_module(ring, side), modules, caps)


PROPERTIES: Dict[str, PropertyEntry] = {
    'annihilators': PropertyEntry(lambda ring, caps, kmax, modules: annihilator_conditions(ring, caps),
                                  description="annihilator identities on ideal lattices"),
    'cf-left': PropertyEntry(lambda ring, caps, kmax, modules: is_cf_ring(ring, LEFT, kmax, caps),
                             description="every cyclic left module embeds in a free module"),
    'cf-right': PropertyEntry(lambda ring, caps, kmax, modules: is_cf_ring(ring, RIGHT, kmax, caps),
                              description="every cyclic right module embeds in a free module"),
    'fgf-left': PropertyEntry(lambda ring, caps, kmax, modules: is_fgf_ring(ring, LEFT, modules, caps), True,
                              "every corpus left module embeds in a free module"),
    'fgf-right': PropertyEntry(lambda ring, caps, kmax, modules: is_fgf_ring(ring, RIGHT, modules, caps), True,
                               "every corpus right module embeds in a free module"),
    'fp-cogenerator-left': PropertyEntry(_cogenerator(LEFT), True, "the left regular module separates corpus modules"),
    'fp-cogenerator-right': PropertyEntry(_cogenerator(RIGHT), True, "the right regular module separates corpus modules"),
    'if-left': PropertyEntry(lambda ring, caps, kmax, modules: is_if_ring(ring, LEFT, modules, kmax, caps), True,
                             "every corpus left module embeds in R^k, k <= kmax"),
    'if-right': PropertyEntry(lambda ring, caps, kmax, modules: is_if_ring(ring, RIGHT, modules, kmax, caps), True,
                              "every corpus right module embeds in R^k, k <= kmax"),
    'kasch-left': PropertyEntry(_sided(is_kasch, LEFT), description="every simple left module has a nonzero dual"),
    'kasch-right': PropertyEntry(_sided(is_kasch, RIGHT), description="every simple right module has a nonzero dual"),
    'qf': PropertyEntry(lambda ring, caps, kmax, modules: is_qf(ring, caps), description="self-injective on both sides"),
    'regular': PropertyEntry(lambda ring, caps, kmax, modules: is_regular_verdict(ring, caps),
                             description="von Neumann regular"),
    'self-injective-ext-left': PropertyEntry(_sided(ext_route_self_injective, LEFT),
                                             description="Ext1(R/I, R) = 0 for every left ideal"),
    'self-injective-ext-right': PropertyEntry(_sided(ext_route_self_injective, RIGHT),
                                              description="Ext1(R/I, R) = 0 for every right ideal"),
    'self-injective-left': PropertyEntry(_sided(is_self_injective, LEFT), description="Baer test on left ideals"),
    'self-injective-right': PropertyEntry(_sided(is_self_injective, RIGHT), description="Baer test on right ideals"),
    'semiregular': PropertyEntry(lambda ring, caps, kmax, modules: is_semiregular(ring, caps),
                                 description="R/rad R is regular; holds for every finite ring"),
    'semisimple': PropertyEntry(lambda ring, caps, kmax, modules: is_semisimple(ring, caps),
                                description="the Jacobson radical is zero"),
    'socle-essential-left': PropertyEntry(_sided(socle_essential, LEFT),
                                          description="the left socle is essential"),
    'socle-essential-right': PropertyEntry(_sided(socle_essential, RIGHT),
                                           description="the right socle is essential"),
    'wqf': PropertyEntry(lambda ring, caps, kmax, modules: is_wqf(ring, caps),
                         description="intersection-sum and double annihilator identities on both sides"),
}


def evaluate_property(name: str, ring: FiniteRing, caps: Caps = DEFAULT_CAPS,
                      modules: Sequence[FModule] = ()) -> PropertyVerdict:
    """Run a registered predicate.

    Raises:
        KeyError: If the name is not registered.
    """
    entry = PROPERTIES[name]
    return entry.func(ring, caps, caps.kmax, modules)
