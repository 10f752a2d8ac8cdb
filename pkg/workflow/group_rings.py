#!/usr/bin/env python3
"""
Group-ring checks
Lifting jointly injective R-maps on a right R(G)-module to an
R(G)-monomorphism, generated lift cases, and the biconditionals tying
properties of R(G) to properties of R and G.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from config.logging_config import get_logger
from algebra.caps import Caps, DEFAULT_CAPS
from algebra.constructors import group_ring
from algebra.errors import (ActionMismatch, InvariantViolation, NotAGroupRing, NotAHomomorphism,
                            NotJointlyInjective, SideMismatch, SizeOverflow)
from algebra.groups import FiniteGroup, subgroup_orders, subgroups
from algebra.homological import free_rank_witness
from algebra.modules import (LEFT, RIGHT, FModule, ModuleHom, Submodule, free_module, quotient, regular_module,
                             restrict_scalars, whole_submodule, zero_hom)
from algebra.properties import is_if_ring, is_self_injective, is_semisimple, is_wqf
from algebra.rings import FiniteRing, is_invertible_scalar, is_regular_ring, left_annihilator, omega_ideal, units
from .corpus import CorpusSettings, build_ring_corpus
from .theorems import (CORPUS_BOUNDED, EXACT, OBSERVED, ConditionValue, Outcome, TheoremReport, evaluate,
                       make_report, not_evaluated)

logger = get_logger(__name__)


def _check_components(components: Sequence[ModuleHom], module: FModule) -> np.ndarray:
    """Validate the R-maps against the R(G)-module; returns the embedding R -> R(G)."""
    data = module.ring.group_ring_of
    if data is None:
        raise NotAGroupRing(f"'{module.ring.label}' was not constructed as a group ring")
    if module.side != RIGHT:
        raise SideMismatch("the lift is defined for right R(G)-modules")
    base = data.base
    embed = np.array([data.scalar(r) for r in range(base.size)])
    target = regular_module(base, RIGHT)
    for i, f in enumerate(components):
        src = f.source
        if src.ring is not base or src.side != RIGHT or f.target is not target:
            raise ActionMismatch(f"component {i} is not a map of right {base.label}-modules into {base.label}")
        if src.size != module.size or not np.array_equal(src.add, module.add) \
                or not np.array_equal(src.act, module.act[embed, :]):
            raise ActionMismatch(f"component {i} acts on '{src.label}', not on the restriction of '{module.label}'")
    return embed


def common_kernel_witness(components: Sequence[ModuleHom], module: FModule) -> Optional[int]:
    """First nonzero element killed by every component, or None."""
    killed = np.arange(module.size) != module.zero
    for f in components:
        killed &= f.values == f.target.zero
    hits = np.flatnonzero(killed)
    return int(hits[0]) if hits.size else None


def lift_codes(components: Sequence[ModuleHom], module: FModule) -> List[np.ndarray]:
    """Per component, the element of R(G) given by sum over g of f(x g) g^-1."""
    data = module.ring.group_ring_of
    group, n = data.group, data.base.size
    lifted = []
    for f in components:
        codes = np.zeros(module.size, dtype=np.int64)
        for g in range(group.size):
            moved = module.act[data.group_element(g), :]
            codes += f.values[moved].astype(np.int64) * n ** int(group.inv[g])
        lifted.append(codes)
    return lifted


def assemble_lift(components: Sequence[ModuleHom], module: FModule, caps: Caps = DEFAULT_CAPS) -> ModuleHom:
    """The map M -> R(G)^I built from the lifted components, unverified."""
    _check_components(components, module)
    target = free_module(module.ring, RIGHT, len(components), caps)
    values = np.zeros(module.size, dtype=np.int64)
    for i, codes in enumerate(lift_codes(components, module)):
        values += codes * module.ring.size ** i
    return ModuleHom(module, target, values)


def group_ring_lift(components: Sequence[ModuleHom], module: FModule,
                    group: Optional[FiniteGroup] = None, caps: Caps = DEFAULT_CAPS) -> ModuleHom:
    """Lift jointly injective R-maps f_i : M -> R to an R(G)-monomorphism M -> R(G)^I.

    Args:
        components: R-linear maps out of the restriction of ``module`` to R.
        module: A right R(G)-module.
        group: When given, must be the group R(G) was built from.

    Raises:
        NotAGroupRing: If the module's ring was not built as a group ring.
        ActionMismatch: If a component does not act on the restriction of the module.
        NotJointlyInjective: If the components share a nonzero kernel element.
        InvariantViolation: If the lift fails to be R(G)-linear or injective.
    """
    _check_components(components, module)
    data = module.ring.group_ring_of
    if group is not None and group is not data.group:
        raise ActionMismatch(f"'{module.ring.label}' is not built from group '{group.label}'")
    witness = common_kernel_witness(components, module)
    if witness is not None:
        raise NotJointlyInjective(f"element {witness} of '{module.label}' is killed by every component", witness)
    hom = assemble_lift(components, module, caps)
    try:
        hom.verify()
    except NotAHomomorphism as e:
        raise InvariantViolation(f"lift on '{module.label}' is not {module.ring.label}-linear: {e}") from e
    if not hom.is_injective():
        raise InvariantViolation(f"lift on '{module.label}' is not injective")
    logger.debug(f"Lifted {len(components)} components on '{module.label}' into {hom.target.label}")
    return hom


@dataclass
class LiftCase:
    """A right R(G)-module with a jointly injective tuple of R-maps on it."""
    label: str
    module: FModule
    components: List[ModuleHom]


def coefficient_projections(module: FModule, caps: Caps = DEFAULT_CAPS) -> List[ModuleHom]:
    """x -> coefficient of g in x, for the regular right R(G)-module."""
    data = module.ring.group_ring_of
    rest = restrict_scalars(module, caps)
    target = regular_module(data.base, RIGHT)
    n = data.base.size
    xs = np.arange(module.size)
    return [ModuleHom(rest, target, (xs // n ** g) % n) for g in range(data.group.size)]


def _case_modules(rg: FiniteRing, caps: Caps) -> List[FModule]:
    regular = regular_module(rg, RIGHT)
    modules = [regular]
    seen = set()
    for sub in subgroups(rg.group_ring_of.group)[1:]:
        ideal = omega_ideal(rg, sub)
        if ideal.key in seen:
            continue
        seen.add(ideal.key)
        modules.append(quotient(regular, Submodule(regular, ideal.members), caps,
                                label=f"{rg.label}/w{sub.size}"))
    modules.append(quotient(regular, whole_submodule(regular), caps, label=f"{rg.label}/1"))
    return modules


def generate_lift_cases(base: FiniteRing, group: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> List[LiftCase]:
    """Deterministic lift cases over R(G).

    Modules are R(G) itself, R(G) modulo each augmentation ideal of a
    nontrivial subgroup, and zero. Tuples are a least embedding of the
    restriction into a free R-module, the same padded with a zero map or
    with a repeated component, and, for R(G), the coefficient projections.
    """
    rg = group_ring(base, group, f"{base.label}-{group.label}", max_size=caps.max_ring, caps=caps)
    cases = []
    for module in _case_modules(rg, caps):
        rest = restrict_scalars(module, caps)
        target = regular_module(base, RIGHT)
        rank, homs, dual = free_rank_witness(rest, caps)
        tuples = []
        if rank == 0:
            tuples.append(('least', [zero_hom(rest, target)]))
        elif rank is not None:
            least = [dual.hom(h) for h in homs]
            tuples += [('least', least), ('padded', least + [zero_hom(rest, target)]),
                       ('repeated', least + [least[0]])]
        if module is regular_module(rg, RIGHT):
            tuples.append(('coefficients', coefficient_projections(module, caps)))
        for name, components in tuples:
            if rg.size ** len(components) > caps.max_module:
                logger.debug(f"Skipping lift case {module.label}:{name}, {rg.size}^{len(components)} over cap")
                continue
            cases.append(LiftCase(f"{module.label}:{name}", module, components))
    logger.info(f"Generated {len(cases)} lift cases over '{rg.label}'")
    return cases


def check_group_ring_lift(case: LiftCase, caps: Caps = DEFAULT_CAPS) -> TheoremReport:
    """The lift is R(G)-linear, injective, and its identity coefficients give back the f_i."""
    module = case.module
    data = module.ring.group_ring_of
    n = data.base.size
    witness = common_kernel_witness(case.components, module)
    if witness is not None:
        raise NotJointlyInjective(f"case {case.label} is not jointly injective", witness)
    hom = assemble_lift(case.components, module, caps)
    try:
        hom.verify()
        linear: Outcome = (True, None)
    except NotAHomomorphism as e:
        linear = (False, str(e))
    injective = hom.is_injective()
    codes = lift_codes(case.components, module)
    e = data.group.identity
    recovered = all(np.array_equal((c // n ** e) % n, f.values) for c, f in zip(codes, case.components))
    conditions = [
        ConditionValue('lifts_linear', *linear, EXACT),
        ConditionValue('lifts_injective', injective, EXACT, None if injective else "nonzero kernel"),
        ConditionValue('identity_coefficient_recovers', recovered, EXACT,
                       None if recovered else "identity coefficient differs from a component"),
    ]
    if data.group.size == 1:
        same = all(np.array_equal(c, f.values) for c, f in zip(codes, case.components))
        conditions.append(ConditionValue('trivial_group_identity', same, EXACT,
                                         None if same else "lift differs from the components"))
    return make_report('group-ring-lift', module.ring.label, conditions, subject=case.label)


def _is_field(ring: FiniteRing) -> bool:
    return ring.size > 1 and units(ring).size == ring.size - 1


def check_group_ring_theorems(base: FiniteRing, group: FiniteGroup, settings: Optional[CorpusSettings] = None,
                              caps: Caps = DEFAULT_CAPS) -> TheoremReport:
    """Self-injectivity, WQF, Maschke, regularity and IF of R(G) against R and G."""
    label = f"{base.label}-{group.label}"
    names = ('self_injective_left', 'self_injective_right', 'wqf', 'maschke', 'regularity',
             'omega_annihilator', 'if_left')
    try:
        rg = group_ring(base, group, label, max_size=caps.max_ring, caps=caps)
    except SizeOverflow as e:
        logger.warning(f"Group ring '{label}' not built: {e}")
        return make_report('group-ring', label, [not_evaluated(n, str(e)) for n in names])

    def exact(name: str, compute) -> ConditionValue:
        cond = evaluate(name, EXACT, lambda: (compute(), None))
        if cond.value is False:
            cond.witness = f"{name} fails on {label}"
        return cond

    def self_injective(side: str) -> Outcome:
        mine, theirs = is_self_injective(rg, side, caps), is_self_injective(base, side, caps)
        return mine.value == theirs.value, None if mine.value == theirs.value else mine.witness or theirs.witness

    def maschke() -> bool:
        criterion = is_semisimple(base, caps).value and is_invertible_scalar(base, group.size)
        return is_semisimple(rg, caps).value == criterion

    def regularity() -> bool:
        criterion = is_regular_ring(base) and all(is_invertible_scalar(base, h) for h in subgroup_orders(group))
        return is_regular_ring(rg) == criterion

    def omega_annihilator() -> bool:
        return all(not left_annihilator(rg, omega_ideal(rg, sub)).is_zero() for sub in subgroups(group)[1:])

    def if_left() -> Outcome:
        settings_ = settings or CorpusSettings()
        mine = is_if_ring(rg, LEFT, build_ring_corpus(rg, settings_, caps).side_modules(LEFT), None, caps)
        theirs = is_if_ring(base, LEFT, build_ring_corpus(base, settings_, caps).side_modules(LEFT), None, caps)
        return mine.value == theirs.value, mine.witness or theirs.witness

    conditions = [
        evaluate('self_injective_left', EXACT, lambda: self_injective(LEFT)),
        evaluate('self_injective_right', EXACT, lambda: self_injective(RIGHT)),
        exact('wqf', lambda: is_wqf(rg, caps).value == is_wqf(base, caps).value),
        exact('maschke', maschke),
        exact('regularity', regularity),
        exact('omega_annihilator', omega_annihilator),
        evaluate('if_left', CORPUS_BOUNDED, if_left),
    ]
    try:
        raw = {'group_ring_self_injective': is_self_injective(rg, LEFT, caps).value,
               'group_ring_wqf': is_wqf(rg, caps).value,
               'group_ring_semisimple': is_semisimple(rg, caps).value,
               'group_ring_regular': is_regular_ring(rg)}
    except SizeOverflow as e:
        conditions.append(not_evaluated('group_ring_raw', str(e)))
    else:
        conditions += [ConditionValue(k, v, OBSERVED) for k, v in raw.items()]
        if _is_field(base) and not is_invertible_scalar(base, group.size):
            example = raw['group_ring_wqf'] and not raw['group_ring_semisimple'] and not raw['group_ring_regular']
            conditions.append(ConditionValue('finite_example', example, OBSERVED,
                                             note="characteristic divides |G|: WQF, neither semisimple nor regular"))
    return make_report('group-ring', label, conditions)
