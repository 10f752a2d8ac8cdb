#!/usr/bin/env python3
"""
Theorem checks
Each check evaluates the conditions of one equivalence on one ring and
records whether they agree.

Conditions are tagged:
  exact           decided over every ideal / cyclic module of the ring
  corpus_bounded  decided over the ring's module corpus only
  observed        recorded, takes part in no equivalence
  not_evaluated   out of reach (needs infinite constructions or exceeds a cap)
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.logging_config import get_logger
from algebra.caps import Caps, DEFAULT_CAPS
from algebra.errors import SizeOverflow
from algebra.homological import (hom_values, is_fp_flat, is_fp_injective_mod, is_reflexive, is_semireflexive,
                                 minimal_free_rank)
from algebra.modules import (LEFT, RIGHT, SIDES, FModule, cyclic_submodules, free_module, quotient_with_map,
                             regular_module)
from algebra.properties import (annihilator_flags, cogenerator_conditions, ext_route_self_injective, is_cf_ring,
                                is_fgf_ring, is_if_ring, is_kasch, is_qf, is_regular_verdict, is_self_injective,
                                is_semiregular, is_semisimple, is_wqf, socle_essential)
from .corpus import RingCorpus

logger = get_logger(__name__)

EXACT = 'exact'
CORPUS_BOUNDED = 'corpus_bounded'
OBSERVED = 'observed'
NOT_EVALUATED = 'not_evaluated'

CORPUS_NOTE = "corpus-bounded conditions are relative to the ring's module corpus"
FLAT_NOTE = "free modules stand in for flat modules (finitely generated flat = projective here)"

Outcome = Tuple[bool, Optional[str]]


@dataclass
class ConditionValue:
    """One named condition of a theorem report."""
    name: str
    value: Optional[bool]
    tag: str
    witness: Optional[str] = None
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'value': self.value, 'exactness': self.tag, 'witness': self.witness, 'note': self.note}


@dataclass
class TheoremReport:
    """Condition vector of one theorem on one ring (and subject, where the check has one)."""
    theorem_id: str
    ring: str
    conditions: List[ConditionValue]
    agreement: bool
    witnesses: Dict[str, str] = field(default_factory=dict)
    subject: str = ""
    notes: List[str] = field(default_factory=list)

    def condition(self, name: str) -> ConditionValue:
        for cond in self.conditions:
            if cond.name == name:
                return cond
        raise KeyError(name)

    def sort_key(self) -> Tuple[str, str, str]:
        return (self.ring, self.theorem_id, self.subject)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'theorem_id': self.theorem_id,
            'ring': self.ring,
            'subject': self.subject,
            'conditions': {c.name: c.to_dict() for c in self.conditions},
            'agreement': self.agreement,
            'witnesses': dict(self.witnesses),
            'notes': list(self.notes),
        }


def agreement_of(conditions: Sequence[ConditionValue]) -> bool:
    """All exact values equal and no corpus-bounded value False against a True exact value.

    Without exact conditions, all corpus-bounded values must be equal.
    """
    exact = [c.value for c in conditions if c.tag == EXACT]
    bounded = [c.value for c in conditions if c.tag == CORPUS_BOUNDED]
    if exact:
        if len(set(exact)) > 1:
            return False
        return not (exact[0] and any(v is False for v in bounded))
    return len(set(bounded)) <= 1


def make_report(theorem_id: str, ring_label: str, conditions: Sequence[ConditionValue],
                subject: str = "", notes: Sequence[str] = ()) -> TheoremReport:
    witnesses = {c.name: c.witness for c in conditions if c.value is False and c.witness}
    report = TheoremReport(theorem_id, ring_label, list(conditions), agreement_of(conditions),
                           witnesses, subject, list(notes))
    level = 'info' if report.agreement else 'warning'
    getattr(logger, level)(f"{theorem_id} on '{ring_label}'{' [' + subject + ']' if subject else ''}: "
                           f"agreement={report.agreement}")
    return report


def evaluate(name: str, tag: str, compute: Callable[[], Outcome]) -> ConditionValue:
    """Run one condition; a cap overflow turns it into a not-evaluated entry."""
    try:
        value, witness = compute()
    except SizeOverflow as e:
        logger.warning(f"Condition '{name}' not evaluated: {e}")
        return ConditionValue(name, None, NOT_EVALUATED, note=str(e))
    return ConditionValue(name, bool(value), tag, witness)


def not_evaluated(name: str, note: str) -> ConditionValue:
    return ConditionValue(name, None, NOT_EVALUATED, note=note)


def _verdict(verdict) -> Outcome:
    return verdict.value, verdict.witness


def _all_of(items: Sequence[Tuple[str, Outcome]]) -> Outcome:
    for _, (value, witness) in items:
        if not value:
            return False, witness
    return True, None


# ---- module-level scans --------------------------------------------------


def _first_failure(modules: Sequence[FModule], predicate: Callable[[FModule], bool], what: str) -> Outcome:
    for module in modules:
        if not predicate(module):
            return False, f"{module.label} {what}"
    return True, None


def dual_epi_scan(modules: Sequence[FModule], caps: Caps = DEFAULT_CAPS) -> Outcome:
    """Projections M -> M/S with S nonzero cyclic: pi* onto would force pi injective.

    pi* is injective because pi is onto, so pi* is onto exactly when the two
    duals have the same size.
    """
    for module in modules:
        dual_size = hom_values(module, regular_module(module.ring, module.side), caps)[0].shape[0]
        for sub in cyclic_submodules(module):
            if sub.is_zero():
                continue
            image, _ = quotient_with_map(module, sub, caps)
            image_dual = hom_values(image, regular_module(module.ring, module.side), caps)[0].shape[0]
            if image_dual == dual_size:
                return False, f"{module.label} -> {image.label}: dual map onto, map not injective"
    return True, None


def embeds_in_flat_scan(modules: Sequence[FModule], flat_candidates: Sequence[FModule],
                        caps: Caps = DEFAULT_CAPS) -> Outcome:
    """Each module embeds in a free module or in one of the flat candidates."""
    for module in modules:
        if minimal_free_rank(module, caps) is not None:
            continue
        found = False
        for target in flat_candidates:
            _, values = hom_values(module, target, caps)
            if values.shape[1] <= 1 or np.any(np.all(np.diff(np.sort(values, axis=1), axis=1) != 0, axis=1)):
                found = True
                break
        if not found:
            return False, f"{module.label} embeds in no flat module tried"
    return True, None


def _fp_flat_modules(rc: RingCorpus, side: str) -> List[FModule]:
    others = rc.side_monos(RIGHT if side == LEFT else LEFT)
    return [m for m in rc.side_modules(side) if is_fp_flat(m, others, rc.caps)]


def injective_are_flat_scan(rc: RingCorpus, side: str) -> Outcome:
    """Corpus modules that are fp-injective are fp-flat."""
    same, other = rc.side_monos(side), rc.side_monos(RIGHT if side == LEFT else LEFT)
    for module in rc.side_modules(side):
        if is_fp_injective_mod(module, same, rc.caps) and not is_fp_flat(module, other, rc.caps):
            return False, f"{module.label} is fp-injective but not fp-flat"
    return True, None


def free_are_fp_injective_scan(rc: RingCorpus, side: str) -> Outcome:
    """R^1 and, for small rings, R^2 are fp-injective over the side's monos."""
    ranks = [1] + ([2] if rc.ring.size ** 2 <= rc.caps.max_module and rc.ring.size <= 32 else [])
    for k in ranks:
        free = free_module(rc.ring, side, k, rc.caps)
        if not is_fp_injective_mod(free, rc.side_monos(side), rc.caps):
            return False, f"{free.label} is not fp-injective"
    return True, None


def _cyclic_modules(rc: RingCorpus, side: str) -> List[FModule]:
    return [m for _, m in rc.cyclic.get(side, [])]


# ---- theorem checks ------------------------------------------------------


def cogenerator_subjects(rc: RingCorpus) -> List[FModule]:
    """The regular modules and every cyclic module, on both sides."""
    return [m for side in SIDES for m in _cyclic_modules(rc, side)]


def check_lemma_fp_cogenerator(cogenerator: FModule, rc: RingCorpus) -> TheoremReport:
    """Separating maps, embedding in a power, and kernels meeting in zero agree for K."""
    conds = cogenerator_conditions(cogenerator, rc.side_modules(cogenerator.side), rc.caps)
    conditions = [ConditionValue(name, value, CORPUS_BOUNDED, witness) for name, (value, witness) in conds.items()]
    return make_report('lemma-fp-cogenerator', rc.ring.label, conditions, subject=cogenerator.label,
                       notes=[CORPUS_NOTE])


def check_thm_fp_injective(rc: RingCorpus) -> TheoremReport:
    """R_R FP-injective against the left-module characterizations."""
    ring, caps = rc.ring, rc.caps
    lefts = rc.side_modules(LEFT)
    conditions = [
        evaluate('right_fp_injective', EXACT, lambda: _verdict(is_self_injective(ring, RIGHT, caps))),
        evaluate('left_fp_cogenerator', CORPUS_BOUNDED, lambda: cogenerator_conditions(
            regular_module(ring, LEFT), lefts, caps)['kernels_meet_in_zero']),
        evaluate('dual_epi_implies_mono', CORPUS_BOUNDED, lambda: dual_epi_scan(lefts, caps)),
        evaluate('fp_semireflexive', CORPUS_BOUNDED, lambda: _first_failure(
            lefts, lambda m: is_semireflexive(m, caps), "is not semireflexive")),
        evaluate('embeds_in_fp_flat', CORPUS_BOUNDED, lambda: embeds_in_flat_scan(
            lefts, _fp_flat_modules(rc, LEFT), caps)),
        evaluate('fp_injective_is_fp_flat', CORPUS_BOUNDED, lambda: injective_are_flat_scan(rc, LEFT)),
        evaluate('flat_is_fp_injective', CORPUS_BOUNDED, lambda: free_are_fp_injective_scan(rc, RIGHT)),
        not_evaluated('fp_flat_fp_cogenerator_exists', "needs modules outside the finitely presented corpus"),
        not_evaluated('fp_flat_cogenerator_exists', "needs injective cogenerators (infinite products)"),
        not_evaluated('injective_embeds_in_fp_flat', "needs injective hulls"),
        not_evaluated('injective_is_fp_flat', "needs injective hulls"),
        not_evaluated('indecomposable_injective_is_fp_flat', "needs injective hulls"),
    ]
    return make_report('thm-fp-injective', ring.label, conditions, notes=[CORPUS_NOTE, FLAT_NOTE])


def check_thm_wqf(rc: RingCorpus) -> TheoremReport:
    """Characterizations of WQF rings; every finite ring is two-sided coherent."""
    ring, caps = rc.ring, rc.caps

    def cogenerator(side: str) -> Outcome:
        return cogenerator_conditions(regular_module(ring, side), rc.side_modules(side), caps)['kernels_meet_in_zero']

    def right_injective_cogenerator() -> Outcome:
        baer = is_self_injective(ring, RIGHT, caps)
        return _all_of([('baer', _verdict(baer)), ('cogenerator', cogenerator(RIGHT))])

    def reflexive(modules: Sequence[FModule]) -> Outcome:
        return _first_failure(modules, lambda m: is_reflexive(m, caps), "is not reflexive")

    conditions = [
        evaluate('two_sided_fp_injective', EXACT, lambda: _verdict(is_qf(ring, caps))),
        evaluate('fp_cogenerator_left', CORPUS_BOUNDED, lambda: cogenerator(LEFT)),
        evaluate('fp_cogenerator_right', CORPUS_BOUNDED, lambda: cogenerator(RIGHT)),
        evaluate('right_fp_injective_cogenerator', CORPUS_BOUNDED, right_injective_cogenerator),
        evaluate('corpus_reflexive', CORPUS_BOUNDED, lambda: reflexive(rc.all_modules())),
        evaluate('cyclic_reflexive', EXACT, lambda: reflexive(
            _cyclic_modules(rc, LEFT) + _cyclic_modules(rc, RIGHT))),
        evaluate('cyclic_embeds_in_free', EXACT, lambda: _all_of([
            (side, _verdict(is_cf_ring(ring, side, None, caps))) for side in SIDES])),
        evaluate('annihilator_identities', EXACT, lambda: _verdict(is_wqf(ring, caps))),
    ]
    return make_report('thm-wqf', ring.label, conditions,
                       notes=[CORPUS_NOTE, "WQF itself coincides with two-sided FP-injectivity for coherent rings"])


def check_prop_annihilators(rc: RingCorpus) -> TheoremReport:
    """Right self-injectivity against the annihilator identities and the Ext route."""
    ring, caps = rc.ring, rc.caps
    flags = annihilator_flags(ring, caps)
    flag_a = flags['intersection_sum']
    flag_b = _all_of([('left', flags['double_annihilator_left']), ('right', flags['double_annihilator_right'])])
    conditions = [
        evaluate('right_baer', EXACT, lambda: _verdict(is_self_injective(ring, RIGHT, caps))),
        ConditionValue('annihilator_flags', flag_a[0] and flag_b[0], EXACT, flag_a[1] or flag_b[1]),
        evaluate('ext_route_right', EXACT, lambda: _verdict(ext_route_self_injective(ring, RIGHT, caps))),
        ConditionValue('flag_a', flag_a[0], OBSERVED, flag_a[1]),
        ConditionValue('flag_b', flag_b[0], OBSERVED, flag_b[1]),
        ConditionValue('flag_a_mirror', flags['intersection_sum_mirror'][0], OBSERVED,
                       flags['intersection_sum_mirror'][1]),
    ]
    return make_report('prop-annihilators', ring.label, conditions)


def check_thm_if_wqf(rc: RingCorpus) -> TheoremReport:
    """WQF against two-sided IF and against left FP-injective plus left CF."""
    ring, caps = rc.ring, rc.caps

    def injective_cf() -> Outcome:
        return _all_of([('baer', _verdict(is_self_injective(ring, LEFT, caps))),
                        ('cf', _verdict(is_cf_ring(ring, LEFT, None, caps)))])

    conditions = [
        evaluate('wqf', EXACT, lambda: _verdict(is_wqf(ring, caps))),
        evaluate('if_left', CORPUS_BOUNDED, lambda: _verdict(is_if_ring(ring, LEFT, rc.side_modules(LEFT), None, caps))),
        evaluate('if_right', CORPUS_BOUNDED,
                 lambda: _verdict(is_if_ring(ring, RIGHT, rc.side_modules(RIGHT), None, caps))),
        evaluate('left_fp_injective_cf', EXACT, injective_cf),
        evaluate('if_left_within_kmax', OBSERVED,
                 lambda: _verdict(is_if_ring(ring, LEFT, rc.side_modules(LEFT), caps.kmax, caps))),
        evaluate('if_right_within_kmax', OBSERVED,
                 lambda: _verdict(is_if_ring(ring, RIGHT, rc.side_modules(RIGHT), caps.kmax, caps))),
    ]
    return make_report('thm-if-wqf', ring.label, conditions,
                       notes=[CORPUS_NOTE, f"IF conditions search all ranks; rank <= {caps.kmax} is observed"])


def check_prop_if_embedding(rc: RingCorpus) -> TheoremReport:
    """Left IF against embeddings of corpus modules into flat modules."""
    ring, caps = rc.ring, rc.caps
    lefts = rc.side_modules(LEFT)
    conditions = [
        evaluate('if_left', CORPUS_BOUNDED, lambda: _verdict(is_if_ring(ring, LEFT, lefts, None, caps))),
        evaluate('embeds_in_flat', CORPUS_BOUNDED, lambda: embeds_in_flat_scan(
            lefts, _fp_flat_modules(rc, LEFT), caps)),
        evaluate('fp_injective_is_flat', OBSERVED, lambda: injective_are_flat_scan(rc, LEFT)),
        not_evaluated('injective_is_flat', "coincides with fp_injective_is_flat for finitely generated modules"),
    ]
    return make_report('prop-if-embedding', ring.label, conditions,
                       notes=[CORPUS_NOTE, "fp-flat over every ideal inclusion is flat (ideal criterion)"])


def check_finite_collapse(rc: RingCorpus) -> TheoremReport:
    """Statements every finite ring satisfies; any False is a defect."""
    ring, caps = rc.ring, rc.caps
    kasch = {side: is_kasch(ring, side, caps).value for side in SIDES}
    cf = {side: is_cf_ring(ring, side, None, caps).value for side in SIDES}
    qf = is_qf(ring, caps).value
    wqf = is_wqf(ring, caps).value
    semisimple = is_semisimple(ring, caps).value
    regular = is_regular_verdict(ring, caps).value

    def implies(a: bool, b: bool, text: str) -> Outcome:
        return (not a or b), (None if (not a or b) else text)

    def routes_agree(side: str) -> Outcome:
        baer = is_self_injective(ring, side, caps).value
        ext = ext_route_self_injective(ring, side, caps).value
        return baer == ext, None if baer == ext else f"Baer {baer}, Ext {ext}"

    conditions = [
        evaluate('semiregular', EXACT, lambda: _verdict(is_semiregular(ring, caps))),
        evaluate('socle_essential_left', EXACT, lambda: _verdict(socle_essential(ring, LEFT, caps))),
        evaluate('socle_essential_right', EXACT, lambda: _verdict(socle_essential(ring, RIGHT, caps))),
        ConditionValue('artinian', True, EXACT, note="every finite ring"),
        ConditionValue('noetherian', True, EXACT, note="every finite ring"),
        ConditionValue('cf_left_implies_kasch_left', *implies(cf[LEFT], kasch[LEFT], "left CF, not left Kasch"), EXACT),
        ConditionValue('cf_right_implies_kasch_right', *implies(cf[RIGHT], kasch[RIGHT], "right CF, not right Kasch"),
                       EXACT),
        ConditionValue('qf_implies_kasch', *implies(qf, kasch[LEFT] and kasch[RIGHT], "QF, not Kasch"), EXACT),
        ConditionValue('regular_implies_semisimple', *implies(regular, semisimple, "regular, not semisimple"), EXACT),
        ConditionValue('semisimple_implies_qf', *implies(semisimple, qf, "semisimple, not QF"), EXACT),
        ConditionValue('qf_equals_wqf', qf == wqf, EXACT, None if qf == wqf else f"QF {qf}, WQF {wqf}"),
        evaluate('baer_matches_ext_left', EXACT, lambda: routes_agree(LEFT)),
        evaluate('baer_matches_ext_right', EXACT, lambda: routes_agree(RIGHT)),
        ConditionValue('right_self_injective_gives_annihilators', *implies(
            is_self_injective(ring, RIGHT, caps).value, annihilator_flags_hold(ring, caps),
            "right self-injective without the annihilator identities"), EXACT),
        evaluate('fgf_left', OBSERVED, lambda: _verdict(is_fgf_ring(ring, LEFT, rc.side_modules(LEFT), caps))),
        evaluate('fgf_right', OBSERVED, lambda: _verdict(is_fgf_ring(ring, RIGHT, rc.side_modules(RIGHT), caps))),
    ]
    return make_report('finite-collapse', ring.label, conditions,
                       notes=["chain conditions and semiperfectness hold for every finite ring"])


def annihilator_flags_hold(ring, caps: Caps = DEFAULT_CAPS) -> bool:
    flags = annihilator_flags(ring, caps)
    return (flags['intersection_sum'][0] and flags['double_annihilator_left'][0]
            and flags['double_annihilator_right'][0])


RING_CHECKS: Dict[str, Callable[[RingCorpus], TheoremReport]] = {
    'finite-collapse': check_finite_collapse,
    'prop-annihilators': check_prop_annihilators,
    'prop-if-embedding': check_prop_if_embedding,
    'thm-fp-injective': check_thm_fp_injective,
    'thm-if-wqf': check_thm_if_wqf,
    'thm-wqf': check_thm_wqf,
}


def run_ring_theorem(theorem_id: str, rc: RingCorpus) -> List[TheoremReport]:
    """All reports of one per-ring theorem (one per subject for the cogenerator lemma)."""
    if theorem_id == 'lemma-fp-cogenerator':
        return [check_lemma_fp_cogenerator(k, rc) for k in cogenerator_subjects(rc)]
    return [RING_CHECKS[theorem_id](rc)]
