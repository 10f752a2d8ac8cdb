#!/usr/bin/env python3
"""
Harness runner
Plans (ring, theorem) tasks, runs them inline or on a process pool, and
returns the reports in a deterministic order.
"""

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from config.logging_config import get_logger
from algebra.caps import Caps, DEFAULT_CAPS
from algebra.errors import SizeOverflow
from .catalog import (DEFAULT_GROUP_RING_BASES, DEFAULT_GROUPS, DEFAULT_LIFT_BASES, DEFAULT_LIFT_GROUPS,
                      DEFAULT_RINGS, GROUP_THEOREMS, HarnessError, check_theorem_id, resolve_group, resolve_ring)
from .corpus import CorpusSettings, RingCorpus, build_ring_corpus
from .group_rings import check_group_ring_lift, check_group_ring_theorems, generate_lift_cases
from .theorems import TheoremReport, make_report, not_evaluated, run_ring_theorem

logger = get_logger(__name__)


@dataclass(frozen=True)
class SelectorDefaults:
    """Selectors used when a run names no rings or groups."""
    rings: Tuple[str, ...] = tuple(DEFAULT_RINGS)
    groups: Tuple[str, ...] = tuple(DEFAULT_GROUPS)
    group_ring_bases: Tuple[str, ...] = tuple(DEFAULT_GROUP_RING_BASES)
    lift_bases: Tuple[str, ...] = tuple(DEFAULT_LIFT_BASES)
    lift_groups: Tuple[str, ...] = tuple(DEFAULT_LIFT_GROUPS)


@dataclass(frozen=True)
class Task:
    """One theorem on one ring selector (and group selector for group-ring theorems)."""
    theorem_id: str
    ring: str
    group: Optional[str] = None

    def describe(self) -> str:
        where = f"'{self.ring}'" + (f" x '{self.group}'" if self.group else "")
        return f"{self.theorem_id} on {where}"


def plan_tasks(theorem_ids: Sequence[str], rings: Optional[Sequence[str]] = None,
               groups: Optional[Sequence[str]] = None,
               defaults: SelectorDefaults = SelectorDefaults()) -> List[Task]:
    """Expand theorem ids over ring (and group) selectors.

    ``None`` selects the built-in defaults for each theorem; an empty list
    selects nothing.
    """
    tasks = []
    for theorem_id in theorem_ids:
        theorem_id = check_theorem_id(theorem_id)
        if theorem_id in GROUP_THEOREMS:
            lift = theorem_id == 'group-ring-lift'
            bases = rings if rings is not None else (defaults.lift_bases if lift else defaults.group_ring_bases)
            group_list = groups if groups is not None else (defaults.lift_groups if lift else defaults.groups)
            tasks += [Task(theorem_id, r, g) for r in bases for g in group_list]
        else:
            tasks += [Task(theorem_id, r) for r in (rings if rings is not None else defaults.rings)]
    return sorted(set(tasks), key=lambda t: (t.ring, t.group or "", t.theorem_id))


def validate_tasks(tasks: Iterable[Task], caps: Caps = DEFAULT_CAPS) -> None:
    """Resolve every selector before any computation starts.

    Raises:
        UnknownSelectorError: For labels that resolve to nothing.
        ParseError, AxiomViolation: For ring or group files that are malformed.
        SizeOverflow: For rings above the ring cap.
    """
    for selector in sorted({t.ring for t in tasks}):
        resolve_ring(selector, caps.max_ring)
    for selector in sorted({t.group for t in tasks if t.group}):
        resolve_group(selector)


@lru_cache(maxsize=8)
def _ring_corpus(selector: str, settings: CorpusSettings, caps: Caps) -> RingCorpus:
    return build_ring_corpus(resolve_ring(selector, caps.max_ring), settings, caps)


def run_task(task: Task, settings: CorpusSettings, caps: Caps = DEFAULT_CAPS) -> List[TheoremReport]:
    logger.info(f"Running {task.describe()}")
    if task.theorem_id == 'group-ring':
        base, group = resolve_ring(task.ring, caps.max_ring), resolve_group(task.group)
        return [check_group_ring_theorems(base, group, settings, caps)]
    if task.theorem_id == 'group-ring-lift':
        base, group = resolve_ring(task.ring, caps.max_ring), resolve_group(task.group)
        try:
            cases = generate_lift_cases(base, group, caps)
        except SizeOverflow as e:
            logger.warning(f"No lift cases for {task.describe()}: {e}")
            return [make_report(task.theorem_id, f"{base.label}-{group.label}", [not_evaluated('lift', str(e))])]
        return [check_group_ring_lift(case, caps) for case in cases]
    try:
        corpus = _ring_corpus(task.ring, settings, caps)
    except SizeOverflow as e:
        logger.warning(f"No corpus for {task.describe()}: {e}")
        return [make_report(task.theorem_id, task.ring, [not_evaluated('corpus', str(e))])]
    return run_ring_theorem(task.theorem_id, corpus)


def _run_wrapped(args: Tuple[Task, CorpusSettings, Caps]) -> List[TheoremReport]:
    task, settings, caps = args
    try:
        return run_task(task, settings, caps)
    except HarnessError:
        raise
    except Exception as e:
        logger.error(f"{task.describe()} failed: {e}", exc_info=True)
        raise HarnessError(f"{task.describe()}: {type(e).__name__}: {e}") from e


def run_corpus(theorem_ids: Sequence[str], rings: Optional[Sequence[str]] = None,
               groups: Optional[Sequence[str]] = None, settings: Optional[CorpusSettings] = None,
               caps: Caps = DEFAULT_CAPS, jobs: int = 1,
               defaults: SelectorDefaults = SelectorDefaults()) -> List[TheoremReport]:
    """Run the theorem checks and return reports sorted by (ring, theorem, subject).

    Raises:
        HarnessError: If a task fails, with the theorem and ring in the message.
    """
    settings = settings or CorpusSettings()
    tasks = plan_tasks(theorem_ids, rings, groups, defaults)
    validate_tasks(tasks, caps)
    logger.info(f"Running {len(tasks)} tasks with {jobs} job(s)")
    work = [(task, settings, caps) for task in tasks]
    if jobs > 1 and len(work) > 1:
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_run_wrapped, work)
    else:
        chunks = [_run_wrapped(item) for item in work]
    reports = sorted((r for chunk in chunks for r in chunk), key=TheoremReport.sort_key)
    disagreements = sum(not r.agreement for r in reports)
    logger.info(f"Harness finished: {len(reports)} reports, {disagreements} disagreement(s)")
    return reports


def all_agree(reports: Sequence[TheoremReport]) -> bool:
    return all(r.agreement for r in reports)
