"""
Report rendering: stable-key JSON and aligned tables for theorem reports
and property verdicts.
"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from config.logging_config import get_logger
from algebra.properties import PropertyVerdict
from workflow.theorems import TheoremReport

logger = get_logger(__name__)

FORMATS = ('table', 'json')


def _value(value) -> str:
    return {True: 'T', False: 'F', None: '-'}[value]


def reports_to_json(reports: Sequence[TheoremReport]) -> str:
    payload = {
        'reports': [r.to_dict() for r in reports],
        'summary': {'total': len(reports), 'disagreements': sum(not r.agreement for r in reports)},
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reports_frame(reports: Sequence[TheoremReport]) -> pd.DataFrame:
    """One row per report; conditions rendered as name=T/F/- with a ~ for corpus-bounded."""
    rows: List[Dict[str, Any]] = []
    for r in reports:
        marks = []
        for c in r.conditions:
            suffix = {'corpus_bounded': '~', 'observed': '?', 'not_evaluated': ''}.get(c.tag, '')
            marks.append(f"{c.name}={_value(c.value)}{suffix}")
        rows.append({'ring': r.ring, 'theorem': r.theorem_id, 'subject': r.subject,
                     'agreement': 'agree' if r.agreement else 'DISAGREE', 'conditions': " ".join(marks)})
    return pd.DataFrame(rows, columns=['ring', 'theorem', 'subject', 'agreement', 'conditions'])


def summary_matrix(reports: Sequence[TheoremReport]) -> pd.DataFrame:
    """Rings by theorems; each cell counts agreeing reports out of all reports."""
    if not reports:
        return pd.DataFrame()
    frame = pd.DataFrame([{'ring': r.ring, 'theorem': r.theorem_id, 'agree': int(r.agreement)} for r in reports])
    grouped = frame.groupby(['ring', 'theorem'])['agree'].agg(['sum', 'count'])
    cells = grouped['sum'].astype(str) + '/' + grouped['count'].astype(str)
    return cells.unstack(fill_value='').sort_index().sort_index(axis=1)


def reports_to_table(reports: Sequence[TheoremReport]) -> str:
    if not reports:
        return "no reports\n"
    parts = [reports_frame(reports).to_string(index=False), "", summary_matrix(reports).to_string()]
    witnesses = [f"{r.ring} {r.theorem_id} {r.subject}: {name}: {w}".replace("  ", " ")
                 for r in reports if not r.agreement for name, w in sorted(r.witnesses.items())]
    if witnesses:
        parts += ["", "witnesses:"] + witnesses
    disagreements = sum(not r.agreement for r in reports)
    parts += ["", f"{len(reports)} report(s), {disagreements} disagreement(s)"]
    return "\n".join(parts) + "\n"


def render_reports(reports: Sequence[TheoremReport], fmt: str = 'table') -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")
    return reports_to_json(reports) if fmt == 'json' else reports_to_table(reports)


def render_verdict(verdict: PropertyVerdict, ring_label: str, fmt: str = 'table') -> str:
    """A single property verdict."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")
    if fmt == 'json':
        return json.dumps({'ring': ring_label, **verdict.to_dict()}, indent=2, sort_keys=True) + "\n"
    lines = [f"{verdict.name} on {ring_label}: {'holds' if verdict.value else 'fails'}"]
    if verdict.corpus_bounded:
        lines.append("  (relative to the module corpus)")
    if verdict.witness:
        lines.append(f"  witness: {verdict.witness}")
    if verdict.note:
        lines.append(f"  note: {verdict.note}")
    for name, value in sorted((verdict.conditions or {}).items()):
        lines.append(f"  {name}: {value}")
    return "\n".join(lines) + "\n"
