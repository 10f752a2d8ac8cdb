"""
Plain-text formats for rings, groups and module presentations.

Ring file::

    n <size>
    zero <index>
    one <index>
    <size rows of size integers: addition>
    <size rows of size integers: multiplication>

Group file::

    n <order>
    id <index>
    <order rows of order integers>

The files carry no label; ``load_ring`` and ``load_group`` use the file
stem.  A labelled variant is also read, recognised by its first token::

    ring <label> <size>            group <label> <order>
    zero <index>                   identity <index>
    one <index>                    op
    add                            <rows>
    <rows>
    mul
    <rows>

Module file::

    module <left|right> <ring-label> gens <m>
    <one relation per line: m ring-element indices>

Blank lines and ``#`` comments are ignored.  Line numbers in errors refer to
the original text.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from config.logging_config import get_logger
from algebra.caps import Caps, DEFAULT_CAPS
from algebra.groups import FiniteGroup, make_group_from_table
from algebra.modules import SIDES, FModule, present_module
from algebra.rings import FiniteRing, make_ring_from_tables

logger = get_logger(__name__)

PathLike = Union[str, Path]


class ParseError(Exception):
    """Malformed ring, group or module file."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.message = message
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")


@dataclass
class ModuleSpec:
    """A parsed module presentation whose ring is still a label."""
    side: str
    ring_label: str
    gens: int
    relations: List[Tuple[int, ...]] = field(default_factory=list)

    def build(self, ring: FiniteRing, caps: Caps = DEFAULT_CAPS, label: str = "") -> FModule:
        if ring.label != self.ring_label:
            raise ParseError(f"module is over '{self.ring_label}', got ring '{ring.label}'")
        for rel in self.relations:
            bad = [v for v in rel if not 0 <= v < ring.size]
            if bad:
                raise ParseError(f"relation {rel} has entries outside '{ring.label}': {bad}")
        return present_module(ring, self.side, self.gens, self.relations, caps, label)


class _Lines:
    """Significant lines with their 1-based line numbers."""

    def __init__(self, text: str):
        self._items: List[Tuple[int, List[str]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            content = raw.split('#', 1)[0].strip()
            if content:
                self._items.append((number, content.split()))
        self._pos = 0

    def next(self, what: str) -> Tuple[int, List[str]]:
        if self._pos >= len(self._items):
            last = self._items[-1][0] if self._items else None
            raise ParseError(f"unexpected end of file, expected {what}", last)
        item = self._items[self._pos]
        self._pos += 1
        return item

    def rest(self) -> Iterator[Tuple[int, List[str]]]:
        while self._pos < len(self._items):
            yield self.next('line')


def _ints(tokens: List[str], number: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", number)


def _keyword(lines: _Lines, keyword: str, count: int) -> Tuple[int, List[str]]:
    number, tokens = lines.next(f"'{keyword}'")
    if tokens[0] != keyword or len(tokens) != count + 1:
        raise ParseError(f"expected '{keyword}' with {count} value(s), got {' '.join(tokens)!r}", number)
    return number, tokens[1:]


def _index(lines: _Lines, keyword: str) -> int:
    number, values = _keyword(lines, keyword, 1)
    return _ints(values, number)[0]


def _block(lines: _Lines, name: str, n: int) -> List[List[int]]:
    rows = []
    for _ in range(n):
        number, tokens = lines.next(f"row of '{name}'")
        row = _ints(tokens, number)
        if len(row) != n:
            raise ParseError(f"row of '{name}' has {len(row)} entries, expected {n}", number)
        if any(not 0 <= v < n for v in row):
            raise ParseError(f"entry out of range 0..{n - 1} in '{name}'", number)
        rows.append(row)
    return rows


def _table(lines: _Lines, name: str, n: int) -> List[List[int]]:
    _keyword(lines, name, 0)
    return _block(lines, name, n)


def _positive(value: int, number: int) -> int:
    if value < 1:
        raise ParseError(f"size must be positive, got {value}", number)
    return value


def _header(lines: _Lines, keyword: str) -> Tuple[str, int]:
    """Either ``n <size>`` (label left to the caller) or ``<keyword> <label> <size>``."""
    number, tokens = lines.next(f"'n' or '{keyword}' header")
    if tokens[0] == 'n' and len(tokens) == 2:
        return "", _positive(_ints(tokens[1:], number)[0], number)
    if tokens[0] == keyword and len(tokens) == 3:
        return tokens[1], _positive(_ints(tokens[2:], number)[0], number)
    raise ParseError(f"expected 'n <size>' or '{keyword} <label> <size>'", number)


def _no_trailing(lines: _Lines) -> None:
    for number, tokens in lines.rest():
        raise ParseError(f"unexpected trailing content {' '.join(tokens)!r}", number)


def parse_ring(text: str, label: str = "") -> FiniteRing:
    """Parse and validate a ring file.

    ``label`` names a ring whose file has no label of its own.

    Raises:
        ParseError: On malformed text.
        AxiomViolation: If the tables do not define a unital ring.
    """
    lines = _Lines(text)
    own_label, n = _header(lines, 'ring')
    zero = _index(lines, 'zero')
    one = _index(lines, 'one')
    if own_label:
        add, mul = _table(lines, 'add', n), _table(lines, 'mul', n)
    else:
        add, mul = _block(lines, 'add', n), _block(lines, 'mul', n)
    _no_trailing(lines)
    return make_ring_from_tables(n, add, mul, zero, one, own_label or label)


def _rows(table) -> List[str]:
    return [" ".join(str(int(v)) for v in row) for row in table]


def serialize_ring(ring: FiniteRing) -> str:
    parts = [f"n {ring.size}", f"zero {ring.zero}", f"one {ring.one}"]
    parts += _rows(ring.add)
    parts += _rows(ring.mul)
    return "\n".join(parts) + "\n"


def parse_group(text: str, label: str = "") -> FiniteGroup:
    lines = _Lines(text)
    own_label, n = _header(lines, 'group')
    if own_label:
        identity = _index(lines, 'identity')
        op = _table(lines, 'op', n)
    else:
        identity = _index(lines, 'id')
        op = _block(lines, 'op', n)
    _no_trailing(lines)
    return make_group_from_table(op, identity, own_label or label)


def serialize_group(group: FiniteGroup) -> str:
    parts = [f"n {group.size}", f"id {group.identity}"]
    parts += _rows(group.op)
    return "\n".join(parts) + "\n"


def parse_module(text: str) -> ModuleSpec:
    lines = _Lines(text)
    number, tokens = lines.next("'module' header")
    if len(tokens) != 5 or tokens[0] != 'module' or tokens[3] != 'gens':
        raise ParseError("expected 'module <side> <ring-label> gens <m>'", number)
    side, ring_label = tokens[1], tokens[2]
    if side not in SIDES:
        raise ParseError(f"side must be 'left' or 'right', got {side!r}", number)
    gens = _ints(tokens[4:], number)[0]
    if gens < 0:
        raise ParseError(f"generator count must be non-negative, got {gens}", number)
    relations = []
    for number, tokens in lines.rest():
        rel = _ints(tokens, number)
        if len(rel) != gens:
            raise ParseError(f"relation has {len(rel)} entries, expected {gens}", number)
        relations.append(tuple(rel))
    return ModuleSpec(side, ring_label, gens, relations)


def serialize_module(module: FModule) -> str:
    parts = [f"module {module.side} {module.ring.label} gens {module.gens}"]
    parts += [" ".join(str(v) for v in rel) for rel in module.relations]
    return "\n".join(parts) + "\n"


def _read(path: PathLike) -> str:
    path = Path(path)
    logger.debug(f"Reading {path}")
    with open(path) as f:
        return f.read()


def load_ring(path: PathLike) -> FiniteRing:
    return parse_ring(_read(path), label=Path(path).stem)


def load_group(path: PathLike) -> FiniteGroup:
    return parse_group(_read(path), label=Path(path).stem)


def load_module(path: PathLike) -> ModuleSpec:
    return parse_module(_read(path))
