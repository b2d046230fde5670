"""TableFile text/JSON formats, generator specs, DOT export and audit records"""

import json
import logging
import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from .audit import reconstruct_example_315
from .epgraph import SimpleGraph
from .errors import ParseError
from .semigroup_core import CayleyTable, adjoin_identity, construct, direct_product, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableFile:
    table: CayleyTable
    name: Optional[str] = None
    source: Optional[str] = None


# --- Text format ---

def _split_comment(line: str):
    body, sep, comment = line.partition('#')
    return body.strip(), comment.strip() if sep else None


def parse_table_text(text: str, name: Optional[str] = None, source: Optional[str] = None) -> TableFile:
    """
    Parse the text format: line 1 holds n, the next n lines hold rows of n
    space-separated 0-based indices, each optionally followed by `# label`.

    Blank lines and lines holding only a comment are skipped.

    Raises:
        ParseError: with the 1-based line number of the offending line
        NotClosed, NotAssociative: from validation of the parsed table
    """
    n: Optional[int] = None
    rows: List[List[int]] = []
    labels: List[Optional[str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, comment = _split_comment(raw)
        if not body:
            continue
        if n is None:
            try:
                n = int(body)
            except ValueError:
                raise ParseError(f"expected the order n, got '{body}'", lineno)
            if n < 1:
                raise ParseError(f"order must be positive, got {n}", lineno)
            continue
        if len(rows) == n:
            raise ParseError(f"more than {n} rows", lineno)
        try:
            row = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"row entries must be integers: '{body}'", lineno)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
        rows.append(row)
        labels.append(comment or None)

    if n is None:
        raise ParseError("empty table file")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}")

    given = [label for label in labels if label]
    if given and len(given) != n:
        raise ParseError(f"labels given for {len(given)} of {n} rows; label every row or none")
    if len(set(given)) != len(given):
        raise ParseError("row labels must be distinct")
    return TableFile(validate(rows, given or None), name, source)


def serialize_table_text(tf: TableFile) -> str:
    s = tf.table
    width = len(str(s.n - 1))
    lines = [str(s.n)]
    for i, row in enumerate(s.table):
        line = ' '.join(str(v).rjust(width) for v in row)
        if s.labels:
            line += f'  # {s.labels[i]}'
        lines.append(line)
    return '\n'.join(lines) + '\n'


# --- JSON record format ---

def table_to_record(tf: TableFile) -> Dict:
    return {
        'name': tf.name,
        'source': tf.source,
        'n': tf.table.n,
        'table': tf.table.rows(),
        'labels': list(tf.table.labels) if tf.table.labels else None,
    }


def parse_table_json(text: str) -> TableFile:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(record, dict) or 'table' not in record:
        raise ParseError("JSON table record needs a 'table' field")

    rows = record['table']
    if not isinstance(rows, list):
        raise ParseError("'table' must be a list of integer rows")
    if 'n' in record and record['n'] != len(rows):
        raise ParseError(f"'n' is {record['n']} but the table has {len(rows)} rows")
    if not all(isinstance(row, list) and all(isinstance(v, int) for v in row) for row in rows):
        raise ParseError("'table' must be a list of integer rows")
    return TableFile(validate(rows, record.get('labels')), record.get('name'), record.get('source'))


def serialize_table_json(tf: TableFile) -> str:
    return json.dumps(table_to_record(tf)) + '\n'


# --- Files ---

def load_table(path: str) -> TableFile:
    """Read a TableFile; JSON when the file starts with '{', text otherwise"""
    with open(path, encoding='utf-8') as f:
        try:
            text = f.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"{path} is not UTF-8 text: {e.reason}")
    name = os.path.splitext(os.path.basename(path))[0]
    if text.lstrip().startswith('{'):
        tf = parse_table_json(text)
        return TableFile(tf.table, tf.name or name, tf.source or path)
    return parse_table_text(text, name, path)


def write_table(path: str, tf: TableFile) -> None:
    content = serialize_table_json(tf) if path.endswith('.json') else serialize_table_text(tf)
    with open(path, 'w') as f:
        f.write(content)


# --- Generator specs ---

def _parse_factor(factor: str) -> CayleyTable:
    """`kind:p1,p2`, `kind` or `example_315`, optionally suffixed by `^1`"""
    text = factor.strip()
    with_identity = text.endswith('^1')
    if with_identity:
        text = text[:-2].strip()

    kind, _, params = text.partition(':')
    kind = kind.strip()
    if kind == 'example_315':
        s = reconstruct_example_315()
    else:
        try:
            args = [int(p) for p in params.split(',')] if params.strip() else []
        except ValueError:
            raise ParseError(f"parameters of '{factor}' must be integers")
        s = construct(kind, *args)
    return adjoin_identity(s) if with_identity else s


def parse_gen_spec(spec: str) -> CayleyTable:
    """
    Build a semigroup from a generator spec, e.g. `monogenic:2,3`,
    `left_zero:2*cyclic_group:2` (direct product, left to right) or
    `zero_semigroup:2^1` (S^1).
    """
    factors = spec.split('*')
    if not spec.strip() or any(not f.strip() for f in factors):
        raise ParseError(f"malformed generator spec '{spec}'")
    result = _parse_factor(factors[0])
    for factor in factors[1:]:
        result = direct_product(result, _parse_factor(factor))
    return result


# --- DOT ---

def _dot_quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, name: str = 'G') -> str:
    """One `graph` block: nodes in index order, edges sorted lexicographically"""
    lines = [f'graph {_dot_quote(name)} {{']
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label={_dot_quote(g.label(v))}];')
    for u, v in g.sorted_edges():
        lines.append(f'  {u} -- {v};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


# --- Audit records ---

def write_records(path: str, records: Iterable[Dict]) -> int:
    """Write line-delimited JSON records; returns the number written"""
    count = 0
    with open(path, 'w') as f:
        for record in records:
            f.write(json.dumps(record, default=str) + '\n')
            count += 1
    logger.info(f"Wrote {count} records to {path}")
    return count
