"""Command line for semigroup analysis, enumeration and the theorem audit.

Usage:
    python semigraph_cli.py analyze table.txt
    python semigraph_cli.py analyze --gen monogenic:2,3 [--json]
    python semigraph_cli.py enumerate 4 --dedup iso-anti [--emit out/] [--jobs 4]
    python semigraph_cli.py audit 4 [--checks T-planarity] [--up-to] [--records audit.ndjson]
    python semigraph_cli.py export-dot --gen example_315 --graph epg
    python semigraph_cli.py gen left_zero:2*cyclic_group:2
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from main_analyze import build_analysis, format_analysis
from main_audit import audit
from shared.config import (
    DEDUP_ALIASES,
    EXIT_COUNTEREXAMPLES,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_CAP,
    GRAPH_KINDS,
    LOG_LEVEL,
    PARALLEL_WIDTH,
)
from shared.enumeration import EnumerationConfig, enumerate_semigroups
from shared.epgraph import build_graph
from shared.errors import OrderCapExceeded, SemigroupError, SizeLimitExceeded
from shared.semigroup_core import CayleyTable
from shared.table_io import (
    TableFile,
    load_table,
    parse_gen_spec,
    serialize_table_json,
    serialize_table_text,
    to_dot,
    write_records,
    write_table,
)

logger = logging.getLogger(__name__)


def _input_table(args) -> CayleyTable:
    if args.gen:
        return parse_gen_spec(args.gen)
    if not args.path:
        raise SemigroupError("give a table file or --gen <spec>")
    return load_table(args.path).table


def cmd_analyze(args) -> int:
    report = build_analysis(_input_table(args))
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in format_analysis(report):
            print(line)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = EnumerationConfig(args.n, DEDUP_ALIASES[args.dedup], args.jobs)
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)

    count = 0
    for s in enumerate_semigroups(cfg):
        count += 1
        if args.emit:
            name = f"order{args.n}_{count:05d}"
            write_table(os.path.join(args.emit, f"{name}.txt"), TableFile(s, name, f"enumerate {args.n}"))

    print(count)
    if args.emit:
        logger.info(f"Wrote {count} tables to {args.emit}")
    return EXIT_OK


def cmd_audit(args) -> int:
    report = audit(args.n_max, args.checks, args.up_to, args.jobs)
    for line in report.summary_lines():
        print(line)
    if args.records:
        write_records(args.records, report.to_records())
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLES


def cmd_export_dot(args) -> int:
    s = _input_table(args)
    g = build_graph(s, args.graph)
    sys.stdout.write(to_dot(g, args.graph))
    return EXIT_OK


def cmd_gen(args) -> int:
    tf = TableFile(parse_gen_spec(args.spec), args.spec, 'gen')
    sys.stdout.write(serialize_table_json(tf) if args.json else serialize_table_text(tf))
    return EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'enumerate': cmd_enumerate,
    'audit': cmd_audit,
    'export-dot': cmd_export_dot,
    'gen': cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Finite semigroups and their enhanced power graphs')
    parser.add_argument('--verbose', action='store_true', help='Log progress at INFO (default: warnings only)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('analyze', help='Structural report for one semigroup')
    p.add_argument('path', nargs='?', help='TableFile (text or JSON)')
    p.add_argument('--gen', help='Generator spec instead of a file, e.g. monogenic:2,3')
    p.add_argument('--json', action='store_true', help='Print the report as JSON')

    p = sub.add_parser('enumerate', help='Count (and optionally write) all semigroups of order n')
    p.add_argument('n', type=int)
    p.add_argument('--dedup', default='iso-anti', choices=list(DEDUP_ALIASES.keys()),
                   help='Deduplication mode (default: iso-anti)')
    p.add_argument('--emit', default=None, help='Directory for one TableFile per semigroup (default: count only)')
    p.add_argument('--jobs', type=int, default=PARALLEL_WIDTH, help='Worker processes')

    p = sub.add_parser('audit', help='Evaluate the characterization checks over the corpus')
    p.add_argument('n_max', type=int)
    p.add_argument('--checks', nargs='+', default=None, help='Check ids or theorem numbers (default: all)')
    p.add_argument('--up-to', action='store_true', help='Audit every order 1..n_max (default: order n_max only)')
    p.add_argument('--records', default=None, help='Write disagreements as line-delimited JSON')
    p.add_argument('--jobs', type=int, default=PARALLEL_WIDTH, help='Worker processes')

    p = sub.add_parser('export-dot', help='Write a graph of the semigroup in DOT syntax')
    p.add_argument('path', nargs='?', help='TableFile (text or JSON)')
    p.add_argument('--gen', help='Generator spec instead of a file')
    p.add_argument('--graph', default='epg', choices=GRAPH_KINDS, help='Graph kind (default: epg)')

    p = sub.add_parser('gen', help='Print a constructed semigroup as a TableFile')
    p.add_argument('spec', help="e.g. 'monogenic:2,3', 'left_zero:2*cyclic_group:2', 'zero_semigroup:2^1'")
    p.add_argument('--json', action='store_true', help='JSON record instead of the text format')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    # entry-point modules configure the root logger on import
    logging.getLogger().setLevel(LOG_LEVEL if args.verbose else logging.WARNING)

    try:
        return COMMANDS[args.command](args)
    except (OrderCapExceeded, SizeLimitExceeded) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (SemigroupError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
