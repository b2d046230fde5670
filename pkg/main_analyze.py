"""Semigroup analysis - Cloud Function
Entry point: analyze_http(request)

Builds the structural report for one semigroup: monogenic data, idempotents,
Green's classes, maximal monogenic subsemigroups, and the enhanced power
graph's invariants (components, shape flags, degree, independence, clique,
planarity with witness, chromatic number when small enough).
Request: {"table": [[...], ...], "labels": [...]} or {"gen": "monogenic:2,3"}
"""

import json
import logging
from typing import Dict, List

import functions_framework

from shared.config import CHROMATIC_EXACT_LIMIT, LOG_LEVEL
from shared.epgraph import components, enhanced_power_graph
from shared.errors import SemigroupError
from shared.graph_props import chromatic_number, classify, clique_number, independence_number, is_planar
from shared.green import RELATIONS, green_relations, is_completely_regular
from shared.semigroup_core import (
    CayleyTable,
    all_monogenic_data,
    exponent,
    idempotents,
    maximal_monogenic,
    pi_set,
    validate,
)
from shared.table_io import parse_gen_spec

logging.basicConfig(level=LOG_LEVEL)
logger = logging.getLogger(__name__)


def _names(s: CayleyTable, elements) -> List[str]:
    return [s.label(x) for x in elements]


def build_analysis(s: CayleyTable) -> Dict:
    """
    Structural report for one semigroup as a JSON-ready dict.

    The chromatic number is exact only up to CHROMATIC_EXACT_LIMIT vertices;
    above it `chromatic` is None and `chromatic_lower_bound` carries omega.
    """
    data = all_monogenic_data(s)
    green = green_relations(s)
    regular, irregular_at = is_completely_regular(s)

    g = enhanced_power_graph(s)
    c = classify(g)
    alpha, independent = independence_number(g)
    omega = clique_number(g)
    planarity = is_planar(g)
    chromatic = chromatic_number(g) if g.vertex_count <= CHROMATIC_EXACT_LIMIT else None

    witness = None
    if planarity.witness is not None:
        w = planarity.witness
        witness = {
            'kind': w.kind,
            'branch_vertices': _names(s, w.branch_vertices),
            'parts': [_names(s, part) for part in w.parts] if w.parts else None,
            'paths': [_names(s, path) for path in w.paths],
        }

    return {
        'order': s.n,
        'labels': s.element_labels(),
        'pi_set': sorted(pi_set(s)),
        'idempotents': _names(s, sorted(idempotents(s))),
        'exponent': exponent(s),
        'monogenic': [
            {
                'element': s.label(d.generator),
                'index': d.index_m,
                'period': d.period_r,
                'order': d.order,
                'powers': _names(s, d.powers),
                'idempotent': s.label(d.idempotent),
            }
            for d in data
        ],
        'green_class_counts': {rel: green.class_count(rel) for rel in RELATIONS},
        'completely_regular': regular,
        'non_group_h_class_at': s.label(irregular_at) if irregular_at is not None else None,
        'maximal_monogenic': [
            {'elements': _names(s, sub.elements), 'generators': _names(s, sub.generators)}
            for sub in maximal_monogenic(s)
        ],
        'epg': {
            'edges': [[s.label(u), s.label(v)] for u, v in g.sorted_edges()],
            'components': [_names(s, comp) for comp in components(g)],
            'shape': c.shape(),
            'connected': c.connected,
            'complete': c.complete,
            'null': c.null,
            'tree': c.tree,
            'acyclic': c.acyclic,
            'bipartite': c.bipartite,
            'star': c.star,
            'components_complete': c.components_complete,
            'regular_degree': c.regular_degree,
            'min_degree': c.min_degree,
            'max_degree': c.max_degree,
            'independence_number': alpha,
            'independent_set': _names(s, sorted(independent)),
            'clique_number': omega,
            'planar': planarity.planar,
            'kuratowski_witness': witness,
            'chromatic': chromatic,
            'chromatic_lower_bound': omega,
        },
    }


def _flag(value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def format_analysis(report: Dict) -> List[str]:
    """Human-readable report lines, in the order the CLI prints them"""
    lines = [
        f"order: {report['order']}",
        f"pi(S): {report['pi_set']}",
        f"E(S): {report['idempotents']}",
        f"exponent: {report['exponent']}",
        "monogenic data:",
    ]
    for m in report['monogenic']:
        lines.append(
            f"  {m['element']}: index={m['index']} period={m['period']} order={m['order']} "
            f"powers={m['powers']} idempotent={m['idempotent']}"
        )
    counts = report['green_class_counts']
    lines.append("Green's classes: " + ' '.join(f"{rel}={counts[rel]}" for rel in RELATIONS))
    lines.append(f"completely regular: {_flag(report['completely_regular'])}")
    lines.append("maximal monogenic:")
    for sub in report['maximal_monogenic']:
        lines.append(f"  {sub['elements']} generated by {sub['generators']}")

    epg = report['epg']
    lines.append(f"enhanced power graph: {epg['shape']}")
    lines.append(f"  components: {len(epg['components'])} {epg['components']}")
    for key in ('connected', 'complete', 'null', 'tree', 'acyclic', 'bipartite', 'star',
                'components_complete', 'regular_degree'):
        lines.append(f"  {key}: {_flag(epg[key])}")
    lines.append(f"  delta: {epg['min_degree']}")
    lines.append(f"  alpha: {epg['independence_number']} {epg['independent_set']}")
    lines.append(f"  omega: {epg['clique_number']}")
    lines.append(f"  planar: {_flag(epg['planar'])}")
    witness = epg['kuratowski_witness']
    if witness:
        parts = f" parts={witness['parts']}" if witness['parts'] else ''
        lines.append(f"  witness: {witness['kind']} branch={witness['branch_vertices']}{parts}")
    if epg['chromatic'] is not None:
        lines.append(f"  chi: {epg['chromatic']}")
    else:
        lines.append(f"  chi: >= {epg['chromatic_lower_bound']}")
    return lines


def table_from_request(request_json: Dict) -> CayleyTable:
    if request_json.get('gen'):
        return parse_gen_spec(request_json['gen'])
    if 'table' in request_json:
        return validate(request_json['table'], request_json.get('labels'))
    raise ValueError("request needs 'table' or 'gen'")


@functions_framework.http
def analyze_http(request):
    """
    Cloud Function entry point for single-semigroup analysis.

    Request JSON:
        table: n x n list of 0-based indices (or gen: generator spec)
        labels: Optional element names
    """
    try:
        request_json = request.get_json(silent=True) or {}
        s = table_from_request(request_json)
        logger.info(f"Analyze: order {s.n}")

        result = {'status': 'success', 'analysis': build_analysis(s)}
        return json.dumps(result), 200, {'Content-Type': 'application/json'}

    except (SemigroupError, ValueError) as e:
        logger.error(f"Analyze rejected input: {str(e)}")
        return _error_response(str(e)), 400

    except Exception as e:
        logger.error(f"Analyze failed: {str(e)}")
        return _error_response(str(e)), 500


def _error_response(message):
    return json.dumps({'status': 'error', 'error': message})
