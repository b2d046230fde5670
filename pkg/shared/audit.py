"""Characterization theorems as executable checks over a semigroup corpus"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, partial
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .config import EXAMPLE_315_LABELS
from .enumeration import complete_table
from .epgraph import SimpleGraph, components, enhanced_power_graph, formula_components
from .errors import ConstructionFailed, InvalidParams
from .graph_props import GraphClassification, classify, independence_number, is_planar
from .green import group_components, h_class, is_completely_regular
from .semigroup_core import (
    CayleyTable,
    all_monogenic_data,
    exponent,
    gen_intersection,
    idempotents,
    is_band,
    is_group,
    is_monogenic,
    maximal_monogenic,
    monogenic_partition,
    pi_set,
    s_f,
)

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    IFF = 'iff'
    IMPLIES = 'implies'
    EQUALS = 'equals'


def _always(s: CayleyTable) -> bool:
    return True


@dataclass(frozen=True)
class TheoremCheck:
    """
    One claim evaluated per corpus instance.

    IFF and EQUALS agree when both sides are equal; IMPLIES agrees unless the
    premise (lhs) holds and the conclusion (rhs) fails.
    """

    id: str
    theorem: int
    title: str
    lhs: Callable[[CayleyTable], Any]
    rhs: Callable[[CayleyTable], Any]
    direction: Direction = Direction.IFF
    hypothesis: Callable[[CayleyTable], bool] = _always

    def agrees(self, lhs_value, rhs_value) -> bool:
        if self.direction is Direction.IMPLIES:
            return not lhs_value or bool(rhs_value)
        return lhs_value == rhs_value

    def evaluate(self, s: CayleyTable) -> Optional[Tuple[Any, Any]]:
        """(lhs, rhs) on a hypothesis-satisfying instance, else None"""
        if not self.hypothesis(s):
            return None
        return self.lhs(s), self.rhs(s)


@dataclass(frozen=True)
class Counterexample:
    check_id: str
    table: CayleyTable
    lhs: Any
    rhs: Any

    def reverify(self, check: TheoremCheck) -> bool:
        """Re-running both predicates reproduces the stored disagreement"""
        values = check.evaluate(self.table)
        return values == (self.lhs, self.rhs) and not check.agrees(*values)


@dataclass
class CheckOutcome:
    check_id: str
    theorem: int
    title: str
    direction: Direction
    corpus_size: int = 0
    hypothesis_count: int = 0
    agreements: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)


@dataclass
class AuditReport:
    outcomes: List[CheckOutcome]

    @property
    def total_counterexamples(self) -> int:
        return sum(len(o.counterexamples) for o in self.outcomes)

    @property
    def passed(self) -> bool:
        return self.total_counterexamples == 0

    def summary_lines(self) -> List[str]:
        theorems = len({o.theorem for o in self.outcomes})
        lines = [f"{theorems} theorems, {len(self.outcomes)} checks"]
        for o in self.outcomes:
            status = 'ok' if not o.counterexamples else f'{len(o.counterexamples)} COUNTEREXAMPLES'
            lines.append(
                f"  [{o.theorem:>2}] {o.check_id:<30} corpus={o.corpus_size} "
                f"hypothesis={o.hypothesis_count} agree={o.agreements} {status}"
            )
            for cx in o.counterexamples:
                lines.append(f"       table={cx.table.rows()} lhs={cx.lhs} rhs={cx.rhs}")
        lines.append(f"Total counterexamples: {self.total_counterexamples}")
        return lines

    def to_records(self) -> List[Dict]:
        """One machine-readable record per (check, instance) disagreement"""
        records = []
        for o in self.outcomes:
            for cx in o.counterexamples:
                records.append({
                    'check_id': o.check_id,
                    'theorem': o.theorem,
                    'direction': o.direction.value,
                    'order': cx.table.n,
                    'table': cx.table.rows(),
                    'labels': cx.table.element_labels(),
                    'lhs': cx.lhs,
                    'rhs': cx.rhs,
                })
        return records


# --- Cached per-instance computations ---

@lru_cache(maxsize=4096)
def _epg(s: CayleyTable) -> SimpleGraph:
    return enhanced_power_graph(s)


@lru_cache(maxsize=4096)
def _classification(s: CayleyTable) -> GraphClassification:
    return classify(_epg(s))


@lru_cache(maxsize=4096)
def _planar(s: CayleyTable) -> bool:
    return is_planar(_epg(s)).planar


def _orders_at_most_two(s: CayleyTable) -> bool:
    return pi_set(s) <= {1, 2}


def _max_order(s: CayleyTable) -> int:
    return max(pi_set(s))


# --- Predicates, one pair per claim ---

def _formula_partition(s):
    return formula_components(s)


def _traversal_partition(s):
    return components(_epg(s))


def _connectivity_from_graph(s):
    c = _classification(s)
    return c.connected, c.connected and max(c.diameter_per_component) <= 2


def _connectivity_from_powers(s):
    pairwise = all(gen_intersection(s, x, y) for x, y in combinations(range(s.n), 2))
    return pairwise, pairwise


def _idempotents_per_monogenic(s):
    idem = idempotents(s)
    return tuple(len(idem & d.elements) for d in all_monogenic_data(s))


def _one_per_element(s):
    return (1,) * s.n


def _components_from_graph(s):
    comps = components(_epg(s))
    return sorted(comps), len(comps)


def _components_from_idempotents(s):
    idem = sorted(idempotents(s))
    return sorted(s_f(s, f).elements for f in idem), len(idem)


def _graph_is_null(s):
    return _classification(s).null


def _exponent_lemma(s):
    bound = 2 * exponent(s)
    maximal = [sub.as_set() for sub in maximal_monogenic(s)]
    covered = all(any(d.elements <= m for m in maximal) for d in all_monogenic_data(s))
    return all(d.order <= bound for d in all_monogenic_data(s)), covered


def _both_true(s):
    return True, True


def _graph_is_complete(s):
    return _classification(s).complete


def _has_generator(s):
    return is_monogenic(s) is not None


def _bipartite_and_acyclic(s):
    c = _classification(s)
    return c.bipartite, c.acyclic


def _orders_condition_twice(s):
    ok = _orders_at_most_two(s)
    return ok, ok


def _group_graph_shapes(s):
    c = _classification(s)
    return c.acyclic, c.bipartite, c.tree, c.star or s.n == 1


def _group_exponent_two(s):
    ok = exponent(s) <= 2
    return ok, ok, ok, ok


def _graph_is_tree(s):
    return _classification(s).tree


def _tree_condition(s):
    return len(idempotents(s)) == 1 and _orders_at_most_two(s)


def _regular_degree(s):
    return _classification(s).regular_degree


def _uniform_partition_degree(s):
    sizes = sorted({d.order for d in all_monogenic_data(s)})
    for size in sizes:
        if monogenic_partition(s, size) is not None:
            return size - 1
    return None


def _components_are_complete(s):
    return _classification(s).components_complete


def _has_monogenic_partition(s):
    return monogenic_partition(s) is not None


def _completely_regular(s):
    return is_completely_regular(s)[0]


def _components_are_groups(s):
    return all(group_components(s).values())


def _isolated_vertices(s):
    g = _epg(s)
    return tuple(v for v in range(s.n) if g.degree(v) == 0)


def _isolated_printed_reading(s):
    """(i) idempotent, (ii) H_a = {a}, (iii) m_x = 1 for every x in S_a"""
    data = all_monogenic_data(s)
    result = []
    for a in sorted(idempotents(s)):
        if h_class(s, a) != (a,):
            continue
        if all(data[x].index_m == 1 for x in s_f(s, a).elements):
            result.append(a)
    return tuple(result)


def _isolated_proof_reading(s):
    """(i) idempotent, (ii) H_a = {a}, (iii) S_a = {a}"""
    return tuple(
        a for a in sorted(idempotents(s))
        if h_class(s, a) == (a,) and s_f(s, a).elements == (a,)
    )


def _is_planar(s):
    return _planar(s)


def _orders_at_most_four(s):
    return _max_order(s) <= 4


def _order_four_index_hypothesis(s):
    return all(d.index_m in (1, 2) for d in all_monogenic_data(s) if d.order == 4)


def _bad_triple(s) -> Optional[Tuple[int, int, int]]:
    """Distinct a, b, c of order 4 and index 2 whose monogenics share exactly 3 elements"""
    data = all_monogenic_data(s)
    pool = [d for d in data if d.order == 4 and d.index_m == 2]
    for da, db, dc in combinations(pool, 3):
        if len(da.elements & db.elements & dc.elements) == 3:
            return da.generator, db.generator, dc.generator
    return None


def _planarity_conditions(s):
    return _orders_at_most_four(s) and _bad_triple(s) is None


def _degree_and_independence(s):
    return _classification(s).min_degree, independence_number(_epg(s))[0]


def _maximal_monogenic_invariants(s):
    maximal = maximal_monogenic(s)
    return min(sub.size for sub in maximal) - 1, len(maximal)


def _is_completely_regular_hypothesis(s):
    return is_completely_regular(s)[0]


def builtin_checks() -> List[TheoremCheck]:
    return [
        TheoremCheck('P-component-formula', 1, 'C(x) formula equals graph components',
                     _formula_partition, _traversal_partition, Direction.EQUALS),
        TheoremCheck('C-connected-intersection', 2, 'connected iff pairwise <x>∩<y> nonempty; diameter <= 2',
                     _connectivity_from_graph, _connectivity_from_powers, Direction.EQUALS),
        TheoremCheck('L-unique-idempotent', 3, 'each <a> has exactly one idempotent',
                     _idempotents_per_monogenic, _one_per_element, Direction.EQUALS),
        TheoremCheck('T-components-idempotents', 4, 'components are the S_f; count is |E(S)|',
                     _components_from_graph, _components_from_idempotents, Direction.EQUALS),
        TheoremCheck('C-band-null', 5, 'band iff null graph',
                     is_band, _graph_is_null),
        TheoremCheck('L-exponent-bound', 6, 'o(x) <= 2*exponent; <x> inside a maximal monogenic',
                     _exponent_lemma, _both_true, Direction.EQUALS),
        TheoremCheck('T-complete-monogenic', 7, 'complete iff monogenic',
                     _graph_is_complete, _has_generator),
        TheoremCheck('T-bipartite-acyclic', 8, 'bipartite iff acyclic iff pi(S) in {1,2}',
                     _bipartite_and_acyclic, _orders_condition_twice, Direction.EQUALS),
        TheoremCheck('C-group-star', 8, 'groups: exponent <= 2 iff acyclic/bipartite/tree/star',
                     _group_graph_shapes, _group_exponent_two, Direction.EQUALS, is_group),
        TheoremCheck('C-tree', 9, 'tree iff |E(S)| = 1 and pi(S) in {1,2}',
                     _graph_is_tree, _tree_condition),
        TheoremCheck('T-regular', 10, 'k-regular iff disjoint union of monogenics of size k+1',
                     _regular_degree, _uniform_partition_degree, Direction.EQUALS),
        TheoremCheck('T-components-complete', 11, 'components complete iff disjoint union of monogenics',
                     _components_are_complete, _has_monogenic_partition),
        TheoremCheck('T-completely-regular', 12, 'completely regular iff components are groups',
                     _completely_regular, _components_are_groups),
        TheoremCheck('P-isolated-printed', 13, 'isolated iff idempotent, H_a={a}, m_x=1 on S_a',
                     _isolated_vertices, _isolated_printed_reading, Direction.EQUALS),
        TheoremCheck('P-isolated-proof', 13, 'isolated iff idempotent, H_a={a}, S_a={a}',
                     _isolated_vertices, _isolated_proof_reading, Direction.EQUALS),
        TheoremCheck('P-planar-orders', 14, 'planar implies o(a) < 5',
                     _is_planar, _orders_at_most_four, Direction.IMPLIES),
        TheoremCheck('T-planarity', 15, 'planar iff o(a) <= 4 and no bad triple',
                     _is_planar, _planarity_conditions, Direction.IFF, _order_four_index_hypothesis),
        TheoremCheck('C-planar-completely-regular', 15, 'completely regular: planar iff o(a) <= 4',
                     _is_planar, _orders_at_most_four, Direction.IFF, _is_completely_regular_hypothesis),
        TheoremCheck('T-degree-independence', 16, 'delta = m-1 and alpha = #maximal monogenic',
                     _degree_and_independence, _maximal_monogenic_invariants, Direction.EQUALS),
    ]


def select_checks(selectors: Optional[Sequence[str]]) -> List[TheoremCheck]:
    """Checks by id or theorem number; None or 'all' selects everything"""
    checks = builtin_checks()
    if not selectors or 'all' in selectors:
        return checks
    chosen = []
    for selector in selectors:
        matches = [c for c in checks if c.id == selector or str(c.theorem) == selector]
        if not matches:
            raise InvalidParams(f"unknown check '{selector}'; known: {', '.join(c.id for c in checks)}")
        chosen.extend(c for c in matches if c not in chosen)
    return chosen


def _evaluate_instance(checks: Sequence[TheoremCheck], s: CayleyTable) -> List[Optional[Tuple[Any, Any]]]:
    return [check.evaluate(s) for check in checks]


def run_audit(checks: Sequence[TheoremCheck], corpus: Iterable[CayleyTable],
              parallel_width: int = 1) -> AuditReport:
    """
    Evaluate every check on every hypothesis-satisfying instance.

    Instances are independent and may be evaluated in worker processes; the
    report keeps corpus order within each check and check order across the
    report.
    """
    tables = list(corpus)
    outcomes = [CheckOutcome(c.id, c.theorem, c.title, c.direction, corpus_size=len(tables)) for c in checks]

    evaluate = partial(_evaluate_instance, list(checks))
    if parallel_width > 1:
        with ProcessPoolExecutor(max_workers=parallel_width) as pool:
            results = list(pool.map(evaluate, tables))
    else:
        results = [evaluate(s) for s in tables]

    for s, values_per_check in zip(tables, results):
        for check, outcome, values in zip(checks, outcomes, values_per_check):
            if values is None:
                continue
            outcome.hypothesis_count += 1
            if check.agrees(*values):
                outcome.agreements += 1
            else:
                outcome.counterexamples.append(Counterexample(check.id, s, *values))

    for o in outcomes:
        if o.counterexamples:
            logger.warning(f"{o.check_id}: {len(o.counterexamples)} counterexamples out of {o.hypothesis_count}")
        else:
            logger.info(f"{o.check_id}: {o.agreements}/{o.hypothesis_count} agree")
    return AuditReport(outcomes)


# --- The six-element non-planar example ---

def _example_315_cells() -> Dict[Tuple[int, int], int]:
    """Cells forced by a^5 = a^2 (likewise b, c) with x, y, z = a^2, a^3, a^4"""
    a, x, y, z, b, c = range(6)
    kernel = {x: 2, y: 3, z: 4}             # exponent of a for each kernel element
    by_exponent = {2: x, 3: y, 4: z}

    def reduce(e: int) -> int:
        return e if e < 5 else 2 + (e - 2) % 3

    cells = {}
    for g in (a, b, c):
        cells[(g, g)] = x
        for k, e in kernel.items():
            cells[(g, k)] = cells[(k, g)] = by_exponent[reduce(e + 1)]
    for k1, e1 in kernel.items():
        for k2, e2 in kernel.items():
            cells[(k1, k2)] = by_exponent[reduce(e1 + e2)]
    return cells


def reconstruct_example_315() -> CayleyTable:
    """
    Six elements a, x, y, z, b, c where a, b and c each generate
    {g, x, y, z} with g^2 = x, g^3 = y, g^4 = z and g^5 = g^2.

    The cells between a, b and c are left free; the lexicographically least
    associative completion is returned.
    """
    table = complete_table(6, _example_315_cells())
    if table is None:
        raise ConstructionFailed("no associative completion of the forced cells exists")
    table = table.with_labels(EXAMPLE_315_LABELS)

    a, x, y, z, b, c = range(6)
    for g in (a, b, c):
        d = all_monogenic_data(table)[g]
        if (d.index_m, d.period_r, d.powers) != (2, 3, (g, x, y, z)):
            raise ConstructionFailed(f"generator {table.label(g)} has powers {d.powers}, index {d.index_m}")
    logger.info(f"Reconstructed six-element example: {table.rows()}")
    return table
