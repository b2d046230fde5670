"""Enhanced power graph, its sibling graphs, and component decompositions"""

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import InvalidParams
from .semigroup_core import CayleyTable, all_monogenic_data, subsemigroup_generated

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph on 0..vertex_count-1.

    Edges are stored as sorted pairs (u < v); `adjacency` mirrors them as
    one bitmask per vertex.
    """

    vertex_count: int
    edges: FrozenSet[Edge]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)
    adjacency: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InvalidParams(f"edge {(u, v)} is not a sorted pair of distinct vertices below {self.vertex_count}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, 'adjacency', tuple(masks))

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[Edge], labels: Optional[Sequence[str]] = None) -> 'SimpleGraph':
        edges = frozenset((min(u, v), max(u, v)) for u, v in pairs if u != v)
        return cls(vertex_count, edges, tuple(labels) if labels else None)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.vertex_count) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count('1')

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def complement(self) -> 'SimpleGraph':
        pairs = [(u, v) for u, v in combinations(range(self.vertex_count), 2) if not self.has_edge(u, v)]
        return SimpleGraph(self.vertex_count, frozenset(pairs), self.labels)

    def induced(self, vertices: Iterable[int]) -> 'SimpleGraph':
        """Induced subgraph, relabelled 0..k-1 in ascending vertex order"""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        pairs = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = [self.label(v) for v in keep] if self.labels else None
        return SimpleGraph.from_pairs(len(keep), pairs, labels)

    def is_subgraph_of(self, other: 'SimpleGraph') -> bool:
        return self.vertex_count == other.vertex_count and self.edges <= other.edges

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.sorted_edges())
        return g


def null_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset())


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, frozenset((u, v) for u in range(a) for v in range(a, a + b)))


# --- Graph builders ---

def enhanced_power_graph(s: CayleyTable) -> SimpleGraph:
    """x ~ y (x != y) iff x, y lie in a common <z>; pairs inserted per power list"""
    edges = set()
    for d in all_monogenic_data(s):
        for u, v in combinations(sorted(d.elements), 2):
            edges.add((u, v))
    return SimpleGraph(s.n, frozenset(edges), s.labels)


def power_graph(s: CayleyTable) -> SimpleGraph:
    """x ~ y iff one is a positive power of the other"""
    data = all_monogenic_data(s)
    edges = set()
    for d in data:
        for y in d.elements:
            if y != d.generator:
                edges.add((min(d.generator, y), max(d.generator, y)))
    return SimpleGraph(s.n, frozenset(edges), s.labels)


def commuting_graph(s: CayleyTable) -> SimpleGraph:
    edges = [(x, y) for x, y in combinations(range(s.n), 2) if s.table[x][y] == s.table[y][x]]
    return SimpleGraph(s.n, frozenset(edges), s.labels)


def cyclic_graph(s: CayleyTable) -> SimpleGraph:
    """x ~ y iff the subsemigroup generated by {x, y} is monogenic"""
    monogenic_sets = {d.elements for d in all_monogenic_data(s)}
    edges = []
    for x, y in combinations(range(s.n), 2):
        if subsemigroup_generated(s, (x, y)).as_set() in monogenic_sets:
            edges.append((x, y))
    return SimpleGraph(s.n, frozenset(edges), s.labels)


GRAPH_BUILDERS: Dict[str, Callable[[CayleyTable], SimpleGraph]] = {
    'epg': enhanced_power_graph,
    'power': power_graph,
    'cyclic': cyclic_graph,
    'commuting': commuting_graph,
}


def build_graph(s: CayleyTable, kind: str) -> SimpleGraph:
    builder = GRAPH_BUILDERS.get(kind)
    if builder is None:
        raise InvalidParams(f"unknown graph kind '{kind}'; known: {', '.join(GRAPH_BUILDERS)}")
    return builder(s)


# --- Components ---

def component_of(s: CayleyTable, x: int) -> FrozenSet[int]:
    """
    C(x) as the union of S(x, m, k) = {y : x^m = y^k} over 1 <= m <= o(x)
    and 1 <= k <= max order. Agrees with the graph component of x.
    """
    data = all_monogenic_data(s)
    max_order = max(d.order for d in data)
    x_powers = {data[x].power(m) for m in range(1, data[x].order + 1)}
    members = set()
    for d in data:
        if any(d.power(k) in x_powers for k in range(1, max_order + 1)):
            members.add(d.generator)
    return frozenset(members)


def components(g: SimpleGraph) -> List[Tuple[int, ...]]:
    """Breadth-first components, each sorted, ordered by least vertex"""
    seen = [False] * g.vertex_count
    result = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = []
        while queue:
            v = queue.popleft()
            members.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        result.append(tuple(sorted(members)))
    return result


def formula_components(s: CayleyTable) -> List[Tuple[int, ...]]:
    """The partition {C(x)} in the same ordering as components()"""
    result = []
    covered = set()
    for x in range(s.n):
        if x in covered:
            continue
        cls = component_of(s, x)
        covered |= cls
        result.append(tuple(sorted(cls)))
    return result
