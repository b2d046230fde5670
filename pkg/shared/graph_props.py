"""Exact graph analyses: classification, planarity, independence, cliques, colorings"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .config import BRUTE_FORCE_MIS_LIMIT, CHROMATIC_EXACT_LIMIT
from .epgraph import SimpleGraph, components
from .errors import SizeLimitExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphClassification:
    vertex_count: int
    edge_count: int
    component_count: int
    connected: bool
    complete: bool
    null: bool
    tree: bool
    acyclic: bool
    bipartite: bool
    star: bool
    components_complete: bool
    regular_degree: Optional[int]
    min_degree: int
    max_degree: int
    odd_cycle_witness: Optional[Tuple[int, ...]]
    diameter_per_component: Tuple[int, ...]

    def shape(self) -> str:
        """Short human description used in reports"""
        n = self.vertex_count
        if self.null:
            return f"null graph on {n} vertices" if n > 1 else "single vertex"
        if self.complete:
            return f"complete K_{n}"
        if self.star:
            return f"star K_{{1,{n - 1}}}"
        if self.tree:
            return "tree"
        if self.acyclic:
            return "forest"
        if self.bipartite:
            return "bipartite"
        return "general"


def _odd_cycle(parent: Dict[int, int], depth: Dict[int, int], u: int, v: int) -> Tuple[int, ...]:
    """Close the tree paths from u and v at their lowest common ancestor"""
    up, vp = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        vp.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        up.append(a)
        vp.append(b)
    return tuple(up + vp[-2::-1])


def _two_coloring(g: SimpleGraph) -> Optional[Tuple[int, ...]]:
    """None when bipartite, else an odd cycle"""
    color: Dict[int, int] = {}
    parent: Dict[int, int] = {}
    depth: Dict[int, int] = {}
    for root in range(g.vertex_count):
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, root, 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in color:
                    color[u], parent[u], depth[u] = 1 - color[v], v, depth[v] + 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return _odd_cycle(parent, depth, v, u)
    return None


def classify(g: SimpleGraph) -> GraphClassification:
    n = g.vertex_count
    m = len(g.edges)
    comps = components(g)
    degrees = [g.degree(v) for v in range(n)]

    acyclic = m == n - len(comps)
    connected = len(comps) <= 1
    complete = m == n * (n - 1) // 2
    tree = connected and acyclic
    star = tree and n >= 2 and max(degrees) == n - 1
    regular = degrees[0] if degrees and all(d == degrees[0] for d in degrees) else None
    odd_cycle = _two_coloring(g)

    components_complete = all(
        all(g.has_edge(u, v) for u, v in combinations(comp, 2)) for comp in comps
    )
    nxg = g.to_networkx()
    diameters = tuple(nx.diameter(nxg.subgraph(comp)) for comp in comps)

    return GraphClassification(
        vertex_count=n,
        edge_count=m,
        component_count=len(comps),
        connected=connected,
        complete=complete,
        null=m == 0,
        tree=tree,
        acyclic=acyclic,
        bipartite=odd_cycle is None,
        star=star,
        components_complete=components_complete,
        regular_degree=regular,
        min_degree=min(degrees) if degrees else 0,
        max_degree=max(degrees) if degrees else 0,
        odd_cycle_witness=odd_cycle,
        diameter_per_component=diameters,
    )


def minimum_degree(g: SimpleGraph) -> int:
    return min((g.degree(v) for v in range(g.vertex_count)), default=0)


# --- Planarity ---

@dataclass(frozen=True)
class KuratowskiWitness:
    """Subdivision of K5 or K3,3: branch vertices plus one path per required branch pair"""

    kind: str                                    # 'K5' or 'K3,3'
    branch_vertices: Tuple[int, ...]
    paths: Tuple[Tuple[int, ...], ...]
    parts: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

    def edges(self) -> Set[Tuple[int, int]]:
        return {
            (min(a, b), max(a, b))
            for path in self.paths
            for a, b in zip(path, path[1:])
        }

    def verify(self, g: SimpleGraph) -> bool:
        branch = set(self.branch_vertices)
        if self.kind == 'K5':
            if len(branch) != 5:
                return False
            required = {frozenset(pair) for pair in combinations(branch, 2)}
        elif self.kind == 'K3,3':
            if self.parts is None:
                return False
            left, right = set(self.parts[0]), set(self.parts[1])
            if len(left) != 3 or len(right) != 3 or left & right or left | right != branch:
                return False
            required = {frozenset((a, b)) for a in left for b in right}
        else:
            return False

        seen_pairs = set()
        interior_used: Set[int] = set()
        for path in self.paths:
            if len(path) < 2 or len(set(path)) != len(path):
                return False
            ends = frozenset((path[0], path[-1]))
            if ends not in required or ends in seen_pairs:
                return False
            seen_pairs.add(ends)
            interior = set(path[1:-1])
            if interior & branch or interior & interior_used:
                return False
            interior_used |= interior
            if not all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
                return False
        return seen_pairs == required


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: Optional[KuratowskiWitness] = None
    edge_bound_exceeded: bool = False


def _witness_from_subgraph(h: nx.Graph) -> KuratowskiWitness:
    """Read branch vertices and paths off a Kuratowski subdivision"""
    h = h.copy()
    h.remove_nodes_from([v for v in list(h.nodes) if h.degree(v) == 0])
    branch = sorted(v for v in h.nodes if h.degree(v) >= 3)
    branch_set = set(branch)

    paths: Dict[frozenset, Tuple[int, ...]] = {}
    for b in branch:
        for w in sorted(h.neighbors(b)):
            path = [b, w]
            while path[-1] not in branch_set:
                prev, cur = path[-2], path[-1]
                nxt = next(u for u in h.neighbors(cur) if u != prev)
                path.append(nxt)
            key = frozenset((path[0], path[-1]))
            if key not in paths or path[0] < paths[key][0]:
                paths[key] = tuple(path)

    ordered = tuple(sorted(paths.values()))
    if len(branch) == 5:
        return KuratowskiWitness('K5', tuple(branch), ordered)

    first = branch[0]
    linked = {v for key in paths for v in key if first in key}
    left = tuple(v for v in branch if v not in linked or v == first)
    right = tuple(v for v in branch if v not in left)
    return KuratowskiWitness('K3,3', tuple(branch), ordered, (left, right))


def is_planar(g: SimpleGraph) -> PlanarityResult:
    """
    LR planarity test (networkx); non-planar verdicts carry a Kuratowski
    witness read off the returned counterexample.
    """
    n, m = g.vertex_count, len(g.edges)
    exceeded = n >= 3 and m > 3 * n - 6
    if exceeded:
        logger.debug(f"Edge bound: {m} > 3*{n}-6, non-planar; extracting witness")

    planar, certificate = nx.check_planarity(g.to_networkx(), counterexample=True)
    if planar:
        return PlanarityResult(True)
    return PlanarityResult(False, _witness_from_subgraph(certificate), exceeded)


def _fragments(adj: Dict[int, Set[int]], embedded_v: Set[int], embedded_e: Set[frozenset],
               all_e: Set[frozenset]) -> List[Tuple[Set[int], Set[int]]]:
    """(attachments, inner vertices) for every fragment relative to the embedded subgraph"""
    result = []
    for e in sorted(all_e - embedded_e, key=sorted):
        if e <= embedded_v:
            result.append((set(e), set()))

    rest = sorted(set(adj) - embedded_v)
    seen: Set[int] = set()
    for start in rest:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in embedded_v and u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        attachments = {u for v in comp for u in adj[v] if u in embedded_v}
        result.append((attachments, comp))
    return result


def _fragment_path(adj: Dict[int, Set[int]], attachments: Set[int], inner: Set[int]) -> List[int]:
    """Path through the fragment between two distinct attachment vertices"""
    ends = sorted(attachments)
    if not inner:
        return ends
    u = ends[0]
    parent = {v: u for v in sorted(adj[u] & inner)}
    queue = deque(parent)
    while queue:
        v = queue.popleft()
        targets = sorted(w for w in adj[v] if w in attachments and w != u)
        if targets:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return path[::-1] + [targets[0]]
        for w in sorted(adj[v] & inner):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    raise ValueError("fragment has a single attachment; block is not biconnected")


def _split_face(face: List[int], path: List[int]) -> Tuple[List[int], List[int]]:
    k = len(face)
    i, j = face.index(path[0]), face.index(path[-1])
    first = [face[(i + t) % k] for t in range((j - i) % k + 1)]
    second = [face[(j + t) % k] for t in range((i - j) % k + 1)]
    interior = path[1:-1]
    return first + interior[::-1], second + interior


def _block_is_planar(edge_list: Sequence[Tuple[int, int]]) -> bool:
    """Path-addition test (Demoucron, Malgrange, Pertuiset) on one biconnected block"""
    adj: Dict[int, Set[int]] = {}
    for u, v in edge_list:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv, ne = len(adj), len(edge_list)
    if ne < 9:
        return True
    if ne > 3 * nv - 6:
        return False

    cycle = [a for a, _ in nx.find_cycle(nx.Graph(list(edge_list)))]
    embedded_v = set(cycle)
    embedded_e = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    all_e = {frozenset(e) for e in edge_list}
    faces = [list(cycle), list(cycle)]

    while embedded_e != all_e:
        choice = None
        for attachments, inner in _fragments(adj, embedded_v, embedded_e, all_e):
            admissible = [i for i, face in enumerate(faces) if attachments <= set(face)]
            if not admissible:
                return False
            if choice is None or len(admissible) < len(choice[2]):
                choice = (attachments, inner, admissible)
            if len(admissible) == 1:
                break
        attachments, inner, admissible = choice
        path = _fragment_path(adj, attachments, inner)
        face_index = admissible[0]
        first, second = _split_face(faces[face_index], path)
        faces[face_index] = first
        faces.append(second)
        embedded_v.update(path)
        embedded_e.update(frozenset(pair) for pair in zip(path, path[1:]))
    return True


def path_addition_is_planar(g: SimpleGraph) -> bool:
    """Planarity by path addition per biconnected block; independent of the LR test"""
    n, m = g.vertex_count, len(g.edges)
    if n >= 3 and m > 3 * n - 6:
        return False
    for block in nx.biconnected_component_edges(g.to_networkx()):
        if not _block_is_planar(list(block)):
            return False
    return True


def find_kuratowski_subdivision(g: SimpleGraph) -> Optional[KuratowskiWitness]:
    """
    Targeted subdivision search: delete edges (lexicographic order) while the
    graph stays non-planar. What remains, without isolated vertices, is an
    edge-minimal non-planar graph, i.e. a subdivision of K5 or K3,3.
    """
    if path_addition_is_planar(g):
        return None
    current = set(g.edges)
    for edge in g.sorted_edges():
        trial = current - {edge}
        if not path_addition_is_planar(SimpleGraph(g.vertex_count, frozenset(trial))):
            current = trial
    return _witness_from_subgraph(nx.Graph(sorted(current)))


# --- Independence, cliques, colorings ---

def _greedy_independent(g: SimpleGraph) -> int:
    """Min-degree greedy independent set as a bitmask"""
    cand = (1 << g.vertex_count) - 1
    chosen = 0
    while cand:
        v = min(
            (u for u in range(g.vertex_count) if cand >> u & 1),
            key=lambda u: ((g.adjacency[u] & cand).bit_count(), u),
        )
        chosen |= 1 << v
        cand &= ~(g.adjacency[v] | 1 << v)
    return chosen


def _mask_to_set(mask: int) -> FrozenSet[int]:
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)


def independence_number(g: SimpleGraph) -> Tuple[int, FrozenSet[int]]:
    """
    Exact maximum independent set by branch and bound.

    Lower bound from min-degree greedy; vertices of candidate degree <= 1 are
    taken outright; otherwise branch on the highest-degree candidate (lowest
    index on ties), include first.
    """
    adj = g.adjacency
    best = _greedy_independent(g)
    best_size = best.bit_count()

    def expand(cand: int, chosen: int) -> None:
        nonlocal best, best_size
        size = chosen.bit_count()
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + cand.bit_count() <= best_size:
            return

        pivot, pivot_degree = -1, -1
        v = 0
        rest = cand
        while rest:
            if rest & 1:
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    expand(cand & ~(adj[v] | 1 << v), chosen | 1 << v)
                    return
                if d > pivot_degree:
                    pivot, pivot_degree = v, d
            rest >>= 1
            v += 1

        expand(cand & ~(adj[pivot] | 1 << pivot), chosen | 1 << pivot)
        expand(cand & ~(1 << pivot), chosen)

    expand((1 << g.vertex_count) - 1, 0)
    return best_size, _mask_to_set(best)


def independence_number_brute_force(g: SimpleGraph) -> int:
    """Maximum over all vertex subsets; oracle for small graphs only"""
    if g.vertex_count > BRUTE_FORCE_MIS_LIMIT:
        raise SizeLimitExceeded(g.vertex_count, BRUTE_FORCE_MIS_LIMIT)
    best = 0
    for mask in range(1 << g.vertex_count):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(not (g.adjacency[v] & mask) for v in range(g.vertex_count) if mask >> v & 1):
            best = size
    return best


def max_clique(g: SimpleGraph) -> Tuple[int, FrozenSet[int]]:
    return independence_number(g.complement())


def clique_number(g: SimpleGraph) -> int:
    return max_clique(g)[0]


def _k_coloring(g: SimpleGraph, order: Sequence[int], k: int) -> Optional[Tuple[int, ...]]:
    colors = [-1] * g.vertex_count

    def assign(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = {colors[u] for u in g.neighbors(v)}
        # new colors are introduced one at a time to skip permuted colorings
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if assign(pos + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return tuple(colors) if assign(0, 0) else None


def optimal_coloring(g: SimpleGraph) -> Tuple[int, Tuple[int, ...]]:
    """
    Exact chromatic number: try k = omega, omega+1, ... with backtracking
    over vertices in decreasing degree order.
    """
    n = g.vertex_count
    if n > CHROMATIC_EXACT_LIMIT:
        raise SizeLimitExceeded(n, CHROMATIC_EXACT_LIMIT)
    if n == 0:
        return 0, ()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    for k in range(clique_number(g), n + 1):
        coloring = _k_coloring(g, order, k)
        if coloring is not None:
            return k, coloring
    raise AssertionError("n colors always suffice")


def chromatic_number(g: SimpleGraph) -> int:
    return optimal_coloring(g)[0]
