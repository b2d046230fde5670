"""Green's relations L, R, J, H, D and the completely-regular test"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .semigroup_core import CayleyTable, all_monogenic_data, ensure_identity, idempotents

logger = logging.getLogger(__name__)

RELATIONS = ('L', 'R', 'J', 'H', 'D')


def _labels_from_keys(keys: Sequence) -> Tuple[int, ...]:
    """Class label = order of first appearance of the key"""
    ids: Dict = {}
    return tuple(ids.setdefault(key, len(ids)) for key in keys)


@dataclass(frozen=True)
class GreenPartition:
    """Class labels (length n) for each of the five relations"""

    labels: Mapping[str, Tuple[int, ...]]

    def __post_init__(self):
        # read-only: instances are shared through the lru_cache
        object.__setattr__(self, 'labels', MappingProxyType(dict(self.labels)))

    def classes(self, relation: str) -> List[Tuple[int, ...]]:
        members: Dict[int, List[int]] = {}
        for x, label in enumerate(self.labels[relation]):
            members.setdefault(label, []).append(x)
        return [tuple(members[label]) for label in sorted(members)]

    def class_of(self, relation: str, x: int) -> Tuple[int, ...]:
        label = self.labels[relation][x]
        return tuple(y for y, other in enumerate(self.labels[relation]) if other == label)

    def class_count(self, relation: str) -> int:
        return len(set(self.labels[relation]))

    def related(self, relation: str, x: int, y: int) -> bool:
        return self.labels[relation][x] == self.labels[relation][y]


@lru_cache(maxsize=4096)
def green_relations(s: CayleyTable) -> GreenPartition:
    """
    Principal ideals S^1 x, x S^1 and S^1 x S^1 are computed in S^1 (an
    identity is adjoined only when S lacks one). H = L meet R and
    D = L o R, i.e. x D y iff L_x meets R_y.
    """
    s1 = ensure_identity(s)
    t = s1.table
    rng1 = range(s1.n)

    left_ideals = [frozenset(t[u][x] for u in rng1) for x in range(s.n)]
    right_ideals = [frozenset(t[x][u] for u in rng1) for x in range(s.n)]
    two_sided = [frozenset(t[t[u][x]][v] for u in rng1 for v in rng1) for x in range(s.n)]

    l_labels = _labels_from_keys(left_ideals)
    r_labels = _labels_from_keys(right_ideals)
    j_labels = _labels_from_keys(two_sided)
    h_labels = _labels_from_keys(list(zip(l_labels, r_labels)))

    # D-class of x: every y whose R-class meets the L-class of x
    l_members: Dict[int, List[int]] = {}
    for x, label in enumerate(l_labels):
        l_members.setdefault(label, []).append(x)
    d_keys = [frozenset(r_labels[z] for z in l_members[l_labels[x]]) for x in range(s.n)]
    d_labels = _labels_from_keys(d_keys)

    return GreenPartition({'L': l_labels, 'R': r_labels, 'J': j_labels, 'H': h_labels, 'D': d_labels})


def h_class(s: CayleyTable, x: int) -> Tuple[int, ...]:
    return green_relations(s).class_of('H', x)


def _is_subgroup(s: CayleyTable, members: Sequence[int]) -> bool:
    """Closed, with an idempotent acting as identity and inverses inside the set"""
    group = set(members)
    t = s.table
    if any(t[a][b] not in group for a in group for b in group):
        return False
    identities = [e for e in group if t[e][e] == e and all(t[e][a] == a == t[a][e] for a in group)]
    if not identities:
        return False
    e = identities[0]
    return all(any(t[a][b] == e == t[b][a] for b in group) for a in group)


def h_class_is_group(s: CayleyTable, x: int) -> bool:
    members = h_class(s, x)
    if not idempotents(s) & set(members):
        return False
    return _is_subgroup(s, members)


def is_completely_regular(s: CayleyTable) -> Tuple[bool, Optional[int]]:
    """Every H-class is a group; otherwise the first element whose class is not"""
    for x in range(s.n):
        if not h_class_is_group(s, x):
            return False, x
    return True, None


def group_components(s: CayleyTable) -> Dict[int, bool]:
    """For each idempotent f, whether S_f is a subgroup of S"""
    data = all_monogenic_data(s)
    result = {}
    for f in sorted(idempotents(s)):
        members = [d.generator for d in data if f in d.elements]
        result[f] = _is_subgroup(s, members)
    return result


def transitive_d_labels(s: CayleyTable) -> Tuple[int, ...]:
    """D as the transitive closure of L union R; cross-check for the one-step composition"""
    partition = green_relations(s)
    parent = list(range(s.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for relation in ('L', 'R'):
        for cls in partition.classes(relation):
            for y in cls[1:]:
                parent[find(y)] = find(cls[0])
    return _labels_from_keys([find(x) for x in range(s.n)])
