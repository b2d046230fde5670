"""Cayley-table semigroups: validation, constructors, monogenic arithmetic"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidParams, NotAssociative, NotClosed, NotIdempotent, NotSquare, SemigroupError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CayleyTable:
    """Validated multiplication table over element indices 0..n-1.

    Labels are presentation only and take no part in equality or hashing.
    """

    n: int
    table: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        if self.labels:
            return self.labels[i]
        return str(i)

    def element_labels(self) -> List[str]:
        return [self.label(i) for i in range(self.n)]

    def rows(self) -> List[List[int]]:
        return [list(row) for row in self.table]

    def flat(self) -> Tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def as_array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def with_labels(self, labels: Optional[Sequence[str]]) -> 'CayleyTable':
        return CayleyTable(self.n, self.table, tuple(labels) if labels else None)


@dataclass(frozen=True)
class MonogenicData:
    """Index, period and power list of the monogenic subsemigroup <a>"""

    generator: int
    index_m: int
    period_r: int
    powers: Tuple[int, ...]          # a^1 .. a^(m+r-1), pairwise distinct
    idempotent_power: int            # m+g with 0 <= g < r and r | m+g
    kernel: FrozenSet[int]           # a^m .. a^(m+r-1)

    @property
    def order(self) -> int:
        return self.index_m + self.period_r - 1

    @property
    def idempotent(self) -> int:
        return self.powers[self.idempotent_power - 1]

    @property
    def elements(self) -> FrozenSet[int]:
        return frozenset(self.powers)

    def power(self, k: int) -> int:
        """a^k for any k >= 1, reduced through a^(m+r) = a^m"""
        if k < 1:
            raise InvalidParams(f"powers start at 1, got {k}")
        if k > len(self.powers):
            k = self.index_m + (k - self.index_m) % self.period_r
        return self.powers[k - 1]


@dataclass(frozen=True)
class SubsemigroupSet:
    elements: Tuple[int, ...]
    generators: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.elements)

    def as_set(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


# --- Validation ---

def validate(raw_table, labels: Optional[Sequence[str]] = None) -> CayleyTable:
    """
    Check closure and associativity of a square integer table.

    The associativity scan is exhaustive (all n^3 triples, vectorized) and
    reports the lexicographically first failing triple.

    Args:
        raw_table: n x n nested sequence or array of element indices
        labels: Optional element names, one per row

    Returns:
        Validated CayleyTable
    """
    try:
        rows = [list(row) for row in raw_table]
    except TypeError:
        raise InvalidParams(f"table must be a list of rows, got {type(raw_table).__name__}")
    n = len(rows)
    if n == 0:
        raise InvalidParams("a semigroup needs at least one element")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotSquare(n, i, len(row))

    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidParams(f"entry at ({i}, {j}) is not an integer: {value!r}")

    arr = np.array(rows, dtype=np.int64)
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NotClosed((i, j), int(arr[i, j]), n)

    # left[i, j, k] = (ij)k, right[i, j, k] = i(jk)
    left = arr[arr]
    right = arr[np.arange(n)[:, None, None], arr[None, :, :]]
    mismatch = np.argwhere(left != right)
    if len(mismatch):
        i, j, k = (int(v) for v in mismatch[0])
        raise NotAssociative((i, j, k), int(left[i, j, k]), int(right[i, j, k]))

    if labels is not None:
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise InvalidParams(f"expected {n} labels, got {len(labels)}")

    return CayleyTable(n, tuple(tuple(int(v) for v in row) for row in rows), labels or None)


# --- Standard constructors ---

def _require_positive(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidParams(f"{name} must be a positive integer, got {value!r}")
    return value


def monogenic(m: int, r: int) -> CayleyTable:
    """M(m, r) = <a : a^m = a^(m+r)>; element i stands for a^(i+1)"""
    _require_positive('m', m)
    _require_positive('r', r)
    n = m + r - 1

    def reduce(e: int) -> int:
        return e if e < m + r else m + (e - m) % r

    rows = [[reduce(i + j + 2) - 1 for j in range(n)] for i in range(n)]
    labels = ['a' if e == 1 else f'a^{e}' for e in range(1, n + 1)]
    return validate(rows, labels)


def cyclic_group(n: int) -> CayleyTable:
    _require_positive('n', n)
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ['e'] + ['g' if i == 1 else f'g^{i}' for i in range(1, n)]
    return validate(rows, labels)


def elementary_abelian_2(k: int) -> CayleyTable:
    """Z_2^k with bitwise xor; labels name the set bits x1..xk"""
    _require_positive('k', k)
    size = 2 ** k
    rows = [[i ^ j for j in range(size)] for i in range(size)]
    labels = []
    for i in range(size):
        bits = [f'x{b + 1}' for b in range(k) if i >> b & 1]
        labels.append(''.join(bits) or 'e')
    return validate(rows, labels)


def left_zero(n: int) -> CayleyTable:
    _require_positive('n', n)
    return validate([[i] * n for i in range(n)])


def right_zero(n: int) -> CayleyTable:
    _require_positive('n', n)
    return validate([list(range(n)) for _ in range(n)])


def zero_semigroup(n: int) -> CayleyTable:
    _require_positive('n', n)
    labels = ['0'] + [f's{i}' for i in range(1, n)]
    return validate([[0] * n for _ in range(n)], labels)


def direct_product(s: CayleyTable, t: CayleyTable) -> CayleyTable:
    """S x T with (s1, t1)(s2, t2) = (s1 s2, t1 t2); pair (i, j) has index i*|T| + j"""
    rows = []
    for i1 in range(s.n):
        for j1 in range(t.n):
            rows.append([
                s.table[i1][i2] * t.n + t.table[j1][j2]
                for i2 in range(s.n)
                for j2 in range(t.n)
            ])
    labels = [f'({s.label(i)},{t.label(j)})' for i in range(s.n) for j in range(t.n)]
    return validate(rows, labels)


def adjoin_identity(s: CayleyTable) -> CayleyTable:
    """S^1: adjoin a new identity element with index n"""
    rows = [list(row) + [i] for i, row in enumerate(s.table)]
    rows.append(list(range(s.n + 1)))
    labels = s.element_labels() + ['1']
    return validate(rows, labels)


CONSTRUCTORS: Dict[str, Callable[..., CayleyTable]] = {
    'monogenic': monogenic,
    'cyclic_group': cyclic_group,
    'elementary_abelian_2': elementary_abelian_2,
    'left_zero': left_zero,
    'right_zero': right_zero,
    'zero_semigroup': zero_semigroup,
    'direct_product': direct_product,
    'adjoin_identity': adjoin_identity,
}

# builders whose parameters are tables rather than integers
TABLE_CONSTRUCTORS = frozenset({'direct_product', 'adjoin_identity'})


def construct(kind: str, *params) -> CayleyTable:
    """Build a named semigroup, e.g. construct('monogenic', 2, 3)"""
    builder = CONSTRUCTORS.get(kind)
    if builder is None:
        raise InvalidParams(f"unknown constructor '{kind}'; known: {', '.join(sorted(CONSTRUCTORS))}")
    if kind in TABLE_CONSTRUCTORS and not all(isinstance(p, CayleyTable) for p in params):
        raise InvalidParams(
            f"{kind} takes semigroups, not numbers; in a generator spec use 'A*B' for a product and 'A^1' for S^1")
    try:
        return builder(*params)
    except TypeError as e:
        raise InvalidParams(f"bad parameters for {kind}: {e}") from e


# --- Structural helpers ---

def identity_element(s: CayleyTable) -> Optional[int]:
    for e in range(s.n):
        if all(s.table[e][x] == x == s.table[x][e] for x in range(s.n)):
            return e
    return None


def ensure_identity(s: CayleyTable) -> CayleyTable:
    """S^1 without duplicating an identity that already exists"""
    if identity_element(s) is not None:
        return s
    return adjoin_identity(s)


def is_commutative(s: CayleyTable) -> bool:
    return all(s.table[i][j] == s.table[j][i] for i in range(s.n) for j in range(i + 1, s.n))


def is_group(s: CayleyTable) -> bool:
    e = identity_element(s)
    if e is None:
        return False
    return all(any(s.table[a][b] == e == s.table[b][a] for b in range(s.n)) for a in range(s.n))


def relabel(s: CayleyTable, perm: Sequence[int]) -> CayleyTable:
    """Isomorphic copy sending element i to perm[i]"""
    if sorted(perm) != list(range(s.n)):
        raise InvalidParams(f"not a permutation of range({s.n}): {list(perm)}")
    rows = [[0] * s.n for _ in range(s.n)]
    for i in range(s.n):
        for j in range(s.n):
            rows[perm[i]][perm[j]] = perm[s.table[i][j]]
    labels = None
    if s.labels:
        labels = [''] * s.n
        for i in range(s.n):
            labels[perm[i]] = s.labels[i]
    return CayleyTable(s.n, tuple(tuple(row) for row in rows), tuple(labels) if labels else None)


def transpose(s: CayleyTable) -> CayleyTable:
    """Anti-isomorphic copy: x * y := y x"""
    rows = tuple(tuple(s.table[j][i] for j in range(s.n)) for i in range(s.n))
    return CayleyTable(s.n, rows, s.labels)


# --- Monogenic arithmetic ---

def monogenic_data(s: CayleyTable, a: int) -> MonogenicData:
    """
    Iterate a, a^2, ... until the first repetition.

    The first exponent whose power recurs is the index m; the gap to its
    recurrence is the period r. Terminates within n steps.
    """
    powers = [a]
    seen = {a: 1}
    current = a
    while True:
        current = s.table[current][a]
        exponent = len(powers) + 1
        if current in seen:
            m = seen[current]
            r = exponent - m
            break
        seen[current] = exponent
        powers.append(current)

    idempotent_power = m + (-m) % r
    kernel = frozenset(powers[m - 1:])
    return MonogenicData(a, m, r, tuple(powers), idempotent_power, kernel)


@lru_cache(maxsize=4096)
def all_monogenic_data(s: CayleyTable) -> Tuple[MonogenicData, ...]:
    return tuple(monogenic_data(s, a) for a in range(s.n))


def idempotents(s: CayleyTable) -> FrozenSet[int]:
    return frozenset(x for x in range(s.n) if s.table[x][x] == x)


def is_band(s: CayleyTable) -> bool:
    return len(idempotents(s)) == s.n


def exponent(s: CayleyTable) -> int:
    """
    Least k >= 1 with x^k idempotent for every x.

    x^k is idempotent exactly when k >= m_x and r_x divides k, so the answer is
    the least multiple of lcm(r_x) that is at least max(m_x). The result is
    re-checked element by element.
    """
    data = all_monogenic_data(s)
    period = lcm(*(d.period_r for d in data))
    max_index = max(d.index_m for d in data)
    k = period * -(-max_index // period)

    idem = idempotents(s)
    for d in data:
        if d.power(k) not in idem:
            raise SemigroupError(f"exponent {k} fails at element {d.generator}; table is corrupt")
    return k


def s_f(s: CayleyTable, f: int) -> SubsemigroupSet:
    """S_f = {a : a^k = f for some k}. Not closed under the product in general."""
    if s.table[f][f] != f:
        raise NotIdempotent(f)
    members = tuple(d.generator for d in all_monogenic_data(s) if f in d.elements)
    return SubsemigroupSet(members)


def pi_set(s: CayleyTable) -> FrozenSet[int]:
    return frozenset(d.order for d in all_monogenic_data(s))


def _monogenic_sets(s: CayleyTable) -> Dict[FrozenSet[int], List[int]]:
    sets: Dict[FrozenSet[int], List[int]] = {}
    for d in all_monogenic_data(s):
        sets.setdefault(d.elements, []).append(d.generator)
    return sets


def maximal_monogenic(s: CayleyTable) -> List[SubsemigroupSet]:
    """Distinct <a> not properly contained in any <b>, each with all of its generators"""
    sets = _monogenic_sets(s)
    result = []
    for elems, gens in sets.items():
        if any(elems < other for other in sets):
            continue
        result.append(SubsemigroupSet(tuple(sorted(elems)), tuple(sorted(gens))))
    result.sort(key=lambda sub: sub.generators[0])
    return result


def is_monogenic(s: CayleyTable) -> Optional[int]:
    for d in all_monogenic_data(s):
        if d.order == s.n:
            return d.generator
    return None


def gen_intersection(s: CayleyTable, x: int, y: int) -> FrozenSet[int]:
    data = all_monogenic_data(s)
    return data[x].elements & data[y].elements


def subsemigroup_generated(s: CayleyTable, xs: Iterable[int]) -> SubsemigroupSet:
    """Smallest subsemigroup containing xs"""
    gens = tuple(sorted(set(xs)))
    elements = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for u in frontier:
            for v in list(elements):
                for w in (s.table[u][v], s.table[v][u]):
                    if w not in elements:
                        elements.add(w)
                        new.append(w)
        frontier = new
    return SubsemigroupSet(tuple(sorted(elements)), gens)


def monogenic_partition(s: CayleyTable, size: Optional[int] = None) -> Optional[List[SubsemigroupSet]]:
    """
    Exact cover of S by pairwise disjoint monogenic subsemigroups.

    Searches over the distinct <a> (optionally only those of the given size),
    always covering the least uncovered element next. Returns the first cover
    found in that deterministic order, or None.
    """
    sets = _monogenic_sets(s)
    candidates = sorted(
        (tuple(sorted(elems)), tuple(sorted(gens)))
        for elems, gens in sets.items()
        if size is None or len(elems) == size
    )
    by_element: Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {x: [] for x in range(s.n)}
    for cand in candidates:
        for x in cand[0]:
            by_element[x].append(cand)

    chosen: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
    covered = [False] * s.n

    def search() -> bool:
        try:
            u = covered.index(False)
        except ValueError:
            return True
        for elems, gens in by_element[u]:
            if any(covered[x] for x in elems):
                continue
            for x in elems:
                covered[x] = True
            chosen.append((elems, gens))
            if search():
                return True
            chosen.pop()
            for x in elems:
                covered[x] = False
        return False

    if not search():
        return None
    return [SubsemigroupSet(elems, gens) for elems, gens in chosen]
