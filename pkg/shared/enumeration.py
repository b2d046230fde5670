"""Exhaustive enumeration of finite semigroups with canonical forms"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import CANONICAL_ORDER_CAP, ORDER_CAP
from .errors import InvalidParams, OrderCapExceeded
from .semigroup_core import CayleyTable, validate

logger = logging.getLogger(__name__)

Flat = Tuple[int, ...]


class DedupMode(str, Enum):
    LABELED = 'labeled'
    UP_TO_ISO = 'up_to_iso'
    UP_TO_ISO_AND_ANTI = 'up_to_iso_and_anti'


@dataclass(frozen=True)
class EnumerationConfig:
    order: int
    dedup_mode: DedupMode = DedupMode.UP_TO_ISO_AND_ANTI
    parallel_width: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise InvalidParams(f"order must be at least 1, got {self.order}")
        if self.order > ORDER_CAP:
            raise OrderCapExceeded(self.order, ORDER_CAP)
        if self.parallel_width < 1:
            raise InvalidParams(f"parallel_width must be at least 1, got {self.parallel_width}")
        object.__setattr__(self, 'dedup_mode', DedupMode(self.dedup_mode))


# --- Backtracking search ---

def _triple_ok(t: List[int], n: int, x: int, y: int, z: int) -> bool:
    """(xy)z == x(yz) whenever all four lookups are already filled"""
    p = t[x * n + y]
    if p < 0:
        return True
    left = t[p * n + z]
    if left < 0:
        return True
    q = t[y * n + z]
    if q < 0:
        return True
    right = t[x * n + q]
    return right < 0 or left == right


def _cell_consistent(t: List[int], n: int, i: int, j: int) -> bool:
    """Check every triple in which the cell (i, j) takes part in one of the four lookups"""
    for k in range(n):
        # (ij)k and k(ij): the cell as inner product
        if not _triple_ok(t, n, i, j, k) or not _triple_ok(t, n, k, i, j):
            return False
    for a in range(n):
        for b in range(n):
            # (ab)j with ab = i, and i(ab) with ab = j: the cell as outer product
            if t[a * n + b] == i and not _triple_ok(t, n, a, b, j):
                return False
            if t[a * n + b] == j and not _triple_ok(t, n, i, a, b):
                return False
    return True


def _search(n: int, t: List[int], free: Sequence[int]) -> Iterator[Flat]:
    """Fill the free cells in order with ascending values; yields complete tables"""
    depth = len(free)

    def extend(pos: int) -> Iterator[Flat]:
        if pos == depth:
            yield tuple(t)
            return
        cell = free[pos]
        i, j = divmod(cell, n)
        for v in range(n):
            t[cell] = v
            if _cell_consistent(t, n, i, j):
                yield from extend(pos + 1)
        t[cell] = -1

    yield from extend(0)


def _seeded(n: int, fixed: Dict[int, int]) -> Optional[List[int]]:
    """Table with the fixed cells placed, or None if they already clash"""
    t = [-1] * (n * n)
    for cell, v in sorted(fixed.items()):
        t[cell] = v
        if not _cell_consistent(t, n, *divmod(cell, n)):
            return None
    return t


def _labeled_with_prefix(n: int, prefix: Tuple[int, ...]) -> List[Flat]:
    """All associative tables whose first row starts with prefix (row-major order)"""
    t = _seeded(n, dict(enumerate(prefix)))
    if t is None:
        return []
    free = [c for c in range(n * n) if c >= len(prefix)]
    return list(_search(n, t, free))


def _canonical_with_prefix(n: int, prefix: Tuple[int, ...], anti: bool) -> List[Flat]:
    return sorted({_canonical_flat(n, flat, anti) for flat in _labeled_with_prefix(n, prefix)})


def complete_table(n: int, fixed_cells: Dict[Tuple[int, int], int]) -> Optional[CayleyTable]:
    """Lexicographically least associative completion of a partial table"""
    for (i, j), v in fixed_cells.items():
        if not (0 <= i < n and 0 <= j < n and 0 <= v < n):
            raise InvalidParams(f"fixed cell ({i}, {j}) = {v} is out of range for order {n}")
    fixed = {i * n + j: v for (i, j), v in fixed_cells.items()}
    t = _seeded(n, fixed)
    if t is None:
        return None
    free = [c for c in range(n * n) if c not in fixed]
    for flat in _search(n, t, free):
        return validate([flat[r * n:(r + 1) * n] for r in range(n)])
    return None


# --- Canonical forms ---

@lru_cache(maxsize=None)
def _permutation_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inverses = np.argsort(perms, axis=1)
    return perms, inverses


def _relabelings(arr: np.ndarray) -> np.ndarray:
    """All n! relabelings as flattened rows: N[p(i)][p(j)] = p(T[i][j])"""
    n = arr.shape[0]
    perms, inverses = _permutation_arrays(n)
    values = arr[inverses[:, :, None], inverses[:, None, :]]
    relabeled = np.take_along_axis(perms, values.reshape(len(perms), -1), axis=1)
    return relabeled


def _lexmin(rows: np.ndarray) -> Flat:
    order = np.lexsort(rows.T[::-1])
    return tuple(int(v) for v in rows[order[0]])


def _canonical_flat(n: int, flat: Flat, anti: bool) -> Flat:
    arr = np.array(flat, dtype=np.int64).reshape(n, n)
    candidates = _relabelings(arr)
    if anti:
        candidates = np.vstack([candidates, _relabelings(arr.T)])
    return _lexmin(candidates)


def canonical_form(s: CayleyTable, anti: bool = False) -> CayleyTable:
    """
    Lexicographically least table over all n! relabelings (and, with anti,
    over the relabelings of the transpose as well).
    """
    if s.n > CANONICAL_ORDER_CAP:
        raise OrderCapExceeded(s.n, CANONICAL_ORDER_CAP)
    flat = _canonical_flat(s.n, s.flat(), anti)
    return CayleyTable(s.n, tuple(flat[r * s.n:(r + 1) * s.n] for r in range(s.n)))


# --- Public enumeration ---

def _first_row_prefixes(n: int) -> List[Tuple[int, ...]]:
    return list(product(range(n), repeat=n))


def enumerate_semigroups(cfg: EnumerationConfig) -> Iterator[CayleyTable]:
    """
    Stream every semigroup of order cfg.order.

    Labeled mode yields tables in lexicographic order straight from the
    row-major search. Dedup modes collect canonical representatives and yield
    them sorted. With parallel_width > 1 the search is split on the first
    table row and merged in prefix order, so the stream does not depend on
    the width.
    """
    n = cfg.order
    anti = cfg.dedup_mode is DedupMode.UP_TO_ISO_AND_ANTI
    prefixes = _first_row_prefixes(n)

    if cfg.dedup_mode is DedupMode.LABELED:
        worker, args = _labeled_with_prefix, [(n, p) for p in prefixes]
    else:
        worker, args = _canonical_with_prefix, [(n, p, anti) for p in prefixes]

    if cfg.parallel_width > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallel_width) as pool:
            chunks = list(pool.map(worker, *zip(*args)))
    else:
        chunks = [worker(*a) for a in args]

    if cfg.dedup_mode is DedupMode.LABELED:
        flats = [flat for chunk in chunks for flat in chunk]
    else:
        flats = sorted({flat for chunk in chunks for flat in chunk})

    logger.info(f"Order {n} ({cfg.dedup_mode.value}): {len(flats)} semigroups")
    for flat in flats:
        yield CayleyTable(n, tuple(flat[r * n:(r + 1) * n] for r in range(n)))


def count_semigroups(cfg: EnumerationConfig) -> int:
    return sum(1 for _ in enumerate_semigroups(cfg))


@lru_cache(maxsize=16)
def corpus(max_order: int, mode: DedupMode = DedupMode.UP_TO_ISO_AND_ANTI,
           parallel_width: int = 1) -> Tuple[CayleyTable, ...]:
    """All semigroups of orders 1..max_order, by order then table"""
    tables: List[CayleyTable] = []
    for n in range(1, max_order + 1):
        tables.extend(enumerate_semigroups(EnumerationConfig(n, mode, parallel_width)))
    return tuple(tables)
