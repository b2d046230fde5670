"""Exceptions raised by the semigroup library"""

from typing import Optional, Tuple


class SemigroupError(Exception):
    """Base class for every library error"""


class NotSquare(SemigroupError):
    def __init__(self, rows: int, bad_row: int, length: int):
        self.rows = rows
        self.bad_row = bad_row
        super().__init__(f"table is not square: row {bad_row} has {length} entries, expected {rows}")


class NotClosed(SemigroupError):
    def __init__(self, position: Tuple[int, int], value: int, n: int):
        self.position = position
        self.value = value
        super().__init__(f"entry {value} at {position} is outside [0, {n})")


class NotAssociative(SemigroupError):
    def __init__(self, triple: Tuple[int, int, int], left: int, right: int):
        self.triple = triple
        self.left = left
        self.right = right
        i, j, k = triple
        super().__init__(
            f"not associative at ({i}, {j}, {k}): ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}"
        )


class InvalidParams(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class OrderCapExceeded(SemigroupError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"order {order} exceeds the cap of {cap}")


class SizeLimitExceeded(SemigroupError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"graph has {size} vertices; exact limit is {limit}")


class ConstructionFailed(SemigroupError):
    pass


class ParseError(SemigroupError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
