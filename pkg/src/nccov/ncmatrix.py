"""Matrices over the quaternions with the row-by-column and column-by-row products.

Indexing is 0-based and row-major: ``m[i, j]`` is row ``i`` (the upper index
of the usual ``a^i_j`` notation, shifted down by one) and column ``j`` (the
lower index, likewise shifted).
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, ShapeMismatch, Singular
from .scalar import Quaternion, as_quaternion, format_quaternion, parse_quaternion

_ZERO = Quaternion.zero()
_ONE = Quaternion.one()

# Test hook: when set, every scalar product inside rc_product is taken in the
# reversed order.  Used only to check that the property suites catch a broken
# build.
_flip_order = False


@contextlib.contextmanager
def flipped_product_order():
    """Temporarily corrupt ``rc_product`` by swapping its scalar factors."""
    global _flip_order
    old = _flip_order
    _flip_order = True
    try:
        yield
    finally:
        _flip_order = old


@dataclass(frozen=True)
class NcMatrix:
    rows: int
    cols: int
    entries: tuple[Quaternion, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "NcMatrix":
        """Build from nested rows; entries may be Quaternions, ints, Fractions or text."""
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), ncols, tuple(as_quaternion(x) for r in rows for x in r))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx: tuple[int, int]) -> Quaternion:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Quaternion, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Quaternion]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "NcMatrix":
        return NcMatrix(self.cols, self.rows,
                        tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other):
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return mat_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return mat_add(self, scalar_left_mul(-_ONE, other))

    def __neg__(self):
        return NcMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other):
        if not isinstance(other, NcMatrix):
            return NotImplemented
        return rc_product(self, other)

    def __rmul__(self, scalar):
        # a * M means left scalar multiplication
        return scalar_left_mul(as_quaternion(scalar), self)

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"NcMatrix.parse({format_matrix(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "NcMatrix":
        return parse_matrix(text)


def identity(n: int) -> NcMatrix:
    return NcMatrix(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))


def zero(rows: int, cols: int) -> NcMatrix:
    return NcMatrix(rows, cols, (_ZERO,) * (rows * cols))


def mat_add(a: NcMatrix, b: NcMatrix) -> NcMatrix:
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.shape} and {b.shape}")
    return NcMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def mat_eq(a: NcMatrix, b: NcMatrix) -> bool:
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot compare {a.shape} and {b.shape}")
    return a.entries == b.entries


def scalar_left_mul(a: Quaternion, m: NcMatrix) -> NcMatrix:
    return NcMatrix(m.rows, m.cols, tuple(a * x for x in m.entries))


def _dot(left: Iterable[Quaternion], right: Iterable[Quaternion]) -> Quaternion:
    acc = _ZERO
    if _flip_order:
        for x, y in zip(left, right):
            if x and y:
                acc = acc + y * x
        return acc
    for x, y in zip(left, right):
        if x and y:
            acc = acc + x * y
    return acc


def rc_product(a: NcMatrix, b: NcMatrix) -> NcMatrix:
    """Row-over-column product: ``result[i, j] = sum_k a[i, k] * b[k, j]``."""
    if a.cols != b.rows:
        raise ShapeMismatch(f"rc_product needs a.cols == b.rows, got {a.shape} and {b.shape}")
    bcols = [tuple(b[k, j] for k in range(b.rows)) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        out.extend(_dot(arow, col) for col in bcols)
    return NcMatrix(a.rows, b.cols, tuple(out))


def cr_product(a: NcMatrix, b: NcMatrix) -> NcMatrix:
    """Column-over-row product: ``result[i, j] = sum_k a[k, i] * b[j, k]``.

    The result has shape ``a.cols x b.rows``.
    """
    if a.rows != b.cols:
        raise ShapeMismatch(f"cr_product needs a.rows == b.cols, got {a.shape} and {b.shape}")
    acols = [tuple(a[k, i] for k in range(a.rows)) for i in range(a.cols)]
    out = []
    for col in acols:
        out.extend(_dot(col, b.row(j)) for j in range(b.rows))
    return NcMatrix(a.cols, b.rows, tuple(out))


def rc_inverse(g: NcMatrix) -> NcMatrix:
    """Inverse under :func:`rc_product` by Gauss-Jordan elimination.

    Row operations are left multiplications (``row <- c * row`` and
    ``row_r <- row_r - c * row_p``), which is what keeps them compatible with
    the rc-product over a non-commutative ring.  The pivot is the first row
    with a nonzero entry in the current column.
    """
    if not g.is_square():
        raise ShapeMismatch(f"rc_inverse needs a square matrix, got {g.shape}")
    n = g.rows
    rows = [list(g.row(i)) + [_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            raise Singular(f"no pivot in column {col}; matrix is not rc-nonsingular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        prow = [inv * x for x in rows[col]]
        rows[col] = prow
        for r in range(n):
            if r == col:
                continue
            c = rows[r][col]
            if c:
                rows[r] = [x - c * y if y else x for x, y in zip(rows[r], prow)]
    return NcMatrix(n, n, tuple(x for r in rows for x in r[n:]))


def is_rc_nonsingular(g: NcMatrix) -> bool:
    if not g.is_square():
        raise ShapeMismatch(f"square matrix required, got {g.shape}")
    try:
        rc_inverse(g)
    except Singular:
        return False
    return True


# -- text format ------------------------------------------------------------

def format_matrix(m: NcMatrix) -> str:
    """Rows separated by ``;``, entries by ``,``."""
    return ";".join(",".join(format_quaternion(x) for x in m.row(i)) for i in range(m.rows))


def parse_matrix(text: str) -> NcMatrix:
    rows = []
    offset = 0
    for row_text in text.split(";"):
        row = []
        for entry in row_text.split(","):
            row.append(parse_quaternion(entry, base_offset=offset))
            offset += len(entry) + 1
        rows.append(row)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("rows have different lengths", len(text), text)
    return NcMatrix.from_rows(rows)
