"""Dense exact matrices over any field from :mod:`pseudocentro.fields`.

Element access ``A[i, j]`` is 0-based like numpy.  Index *sets* that come
from the mathematics (block ranges, column subsets, vertex labels) are
1-based and inclusive, matching the usual ``a_{i,j}`` notation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, ParseError, SingularMatrixError
from .fields import QQ, GaussianField, parse_field

__all__ = [
    "Matrix",
    "identity",
    "zeros",
    "det_exact",
    "mat_inverse",
    "conjugate_by",
    "submatrix_by_columns",
    "parse_matrix",
    "format_matrix",
]


class Matrix:
    """An immutable ``rows x cols`` matrix with entries in ``field``."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], field=QQ):
        data = tuple(tuple(field(x) for x in row) for row in entries)
        cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise DimensionError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    @classmethod
    def _raw(cls, data: tuple, field) -> Matrix:
        # trusted constructor: entries already coerced
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", len(data[0]) if data else 0)
        object.__setattr__(m, "_data", data)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}], field={self.field!r})"

    def __str__(self):
        cells = [[self.field.format(x) for x in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.field,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.field,
        )

    def __neg__(self) -> Matrix:
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.field)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.field.zero
        other_cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        data = []
        for r in self._data:
            row = []
            for c in other_cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            data.append(tuple(row))
        return Matrix._raw(tuple(data), self.field)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.field)

    def __mul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def transpose(self) -> Matrix:
        return Matrix._raw(tuple(zip(*self._data)) if self.rows else (), self.field)

    def map(self, fn, field=None) -> Matrix:
        """Apply ``fn`` entrywise; the result lives in ``field`` (default: same field)."""
        field = field or self.field
        return Matrix(([fn(x) for x in r] for r in self._data), field)

    def to_field(self, field) -> Matrix:
        return Matrix(self._data, field)

    def is_zero(self) -> bool:
        return all(not x for r in self._data for x in r)

    def is_integral(self) -> bool:
        """True for rational matrices whose entries are all integers."""
        return self.field == QQ and all(x.denominator == 1 for r in self._data for x in r)

    # -- slicing ------------------------------------------------------------

    def block(self, row_range: tuple[int, int], col_range: tuple[int, int]) -> Matrix:
        """Copy of rows ``r0..r1`` and columns ``c0..c1`` (1-based, inclusive)."""
        r0, r1 = row_range
        c0, c1 = col_range
        if not (1 <= r0 <= r1 <= self.rows and 1 <= c0 <= c1 <= self.cols):
            raise DimensionError(
                f"block rows {r0}..{r1}, cols {c0}..{c1} outside a {self.rows}x{self.cols} matrix"
            )
        return Matrix._raw(tuple(r[c0 - 1:c1] for r in self._data[r0 - 1:r1]), self.field)

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        """Rows and columns picked by 0-based index lists, in the given order."""
        return Matrix._raw(tuple(tuple(self._data[i][j] for j in cols) for i in rows), self.field)

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> Matrix:
        """``P[i, j] = A[row_perm[i], col_perm[j]]`` (0-based)."""
        return self.select(row_perm, col_perm)

    # -- elimination --------------------------------------------------------

    def det(self, method: str = "auto"):
        """Exact determinant.

        ``method`` is ``"bareiss"`` (fraction-free, integer matrices only),
        ``"gauss"`` (elimination over the field) or ``"auto"``, which picks
        Bareiss for integer matrices over Q.
        """
        if not self.is_square:
            raise DimensionError(f"determinant of non-square {self.rows}x{self.cols} matrix")
        if method == "auto":
            method = "bareiss" if self.is_integral() else "gauss"
        if method == "bareiss":
            if not self.is_integral():
                raise ValueError("Bareiss elimination needs an integer matrix")
            return Fraction(_bareiss([[x.numerator for x in r] for r in self._data]))
        if method == "gauss":
            return _gauss_det([list(r) for r in self._data], self.field)
        raise ValueError(f"unknown determinant method {method!r}")

    def rank(self) -> int:
        return len(_row_reduce([list(r) for r in self._data], self.field)[1])

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise DimensionError(f"cannot invert non-square {self.rows}x{self.cols} matrix")
        n = self.rows
        one, zero = self.field.one, self.field.zero
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self._data)]
        reduced, pivots = _row_reduce(aug, self.field, ncols=n)
        if len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in reduced), self.field)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def _gauss_det(a: list[list], field):
    n = len(a)
    det = field.one
    for k in range(n):
        # first nonzero pivot scanning down; exact arithmetic needs no magnitude pivoting
        p = next((r for r in range(k, n) if a[r][k]), None)
        if p is None:
            return field.zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot
        inv = field.one / pivot
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                row_k = a[k]
                a[i] = [x - f * y for x, y in zip(a[i], row_k)]
    return det


def _row_reduce(a: list[list], field, ncols: int | None = None):
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    nrows = len(a)
    ncols = (len(a[0]) if a else 0) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = field.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def identity(n: int, field=QQ) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), field)


def zeros(rows: int, cols: int | None = None, field=QQ) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix._raw(tuple(tuple(field.zero for _ in range(cols)) for _ in range(rows)), field)


def block_matrix(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble ``[[A, B], [C, D]]``-style block layouts."""
    field = blocks[0][0].field
    data = []
    for block_row in blocks:
        heights = {b.rows for b in block_row}
        if len(heights) != 1:
            raise DimensionError("blocks in one row must share a height")
        for i in range(heights.pop()):
            data.append(tuple(x for b in block_row for x in b.row(i)))
    if len({len(r) for r in data}) > 1:
        raise DimensionError("block columns do not line up")
    return Matrix._raw(tuple(data), field)


def det_exact(A: Matrix):
    return A.det()


def mat_inverse(A: Matrix) -> Matrix:
    return A.inverse()


def conjugate_by(A: Matrix, V: Matrix) -> Matrix:
    """``V^-1 A V``."""
    if not (A.is_square and V.shape == A.shape):
        raise DimensionError(f"cannot conjugate {A.shape} by {V.shape}")
    return V.inverse() @ A @ V


def submatrix_by_columns(A: Matrix, columns: Sequence[int], top_rows: int | None = None) -> Matrix:
    """First ``top_rows`` rows of ``A`` restricted to ``columns`` (1-based, ascending).

    ``top_rows`` defaults to ``len(columns)`` so the result is square.
    """
    k = len(columns) if top_rows is None else top_rows
    if len(columns) != k:
        raise DimensionError(f"expected {k} columns, got {len(columns)}")
    if k > A.rows:
        raise DimensionError(f"matrix has only {A.rows} rows")
    if list(columns) != sorted(set(columns)) or (columns and not 1 <= columns[0] <= columns[-1] <= A.cols):
        raise DimensionError(f"columns {list(columns)} must be distinct, ascending and in 1..{A.cols}")
    return A.select(range(k), [c - 1 for c in columns])


# -- text format --------------------------------------------------------------

def parse_matrix(text: str) -> Matrix:
    """Parse the ``rows cols [field]`` text format.

    Entries use the scalar syntax of :mod:`pseudocentro.fields`.  A matrix
    containing any Gaussian entry (``a+bi``) is returned over ``field[i]``.
    Lines starting with ``#`` are ignored.
    """
    lines = [
        (no, line)
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix file")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) not in (2, 3):
        raise ParseError("header must be `rows cols [field]`", header_no, 1)
    try:
        rows, cols = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("row and column counts must be integers", header_no, 1) from None
    if rows < 0 or cols < 0:
        raise ParseError("negative dimension", header_no, 1)
    base = QQ
    if len(parts) == 3:
        try:
            base = parse_field(parts[2])
        except ParseError as e:
            raise ParseError(str(e), header_no, header.index(parts[2]) + 1) from None
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} matrix rows, found {len(body)}", header_no)

    tokens = []
    gaussian = False
    for no, line in body:
        row = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            row.append((tok, no, col))
            col += len(tok) - 1
            gaussian |= tok.endswith("i")
        if len(row) != cols:
            raise ParseError(f"expected {cols} entries, found {len(row)}", no, 1)
        tokens.append(row)

    field = base
    if gaussian:
        try:
            field = GaussianField(base)
        except Exception as e:
            raise ParseError(str(e), header_no) from None
    entries = []
    for row in tokens:
        out = []
        for tok, no, col in row:
            try:
                out.append(field.parse(tok))
            except (ParseError, ZeroDivisionError) as e:
                msg = e.args[0] if isinstance(e, ZeroDivisionError) else str(e)
                raise ParseError(msg, no, col) from None
        entries.append(out)
    return Matrix._raw(tuple(tuple(r) for r in entries), field)


def format_matrix(A: Matrix) -> str:
    base = A.field.base if isinstance(A.field, GaussianField) else A.field
    header = f"{A.rows} {A.cols} {base.name}"
    lines = [header] + [" ".join(A.field.format(x) for x in r) for r in A]
    return "\n".join(lines) + "\n"
