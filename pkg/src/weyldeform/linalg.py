"""Dense exact linear algebra over the rationals.

Small matrices only (the systems here stay in the low hundreds of rows),
so everything is plain Gauss-Jordan on lists of Fractions.  The module
exposes a functional core (rref, kernel_basis, solve, inverse) plus an
immutable QMatrix wrapper used by the representation-theory code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = list
Mat = list


def copy_matrix(rows: Iterable[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def rref_rows(rows: Iterable[Sequence]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form, compact variant.

    Returns (nonzero reduced rows, pivot column indices).  Input is not
    modified.
    """
    mat = copy_matrix(rows)
    if not mat:
        return [], []
    ncols = len(mat[0])
    for row in mat:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c]:
                f = mat[k][c]
                mat[k] = [a - f * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rref(a) -> tuple:
    """Full-shape reduced row echelon form.

    Accepts a QMatrix or an iterable of rows and returns ``(R, rank,
    pivots)`` where ``R`` has the same shape as the input with the zero
    rows retained at the bottom.  ``R`` matches the input type.
    """
    is_qmatrix = isinstance(a, QMatrix)
    rows = a.to_rows() if is_qmatrix else copy_matrix(a)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref_rows(rows)
    full = red + [[Fraction(0)] * ncols for _ in range(nrows - len(red))]
    if is_qmatrix:
        return QMatrix(full), len(pivots), pivots
    return full, len(pivots), pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref_rows(rows)[1])


def kernel_basis(rows: Iterable[Sequence], ncols: int) -> list[Vec]:
    """Basis of the right kernel {v : A v = 0}, one vector per free column."""
    mat = copy_matrix(rows)
    for row in mat:
        if len(row) != ncols:
            raise ValueError("row length disagrees with ncols")
    red, pivots = rref_rows(mat)
    pivot_set = set(pivots)
    basis: list[Vec] = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r_idx, pc in enumerate(pivots):
            v[pc] = -red[r_idx][fc]
        basis.append(v)
    return basis


def solve(rows: Iterable[Sequence], rhs: Sequence, ncols: int | None = None) -> Vec | None:
    """One solution of A x = b with free variables set to 0, or None."""
    mat = copy_matrix(rows)
    b = [Fraction(x) for x in rhs]
    if len(mat) != len(b):
        raise ValueError("rhs length disagrees with row count")
    if not mat:
        if ncols is None:
            raise ValueError("ncols is required when the system has no rows")
        return [Fraction(0)] * ncols
    n = len(mat[0])
    if ncols is not None and ncols != n:
        raise ValueError("ncols disagrees with matrix width")
    aug = [row + [b[i]] for i, row in enumerate(mat)]
    red, pivots = rref_rows(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r_idx, pc in enumerate(pivots):
        x[pc] = red[r_idx][n]
    return x


def inverse(rows: Iterable[Sequence]) -> Mat | None:
    mat = copy_matrix(rows)
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("inverse needs a square matrix")
    ident = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    aug = [mat[i] + ident[i] for i in range(n)]
    red, pivots = rref_rows(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


class QMatrix:
    """Immutable rational matrix.  Hashable, so usable as a dict key."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged matrix")
        self._rows = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "QMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["QMatrix"]]) -> "QMatrix":
        """Assemble from a 2d grid of blocks with consistent edge sizes."""
        rows: list[list[Fraction]] = []
        for brow in blocks:
            height = brow[0].nrows
            if any(b.nrows != height for b in brow):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                rows.append([x for b in brow for x in b._rows[i]])
        return cls(rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "QMatrix":
        if not cols:
            return cls.zeros(nrows, 0)
        return cls([[col[i] for col in cols] for i in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def to_rows(self) -> Mat:
        return [list(row) for row in self._rows]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return QMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-x for x in row] for row in self._rows])

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in product")
            cols = list(zip(*other._rows)) if other._rows else []
            return QMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
            )
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QMatrix([[c * x for x in row] for row in self._rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self._rows)) if self._rows else [])

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product."""
        v = [Fraction(x) for x in vec]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, v)) for row in self._rows]

    def rank(self) -> int:
        return rank(self._rows)

    def kernel(self) -> list[Vec]:
        return kernel_basis(self._rows, self.ncols)

    def inverse(self) -> "QMatrix | None":
        inv = inverse(self._rows)
        return None if inv is None else QMatrix(inv)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"QMatrix[{body}]"
