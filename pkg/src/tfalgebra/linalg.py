"""Dense exact linear algebra over a field.

A :class:`Matrix` is a thin wrapper around a list of rows of field elements.
Rank, kernel, inverse and solving all go through fraction-free-enough
Gaussian elimination in the field itself, so results are exact for both F_p
and Q.

Graded maps elsewhere in the library use the row-as-image convention
(row i of a block is the image of the i-th source basis vector); see
:func:`apply_map`.  Plain matrix algebra here is convention-free.
"""

from __future__ import annotations

from .errors import NoSolution
from .fields import Field


class Matrix:
    """An exact rows x cols matrix over a fixed field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        # the ncols hint matters only for empty matrices, where the row data
        # cannot speak for itself
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            assert len(r) == self.ncols, "ragged matrix"

    # -- constructors --------------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols=ncols)

    # -- basic algebra --------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return f"Matrix({self.rows!r})"

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def scale(self, c) -> "Matrix":
        F = self.field
        return Matrix(F, [[F.mul(c, x) for x in row] for row in self.rows])

    def add(self, other: "Matrix") -> "Matrix":
        F = self.field
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Matrix(F, [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def mul(self, other: "Matrix") -> "Matrix":
        F = self.field
        assert self.ncols == other.nrows, "inner dimensions disagree"
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = F.zero
                for k in range(self.ncols):
                    acc = F.add(acc, F.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, ncols=other.ncols)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    # -- elimination ----------------------------------------------------------
    def _echelon(self):
        """Row echelon form (copy) and pivot column list."""
        F = self.field
        M = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot = None
            for i in range(r, self.nrows):
                if not F.is_zero(M[i][c]):
                    pivot = i
                    break
            if pivot is None:
                continue
            M[r], M[pivot] = M[pivot], M[r]
            inv = F.inv(M[r][c])
            M[r] = [F.mul(inv, x) for x in M[r]]
            for i in range(self.nrows):
                if i != r and not F.is_zero(M[i][c]):
                    f = M[i][c]
                    M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return M, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def inverse(self) -> "Matrix | None":
        """Exact inverse, or None when singular."""
        if self.nrows != self.ncols:
            return None
        F = self.field
        n = self.nrows
        aug = Matrix(F, [list(self.rows[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)])
        M, pivots = aug._echelon()
        if pivots != list(range(n)):
            return None
        return Matrix(F, [row[n:] for row in M])

    def solve(self, rhs: list) -> list:
        """One exact solution x of self * x == rhs (column convention).

        Raises :class:`NoSolution` when the system is inconsistent.  When the
        solution space is positive-dimensional the free coordinates are 0.
        """
        F = self.field
        assert len(rhs) == self.nrows
        aug = Matrix(F, [list(row) + [b] for row, b in zip(self.rows, rhs)])
        M, pivots = aug._echelon()
        for i in range(len(pivots), self.nrows):
            if not F.is_zero(M[i][self.ncols]):
                raise NoSolution("inconsistent linear system")
        if any(p == self.ncols for p in pivots):
            raise NoSolution("inconsistent linear system")
        x = [F.zero] * self.ncols
        for i, c in enumerate(pivots):
            x[c] = M[i][self.ncols]
        return x

    def kernel(self) -> list[list]:
        """Basis of the right kernel {x : self * x == 0}."""
        F = self.field
        M, pivots = self._echelon()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for c in free:
            vec = [F.zero] * self.ncols
            vec[c] = F.one
            for i, p in enumerate(pivots):
                vec[p] = F.neg(M[i][c])
            basis.append(vec)
        return basis


# -- graded-map helpers (row-as-image convention) -----------------------------

def apply_map(block: Matrix, vec: list) -> list:
    """Image of ``vec`` under a block whose row i is the image of basis i."""
    F = block.field
    assert len(vec) == block.nrows
    out = [F.zero] * block.ncols
    for i, c in enumerate(vec):
        if F.is_zero(c):
            continue
        row = block.rows[i]
        for j in range(block.ncols):
            out[j] = F.add(out[j], F.mul(c, row[j]))
    return out


def compose_maps(first: Matrix, second: Matrix) -> Matrix:
    """The map 'first then second' in the row-as-image convention."""
    return first.mul(second)


def map_trace(block: Matrix):
    F = block.field
    assert block.nrows == block.ncols
    acc = F.zero
    for i in range(block.nrows):
        acc = F.add(acc, block.rows[i][i])
    return acc


def bilinear_value(form: Matrix, u: list, v: list):
    """u^T * form * v."""
    F = form.field
    acc = F.zero
    for i, ui in enumerate(u):
        if F.is_zero(ui):
            continue
        row = form.rows[i]
        for j, vj in enumerate(v):
            if not F.is_zero(vj):
                acc = F.add(acc, F.mul(ui, F.mul(row[j], vj)))
    return acc
