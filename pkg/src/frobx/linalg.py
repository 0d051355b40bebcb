"""Exact dense linear algebra plus a sparse row-reduction kernel.

Everything reduces to reduced row echelon form with leftmost-pivot-first
tie-breaking, which makes every "choose a solution" output deterministic:
solve() sets free variables to zero, kernel_basis() returns the standard
free-variable basis, invert() reduces [M | I].

The sparse kernel (rows as {column: scalar} dicts) backs the large equivariance
systems assembled elsewhere; the dense Matrix delegates to it.
"""

from __future__ import annotations

from .fields import check_same_field


def sparse_rref(rows, ncols, field):
    """Reduced row echelon form of sparse rows (dicts col -> nonzero scalar).

    Returns (reduced_rows, pivot_cols); reduced rows are normalized, ordered by
    pivot column, and exclude zero rows.
    """
    rows = [dict(r) for r in rows if r]
    reduced = []
    pivots = []
    for col in range(ncols):
        pivot_row = None
        for idx, r in enumerate(rows):
            if col in r:
                pivot_row = rows.pop(idx)
                break
        if pivot_row is None:
            continue
        inv = field.one() / pivot_row[col]
        pivot_row = {c: v * inv for c, v in pivot_row.items()}
        for group in (rows, reduced):
            for idx, r in enumerate(group):
                factor = r.get(col)
                if factor is None:
                    continue
                new = dict(r)
                for c, v in pivot_row.items():
                    cur = new.get(c)
                    val = (cur - factor * v) if cur is not None else -factor * v
                    if val:
                        new[c] = val
                    elif c in new:
                        del new[c]
                group[idx] = new
        rows = [r for r in rows if r]
        reduced.append(pivot_row)
        pivots.append(col)
    return reduced, pivots


class EquationSystem:
    """A sparse linear system over one field; unknowns indexed 0..n-1.

    Equations are dicts {unknown: coeff} with an optional right-hand side.
    """

    def __init__(self, nunknowns, field):
        self.n = nunknowns
        self.field = field
        self._rows = []

    def add(self, coeffs, rhs=None):
        row = {c: v for c, v in coeffs.items() if v}
        if rhs is not None and rhs:
            row[self.n] = -rhs  # homogenize: eq reads sum(coeffs*x) - rhs = 0
        if row:
            self._rows.append(row)

    def _reduced(self):
        return sparse_rref(self._rows, self.n + 1, self.field)

    def solve(self):
        """Particular solution with free variables zero, or None if inconsistent."""
        reduced, pivots = self._reduced()
        if self.n in pivots:
            return None
        zero = self.field.zero()
        sol = [zero] * self.n
        for row, piv in zip(reduced, pivots):
            rhs = row.get(self.n)
            sol[piv] = -rhs if rhs is not None else zero
        return sol

    def kernel_basis(self):
        """Basis of the homogeneous solution space (rhs terms must be absent)."""
        rows = [{c: v for c, v in r.items() if c < self.n} for r in self._rows]
        reduced, pivots = sparse_rref(rows, self.n, self.field)
        pivot_set = set(pivots)
        zero = self.field.zero()
        basis = []
        for free in range(self.n):
            if free in pivot_set:
                continue
            vec = [zero] * self.n
            vec[free] = self.field.one()
            for row, piv in zip(reduced, pivots):
                v = row.get(free)
                if v is not None:
                    vec[piv] = -v
            basis.append(vec)
        return basis


class Matrix:
    """Dense matrix over an exact field."""

    def __init__(self, field, data):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero()
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        if not columns:
            return cls.zeros(field, nrows or 0, 0)
        nrows = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(nrows)])

    def column(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.cols)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __mul__(self, other):
        check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch %dx%d * %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        zero = self.field.zero()
        out = [[zero] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.data):
            orow = out[i]
            for k, v in enumerate(row):
                if not v:
                    continue
                brow = other.data[k]
                for j, w in enumerate(brow):
                    if w:
                        orow[j] = orow[j] + v * w
        return Matrix(self.field, out)

    def apply(self, vec):
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero()
        out = [zero] * self.rows
        for i, row in enumerate(self.data):
            acc = zero
            for v, x in zip(row, vec):
                if v and x:
                    acc = acc + v * x
            out[i] = acc
        return out

    def _to_sparse(self):
        return [{j: v for j, v in enumerate(row) if v} for row in self.data]

    def rref(self):
        """(reduced matrix, pivot column list)."""
        reduced, pivots = sparse_rref(self._to_sparse(), self.cols, self.field)
        zero = self.field.zero()
        data = []
        for row in reduced:
            dense = [zero] * self.cols
            for c, v in row.items():
                dense[c] = v
            data.append(dense)
        while len(data) < self.rows:
            data.append([zero] * self.cols)
        return Matrix(self.field, data) if data else Matrix.zeros(self.field, 0, self.cols), pivots

    def rank(self):
        _, pivots = self.rref()
        return len(pivots)


def solve(M: Matrix, v):
    """Some x with Mx = v, or None when inconsistent.

    Underdetermined systems get free variables set to zero under RREF
    leftmost-pivot tie-breaking.
    """
    if len(v) != M.rows:
        raise ValueError("dimension mismatch")
    for x in v:
        if not (M.field.contains(x) if hasattr(M.field, "contains") else True):
            raise ValueError("scalar not in matrix field")
    system = EquationSystem(M.cols, M.field)
    for i, row in enumerate(M.data):
        system.add({j: c for j, c in enumerate(row) if c}, rhs=v[i])
    return system.solve()


def kernel_basis(M: Matrix):
    """Exact null-space basis; empty iff M is injective."""
    system = EquationSystem(M.cols, M.field)
    for row in M.data:
        system.add({j: c for j, c in enumerate(row) if c})
    return system.kernel_basis()


def invert(M: Matrix):
    """Exact inverse, or None when singular."""
    if M.rows != M.cols:
        raise ValueError("invert requires a square matrix")
    n = M.rows
    field = M.field
    one, zero = field.one(), field.zero()
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(M.data)]
    reduced, pivots = sparse_rref(
        [{j: v for j, v in enumerate(row) if v} for row in aug], 2 * n, field)
    if pivots[:n] != list(range(n)):
        return None
    inv = [[zero] * n for _ in range(n)]
    for row, piv in zip(reduced, pivots):
        for c, v in row.items():
            if c >= n:
                inv[piv][c - n] = v
    return Matrix(field, inv)


def is_invertible(M: Matrix) -> bool:
    return M.rows == M.cols and M.rank() == M.rows
