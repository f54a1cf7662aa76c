"""Dense exact linear algebra over the rationals.

Gaussian elimination with exact pivoting only; there is no tolerance
anywhere.  Matrices are immutable dense grids of Fractions.
"""

from __future__ import annotations

from fractions import Fraction


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        width = len(grid[0]) if grid else 0
        if any(len(r) != width for r in grid):
            raise ValueError("ragged rows")
        self.data = grid
        self.rows = len(grid)
        self.cols = width

    @classmethod
    def identity(cls, d: int) -> "ExactMatrix":
        return cls([[Fraction(int(i == j)) for j in range(d)] for i in range(d)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        zero_row = (Fraction(0),) * cols
        m = cls.__new__(cls)
        m.data = (zero_row,) * rows
        m.rows = rows
        m.cols = cols
        return m

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> "ExactMatrix":
        grid = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            grid[i][j] = Fraction(v)
        return cls(grid)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in row] for row in self.data])

    def scaled(self, c) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} != {other.rows}")
        # row-by-row accumulation, skipping zero entries; the matrices around
        # here are mostly sparse 0/1 grids
        zero = Fraction(0)
        out = []
        for row in self.data:
            acc = [zero] * other.cols
            for j, v in enumerate(row):
                if v:
                    orow = other.data[j]
                    if v == 1:
                        acc = [a + b for a, b in zip(acc, orow)]
                    else:
                        acc = [a + v * b for a, b in zip(acc, orow)]
            out.append(acc)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.data))) if self.rows else ExactMatrix([])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_diagonal(self) -> bool:
        return all(
            not v for i, row in enumerate(self.data) for j, v in enumerate(row) if i != j
        )

    def diagonal(self) -> tuple:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def apply(self, vector):
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(
            sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in self.data
        )

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("dimension mismatch")

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a * b


def _echelon(rows: list) -> list:
    """Forward-eliminate in place; returns the list of pivot columns."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(m: ExactMatrix) -> int:
    rows = [list(r) for r in m.data]
    return len(_echelon(rows)) if rows else 0


def _normalize(vec):
    lead = next((x for x in vec if x), None)
    if lead is None:
        return tuple(vec)
    inv = 1 / lead
    return tuple(inv * x for x in vec)


def nullspace(m: ExactMatrix) -> list:
    """Exact basis of the right kernel; size = cols - rank.

    Each basis vector has its first nonzero coordinate normalized to 1.
    """
    rows = [list(r) for r in m.data]
    if not rows:
        return [_normalize([Fraction(int(i == j)) for i in range(m.cols)]) for j in range(m.cols)]
    pivots = _echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for r_idx, c in enumerate(pivots):
            vec[c] = -rows[r_idx][f]
        basis.append(_normalize(vec))
    return basis


def solve_unique(a: ExactMatrix, rhs) -> tuple:
    """Solve a x = rhs when the solution exists and is unique; raise otherwise."""
    if len(rhs) != a.rows:
        raise ValueError("dimension mismatch")
    rows = [list(r) + [Fraction(v)] for r, v in zip(a.data, rhs)]
    pivots = _echelon(rows)
    if a.cols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != a.cols:
        raise ValueError("underdetermined system")
    sol = [Fraction(0)] * a.cols
    for r_idx, c in enumerate(pivots):
        sol[c] = rows[r_idx][-1]
    return tuple(sol)


def _sparse_rank(rows) -> int:
    """Rank of a system given as dicts {column: coefficient}.

    Pivot rows stay normalized so elimination never divides twice; with the
    two-entry rows produced by commutant systems this does essentially no
    fill-in.
    """
    pivots = {}
    rank_ = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            c = min(row)
            if c not in pivots:
                inv = 1 / row[c]
                pivots[c] = {k: inv * v for k, v in row.items()}
                rank_ += 1
                break
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, Fraction(0)) - f * v
                if nv:
                    row[k] = nv
                elif k in row:
                    del row[k]
        # an emptied row is dependent
    return rank_


def sparse_rank_of_vectors(vectors) -> int:
    """Rank of a family of vectors given as {index: coefficient} dicts."""
    return _sparse_rank(vectors)


def commutant_dimension(generators) -> int:
    """Dimension of {M : M g = g M for every generator g}.

    Builds the stacked linear system in d^2 unknowns M_{ab} and returns
    d^2 minus its rank.
    """
    if not generators:
        raise ValueError("need at least one generator")
    d = generators[0].rows
    for g in generators:
        if g.rows != d or g.cols != d:
            raise ValueError("dimension mismatch among generators")
    rows = []
    for g in generators:
        col_nz = [[] for _ in range(d)]
        row_nz = [[] for _ in range(d)]
        for j in range(d):
            for k in range(d):
                v = g.data[j][k]
                if v:
                    col_nz[k].append((j, v))
                    row_nz[j].append((k, v))
        for i in range(d):
            for k in range(d):
                row = {}
                for j, v in col_nz[k]:
                    row[i * d + j] = row.get(i * d + j, Fraction(0)) + v
                for j, v in row_nz[i]:
                    row[j * d + k] = row.get(j * d + k, Fraction(0)) - v
                row = {key: val for key, val in row.items() if val}
                if row:
                    rows.append(row)
    return d * d - _sparse_rank(rows)


def simultaneous_eigenspace(ops, eigenvalues) -> list:
    """Exact basis of the intersection of ker(op_i - lambda_i I).

    The operators are expected to commute pairwise; this is the caller's
    responsibility and is only asserted in debug mode.
    """
    if len(ops) != len(eigenvalues):
        raise ValueError("one eigenvalue per operator")
    if not ops:
        raise ValueError("need at least one operator")
    d = ops[0].rows
    for op in ops:
        if op.rows != d or op.cols != d:
            raise ValueError("operators must be square and same size")
    if __debug__ and d <= 64:
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                assert ops[i] * ops[j] == ops[j] * ops[i], "operators do not commute"
    stacked = []
    for op, lam in zip(ops, eigenvalues):
        lam = Fraction(lam)
        for i in range(d):
            row = list(op.data[i])
            row[i] -= lam
            stacked.append(row)
    return nullspace(ExactMatrix(stacked))
