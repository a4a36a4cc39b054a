"""Dense exact matrices with integer and rational entries.

One immutable class covers both the integer carriers (Gram matrices,
unimodular transforms) and the rational carriers (realization matrices).
Everything is exact: entries are ints or ``Fraction``; no floats.
"""

from fractions import Fraction

from .errors import NotInvertible
from .poly import Polynomial


class Matrix:
    """Immutable dense matrix, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._data = entries

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for row in rows_list:
            if len(row) != cols:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, diag):
        n = len(diag)
        return cls(n, n, [diag[i] if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self._data[i * self.cols + j]

    def row(self, i):
        return self._data[i * self.cols : (i + 1) * self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self._data, other._data))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(Fraction(x) for x in self._data)))

    def __repr__(self):
        return f"Matrix({self.to_lists()!r})"

    @property
    def is_square(self):
        return self.rows == self.cols

    def is_integer(self):
        return all(
            isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
            for x in self._data
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._data, other._data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._data, other._data)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self._data])

    def scale(self, c):
        return Matrix(self.rows, self.cols, [c * a for a in self._data])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        n, m, k = self.rows, other.cols, self.cols
        out = [0] * (n * m)
        for i in range(n):
            arow = self._data[i * k : (i + 1) * k]
            for j in range(m):
                out[i * m + j] = sum(arow[s] * other._data[s * m + j] for s in range(k))
        return Matrix(n, m, out)

    def transpose(self):
        return Matrix(
            self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        )

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of non-square matrix")
        return sum(self[i, i] for i in range(self.rows))

    def apply_vector(self, v):
        """Matrix times column vector (list)."""
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        return [sum(self[i, j] * v[j] for j in range(self.cols)) for i in range(self.rows)]

    def det(self):
        """Exact determinant by fraction Gaussian elimination."""
        if not self.is_square:
            raise ValueError("det of non-square matrix")
        n = self.rows
        a = [[Fraction(x) for x in self.row(i)] for i in range(n)]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    factor = a[r][col] * inv
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self):
        """Exact inverse by Gauss-Jordan; raises NotInvertible when singular."""
        if not self.is_square:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        a = [[Fraction(x) for x in self.row(i)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise NotInvertible("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return Matrix(n, n, [a[i][n + j] for i in range(n) for j in range(n)])

    def power_traces(self, count):
        """[tr(M), tr(M^2), ..., tr(M^count)] by repeated multiplication."""
        if not self.is_square:
            raise ValueError("traces of non-square matrix")
        traces = []
        acc = self
        for _ in range(count):
            traces.append(acc.trace())
            acc = acc * self
        return traces


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows, cols = a.rows + b.rows, a.cols + b.cols
    out = [0] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            out[i * cols + j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            out[(a.rows + i) * cols + (a.cols + j)] = b[i, j]
    return Matrix(rows, cols, out)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [0] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            aij = a[i, j]
            for s in range(b.rows):
                for t in range(b.cols):
                    out[(i * b.rows + s) * cols + (j * b.cols + t)] = aij * b[s, t]
    return Matrix(rows, cols, out)


def reverse_charpoly(T: Matrix) -> Polynomial:
    """det(I - t*T) as a polynomial in t, constant term 1.

    Computed from power traces via the Newton recurrence; exact over Q.
    """
    if not T.is_square:
        raise ValueError("reverse_charpoly needs a square matrix")
    n = T.rows
    s = T.power_traces(n)
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i - 1]
        e.append(acc / k)
    coeffs = [(-1) ** k * e[k] for k in range(n + 1)]
    return Polynomial(coeffs)


def _int_value(x):
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError("non-integer entry")
        return x.numerator
    return int(x)


def smith_normal_form(M: Matrix):
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U*M*V = D, U and V unimodular, D diagonal with
    nonnegative entries satisfying d_i | d_{i+1}.  Pivot selection: the
    smallest-magnitude nonzero entry of the working submatrix, ties broken
    in row-major order.
    """
    rows, cols = M.rows, M.cols
    a = [[_int_value(x) for x in M.row(i)] for i in range(rows)]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, mult):
        # row dst += mult * row src
        a[dst] = [x + mult * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + mult * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, mult):
        for row in a:
            row[dst] += mult * row[src]
        for row in v:
            row[dst] += mult * row[src]

    def find_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best[0]):
                    best = (val, i, j)
        return best

    t = 0
    while t < min(rows, cols):
        best = find_pivot(t)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        # One reduction pass; surviving remainders are strictly smaller
        # than the pivot and win the next pivot selection.
        clean = True
        for i in range(t + 1, rows):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                if q:
                    add_row(t, i, -q)
                if a[i][t]:
                    clean = False
        for j in range(t + 1, cols):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                if q:
                    add_col(t, j, -q)
                if a[t][j]:
                    clean = False
        if not clean:
            continue
        # Enforce divisibility into the remaining block.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue  # redo elimination at the same t
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    return (
        Matrix.from_rows(u) if rows else Matrix(0, 0, []),
        Matrix(rows, cols, [x for row in a for x in row]),
        Matrix.from_rows(v) if cols else Matrix(0, 0, []),
    )


def right_kernel_basis(M: Matrix):
    """Z-basis of {x : M x = 0}, as a list of integer column vectors.

    The kernel of an integer matrix is saturated, so this basis spans all
    integer solutions.
    """
    if M.rows == 0:
        return [[int(i == j) for i in range(M.cols)] for j in range(M.cols)]
    _, d, v = smith_normal_form(M)
    basis = []
    for j in range(M.cols):
        if j >= min(M.rows, M.cols) or d[j, j] == 0:
            basis.append([_int_value(v[i, j]) for i in range(M.cols)])
    return basis


def hermite_row_basis(vectors):
    """Row Hermite normal form of the lattice spanned by integer vectors.

    Returns a canonical basis: pivots positive, entries above each pivot
    reduced into [0, pivot).  Zero rows are dropped.
    """
    if not vectors:
        return []
    rows = [list(map(_int_value, v)) for v in vectors]
    cols = len(rows[0])
    basis = []
    pivot_col = {}
    work = list(rows)
    col = 0
    while col < cols and work:
        live = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if live:
            # gcd of the column via repeated reduction
            while len(live) > 1:
                live.sort(key=lambda r: abs(r[col]))
                head = live[0]
                new_live = [head]
                for r in live[1:]:
                    q = r[col] // head[col]
                    reduced = [x - q * y for x, y in zip(r, head)]
                    if reduced[col]:
                        new_live.append(reduced)
                    elif any(reduced):
                        rest.append(reduced)
                live = new_live
            head = live[0]
            if head[col] < 0:
                head = [-x for x in head]
            pivot_col[len(basis)] = col
            basis.append(head)
            work = [r for r in rest if any(r)]
        col += 1
    # reduce entries above pivots
    for i in range(len(basis) - 1, -1, -1):
        p = pivot_col[i]
        for j in range(i):
            q = basis[j][p] // basis[i][p]
            if q:
                basis[j] = [x - q * y for x, y in zip(basis[j], basis[i])]
    return basis


def lattice_contains(hnf_basis, vector):
    """Exact membership of an integer vector in the row lattice of an HNF basis."""
    v = list(map(_int_value, vector))
    for row in hnf_basis:
        p = next(j for j, x in enumerate(row) if x)
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)
