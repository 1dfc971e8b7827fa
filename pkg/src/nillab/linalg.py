"""Exact rational linear algebra over Q.

Scalars are :class:`fractions.Fraction`; matrices are small immutable
wrappers around tuples of scalar rows.  Subspaces are held in a canonical
form (reduced row echelon, pivots equal to 1) so that two equal subspaces
compare equal entry-wise.  All heavy elimination runs on integer rows
through the kernel backend; rational input is cleared row by row first.
"""

from fractions import Fraction
from math import lcm

from nillab import kernels
from nillab.errors import ContainmentError, DimensionMismatch

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar_to_str(x):
    """Render a scalar as ``p/q`` with the ``/q`` omitted when q = 1."""
    return str(Fraction(x))


def scalar_from_str(s):
    """Parse the ``p/q`` text form; inverse of :func:`scalar_to_str`."""
    return Fraction(s)


def _int_row(row):
    """Scale a rational row to a same-direction integer row."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


class Matrix:
    """Immutable dense matrix with exact entries (ints or Fractions)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(row) for row in data)
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")
        self.data = data

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.data[i][j] == other.data[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(Fraction(x) for r in self.data for x in r)))

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.data]})"

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            bt = other.data
            out = []
            for i in range(self.rows):
                arow = self.data[i]
                orow = [0] * other.cols
                for k in range(self.cols):
                    a = arow[k]
                    if a:
                        brow = bt[k]
                        for j in range(other.cols):
                            b = brow[j]
                            if b:
                                orow[j] += a * b
                out.append(orow)
            return Matrix(out)
        return Matrix([[x * other for x in row] for row in self.data])

    def __rmul__(self, other):
        return Matrix([[other * x for x in row] for row in self.data])

    def transpose(self):
        return Matrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def is_square(self):
        return self.rows == self.cols

    def is_strictly_upper(self):
        if not self.is_square():
            return False
        return all(
            self.data[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i >= j
        )

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


class Subspace:
    """Linear subspace of Q^d in canonical echelon form.

    ``basis`` is the unique RREF of any spanning set (pivot entries 1, zeros
    above and below).  Internally the rows are kept as primitive integer
    vectors (content 1, positive pivot); dividing a stored row by its pivot
    value recovers the rational basis row.
    """

    __slots__ = ("ambient", "int_rows", "pivots", "_basis")

    def __init__(self, ambient, int_rows, pivots):
        self.ambient = ambient
        self.int_rows = tuple(tuple(r) for r in int_rows)
        self.pivots = tuple(pivots)
        self._basis = None

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient):
        rows = [[0] * ambient for _ in range(ambient)]
        for i in range(ambient):
            rows[i][i] = 1
        return cls(ambient, rows, range(ambient))

    @property
    def dim(self):
        return len(self.int_rows)

    @property
    def basis(self):
        if self._basis is None:
            out = []
            for r, c in zip(self.int_rows, self.pivots):
                p = r[c]
                out.append(tuple(Fraction(x, p) for x in r))
            self._basis = tuple(out)
        return self._basis

    @property
    def free_cols(self):
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in piv)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.int_rows == other.int_rows
        )

    def __hash__(self):
        return hash((self.ambient, self.int_rows))

    def __repr__(self):
        return f"<Subspace dim {self.dim} of Q^{self.ambient}>"

    def _check_ambient(self, length):
        if length != self.ambient:
            raise DimensionMismatch(f"vector length {length} != ambient {self.ambient}")

    def contains(self, vec):
        vec = tuple(vec)
        self._check_ambient(len(vec))
        return kernels.is_in_span(
            [list(r) for r in self.int_rows],
            list(self.pivots),
            _int_row(vec),
            self.ambient,
        )

    def sum(self, other):
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        rows = [list(r) for r in self.int_rows] + [list(r) for r in other.int_rows]
        rr, piv = kernels.rref_rows(rows, self.ambient)
        return Subspace(self.ambient, rr, piv)

    def is_subspace_of(self, other):
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimensions differ")
        orows = [list(r) for r in other.int_rows]
        opiv = list(other.pivots)
        return all(
            kernels.is_in_span(orows, opiv, list(r), self.ambient)
            for r in self.int_rows
        )

    def codim_in(self, other):
        """Codimension of self inside ``other``; self must be contained."""
        if not self.is_subspace_of(other):
            raise ContainmentError("subspace is not contained in the larger one")
        return other.dim - self.dim

    def reduce_mod(self, vec):
        """Representative of ``vec`` modulo this subspace.

        The result is ``vec`` minus a combination of basis rows; it has zeros
        at every pivot column, so its free-column entries are coordinates in
        the complement spanned by the free columns.
        """
        v = [Fraction(x) for x in vec]
        self._check_ambient(len(v))
        for row, c in zip(self.basis, self.pivots):
            coef = v[c]
            if coef:
                for k in range(c, self.ambient):
                    x = row[k]
                    if x:
                        v[k] -= coef * x
        return tuple(v)


def span(vectors, ambient=None):
    """Canonical subspace spanned by the given vectors.

    ``ambient`` is required when ``vectors`` is empty and is validated
    against the vector lengths otherwise.
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        if ambient is None:
            raise DimensionMismatch("ambient dimension required for an empty span")
        return Subspace.zero(ambient)
    d = len(vectors[0])
    if ambient is not None and ambient != d:
        raise DimensionMismatch(f"vector length {d} != ambient {ambient}")
    for v in vectors:
        if len(v) != d:
            raise DimensionMismatch("vectors of mixed lengths")
    rows, piv = kernels.rref_rows([_int_row(v) for v in vectors], d)
    return Subspace(d, rows, piv)


def rref(mat):
    """Reduced row-echelon form of a matrix.

    Returns ``(R, pivot_cols)`` where ``R`` has the shape of the input with
    zero rows at the bottom and every pivot equal to 1.
    """
    rows, piv = kernels.rref_rows([_int_row(r) for r in mat.data], mat.cols)
    out = []
    for r, c in zip(rows, piv):
        p = r[c]
        out.append([Fraction(x, p) for x in r])
    while len(out) < mat.rows:
        out.append([ZERO] * mat.cols)
    return Matrix(out), tuple(piv)


def _kernel_vectors(rows, pivots, ncols):
    """Primitive integer kernel basis of a system given by RREF rows.

    One vector per free column: entry L at the free column, compensating
    entries at the pivot columns; content-reduced.
    """
    piv_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in piv_set:
            continue
        L = 1
        for r in range(len(rows)):
            if rows[r][f]:
                L = lcm(L, rows[r][pivots[r]])
        v = [0] * ncols
        v[f] = L
        for r in range(len(rows)):
            x = rows[r][f]
            if x:
                v[pivots[r]] = -(L // rows[r][pivots[r]]) * x
        kernels.vec_reduce_content(v)
        out.append(v)
    return out


def nullspace_sparse(sparse_rows, ncols):
    """Exact nullspace of a sparse integer system.

    ``sparse_rows`` is an iterable of ``(cols, vals)`` pairs describing the
    nonzero coefficients of each homogeneous equation.  Two exact speedups:
    rows are processed sparsest-first (which empirically eliminates the
    intermediate entry swell of these systems), and rows already annihilated
    by the kernel of the equations seen so far are skipped after a cheap dot
    product - sound because kernels only shrink as rows are added, so a row
    that vanishes on the current kernel also vanishes on the final one.
    """
    ordered = sorted(
        sparse_rows,
        key=lambda r: (len(r[0]), max(abs(v).bit_length() for v in r[1]), r[0], r[1]),
    )
    ech = kernels.Echelon(ncols)
    kvecs = None
    stale = 0
    for cols, vals in ordered:
        if kvecs is not None:
            ok = True
            for kv in kvecs:
                if kernels.dot_sparse(cols, vals, kv) != 0:
                    ok = False
                    break
            if ok:
                continue
        dense = [0] * ncols
        for t in range(len(cols)):
            dense[cols[t]] += vals[t]
        if ech.insert(dense):
            kvecs = None
            stale = 0
        else:
            stale += 1
        if kvecs is None and stale >= 32:
            kernels.back_eliminate(ech.rows, ech.pivots, ncols)
            kvecs = _kernel_vectors(ech.rows, ech.pivots, ncols)
    if kvecs is None:
        kernels.back_eliminate(ech.rows, ech.pivots, ncols)
        kvecs = _kernel_vectors(ech.rows, ech.pivots, ncols)
    rows, piv = kernels.rref_rows(kvecs, ncols)
    return Subspace(ncols, rows, piv)


def nullspace(mat):
    """Canonical subspace {v : M v = 0}; dim = cols - rank."""

    def rows():
        for row in mat.data:
            introw = _int_row(row)
            cols = [j for j, x in enumerate(introw) if x]
            if cols:
                yield tuple(cols), tuple(introw[j] for j in cols)

    return nullspace_sparse(rows(), mat.cols)
