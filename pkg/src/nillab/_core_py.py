"""Pure-Python integer row-reduction kernels.

Vectors are Python lists of ints; all arithmetic is arbitrary-precision and
exact.  The compiled twin (``_core_cy``) implements the same functions with
identical semantics; the two backends must produce bit-identical output.

A subspace of Q^n is carried around as its "primitive integer RREF": rows in
reduced row-echelon form scaled to integer entries with content 1 and a
positive pivot.  That representation is unique, so structural equality of the
row lists is subspace equality.
"""

from math import gcd

BACKEND_KIND = "pure"


def vec_reduce_content(v):
    """Divide ``v`` in place by the gcd of its entries; returns ``v``."""
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    if g > 1:
        for i in range(len(v)):
            v[i] //= g
    return v


def vec_addmul(acc, row, k):
    """acc += k * row, elementwise, in place."""
    if k:
        for i in range(len(row)):
            x = row[i]
            if x:
                acc[i] += k * x
    return acc


def dot_sparse(cols, vals, vec):
    s = 0
    for t in range(len(cols)):
        x = vec[cols[t]]
        if x:
            s += vals[t] * x
    return s


def residual_vec(rows, pivots, vec, ncols):
    """Residual of ``vec`` after elimination by echelon rows.

    Returns a fresh list, zero at every pivot column; the residual is an
    arbitrary positive multiple of the exact one (content-reduced), which is
    all that membership and insertion need.
    """
    v = list(vec)
    for r in range(len(rows)):
        c = pivots[r]
        a = v[c]
        if a == 0:
            continue
        row = rows[r]
        p = row[c]
        g = gcd(p, a)
        alpha = p // g
        beta = a // g
        if alpha == 1:
            for k in range(c, ncols):
                x = row[k]
                if x:
                    v[k] -= beta * x
        else:
            for k in range(c):
                v[k] = alpha * v[k]
            for k in range(c, ncols):
                v[k] = alpha * v[k] - beta * row[k]
        vec_reduce_content(v)
    return v


class Echelon:
    """Growable integer row-echelon form.

    Rows are kept sorted by pivot column; each row is zero left of its own
    pivot, content-reduced, with a positive pivot.  Entries at later pivot
    columns may be nonzero until :func:`back_eliminate` is applied.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        return residual_vec(self.rows, self.pivots, vec, self.ncols)

    def contains(self, vec):
        for x in self.reduce(vec):
            if x:
                return False
        return True

    def insert(self, vec):
        """Insert the residual of ``vec`` if independent; True if rank grew."""
        v = self.reduce(vec)
        ncols = self.ncols
        c = -1
        for k in range(ncols):
            if v[k]:
                c = k
                break
        if c < 0:
            return False
        if v[c] < 0:
            for k in range(c, ncols):
                v[k] = -v[k]
        vec_reduce_content(v)
        pivots = self.pivots
        pos = len(pivots)
        for r in range(len(pivots)):
            if pivots[r] > c:
                pos = r
                break
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True


def back_eliminate(rows, pivots, ncols):
    """Clear entries above every pivot, in place.

    Input must be echelon rows sorted by pivot (as built by :class:`Echelon`);
    output is the primitive integer RREF of the same row space.
    """
    for r in range(len(rows) - 1, -1, -1):
        rowr = rows[r]
        c = pivots[r]
        p = rowr[c]
        for a in range(r):
            rowa = rows[a]
            x = rowa[c]
            if x == 0:
                continue
            g = gcd(p, x)
            alpha = p // g
            beta = x // g
            start = pivots[a]
            if alpha == 1:
                for k in range(c, ncols):
                    y = rowr[k]
                    if y:
                        rowa[k] -= beta * y
            else:
                for k in range(start, c):
                    rowa[k] = alpha * rowa[k]
                for k in range(c, ncols):
                    rowa[k] = alpha * rowa[k] - beta * rowr[k]
            vec_reduce_content(rowa)


def rref_rows(rows, ncols):
    """Primitive integer RREF of the span of integer ``rows``.

    Returns ``(rref_rows, pivot_cols)``; the input rows are not modified.
    """
    e = Echelon(ncols)
    for row in rows:
        e.insert(row)
    back_eliminate(e.rows, e.pivots, ncols)
    return e.rows, e.pivots


def is_in_span(rows, pivots, vec, ncols):
    """Exact membership of integer ``vec`` in the span of echelon rows."""
    for x in residual_vec(rows, pivots, vec, ncols):
        if x:
            return False
    return True


def matmul_flat(a, b, n):
    """Product of two n*n integer matrices stored flat row-major."""
    out = [0] * (n * n)
    for i in range(n):
        in_ = i * n
        for k in range(n):
            x = a[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = b[kn + j]
                    if y:
                        out[in_ + j] += x * y
    return out


def commutator_flat(a, b, n):
    """a*b - b*a for flat row-major n*n integer matrices."""
    out = [0] * (n * n)
    for i in range(n):
        in_ = i * n
        for k in range(n):
            x = a[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = b[kn + j]
                    if y:
                        out[in_ + j] += x * y
            x = b[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = a[kn + j]
                    if y:
                        out[in_ + j] -= x * y
    return out
