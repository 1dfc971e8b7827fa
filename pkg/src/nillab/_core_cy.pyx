# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled integer row-reduction kernels.

Same contract as ``_core_py``: entries are arbitrary-precision Python ints,
only the loop machinery is compiled, so outputs are bit-identical to the
pure backend.
"""

from math import gcd

BACKEND_KIND = "compiled"


def vec_reduce_content(list v):
    cdef Py_ssize_t i, n = len(v)
    g = 0
    for i in range(n):
        x = v[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return v
    if g > 1:
        for i in range(n):
            v[i] = v[i] // g
    return v


def vec_addmul(list acc, row, k):
    cdef Py_ssize_t i, n = len(row)
    if k:
        for i in range(n):
            x = row[i]
            if x:
                acc[i] = acc[i] + k * x
    return acc


def dot_sparse(cols, vals, list vec):
    cdef Py_ssize_t t, n = len(cols)
    s = 0
    for t in range(n):
        x = vec[cols[t]]
        if x:
            s = s + vals[t] * x
    return s


def residual_vec(list rows, list pivots, vec, Py_ssize_t ncols):
    cdef list v = list(vec)
    cdef Py_ssize_t r, c, k
    cdef list row
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
                    v[k] = v[k] - beta * x
        else:
            for k in range(c):
                v[k] = alpha * v[k]
            for k in range(c, ncols):
                v[k] = alpha * v[k] - beta * row[k]
        vec_reduce_content(v)
    return v


cdef class Echelon:
    cdef public Py_ssize_t ncols
    cdef public list rows
    cdef public list pivots

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
        cdef list v = self.reduce(vec)
        for x in v:
            if x:
                return False
        return True

    def insert(self, vec):
        cdef list v = self.reduce(vec)
        cdef Py_ssize_t ncols = self.ncols
        cdef Py_ssize_t c = -1
        cdef Py_ssize_t k, r, pos
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
        cdef list pivots = self.pivots
        pos = len(pivots)
        for r in range(len(pivots)):
            if pivots[r] > c:
                pos = r
                break
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True


def back_eliminate(list rows, list pivots, Py_ssize_t ncols):
    cdef Py_ssize_t r, a, c, k, start
    cdef list rowr, rowa
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
                        rowa[k] = rowa[k] - beta * y
            else:
                for k in range(start, c):
                    rowa[k] = alpha * rowa[k]
                for k in range(c, ncols):
                    rowa[k] = alpha * rowa[k] - beta * rowr[k]
            vec_reduce_content(rowa)


def rref_rows(rows, ncols):
    e = Echelon(ncols)
    for row in rows:
        e.insert(row)
    back_eliminate(e.rows, e.pivots, ncols)
    return e.rows, e.pivots


def is_in_span(list rows, list pivots, vec, Py_ssize_t ncols):
    cdef list v = residual_vec(rows, pivots, vec, ncols)
    for x in v:
        if x:
            return False
    return True


def matmul_flat(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, in_, kn
    cdef list out = [0] * (n * n)
    for i in range(n):
        in_ = i * n
        for k in range(n):
            x = a[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = b[kn + j]
                    if y:
                        out[in_ + j] = out[in_ + j] + x * y
    return out


def commutator_flat(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, in_, kn
    cdef list out = [0] * (n * n)
    for i in range(n):
        in_ = i * n
        for k in range(n):
            x = a[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = b[kn + j]
                    if y:
                        out[in_ + j] = out[in_ + j] + x * y
            x = b[in_ + k]
            if x:
                kn = k * n
                for j in range(n):
                    y = a[kn + j]
                    if y:
                        out[in_ + j] = out[in_ + j] - x * y
    return out
