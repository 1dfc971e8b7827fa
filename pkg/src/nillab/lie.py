"""Lie-algebraic engine over exact rationals.

Covers bracket closure of strictly upper-triangular matrix generators,
structure constants, central and derived series, derivation algebras, and
the nilpotency / characteristic-nilpotency predicates.

Strictly upper-triangular m x m matrices are flattened to vectors of length
m(m-1)/2 in lexicographic (row, col) order; that fixed order makes every
adapted basis canonical and every report reproducible byte for byte.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional

from nillab import kernels
from nillab.errors import (
    ClosureError,
    DimensionMismatch,
    InvalidGenerator,
    NotASubalgebra,
)
from nillab.linalg import Matrix, Subspace, nullspace_sparse

# ---------------------------------------------------------------------------
# flattening of strictly upper-triangular matrices


def strict_upper_len(m):
    return m * (m - 1) // 2


def strict_upper_positions(m):
    """(row, col) pairs above the diagonal, lexicographic in (row, col)."""
    return tuple((i, j) for i in range(m) for j in range(i + 1, m))


def flatten_strict_upper(mat):
    if not mat.is_strictly_upper():
        raise InvalidGenerator("matrix is not strictly upper triangular")
    d = mat.data
    return tuple(d[i][j] for i, j in strict_upper_positions(mat.rows))


def unflatten_strict_upper(vec, m):
    vec = tuple(vec)
    if len(vec) != strict_upper_len(m):
        raise DimensionMismatch("flattened length does not match the order")
    rows = [[0] * m for _ in range(m)]
    for (i, j), x in zip(strict_upper_positions(m), vec):
        rows[i][j] = x
    return Matrix(rows)


def _flat_to_upper(flat, m):
    # flat row-major m*m -> length m(m-1)/2 vector
    return [flat[i * m + j] for i in range(m) for j in range(i + 1, m)]


def _upper_to_flat(vec, m):
    flat = [0] * (m * m)
    t = 0
    for i in range(m):
        for j in range(i + 1, m):
            flat[i * m + j] = vec[t]
            t += 1
    return flat


# ---------------------------------------------------------------------------
# matrix-level operations


def mat_bracket(a, b):
    """Commutator a*b - b*a of two square matrices of equal order."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise DimensionMismatch("bracket requires equal square orders")
    return a * b - b * a


def jordan_block(m):
    """Nilpotent Jordan block: ones on the superdiagonal, zeros elsewhere."""
    if m < 1:
        raise ValueError("order must be at least 1")
    rows = [[0] * m for _ in range(m)]
    for i in range(m - 1):
        rows[i][i + 1] = 1
    return Matrix(rows)


def _clear_matrix(mat):
    """Integer matrix spanning the same line as ``mat`` (flat row-major)."""
    den = 1
    for row in mat.data:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    return [int(x * den) for row in mat.data for x in row]


# ---------------------------------------------------------------------------
# matrix Lie algebras


class MatrixLieAlgebra:
    """Bracket-closed subspace of strictly upper-triangular m x m matrices.

    ``coords`` is the canonical subspace of flattened coordinates; ``basis``
    unflattens its echelon rows, so the adapted basis is canonical too.
    """

    __slots__ = ("order", "coords", "_basis")

    def __init__(self, order, coords):
        if coords.ambient != strict_upper_len(order):
            raise DimensionMismatch("coordinate ambient does not match order")
        self.order = order
        self.coords = coords
        self._basis = None

    @property
    def dim(self):
        return self.coords.dim

    @property
    def basis(self):
        if self._basis is None:
            self._basis = tuple(
                unflatten_strict_upper(row, self.order) for row in self.coords.basis
            )
        return self._basis

    def __repr__(self):
        return f"<MatrixLieAlgebra order {self.order}, dim {self.dim}>"


def full_upper_nilpotent(m):
    """The algebra of all strictly upper-triangular m x m matrices."""
    if m < 2:
        raise ValueError("order must be at least 2")
    return MatrixLieAlgebra(m, Subspace.full(strict_upper_len(m)))


def generate_subalgebra(gens):
    """Smallest bracket-closed subspace containing the generators.

    Worklist closure: every newly admitted element is bracketed against all
    previously admitted ones; independent results are admitted.  Terminates
    because the dimension is bounded by m(m-1)/2.
    """
    gens = list(gens)
    if not gens:
        raise InvalidGenerator("at least one generator is required")
    m = gens[0].rows
    for g in gens:
        if not g.is_square() or g.rows != m:
            raise DimensionMismatch("generators must be square of equal order")
        if not g.is_strictly_upper():
            raise InvalidGenerator("generators must be strictly upper triangular")
    d = strict_upper_len(m)
    ech = kernels.Echelon(d)
    admitted = []  # flat m*m integer matrices
    for g in gens:
        flat = _clear_matrix(g)
        if any(flat) and ech.insert(_flat_to_upper(flat, m)):
            admitted.append(flat)
    i = 0
    while i < len(admitted):
        x = admitted[i]
        for j in range(i):
            w = kernels.commutator_flat(x, admitted[j], m)
            if any(w) and ech.insert(_flat_to_upper(w, m)):
                admitted.append(w)
        i += 1
    kernels.back_eliminate(ech.rows, ech.pivots, d)
    return MatrixLieAlgebra(m, Subspace(d, ech.rows, ech.pivots))


# ---------------------------------------------------------------------------
# structure tensors


class StructureTensor:
    """Structure constants of an n-dimensional Lie algebra in a fixed basis.

    Constants are stored for i < j only (extended by antisymmetry); vectors
    that are identically zero are omitted.
    """

    __slots__ = ("n", "table", "_int_cache")

    def __init__(self, n, table):
        self.n = n
        self.table = {
            key: tuple(Fraction(x) for x in vec)
            for key, vec in table.items()
            if any(vec)
        }
        self._int_cache = None

    def __eq__(self, other):
        return (
            isinstance(other, StructureTensor)
            and self.n == other.n
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.table.items()))))

    def __repr__(self):
        return f"<StructureTensor dim {self.n}, {len(self.table)} nonzero brackets>"

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a coordinate vector."""
        n = self.n
        if i == j:
            return (Fraction(0),) * n
        if i < j:
            vec = self.table.get((i, j))
            return vec if vec is not None else (Fraction(0),) * n
        vec = self.table.get((j, i))
        if vec is None:
            return (Fraction(0),) * n
        return tuple(-x for x in vec)

    def bracket(self, x, y):
        """Bracket of two coordinate vectors, by bilinearity."""
        n = self.n
        acc = [Fraction(0)] * n
        xs = [(i, x[i]) for i in range(n) if x[i]]
        ys = [(j, y[j]) for j in range(n) if y[j]]
        for i, xi in xs:
            for j, yj in ys:
                if i == j:
                    continue
                if i < j:
                    vec = self.table.get((i, j))
                    coef = xi * yj
                else:
                    vec = self.table.get((j, i))
                    coef = -xi * yj
                if vec:
                    for k in range(n):
                        v = vec[k]
                        if v:
                            acc[k] += coef * v
        return tuple(acc)

    def int_table(self):
        """(denominator, integer table): constants scaled by one global lcm."""
        if self._int_cache is None:
            den = 1
            for vec in self.table.values():
                for x in vec:
                    den = lcm(den, x.denominator)
            itab = {
                key: tuple(int(x * den) for x in vec)
                for key, vec in self.table.items()
            }
            self._int_cache = (den, itab)
        return self._int_cache


def structure_tensor(alg):
    """Structure constants of a matrix Lie algebra in its adapted basis."""
    n = alg.dim
    m = alg.order
    d = alg.coords.ambient
    irows = [list(r) for r in alg.coords.int_rows]
    piv = list(alg.coords.pivots)
    pivvals = [irows[k][piv[k]] for k in range(n)]
    mats = [_upper_to_flat(r, m) for r in irows]
    table = {}
    for a in range(n):
        for b in range(a + 1, n):
            w = kernels.commutator_flat(mats[a], mats[b], m)
            wv = _flat_to_upper(w, m)
            if not any(wv):
                continue
            if not kernels.is_in_span(irows, piv, wv, d):
                raise ClosureError("bracket of basis elements left the span")
            den = pivvals[a] * pivvals[b]
            table[(a, b)] = tuple(Fraction(wv[piv[k]], den) for k in range(n))
    return StructureTensor(n, table)


def jacobi_check(tensor):
    """True iff the Jacobi identity holds for all basis triples."""
    n = tensor.n
    _, itab = tensor.int_table()

    def cvec(a, b):
        if a < b:
            return itab.get((a, b)), 1
        vec = itab.get((b, a))
        return vec, -1

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = [0] * n
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    vec, sgn = cvec(a, b)
                    if vec is None:
                        continue
                    for s in range(n):
                        x = vec[s]
                        if x:
                            inner, isgn = cvec(s, c)
                            if inner is not None:
                                kernels.vec_addmul(acc, inner, sgn * isgn * x)
                if any(acc):
                    return False
    return True


# ---------------------------------------------------------------------------
# series


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    dims: tuple
    terminated: bool


def _ad_int(itab, n, a, v):
    """[e_a, v] for an integer coordinate vector v, up to global scale."""
    acc = [0] * n
    for b in range(n):
        x = v[b]
        if x == 0 or b == a:
            continue
        if a < b:
            row = itab.get((a, b))
            coef = x
        else:
            row = itab.get((b, a))
            coef = -x
        if row is not None:
            kernels.vec_addmul(acc, row, coef)
    return acc


def _bracket_int(itab, n, u, v):
    """[u, v] for integer coordinate vectors, up to global scale."""
    acc = [0] * n
    unz = [(i, u[i]) for i in range(n) if u[i]]
    vnz = [(j, v[j]) for j in range(n) if v[j]]
    for i, x in unz:
        for j, y in vnz:
            if i == j:
                continue
            if i < j:
                row = itab.get((i, j))
                coef = x * y
            else:
                row = itab.get((j, i))
                coef = -x * y
            if row is not None:
                kernels.vec_addmul(acc, row, coef)
    return acc


def lower_central_series(tensor):
    """Descending series L, [L, L], [L, [L, L]], ... down to its fixed point."""
    n = tensor.n
    _, itab = tensor.int_table()
    terms = [Subspace.full(n)]
    while True:
        cur = terms[-1]
        ech = kernels.Echelon(n)
        if len(terms) == 1:
            # first step: [L, L] is spanned by the table vectors themselves
            for vec in itab.values():
                ech.insert(list(vec))
        else:
            for a in range(n):
                for v in cur.int_rows:
                    w = _ad_int(itab, n, a, v)
                    if any(w):
                        ech.insert(w)
        kernels.back_eliminate(ech.rows, ech.pivots, n)
        nxt = Subspace(n, ech.rows, ech.pivots)
        if nxt == cur:
            break
        terms.append(nxt)
    return SeriesReport(
        "lower-central", tuple(terms), tuple(t.dim for t in terms), True
    )


def derived_series(tensor):
    """Descending series L, [L, L], [[L, L], [L, L]], ... to its fixed point."""
    n = tensor.n
    _, itab = tensor.int_table()
    terms = [Subspace.full(n)]
    while True:
        cur = terms[-1]
        rows = cur.int_rows
        ech = kernels.Echelon(n)
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                w = _bracket_int(itab, n, rows[a], rows[b])
                if any(w):
                    ech.insert(w)
        kernels.back_eliminate(ech.rows, ech.pivots, n)
        nxt = Subspace(n, ech.rows, ech.pivots)
        if nxt == cur:
            break
        terms.append(nxt)
    return SeriesReport("derived", tuple(terms), tuple(t.dim for t in terms), True)


def upper_central_series(tensor):
    """Ascending series 0, Z_1, Z_2, ... where Z_{i+1}/Z_i is the center mod Z_i.

    Each step is the nullspace of x -> ([x, e_j] mod Z_i for all j) in the
    free-column coordinates of the quotient.
    """
    n = tensor.n
    terms = [Subspace.zero(n)]
    while True:
        z = terms[-1]
        free = z.free_cols
        if not free:
            break
        zb = z.basis
        zpiv = z.pivots
        srows = []
        for j in range(n):
            colvecs = [tensor.bracket_basis(s, j) for s in range(n)]
            for f in free:
                cols = []
                vals = []
                for s in range(n):
                    val = colvecs[s][f]
                    for r in range(z.dim):
                        x = zb[r][f]
                        if x:
                            val -= x * colvecs[s][zpiv[r]]
                    if val:
                        cols.append(s)
                        vals.append(val)
                if cols:
                    den = 1
                    for v in vals:
                        den = lcm(den, v.denominator)
                    srows.append(
                        (tuple(cols), tuple(int(v * den) for v in vals))
                    )
        nxt = nullspace_sparse(srows, n)
        if nxt == z:
            break
        terms.append(nxt)
    return SeriesReport(
        "upper-central", tuple(terms), tuple(t.dim for t in terms), True
    )


def center(tensor):
    """Elements bracketing to zero with the whole algebra; equals Z_1."""
    n = tensor.n
    _, itab = tensor.int_table()

    def rows():
        for j in range(n):
            for l in range(n):
                cols = []
                vals = []
                for s in range(n):
                    if s == j:
                        continue
                    if s < j:
                        vec = itab.get((s, j))
                        x = vec[l] if vec is not None else 0
                    else:
                        vec = itab.get((j, s))
                        x = -vec[l] if vec is not None else 0
                    if x:
                        cols.append(s)
                        vals.append(x)
                if cols:
                    yield tuple(cols), tuple(vals)

    return nullspace_sparse(rows(), n)


class Nilpotency(NamedTuple):
    is_nilpotent: bool
    nil_class: Optional[int]


def nilpotency(tensor):
    """Nilpotency from the lower central series; class = nonzero term count."""
    report = lower_central_series(tensor)
    if report.dims[-1] == 0:
        return Nilpotency(True, len(report.dims) - 1)
    return Nilpotency(False, None)


# ---------------------------------------------------------------------------
# derivations


@dataclass(frozen=True)
class DerivationAlgebra:
    """Derivations of a Lie algebra, with their own structure tensor."""

    base_dim: int
    coords: Subspace
    der_basis: tuple
    tensor: StructureTensor

    @property
    def dim(self):
        return len(self.der_basis)


def derivation_algebra(tensor):
    """All linear maps satisfying the Leibniz rule on basis brackets.

    Solves the homogeneous system over the n^2 matrix entries (n equations
    per basis pair), then records the commutators of the solution basis in
    its own coordinates; failure to close signals a solver bug.
    """
    n = tensor.n
    if n == 0:
        return DerivationAlgebra(0, Subspace.zero(0), (), StructureTensor(0, {}))
    _, itab = tensor.int_table()
    # cmat[a][b] = integer vector of [e_a, e_b], antisymmetry applied
    cmat = [[None] * n for _ in range(n)]
    for (i, j), vec in itab.items():
        cmat[i][j] = vec
        cmat[j][i] = tuple(-x for x in vec)

    def equations():
        # unknown D acts by (D x)_k = sum_s D[k][s] x_s, flattened row-major
        for i in range(n):
            for j in range(i + 1, n):
                vec_ij = cmat[i][j]
                for l in range(n):
                    coeffs = {}
                    if vec_ij is not None:
                        base = l * n
                        for s in range(n):
                            x = vec_ij[s]
                            if x:
                                coeffs[base + s] = coeffs.get(base + s, 0) + x
                    for k in range(n):
                        vkj = cmat[k][j]
                        if vkj is not None:
                            x = vkj[l]
                            if x:
                                u = k * n + i
                                coeffs[u] = coeffs.get(u, 0) - x
                        vik = cmat[i][k]
                        if vik is not None:
                            x = vik[l]
                            if x:
                                u = k * n + j
                                coeffs[u] = coeffs.get(u, 0) - x
                    items = sorted((u, x) for u, x in coeffs.items() if x)
                    if items:
                        yield (
                            tuple(u for u, _ in items),
                            tuple(x for _, x in items),
                        )

    coords = nullspace_sparse(equations(), n * n)
    der_basis = tuple(
        Matrix([row[k * n : (k + 1) * n] for k in range(n)]) for row in coords.basis
    )
    dim = coords.dim
    irows = [list(r) for r in coords.int_rows]
    piv = list(coords.pivots)
    pivvals = [irows[k][piv[k]] for k in range(dim)]
    table = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            w = kernels.commutator_flat(irows[a], irows[b], n)
            if not any(w):
                continue
            if not kernels.is_in_span(irows, piv, w, n * n):
                raise ClosureError("derivation commutator left the solution span")
            den = pivvals[a] * pivvals[b]
            table[(a, b)] = tuple(Fraction(w[piv[k]], den) for k in range(dim))
    return DerivationAlgebra(n, coords, der_basis, StructureTensor(dim, table))


def is_derivation(tensor, mat):
    """Leibniz check of a candidate map, independent of the system solver."""
    n = tensor.n
    if mat.rows != n or mat.cols != n:
        raise DimensionMismatch("map must act on the algebra's coordinates")
    cols = [tuple(mat.data[k][i] for k in range(n)) for i in range(n)]
    ident = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs_in = tensor.bracket_basis(i, j)
            lhs = tuple(
                sum(mat.data[k][s] * lhs_in[s] for s in range(n)) for k in range(n)
            )
            rhs1 = tensor.bracket(cols[i], ident[j])
            rhs2 = tensor.bracket(ident[i], cols[j])
            if any(lhs[k] != rhs1[k] + rhs2[k] for k in range(n)):
                return False
    return True


def _is_nilpotent_flat(flat, n):
    if n == 0:
        return True
    p = flat
    e = 1
    while True:
        if not any(p):
            return True
        if e >= n:
            return False
        p = kernels.matmul_flat(p, p, n)
        e *= 2


class CharNilpotency(NamedTuple):
    verdict: bool
    der_dim: int
    operators_nilpotent: bool


def is_characteristically_nilpotent(tensor):
    """Whether the derivation algebra is nilpotent as a Lie algebra.

    ``operators_nilpotent`` independently reports whether every basis
    derivation is nilpotent as a matrix; for the nonabelian algebras built
    here the two agree, and the flag serves as a cross-check only.
    """
    der = derivation_algebra(tensor)
    verdict = nilpotency(der.tensor).is_nilpotent
    ops = all(
        _is_nilpotent_flat(list(r), tensor.n) for r in der.coords.int_rows
    )
    return CharNilpotency(verdict, der.dim, ops)


# ---------------------------------------------------------------------------
# subalgebras and generators


def restrict_to_subalgebra(tensor, sub):
    """Induced tensor on a bracket-closed subspace, in its echelon basis."""
    n = tensor.n
    if sub.ambient != n:
        raise DimensionMismatch("subspace ambient does not match the algebra")
    den, itab = tensor.int_table()
    s = sub.dim
    srows = [list(r) for r in sub.int_rows]
    spiv = list(sub.pivots)
    pivvals = [srows[k][spiv[k]] for k in range(s)]
    table = {}
    for a in range(s):
        for b in range(a + 1, s):
            w = _bracket_int(itab, n, srows[a], srows[b])
            if not any(w):
                continue
            if not kernels.is_in_span(srows, spiv, w, n):
                raise NotASubalgebra("subspace is not closed under the bracket")
            d = pivvals[a] * pivvals[b] * den
            table[(a, b)] = tuple(Fraction(w[spiv[k]], d) for k in range(s))
    return StructureTensor(s, table)


def generators_count(tensor):
    """Minimal generator count of a nilpotent algebra: codim of [L, L]."""
    report = lower_central_series(tensor)
    if report.dims[-1] != 0:
        raise ValueError("generator count is defined for nilpotent algebras only")
    c2 = report.dims[1] if len(report.dims) > 1 else 0
    return tensor.n - c2
