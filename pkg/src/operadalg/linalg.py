"""Exact dense linear algebra: RREF, kernels, and canonical subspaces.

Vectors are lists of field scalars, matrices are lists of row vectors.  A
subspace is stored as the reduced row echelon basis of its row space, which
makes subspace equality and membership decidable by plain data comparison.
Dimensions here are desk scale (tens, occasionally low hundreds); everything
is O(n^3) Gaussian elimination with exact scalars.
"""



def zeros(field, n):
    return [field.zero] * n


def unit_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_is_zero(v):
    return all(not bool(x) for x in v)


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_eq(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


def identity_matrix(field, n):
    return [unit_vector(field, n, i) for i in range(n)]


def mat_vec(M, v):
    """Matrix times column vector, skipping zero entries."""
    nz = [(j, x) for j, x in enumerate(v) if bool(x)]
    zero = 0 * v[0] if v else 0
    out = []
    for row in M:
        acc = None
        for j, x in nz:
            r = row[j]
            if bool(r):
                acc = r * x if acc is None else acc + r * x
        out.append(zero if acc is None else acc)
    return out


def mat_mul(A, B):
    cols = len(B[0]) if B else 0
    zero = 0 * A[0][0] if A and A[0] else 0
    out = []
    for row in A:
        nz = [(k, x) for k, x in enumerate(row) if bool(x)]
        newrow = []
        for j in range(cols):
            acc = None
            for k, x in nz:
                b = B[k][j]
                if bool(b):
                    acc = x * b if acc is None else acc + x * b
            newrow.append(zero if acc is None else acc)
        out.append(newrow)
    return out


def mat_eq(A, B):
    return len(A) == len(B) and all(vec_eq(a, b) for a, b in zip(A, B))


def transpose(M, ncols):
    return [[row[j] for row in M] for j in range(ncols)]


def rref(field, M):
    """Reduced row echelon form.

    Returns (R, rank, pivots) where R has the same shape as M, pivot entries
    are 1, and pivot columns are cleared above and below.
    """
    R = [list(row) for row in M]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if bool(R[i][c]):
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = field.one / R[r][c]
        R[r] = [inv * x for x in R[r]]
        for i in range(nrows):
            if i != r and bool(R[i][c]):
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, r, pivots


def kernel_basis(field, M, ncols):
    """Basis of {x : M x = 0} as a list of vectors (RREF free-variable basis)."""
    if not M:
        return identity_matrix(field, ncols)
    R, rank, pivots = rref(field, M)
    pivset = set(pivots)
    basis = []
    free = [c for c in range(ncols) if c not in pivset]
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(field, M, b):
    """One solution of M x = b, or None if inconsistent."""
    if not M:
        return None if any(bool(x) for x in b) else []
    ncols = len(M[0])
    aug = [list(row) + [bv] for row, bv in zip(M, b)]
    R, rank, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][ncols]
    return x


class Subspace:
    """A subspace of field^n in canonical (RREF row basis) form."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows=(), pivots=None):
        self.field = field
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        if pivots is None:
            pivots = tuple(next(j for j, x in enumerate(r) if bool(x)) for r in self.rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vecs = [v for v in vectors if not vec_is_zero(v)]
        if not vecs:
            return cls(field, ambient)
        R, rank, pivots = rref(field, vecs)
        return cls(field, ambient, R[:rank], pivots)

    @classmethod
    def full(cls, field, ambient):
        return cls.from_vectors(field, ambient, identity_matrix(field, ambient))

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def reduce(self, v):
        """Residue of v after elimination against the basis."""
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if bool(w[pc]):
                f = w[pc]
                w = [x - f * y for x, y in zip(w, row)]
        return w

    def contains(self, v):
        if len(v) != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(list(r)) for r in other.rows)

    def annihilator(self):
        """The subspace {f : <f, v> = 0 for all v here} w.r.t. the standard pairing."""
        ker = kernel_basis(self.field, [list(r) for r in self.rows], self.ambient)
        return Subspace.from_vectors(self.field, self.ambient, ker)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        return "Subspace(dim %d of %d over %r)" % (self.dim, self.ambient, self.field)


def subspace_sum(U, V):
    if U.ambient != V.ambient or U.field != V.field:
        raise ValueError("subspace sum: ambient/field mismatch")
    return Subspace.from_vectors(U.field, U.ambient, U.basis() + V.basis())


def subspace_intersect(U, V):
    """Intersection via the kernel of stacked annihilator constraints."""
    if U.ambient != V.ambient or U.field != V.field:
        raise ValueError("subspace intersection: ambient/field mismatch")
    constraints = U.annihilator().basis() + V.annihilator().basis()
    ker = kernel_basis(U.field, constraints, U.ambient)
    return Subspace.from_vectors(U.field, U.ambient, ker)


def image(field, M, ncols):
    """Column space of M as a Subspace of field^nrows."""
    cols = transpose(M, ncols)
    return Subspace.from_vectors(field, len(M), cols)


def kernel(field, M, ncols):
    """Null space of M as a Subspace of field^ncols."""
    return Subspace.from_vectors(field, ncols, kernel_basis(field, M, ncols))
