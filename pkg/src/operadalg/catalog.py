"""Constructors for the concrete operads and algebras used as fixtures.

Every constructor is deterministic: a fixed basis order is documented per
object, so rebuilding yields identical serialized bytes.
"""

import itertools

from .algebra import GradedAlgebra, all_odd_typing, free_gperm
from .fields import QQ
from .functors import g_sigma_sign, g_sigma_triv
from .linalg import zeros
from .operad import TruncatedOperad


def build_com(N, field=None):
    """The operad of nonunital commutative products: every component is one
    dimensional with trivial action, and any composite of basis elements is
    the basis element of the target arity."""
    field = field or QQ
    if N < 1:
        raise ValueError("max arity must be >= 1")
    dims = [0] + [1] * N
    actions = {(n, k): [[field.one]] for n in range(2, N + 1) for k in range(1, n)}
    comps = {}
    for m in range(1, N + 1):
        for n in range(1, N + 2 - m):
            for i in range(1, m + 1):
                comps[(m, n, i)] = [[[field.one]]]
    return TruncatedOperad(field, N, dims, actions, [field.one], comps, name="Com")


def build_ope(N, field=None):
    """The skew-symmetric totally associative ternary operad: one generator
    in each odd arity, acted on by the sign, with mu_m o_i mu_n = mu_{m+n-1}."""
    field = field or QQ
    if N < 1:
        raise ValueError("max arity must be >= 1")
    dims = [0] + [1 if n % 2 == 1 else 0 for n in range(1, N + 1)]
    actions = {}
    for n in range(3, N + 1, 2):
        for k in range(1, n):
            actions[(n, k)] = [[-field.one]]
    comps = {}
    for m in range(1, N + 1, 2):
        for n in range(1, N + 2 - m, 2):
            for i in range(1, m + 1):
                comps[(m, n, i)] = [[[field.one]]]
    return TruncatedOperad(field, N, dims, actions, [field.one], comps, name="Ope")


def build_massey_algebra(a, b, D, field=None):
    """The graded-commutative algebra on a degree-1 exterior generators and b
    degree-2 polynomial generators, carrying the all-odd typing.

    Basis of degree d: pairs (S, e) with S a sorted tuple of x-indices and e
    an exponent tuple over the y's, |S| + 2*sum(e) = d; ordered by (S, e).
    Signs come from the Koszul rule for the degree-1 letters.
    """
    field = field or QQ
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("need a, b >= 0 with a + b >= 1")
    if D < 0:
        raise ValueError("max degree must be >= 0")

    def monomials(d):
        out = []
        for size in range(min(a, d) + 1):
            rest = d - size
            if rest % 2 != 0:
                continue
            half = rest // 2
            for S in itertools.combinations(range(a), size):
                for e in _compositions(half, b):
                    out.append((S, e))
        out.sort()
        return out

    basis = {d: monomials(d) for d in range(D + 1)}
    index = {d: {w: i for i, w in enumerate(ws)} for d, ws in basis.items()}
    dims = [len(basis[d]) for d in range(D + 1)]

    def merge_sign(S, T):
        """Sign of sorting the concatenation S ++ T of distinct letters."""
        inv = sum(1 for s in S for t in T if s > t)
        return -field.one if inv % 2 else field.one

    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            if dims[i] == 0 or dims[j] == 0:
                continue
            T = []
            for (S1, e1) in basis[i]:
                row = []
                for (S2, e2) in basis[j]:
                    vec = zeros(field, dims[i + j])
                    if not set(S1) & set(S2):
                        S = tuple(sorted(S1 + S2))
                        e = tuple(x + y for x, y in zip(e1, e2)) if b else ()
                        vec[index[i + j][(S, e)]] = merge_sign(S1, S2)
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    A = GradedAlgebra(field, D, dims, [field.one], mult, name="Mas(%d,%d)" % (a, b))
    return all_odd_typing(A)


def _compositions(total, parts):
    """Exponent tuples of the given length summing to total."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def build_massey_operad(a, b, N, field=None):
    """The sign-action operad of the Massey algebra with parameters (a, b)."""
    if N < 1:
        raise ValueError("max arity must be >= 1")
    A = build_massey_algebra(a, b, N - 1, field=field)
    P = g_sigma_sign(A)
    P.name = "Mas^%d_%d" % (a, b)
    return P


def build_ex63_algebra(D, field=None):
    """The connected algebra with basis x_{i,1}..x_{i,i+1} in degree i and
    x_{i,s} x_{j,t} = x_{i+j,t} when s = 1, zero otherwise (degrees >= 1);
    x_{0,1} is the unit.  Not graded-Perm; its interest is the nilpotent
    principal ideal generated by x_{1,2}."""
    field = field or QQ
    if D < 1:
        raise ValueError("max degree must be >= 1")
    dims = [d + 1 for d in range(D + 1)]
    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            T = []
            for s in range(dims[i]):
                row = []
                for t in range(dims[j]):
                    vec = zeros(field, dims[i + j])
                    if i == 0 and s == 0:
                        vec[t] = field.one
                    elif j == 0 and t == 0:
                        vec[s] = field.one
                    elif i >= 1 and j >= 1 and s == 0:
                        vec[t] = field.one
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    return GradedAlgebra(field, D, dims, [field.one], mult, name="ex63")


def build_ex64_algebra(D, field=None):
    """k<x, y>/(xy, y^2) with deg x = deg y = 1; degree-k basis ordered
    (x^k, y x^{k-1})."""
    field = field or QQ
    if D < 1:
        raise ValueError("max degree must be >= 1")
    dims = [1] + [2] * D
    # basis index 0 = x^k, index 1 = y x^{k-1}; degree 0 is the unit
    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            T = []
            for s in range(dims[i]):
                row = []
                for t in range(dims[j]):
                    vec = zeros(field, dims[i + j])
                    if i == 0:
                        vec[t] = field.one
                    elif j == 0:
                        vec[s] = field.one
                    elif t == 0:
                        # right factor is x^j: prepend keeps the word's head
                        vec[s] = field.one
                    # words x^i y ... and y x^(i-1) y ... both vanish
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    return GradedAlgebra(field, D, dims, [field.one], mult, name="ex64")


def build_ex64_operad(N, field=None):
    """The trivial-action operad of k<x, y>/(xy, y^2)."""
    if N < 1:
        raise ValueError("max arity must be >= 1")
    P = g_sigma_triv(build_ex64_algebra(max(N - 1, 1), field=field))
    P.name = "G_striv(ex64)"
    return P


def build_free_gperm(degrees, D, field=None):
    """Catalog wrapper for the free connected graded-Perm algebra."""
    return free_gperm(degrees, D, field=field)


def build_polynomial_algebra(D, deg=1, field=None):
    """k[x] with the generator in the given degree (free graded-Perm on one
    generator)."""
    A = free_gperm([deg], D, field=field)
    A.name = "k[x,deg=%d]" % deg
    return A


CATALOG_OPERADS = ("com", "ope", "massey", "ex64")
CATALOG_ALGEBRAS = ("massey-algebra", "ex63", "ex64-algebra", "free-gperm", "poly")
