"""Truncated symmetric operads: structure constants, axiom checking,
symmetry classification, torsion, ideals, and centrality.

A TruncatedOperad stores, up to a maximum arity N:

* dims of each component P(n) (P(0) = 0 always: operads here are reduced);
* the right S_n-action through the matrices of the adjacent transpositions
  s_k = (k, k+1) only; arbitrary permutations act via a factorization, which
  is well defined once the Coxeter relations hold;
* a distinguished identity element of P(1);
* sparse composition tensors for the bilinear maps o_i : P(m) x P(n) -> P(m+n-1).

Any query whose intermediate arity would exceed N raises TruncationExceeded
rather than silently returning zero; silent truncation corrupts torsion and
primeness computations.  Instances are immutable after construction and safe
to query concurrently.
"""

import itertools
from dataclasses import dataclass

from .errors import CharTwo, NotATrivial, TruncationExceeded
from .linalg import (
    Subspace,
    identity_matrix,
    kernel,
    mat_eq,
    mat_mul,
    mat_vec,
    unit_vector,
    vec_eq,
    vec_is_zero,
    zeros,
)
from .symgroup import Permutation, phi_doubleprime, sigma_prime


class TruncatedOperad:
    """Arity-graded exact vector spaces with S_n-actions and partial compositions."""

    def __init__(self, field, max_arity, dims, actions, identity, comps, name=""):
        if max_arity < 1:
            raise ValueError("max_arity must be >= 1")
        dims = list(dims)
        if len(dims) != max_arity + 1 or dims[0] != 0:
            raise ValueError("dims must cover arities 0..N with dims[0] = 0")
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        if dims[1] < 1:
            raise ValueError("a reduced operad needs P(1) != 0 to hold the identity")
        self.field = field
        self.max_arity = max_arity
        self.dims = tuple(dims)
        self.name = name
        self.identity = tuple(field.scalar(x) for x in identity)
        if len(self.identity) != dims[1] or vec_is_zero(self.identity):
            raise ValueError("identity vector must be a nonzero element of P(1)")

        self.actions = {}
        for n in range(2, max_arity + 1):
            if dims[n] == 0:
                continue
            for k in range(1, n):
                M = actions.get((n, k))
                if M is None:
                    raise ValueError("missing action matrix for s_%d at arity %d" % (k, n))
                if len(M) != dims[n] or any(len(row) != dims[n] for row in M):
                    raise ValueError("action matrix (%d, %d) has wrong shape" % (n, k))
                self.actions[(n, k)] = tuple(
                    tuple(field.scalar(x) for x in row) for row in M)
        for key in actions:
            if key not in self.actions:
                n, k = key
                if not (2 <= n <= max_arity and 1 <= k <= n - 1 and dims[n] > 0):
                    raise ValueError("stray action matrix key %r" % (key,))

        self.comps = {}
        for (m, n, i), T in comps.items():
            if not (1 <= m and 1 <= n and 1 <= i <= m and m + n - 1 <= max_arity):
                raise ValueError("bad composition key %r" % ((m, n, i),))
            if dims[m] == 0 or dims[n] == 0:
                raise ValueError("composition tensor %r over a zero component" % ((m, n, i),))
            r = m + n - 1
            if len(T) != dims[m] or any(len(row) != dims[n] for row in T):
                raise ValueError("composition tensor %r has wrong shape" % ((m, n, i),))
            tensor = tuple(
                tuple(tuple(field.scalar(x) for x in vec) for vec in row) for row in T)
            for row in tensor:
                for vec in row:
                    if len(vec) != dims[r]:
                        raise ValueError(
                            "composition tensor %r output length != dim P(%d)" % ((m, n, i), r))
            self.comps[(m, n, i)] = tensor

        # memo caches; sound because instances are immutable after construction
        self._act_matrix_cache = {}
        self._axioms_cache = None

    def dim(self, n):
        return self.dims[n]

    def basis(self, n):
        return [unit_vector(self.field, self.dims[n], a) for a in range(self.dims[n])]

    def zero(self, n):
        return zeros(self.field, self.dims[n])

    def act_generator(self, n, k, v):
        if self.dims[n] == 0:
            return []
        return mat_vec(self.actions[(n, k)], v)

    def act_matrix(self, n, p):
        """The matrix of v -> v * p (cached), built from a factorization of p
        into adjacent transpositions."""
        key = (n, p.images)
        M = self._act_matrix_cache.get(key)
        if M is None:
            M = identity_matrix(self.field, self.dims[n])
            for k in p.adjacent_factors():
                M = mat_mul([list(r) for r in self.actions[(n, k)]], M)
            self._act_matrix_cache[key] = M
        return M

    def act(self, n, v, p):
        """The right action v * p: v * p * q = v * (p composed-with q)."""
        if p.n != n:
            raise ValueError("permutation size %d != arity %d" % (p.n, n))
        if len(v) != self.dims[n]:
            raise ValueError("vector length %d != dim P(%d)" % (len(v), n))
        if self.dims[n] == 0:
            return []
        if p.is_identity():
            return list(v)
        return mat_vec(self.act_matrix(n, p), v)

    def compose_basis(self, m, a, i, n, b):
        """e_a o_i e_b as a vector of P(m+n-1)."""
        r = m + n - 1
        if r > self.max_arity:
            raise TruncationExceeded(
                "composition P(%d) o_%d P(%d) lands at arity %d > %d"
                % (m, i, n, r, self.max_arity))
        if not 1 <= i <= m:
            raise ValueError("slot %d out of range 1..%d" % (i, m))
        T = self.comps.get((m, n, i))
        if T is None:
            return self.zero(r)
        return list(T[a][b])

    def compose(self, m, x, i, n, y):
        """Bilinear partial composition x o_i y."""
        r = m + n - 1
        if r > self.max_arity:
            raise TruncationExceeded(
                "composition P(%d) o_%d P(%d) lands at arity %d > %d"
                % (m, i, n, r, self.max_arity))
        if not 1 <= i <= m:
            raise ValueError("slot %d out of range 1..%d" % (i, m))
        if len(x) != self.dims[m] or len(y) != self.dims[n]:
            raise ValueError("operand length mismatch")
        out = self.zero(r)
        T = self.comps.get((m, n, i))
        if T is None:
            return out
        for a, xa in enumerate(x):
            if not bool(xa):
                continue
            Ta = T[a]
            for b, yb in enumerate(y):
                if not bool(yb):
                    continue
                c = xa * yb
                vec = Ta[b]
                for j, t in enumerate(vec):
                    if bool(t):
                        out[j] = out[j] + c * t
        return out

    def arities(self):
        return [n for n in range(1, self.max_arity + 1) if self.dims[n] > 0]

    def __repr__(self):
        return "TruncatedOperad(%s, N=%d, dims=%r)" % (
            self.name or repr(self.field), self.max_arity, list(self.dims[1:]))


@dataclass(frozen=True)
class Violation:
    axiom: str
    where: tuple
    detail: str

    def __str__(self):
        return "%s at %r: %s" % (self.axiom, self.where, self.detail)


def check_axioms(P):
    """All operad axioms on basis elements and S_n generators.

    Bilinearity makes basis elements sufficient; the composition laws for
    sigma_prime/phi_doubleprime make adjacent transpositions sufficient for
    the equivariance axioms.  Violations are data, not errors, ordered
    lexicographically in (axiom, arities, slot).  The result is cached on the
    instance (immutable after construction).
    """
    if P._axioms_cache is not None:
        return list(P._axioms_cache)
    V = []
    field = P.field
    N = P.max_arity

    # unit laws: theta o_i 1 = theta = 1 o_1 theta
    for n in P.arities():
        for a in range(P.dims[n]):
            e = unit_vector(field, P.dims[n], a)
            for i in range(1, n + 1):
                got = P.compose(n, e, i, 1, list(P.identity))
                if not vec_eq(got, e):
                    V.append(Violation("identity", (n, i, a),
                                       "basis %d o_%d 1 != itself" % (a, i)))
            got = P.compose(1, list(P.identity), 1, n, e)
            if not vec_eq(got, e):
                V.append(Violation("identity", (n, 0, a),
                                   "1 o_1 basis %d != itself" % a))

    # Coxeter relations: the adjacent-transposition matrices present a right S_n-action
    for n in P.arities():
        if n < 2:
            continue
        d = P.dims[n]
        I = identity_matrix(field, d)
        gens = {k: [list(r) for r in P.actions[(n, k)]] for k in range(1, n)}
        for k in range(1, n):
            if not mat_eq(mat_mul(gens[k], gens[k]), I):
                V.append(Violation("coxeter", (n, k, k), "s_%d action does not square to 1" % k))
        for k in range(1, n - 1):
            M = mat_mul(gens[k], gens[k + 1])
            if not mat_eq(mat_mul(M, mat_mul(M, M)), I):
                V.append(Violation("coxeter", (n, k, k + 1), "braid relation fails"))
        for k in range(1, n):
            for l in range(k + 2, n):
                if not mat_eq(mat_mul(gens[k], gens[l]), mat_mul(gens[l], gens[k])):
                    V.append(Violation("coxeter", (n, k, l), "distant generators do not commute"))

    # sequential axiom
    for l in P.arities():
        for m in P.arities():
            for n in P.arities():
                if l + m + n - 2 > N:
                    continue
                for i in range(1, l + 1):
                    for a in range(P.dims[l]):
                        ea = unit_vector(field, P.dims[l], a)
                        for b in range(P.dims[m]):
                            xy = P.compose_basis(l, a, i, m, b)
                            for j in range(1, m + 1):
                                for c in range(P.dims[n]):
                                    ec = unit_vector(field, P.dims[n], c)
                                    lhs = P.compose(l + m - 1, xy, i - 1 + j, n, ec)
                                    inner = P.compose_basis(m, b, j, n, c)
                                    rhs = P.compose(l, ea, i, m + n - 1, inner)
                                    if not vec_eq(lhs, rhs):
                                        V.append(Violation(
                                            "sequential", (l, m, n, i, j, a, b, c),
                                            "(x o_i y) o_{i-1+j} z != x o_i (y o_j z)"))

    # parallel axiom
    for l in P.arities():
        for m in P.arities():
            for n in P.arities():
                if l + m + n - 2 > N:
                    continue
                for i in range(1, l + 1):
                    for k in range(i + 1, l + 1):
                        for a in range(P.dims[l]):
                            for b in range(P.dims[m]):
                                xy = P.compose_basis(l, a, i, m, b)
                                for c in range(P.dims[n]):
                                    ec = unit_vector(field, P.dims[n], c)
                                    lhs = P.compose(l + m - 1, xy, k - 1 + m, n, ec)
                                    xz = P.compose_basis(l, a, k, n, c)
                                    eb = unit_vector(field, P.dims[m], b)
                                    rhs = P.compose(l + n - 1, xz, i, m, eb)
                                    if not vec_eq(lhs, rhs):
                                        V.append(Violation(
                                            "parallel", (l, m, n, i, k, a, b, c),
                                            "(x o_i y) o_{k-1+m} z != (x o_k z) o_i y"))

    # inner equivariance
    for m in P.arities():
        for n in P.arities():
            if n < 2 or m + n - 1 > N:
                continue
            for i in range(1, m + 1):
                for k in range(1, n):
                    sp = sigma_prime(m, i, _adjacent(n, k))
                    for a in range(P.dims[m]):
                        ea = unit_vector(field, P.dims[m], a)
                        for b in range(P.dims[n]):
                            eb = unit_vector(field, P.dims[n], b)
                            lhs = P.compose(m, ea, i, n, P.act_generator(n, k, eb))
                            rhs = P.act(m + n - 1, P.compose_basis(m, a, i, n, b), sp)
                            if not vec_eq(lhs, rhs):
                                V.append(Violation(
                                    "equivariance-inner", (m, n, i, k, a, b),
                                    "x o_i (y * s) != (x o_i y) * sigma'"))

    # outer equivariance
    for m in P.arities():
        if m < 2:
            continue
        for n in P.arities():
            if m + n - 1 > N:
                continue
            for i in range(1, m + 1):
                for k in range(1, m):
                    phi = _adjacent(m, k)
                    pd = phi_doubleprime(phi, i, n)
                    for a in range(P.dims[m]):
                        ea = unit_vector(field, P.dims[m], a)
                        for b in range(P.dims[n]):
                            eb = unit_vector(field, P.dims[n], b)
                            lhs = P.compose(m, P.act_generator(m, k, ea), i, n, eb)
                            rhs = P.act(m + n - 1,
                                        P.compose_basis(m, a, phi(i), n, b), pd)
                            if not vec_eq(lhs, rhs):
                                V.append(Violation(
                                    "equivariance-outer", (m, n, i, k, a, b),
                                    "(x * phi) o_i y != (x o_phi(i) y) * phi''"))

    V.sort(key=lambda v: (v.axiom, v.where))
    P._axioms_cache = tuple(V)
    return V


def _adjacent(n, k):
    im = list(range(1, n + 1))
    im[k - 1], im[k] = im[k], im[k - 1]
    return Permutation(im)


# ---------------------------------------------------------------------------
# symmetry classification and the trivial/sign splitting


ZERO = "zero"
SIGMA_TRIVIAL = "sigma_trivial"
SIGMA_SIGN = "sigma_sign"
A_TRIVIAL_MIXED = "A_trivial_mixed"
NOT_A_TRIVIAL = "not_A_trivial"

_A_TRIVIAL_KINDS = (ZERO, SIGMA_TRIVIAL, SIGMA_SIGN, A_TRIVIAL_MIXED)


@dataclass
class SymmetryReport:
    per_arity: dict
    sigma_trivial: bool
    sigma_sign: bool
    a_trivial: bool
    almost_sigma_trivial: object  # minimal window w >= 2, or None
    almost_a_trivial: object

    def flag_lines(self):
        out = ["sigma_trivial=%s" % self.sigma_trivial,
               "sigma_sign=%s" % self.sigma_sign,
               "a_trivial=%s" % self.a_trivial,
               "almost_sigma_trivial_window=%s" % self.almost_sigma_trivial,
               "almost_a_trivial_window=%s" % self.almost_a_trivial]
        return out


def classify_arity(P, n):
    if P.dims[n] == 0:
        return ZERO
    if n == 1:
        return SIGMA_TRIVIAL
    d = P.dims[n]
    I = identity_matrix(P.field, d)
    negI = [[-x for x in row] for row in I]
    gens = [[list(r) for r in P.actions[(n, k)]] for k in range(1, n)]
    if all(mat_eq(M, I) for M in gens):
        return SIGMA_TRIVIAL
    if all(mat_eq(M, negI) for M in gens):
        return SIGMA_SIGN
    first = gens[0]
    if all(mat_eq(M, first) for M in gens) and mat_eq(mat_mul(first, first), I):
        # products of two generators (which generate the alternating group)
        # then all act as the identity; at n = 2 this is vacuously the case
        return A_TRIVIAL_MIXED
    return NOT_A_TRIVIAL


def classify_symmetry(P):
    per = {n: classify_arity(P, n) for n in range(1, P.max_arity + 1)}

    def window(kinds):
        best = None
        for w in range(P.max_arity, 1, -1):
            if all(per[n] in kinds for n in range(w, P.max_arity + 1)):
                best = w
            else:
                break
        return best

    sigma_trivial = all(per[n] in (ZERO, SIGMA_TRIVIAL) for n in per)
    sigma_sign = all(per[n] in (ZERO, SIGMA_SIGN) or n == 1 for n in per)
    a_trivial = all(per[n] in _A_TRIVIAL_KINDS for n in per)
    return SymmetryReport(
        per_arity=per,
        sigma_trivial=sigma_trivial,
        sigma_sign=sigma_sign,
        a_trivial=a_trivial,
        almost_sigma_trivial=window((ZERO, SIGMA_TRIVIAL)),
        almost_a_trivial=window(_A_TRIVIAL_KINDS),
    )


def triv_sign_split(P, n):
    """P(n) = P(n)_triv + P(n)_sign via the projectors (1 +- rho(s_1))/2.

    Requires char != 2 and an A-trivial arity (all generators act alike, so
    the choice of odd permutation does not matter).
    """
    if P.field.char == 2:
        raise CharTwo("the trivial/sign splitting needs char != 2")
    if not 2 <= n <= P.max_arity:
        raise ValueError("the splitting is defined for stored arities >= 2")
    kind = classify_arity(P, n)
    if kind == ZERO:
        return (Subspace(P.field, 0), Subspace(P.field, 0))
    if kind not in _A_TRIVIAL_KINDS:
        raise NotATrivial("arity %d is not A-trivial" % n)
    d = P.dims[n]
    M = P.actions[(n, 1)]
    half = P.field.one / P.field.scalar(2)
    plus, minus = [], []
    for a in range(d):
        e = unit_vector(P.field, d, a)
        Me = mat_vec([list(r) for r in M], e)
        plus.append([half * (x + y) for x, y in zip(e, Me)])
        minus.append([half * (x - y) for x, y in zip(e, Me)])
    triv = Subspace.from_vectors(P.field, d, plus)
    sign = Subspace.from_vectors(P.field, d, minus)
    if triv.dim + sign.dim != d:
        raise NotATrivial("splitting at arity %d is not a direct sum" % n)
    return triv, sign


def basis_vector_type(P, n, a):
    """0 for a trivially-acted basis vector, 1 for a sign-acted one, None otherwise."""
    if n == 1:
        return 0
    if P.dims[n] == 0:
        return None
    e = unit_vector(P.field, P.dims[n], a)
    outs = [P.act_generator(n, k, e) for k in range(1, n)]
    if all(vec_eq(o, e) for o in outs):
        return 0
    mine = [-x for x in e]
    if all(vec_eq(o, mine) for o in outs):
        return 1
    return None


# ---------------------------------------------------------------------------
# suboperads, graded subsets, ideals, torsion


def truncation_suboperad(P, w):
    """The suboperad that keeps k*identity in arity 1, zero in 2..w-1, and
    everything from arity w up."""
    if not 2 <= w <= P.max_arity:
        raise ValueError("window w must satisfy 2 <= w <= N")
    field = P.field
    N = P.max_arity
    dims = [0] * (N + 1)
    dims[1] = 1
    for n in range(w, N + 1):
        dims[n] = P.dims[n]
    actions = {}
    for n in range(w, N + 1):
        if dims[n] == 0:
            continue
        for k in range(1, n):
            actions[(n, k)] = P.actions[(n, k)]
    comps = {(1, 1, 1): [[[field.one]]]}
    for n in range(w, N + 1):
        if dims[n] == 0:
            continue
        comps[(1, n, 1)] = [[unit_vector(field, dims[n], b) for b in range(dims[n])]]
        for i in range(1, n + 1):
            comps[(n, 1, i)] = [[unit_vector(field, dims[n], a)] for a in range(dims[n])]
    for (m, n, i), T in P.comps.items():
        if m >= w and n >= w:
            comps[(m, n, i)] = T
    return TruncatedOperad(field, N, dims, actions, [field.one], comps,
                           name="%s_{%d}" % (P.name, w) if P.name else "")


def graded_subset(P, vectors_by_arity):
    """Canonicalize {arity: vectors} into {arity: Subspace}, zero elsewhere."""
    out = {}
    for n in range(1, P.max_arity + 1):
        vecs = vectors_by_arity.get(n, [])
        for v in vecs:
            if len(v) != P.dims[n]:
                raise ValueError("vector of length %d in P(%d) of dim %d"
                                 % (len(v), n, P.dims[n]))
        out[n] = Subspace.from_vectors(P.field, P.dims[n], vecs)
    return out


def full_graded_subset(P, min_arity=1):
    return {n: (Subspace.full(P.field, P.dims[n]) if n >= min_arity
                else Subspace(P.field, P.dims[n]))
            for n in range(1, P.max_arity + 1)}


def sigma_closure(P, n, vectors):
    """Smallest S_n-stable subspace of P(n) containing the given vectors."""
    span = Subspace.from_vectors(P.field, P.dims[n], vectors)
    if n < 2:
        return span
    changed = True
    while changed:
        changed = False
        for k in range(1, n):
            for row in span.basis():
                img = P.act_generator(n, k, row)
                if not span.contains(img):
                    span = Subspace.from_vectors(
                        P.field, P.dims[n], span.basis() + [img])
                    changed = True
    return span


def ideal_product(P, I, J):
    """I o J: the S-stable graded span of x o_i y for x in I, y in J."""
    collected = {r: [] for r in range(1, P.max_arity + 1)}
    for m in range(1, P.max_arity + 1):
        if I.get(m) is None or I[m].dim == 0:
            continue
        for n in range(1, P.max_arity + 1):
            r = m + n - 1
            if r > P.max_arity or J.get(n) is None or J[n].dim == 0:
                continue
            for u in I[m].basis():
                for v in J[n].basis():
                    for i in range(1, m + 1):
                        collected[r].append(P.compose(m, u, i, n, v))
    return {r: sigma_closure(P, r, vecs) for r, vecs in collected.items()}


def _arity_tuples(arities, parts, budget):
    """All tuples of the given length over `arities` with total <= budget."""
    if parts == 0:
        yield ()
        return
    lo = min(arities) if arities else 0
    for a in arities:
        if a + (parts - 1) * lo > budget:
            continue
        for rest in _arity_tuples(arities, parts - 1, budget - a):
            yield (a,) + rest


def full_composition(P, m, x, ys):
    """x o (y_1, ..., y_m) as the iterated partial composition
    (((x o_m y_m) o_{m-1} y_{m-1}) ... o_1 y_1)."""
    if len(ys) != m:
        raise ValueError("full composition needs exactly %d arguments" % m)
    acc = x
    acc_arity = m
    for slot in range(m, 0, -1):
        n_slot, y = ys[slot - 1]
        acc = P.compose(acc_arity, acc, slot, n_slot, y)
        acc_arity = acc_arity + n_slot - 1
    return acc, acc_arity


def bullet_product(P, I, J):
    """I . J: the S-stable graded span of full compositions x o (y_1..y_m)."""
    collected = {r: [] for r in range(1, P.max_arity + 1)}
    j_arities = [n for n in range(1, P.max_arity + 1)
                 if J.get(n) is not None and J[n].dim > 0]
    for m in range(1, P.max_arity + 1):
        if I.get(m) is None or I[m].dim == 0:
            continue
        for shape in _arity_tuples(j_arities, m, P.max_arity):
            choices = [J[n].basis() for n in shape]
            for u in I[m].basis():
                stack = [(u, [])]
                for slot, opts in enumerate(choices):
                    stack = [(vec, picked + [opt]) for vec, picked in stack for opt in opts]
                for vec, picked in stack:
                    out, r = full_composition(P, m, vec, list(zip(shape, picked)))
                    collected[r].append(out)
    return {r: sigma_closure(P, r, vecs) for r, vecs in collected.items()}


def _torsion_window_check(P, w):
    if not 2 <= w <= P.max_arity:
        raise ValueError("torsion window must satisfy 2 <= w <= N")


def left_torsion(P, w):
    """Truncated left torsion: per arity k, the x with y o_i x = 0 for every
    y of arity in [w, N] whose composition stays within the window.

    This over-approximates the true torsion ideal (violations above N are
    invisible); arities with no representable constraint are omitted.
    """
    _torsion_window_check(P, w)
    out = {}
    for k in range(1, P.max_arity + 1):
        if k + w - 1 > P.max_arity:
            continue
        if P.dims[k] == 0:
            out[k] = Subspace(P.field, 0)
            continue
        rows = []
        for m in range(w, P.max_arity - k + 2):
            if P.dims[m] == 0:
                continue
            for y in range(P.dims[m]):
                for i in range(1, m + 1):
                    cols = [P.compose_basis(m, y, i, k, b) for b in range(P.dims[k])]
                    for r in range(P.dims[m + k - 1]):
                        rows.append([cols[b][r] for b in range(P.dims[k])])
        out[k] = kernel(P.field, rows, P.dims[k])
    return out


def right_torsion(P, w):
    """Truncated right torsion: x with x o_i y = 0 for all y of arity in [w, N]."""
    _torsion_window_check(P, w)
    out = {}
    for k in range(1, P.max_arity + 1):
        if k + w - 1 > P.max_arity:
            continue
        if P.dims[k] == 0:
            out[k] = Subspace(P.field, 0)
            continue
        rows = []
        for m in range(w, P.max_arity - k + 2):
            if P.dims[m] == 0:
                continue
            for y in range(P.dims[m]):
                ey = unit_vector(P.field, P.dims[m], y)
                for i in range(1, k + 1):
                    cols = [P.compose(k, unit_vector(P.field, P.dims[k], a), i, m, ey)
                            for a in range(P.dims[k])]
                    for r in range(P.dims[m + k - 1]):
                        rows.append([cols[a][r] for a in range(P.dims[k])])
        out[k] = kernel(P.field, rows, P.dims[k])
    return out


def bullet_right_torsion(P, w):
    """Truncated bullet-right torsion: x with x o (y_1..y_k) = 0, all y_j of
    arity >= w, computed over every shape that fits in the window."""
    _torsion_window_check(P, w)
    high = [n for n in range(w, P.max_arity + 1) if P.dims[n] > 0]
    out = {}
    for k in range(1, P.max_arity + 1):
        if k * w > P.max_arity:
            continue
        if P.dims[k] == 0:
            out[k] = Subspace(P.field, 0)
            continue
        rows = []
        for shape in _arity_tuples(high, k, P.max_arity):
            choices = [range(P.dims[n]) for n in shape]
            for picks in itertools.product(*choices):
                ys = [(n, unit_vector(P.field, P.dims[n], b))
                      for n, b in zip(shape, picks)]
                cols = []
                for a in range(P.dims[k]):
                    ea = unit_vector(P.field, P.dims[k], a)
                    val, r_arity = full_composition(P, k, ea, ys)
                    cols.append(val)
                for r in range(len(cols[0])):
                    rows.append([cols[a][r] for a in range(P.dims[k])])
        out[k] = kernel(P.field, rows, P.dims[k])
    return out


def is_central(P, n, v):
    """mu is central when mu o_i nu = nu o_j mu for every nu and all valid slots.

    Returns (True, None) or (False, (m, basis_index, i, j)).
    """
    if len(v) != P.dims[n]:
        raise ValueError("element length mismatch")
    for m in P.arities():
        if n + m - 1 > P.max_arity:
            continue
        for b in range(P.dims[m]):
            nu = unit_vector(P.field, P.dims[m], b)
            for i in range(1, n + 1):
                lhs = P.compose(n, v, i, m, nu)
                for j in range(1, m + 1):
                    rhs = P.compose(m, nu, j, n, v)
                    if not vec_eq(lhs, rhs):
                        return False, (m, b, i, j)
    return True, None


def generator_defect(P):
    """dim P(n) modulo the S-stable span of compositions of lower-arity
    elements, for n = 2..N.  Zero defect above a window means the data is
    finitely generated within the truncation."""
    out = {}
    for n in range(2, P.max_arity + 1):
        if P.dims[n] == 0:
            out[n] = 0
            continue
        vecs = []
        for m in range(2, n):
            k = n + 1 - m
            if k < 2 or k > n - 1 or P.dims[m] == 0 or P.dims[k] == 0:
                continue
            for a in range(P.dims[m]):
                for b in range(P.dims[k]):
                    for i in range(1, m + 1):
                        vecs.append(P.compose_basis(m, a, i, k, b))
        span = sigma_closure(P, n, vecs)
        out[n] = P.dims[n] - span.dim
    return out


def operad_ideal_closure(P, seed):
    """Smallest graded, S-stable, two-sided-composition-closed subset
    containing the seed, within the truncation.

    `seed` maps arities either to vector lists or to Subspaces.
    """
    if seed and isinstance(next(iter(seed.values())), Subspace):
        current = {n: seed.get(n, Subspace(P.field, P.dims[n]))
                   for n in range(1, P.max_arity + 1)}
    else:
        current = graded_subset(P, seed)
    full = full_graded_subset(P)
    changed = True
    while changed:
        changed = False
        grown = {n: sigma_closure(P, n, current[n].basis()) for n in current}
        left = ideal_product(P, full, grown)
        right = ideal_product(P, grown, full)
        for n in range(1, P.max_arity + 1):
            combined = Subspace.from_vectors(
                P.field, P.dims[n],
                grown[n].basis() + left[n].basis() + right[n].basis())
            if combined.dim != current[n].dim:
                changed = True
            current[n] = combined
    return current


def non_primeness_witnesses(P):
    """Pairs of nonzero principal ideals (generated by basis vectors) whose
    product vanishes within the truncation.

    Primeness itself is undecidable from a truncation; only failure witnesses
    are searched, and a pair counts only when some product of its nonzero
    arities lands inside the window (otherwise the vanishing is a truncation
    artifact, not evidence)."""
    principals = []
    for n in P.arities():
        for a in range(P.dims[n]):
            ideal = operad_ideal_closure(
                P, {n: [unit_vector(P.field, P.dims[n], a)]})
            if any(S.dim > 0 for S in ideal.values()):
                principals.append(((n, a), ideal))
    witnesses = []
    for (ka, Ia) in principals:
        for (kb, Ib) in principals:
            representable = any(
                Ia[m].dim > 0 and Ib[n].dim > 0
                for m in range(1, P.max_arity + 1)
                for n in range(1, P.max_arity + 2 - m))
            if not representable:
                continue
            prod = ideal_product(P, Ia, Ib)
            if all(S.dim == 0 for S in prod.values()):
                witnesses.append((ka, kb))
    return witnesses
