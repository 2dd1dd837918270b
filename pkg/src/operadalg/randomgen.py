"""Seeded random instances for tests: monomial algebras with known-good
structure, typed products of them, and single-entry operad mutations.

The generators compose validity-preserving ingredients (monomial quotients,
Koszul signs, direct products) instead of sampling raw structure constants,
so every emitted instance genuinely satisfies its advertised checker while
still varying in dimensions, typing mix, and characteristic.
"""

from .algebra import GradedAlgebra, with_typing
from .fields import QQ
from .linalg import zeros
from .operad import TruncatedOperad


def _weighted_tuples(degrees, caps, total):
    """Exponent tuples e (e_i <= caps_i) with sum e_i degrees_i = total."""
    if not degrees:
        return [()] if total == 0 else []
    out = []
    d0, c0 = degrees[0], caps[0]
    for e0 in range(min(c0, total // d0) + 1):
        for rest in _weighted_tuples(degrees[1:], caps[1:], total - e0 * d0):
            out.append((e0,) + rest)
    return out


def _divides(seed, e):
    return all(s <= x for s, x in zip(seed, e))


def monomial_algebra(field, D, gen_degrees, super_signs, killed_seeds=(), name=""):
    """Quotient of a (super)commutative monomial algebra, truncated at D.

    With super_signs=True, odd-degree generators anticommute and square to
    zero (Koszul rule); otherwise everything commutes.  killed_seeds are
    exponent tuples generating a monomial ideal (divisibility-upward-closed).
    """
    degs = list(gen_degrees)
    caps = [1 if (super_signs and d % 2 == 1) else D for d in degs]

    def killed(e):
        return any(_divides(s, e) for s in killed_seeds)

    basis = {}
    for d in range(D + 1):
        basis[d] = sorted(e for e in _weighted_tuples(degs, caps, d) if not killed(e))
    index = {d: {e: i for i, e in enumerate(es)} for d, es in basis.items()}
    dims = [len(basis[d]) for d in range(D + 1)]
    if dims[0] != 1:
        raise ValueError("degree 0 must be exactly the unit")

    def koszul(e, f):
        if not super_signs:
            return field.one
        inv = 0
        for i in range(len(degs)):
            if degs[i] % 2 == 0 or f[i] == 0:
                continue
            inv += sum(e[k] for k in range(i + 1, len(degs)) if degs[k] % 2 == 1)
        return -field.one if inv % 2 else field.one

    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            if dims[i] == 0 or dims[j] == 0:
                continue
            T = []
            for e in basis[i]:
                row = []
                for f in basis[j]:
                    vec = zeros(field, dims[i + j])
                    g = tuple(x + y for x, y in zip(e, f))
                    if all(x <= c for x, c in zip(g, caps)) and not killed(g):
                        vec[index[i + j][g]] = koszul(e, f)
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    return GradedAlgebra(field, D, dims, [field.one], mult, name=name)


def gperm_monomial_quotient(field, D, gen_degrees, killed_seeds=(), name=""):
    """Quotient of the free graded-Perm algebra by a content-monomial ideal.

    A normal form x_i * m is killed when its content monomial m + x_i lies in
    the ideal; contents add under the product, so the kill set is two-sided.
    """
    ngen = len(gen_degrees)

    def content(w):
        if w is None:
            return (0,) * ngen
        i, e = w
        g = list(e)
        g[i] += 1
        return tuple(g)

    def killed(w):
        return any(_divides(s, content(w)) for s in killed_seeds)

    # rebuild free_gperm's basis with the same ordering, filtered
    words = {0: [None]}
    for d in range(1, D + 1):
        elems = []
        for i in range(ngen):
            if gen_degrees[i] > d:
                continue
            for e in _weighted_tuples(list(gen_degrees), [D] * ngen, d - gen_degrees[i]):
                w = (i, e)
                if not killed(w):
                    elems.append(w)
        elems.sort()
        words[d] = elems
    index = {d: {w: a for a, w in enumerate(ws)} for d, ws in words.items()}
    dims = [len(words[d]) for d in range(D + 1)]

    def product(w1, w2):
        if w1 is None:
            return w2
        if w2 is None:
            return w1
        i, e = w1
        j, f = w2
        g = list(x + y for x, y in zip(e, f))
        g[j] += 1
        return (i, tuple(g))

    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            if dims[i] == 0 or dims[j] == 0:
                continue
            T = []
            for w1 in words[i]:
                row = []
                for w2 in words[j]:
                    vec = zeros(field, dims[i + j])
                    w = product(w1, w2)
                    if not killed(w):
                        vec[index[i + j][w]] = field.one
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    return GradedAlgebra(field, D, dims, [field.one], mult, name=name)


def direct_product(blocks, name=""):
    """Degreewise direct product; the unit is the tuple of units, typing is
    concatenated when every block carries one."""
    if not blocks:
        raise ValueError("need at least one block")
    field = blocks[0].field
    D = blocks[0].max_degree
    if any(b.field != field or b.max_degree != D for b in blocks):
        raise ValueError("blocks must share field and max degree")
    dims = [sum(b.dims[d] for b in blocks) for d in range(D + 1)]
    offsets = []
    for d in range(D + 1):
        offs, acc = [], 0
        for b in blocks:
            offs.append(acc)
            acc += b.dims[d]
        offsets.append(offs)
    unit = []
    for b in blocks:
        unit.extend(list(b.unit))
    mult = {}
    for i in range(D + 1):
        for j in range(D + 1 - i):
            if dims[i] == 0 or dims[j] == 0:
                continue
            T = [[zeros(field, dims[i + j]) for _ in range(dims[j])]
                 for _ in range(dims[i])]
            for bi, b in enumerate(blocks):
                Tb = b.mult.get((i, j))
                if Tb is None:
                    continue
                oi, oj, ok = offsets[i][bi], offsets[j][bi], offsets[i + j][bi]
                for a in range(b.dims[i]):
                    for c in range(b.dims[j]):
                        vec = Tb[a][c]
                        for r, x in enumerate(vec):
                            if bool(x):
                                T[oi + a][oj + c][ok + r] = x
            mult[(i, j)] = T
    typing = None
    if all(b.typed for b in blocks):
        typing = {}
        for d in range(1, D + 1):
            if dims[d] == 0:
                continue
            flags = []
            for b in blocks:
                if b.dims[d] > 0:
                    flags.extend(b.typing[d])
            typing[d] = tuple(flags)
    return GradedAlgebra(field, D, dims, unit, mult, typing=typing, name=name)


def _random_seeds(rng, ndegrees, count):
    seeds = []
    for _ in range(count):
        seeds.append(tuple(rng.randint(0, 2) for _ in range(ndegrees)))
    return [s for s in seeds if any(x > 0 for x in s)]


def random_graded_commutative(rng, field=None, D=4):
    """A random super-commutative monomial algebra (Koszul signs), untyped."""
    field = field or QQ
    ngen = rng.randint(1, 3)
    degs = [rng.randint(1, 2) for _ in range(ngen)]
    seeds = _random_seeds(rng, ngen, rng.randint(0, 2))
    return monomial_algebra(field, D, degs, super_signs=True, killed_seeds=seeds,
                            name="rand-supercomm")


def random_plain_commutative(rng, field=None, D=4):
    """A random commutative monomial algebra (no signs), untyped."""
    field = field or QQ
    ngen = rng.randint(1, 3)
    degs = [rng.randint(1, 2) for _ in range(ngen)]
    seeds = _random_seeds(rng, ngen, rng.randint(0, 2))
    return monomial_algebra(field, D, degs, super_signs=False, killed_seeds=seeds,
                            name="rand-comm")


def random_gperm(rng, field=None, D=4):
    """A random graded-Perm algebra: either a quotient of a free one or a
    commutative monomial algebra."""
    field = field or QQ
    if rng.random() < 0.6:
        ngen = rng.randint(1, 2)
        degs = [rng.randint(1, 2) for _ in range(ngen)]
        seeds = _random_seeds(rng, ngen, rng.randint(0, 2))
        return gperm_monomial_quotient(field, D, degs, killed_seeds=seeds,
                                       name="rand-gperm")
    return random_plain_commutative(rng, field=field, D=D)


def _typed_even(A):
    return with_typing(A, {d: ["e"] * A.dims[d]
                           for d in range(1, A.max_degree + 1) if A.dims[d] > 0})


def _typed_odd(A):
    return with_typing(A, {d: ["o"] * A.dims[d]
                           for d in range(1, A.max_degree + 1) if A.dims[d] > 0})


def random_pgc(rng, field=None, D=4, max_dim=None):
    """A random pseudo-graded-commutative algebra: a product of all-even
    commutative blocks and all-odd super-commutative blocks."""
    field = field or QQ
    for _ in range(50):
        nblocks = rng.randint(1, 2)
        blocks = []
        for _ in range(nblocks):
            if rng.random() < 0.5:
                blocks.append(_typed_even(random_plain_commutative(rng, field, D)))
            else:
                blocks.append(_typed_odd(random_graded_commutative(rng, field, D)))
        A = direct_product(blocks, name="rand-pgc")
        if max_dim is None or max(A.dims) <= max_dim:
            return A
    raise RuntimeError("could not sample a PGC instance under the dimension cap")


def random_pgperm(rng, field=None, D=4, max_dim=None, force_mixed=True):
    """A random pseudo-graded-Perm algebra with genuinely mixed typing:
    at least one even-type block (possibly non-commutative graded-Perm) and
    one odd-type super-commutative block."""
    field = field or QQ
    for _ in range(50):
        blocks = [_typed_even(random_gperm(rng, field, D)),
                  _typed_odd(random_graded_commutative(rng, field, D))]
        if rng.random() < 0.4:
            blocks.append(_typed_even(random_plain_commutative(rng, field, D)))
        if not force_mixed:
            blocks = [rng.choice(blocks)]
        rng.shuffle(blocks)
        A = direct_product(blocks, name="rand-pgperm")
        if max_dim is not None and max(A.dims) > max_dim:
            continue
        if force_mixed:
            flags = {f for d in A.typing for f in A.typing[d]}
            if flags != {"e", "o"}:
                continue  # a monomial kill emptied one side; resample
        return A
    raise RuntimeError("could not sample a PGPerm instance under the constraints")


def random_operad(rng, field=None, N=5):
    """A random valid operad: the trivial-action operad of a random
    graded-Perm algebra or the sign-bookkeeping operad of a random
    pseudo-graded-Perm algebra (char != 2 only for the latter)."""
    from .functors import g_a_triv, g_sigma_triv
    field = field or QQ
    if field.char != 2 and rng.random() < 0.5:
        return g_a_triv(random_pgperm(rng, field, D=N - 1))
    return g_sigma_triv(random_gperm(rng, field, D=N - 1))


# ---------------------------------------------------------------------------
# single-entry mutations


def mutation_sites(P):
    """All mutable coordinates of an operad's data: composition tensor
    entries and action matrix entries."""
    sites = []
    for (m, n, i), T in sorted(P.comps.items()):
        for a in range(len(T)):
            for b in range(len(T[a])):
                for r in range(len(T[a][b])):
                    sites.append(("comp", (m, n, i, a, b, r)))
    for (n, k), M in sorted(P.actions.items()):
        for a in range(len(M)):
            for b in range(len(M[a])):
                sites.append(("action", (n, k, a, b)))
    return sites


def mutate_operad(P, site):
    """A copy of P with one scalar bumped by one at the given site."""
    kind, where = site
    comps = {key: [[list(vec) for vec in row] for row in T]
             for key, T in P.comps.items()}
    actions = {key: [list(row) for row in M] for key, M in P.actions.items()}
    if kind == "comp":
        m, n, i, a, b, r = where
        comps[(m, n, i)][a][b][r] = comps[(m, n, i)][a][b][r] + P.field.one
    elif kind == "action":
        n, k, a, b = where
        actions[(n, k)][a][b] = actions[(n, k)][a][b] + P.field.one
    else:
        raise ValueError("unknown mutation site %r" % (kind,))
    return TruncatedOperad(P.field, P.max_arity, P.dims, actions,
                           list(P.identity), comps, name=P.name + "-mutant")
