"""The four constructions between operads and graded algebras, plus the
round-trip differ.

* forget_F: operad -> algebra, A_i = P(i+1), x.y = x o_1 y.
* g_sigma_triv: graded-Perm algebra -> operad with trivial actions, x o_i y = xy.
* g_a_triv: typed pseudo-graded-Perm algebra -> operad whose actions are +1 on
  the even part and -1 (sign) on the odd part, with the signed compositions.
* f_a_triv: A-trivial operad -> typed algebra, typing read off the
  trivial/sign splitting.
* g_sigma_sign: graded-commutative algebra (Koszul signs), viewed all-odd,
  through g_a_triv.

Functors validate their inputs (the corresponding checker must come back
clean) and validate their outputs; the equivalences are exact at the level of
structure constants in the given bases, so the round-trip differ compares raw
data, not isomorphism classes.
"""

from .algebra import (
    GradedAlgebra,
    all_odd_typing,
    check_associativity,
    check_gperm,
    check_graded_commutative,
    check_pgperm,
)
from .errors import (
    CharTwo,
    NotATrivial,
    NotAssociative,
    NotCommutative,
    NotGPerm,
    NotPGPerm,
    TypingNotAligned,
)
from .linalg import unit_vector, zeros
from .operad import (
    TruncatedOperad,
    basis_vector_type,
    check_axioms,
    classify_symmetry,
)


def _require_operad(P, validate):
    if validate:
        bad = check_axioms(P)
        if bad:
            raise NotAssociative("input operad fails %d axiom checks; first: %s"
                                 % (len(bad), bad[0]))


def _require_algebra(A, validate):
    if validate:
        bad = check_associativity(A)
        if bad:
            raise NotAssociative("input algebra fails %d unit/associativity checks; first: %s"
                                 % (len(bad), bad[0]))


def forget_F(P, validate=True):
    """The forgetful functor: dims shift down one arity, x.y = x o_1 y."""
    _require_operad(P, validate)
    field = P.field
    D = P.max_arity - 1
    dims = [P.dims[i + 1] for i in range(D + 1)]
    mult = {}
    for (m, n, i), T in P.comps.items():
        if i == 1:
            mult[(m - 1, n - 1)] = T
    A = GradedAlgebra(field, D, dims, list(P.identity), mult,
                      name="F(%s)" % P.name if P.name else "")
    if validate:
        bad = check_associativity(A)
        if bad:
            raise NotAssociative("forget_F output fails associativity: %s" % bad[0])
    return A


def g_sigma_triv(A, validate=True):
    """Operad with P(n) = A_{n-1}, trivial actions, and x o_i y = xy for all i."""
    _require_algebra(A, validate)
    if validate:
        bad = check_gperm(A)
        if bad:
            raise NotGPerm("input fails the graded-Perm identity: %s" % bad[0])
    field = A.field
    N = A.max_degree + 1
    dims = [0] + [A.dims[n - 1] for n in range(1, N + 1)]
    actions = {}
    for n in range(2, N + 1):
        d = dims[n]
        if d == 0:
            continue
        I = [unit_vector(field, d, a) for a in range(d)]
        for k in range(1, n):
            actions[(n, k)] = I
    comps = {}
    for (i, j), T in A.mult.items():
        m, n = i + 1, j + 1
        for slot in range(1, m + 1):
            comps[(m, n, slot)] = T
    P = TruncatedOperad(field, N, dims, actions, list(A.unit), comps,
                        name="G_striv(%s)" % A.name if A.name else "")
    if validate:
        bad = check_axioms(P)
        if bad:
            raise NotGPerm("g_sigma_triv output fails operad axioms: %s" % bad[0])
        if not classify_symmetry(P).sigma_trivial:
            raise NotGPerm("g_sigma_triv output is not S-trivial")
    return P


def g_a_triv(A, validate=True):
    """Operad built from a typed pseudo-graded-Perm algebra.

    Actions: +identity on even basis vectors, -identity (sign) on odd ones.
    Compositions, for homogeneous x of arity m = deg(x)+1:
      m >= 3:  x o_i y = (-1)^((Ar(y)-1)(i-1) t(x)) x.y
      m == 2:  x o_1 y = x.y;
               x o_2 y = ((x Xi).y) Xi            if y has arity 1,
               x o_2 y = (-1)^(Ar(y) t(y)) (x Xi).y   otherwise
      m == 1:  x o_1 y = x.y
    """
    if A.field.char == 2:
        raise CharTwo("g_a_triv needs char != 2")
    if not A.typed:
        raise NotPGPerm("g_a_triv needs a typed algebra")
    _require_algebra(A, validate)
    if validate:
        bad = check_pgperm(A)
        if bad:
            raise NotPGPerm("input fails the pseudo-graded-Perm axioms: %s" % bad[0])
    field = A.field
    N = A.max_degree + 1
    dims = [0] + [A.dims[n - 1] for n in range(1, N + 1)]

    actions = {}
    for n in range(2, N + 1):
        d = dims[n]
        if d == 0:
            continue
        flags = A.typing[n - 1]
        M = []
        for a in range(d):
            row = zeros(field, d)
            row[a] = field.one if flags[a] == "e" else -field.one
            M.append(row)
        for k in range(1, n):
            actions[(n, k)] = M

    comps = {}
    for (i, j), T in A.mult.items():
        m, n = i + 1, j + 1
        for slot in range(1, m + 1):
            if m >= 3:
                rows = []
                for a in range(A.dims[i]):
                    tx = A.basis_type(i, a)
                    sign = -field.one if ((n - 1) * (slot - 1) * tx) % 2 else field.one
                    rows.append([[sign * x for x in vec] for vec in T[a]])
                comps[(m, n, slot)] = rows
            elif m == 2 and slot == 1:
                comps[(m, n, slot)] = T
            elif m == 2 and slot == 2:
                rows = []
                for a in range(A.dims[1]):
                    xXi = A.xi(unit_vector(field, A.dims[1], a))
                    row = []
                    for b in range(A.dims[j]):
                        eb = unit_vector(field, A.dims[j], b)
                        prod = A.multiply(1, xXi, j, eb)
                        if j == 0:
                            row.append(A.xi(prod))
                        else:
                            ty = A.basis_type(j, b)
                            sign = -field.one if (n * ty) % 2 else field.one
                            row.append([sign * x for x in prod])
                    rows.append(row)
                comps[(m, n, slot)] = rows
            else:  # m == 1
                comps[(m, n, slot)] = T
    P = TruncatedOperad(field, N, dims, actions, list(A.unit), comps,
                        name="G_atriv(%s)" % A.name if A.name else "")
    if validate:
        bad = check_axioms(P)
        if bad:
            raise NotPGPerm("g_a_triv output fails operad axioms: %s" % bad[0])
        if not classify_symmetry(P).a_trivial:
            raise NotPGPerm("g_a_triv output is not A-trivial")
    return P


def f_a_triv(P, validate=True):
    """Typed algebra from an A-trivial operad: the underlying algebra is
    forget_F(P) and the typing is the per-arity trivial/sign splitting, which
    must be aligned with the stored basis."""
    if P.field.char == 2:
        raise CharTwo("f_a_triv needs char != 2")
    _require_operad(P, validate)
    report = classify_symmetry(P)
    if not report.a_trivial:
        raise NotATrivial("operad is not A-trivial: %r" % (report.per_arity,))
    typing = {}
    for n in range(2, P.max_arity + 1):
        if P.dims[n] == 0:
            continue
        flags = []
        for a in range(P.dims[n]):
            t = basis_vector_type(P, n, a)
            if t is None:
                raise TypingNotAligned(
                    "arity %d basis vector %d is neither trivially nor sign acted; "
                    "the even/odd typing cannot be expressed in this basis" % (n, a))
            flags.append("e" if t == 0 else "o")
        typing[n - 1] = tuple(flags)
    A = forget_F(P, validate=False)
    out = GradedAlgebra(P.field, A.max_degree, A.dims, A.unit,
                        {k: v for k, v in A.mult.items()}, typing=typing,
                        name="F_atriv(%s)" % P.name if P.name else "")
    if validate:
        bad = check_pgperm(out)
        if bad:
            raise NotPGPerm("f_a_triv output fails the pseudo-graded-Perm axioms: %s" % bad[0])
    return out


def g_sigma_sign(A, validate=True):
    """g_a_triv of a graded-commutative algebra carrying the all-odd typing."""
    _require_algebra(A, validate)
    bad = check_graded_commutative(A)
    if bad:
        raise NotCommutative(
            "input is not graded-commutative (Koszul signs): %s" % bad[0])
    odd = all_odd_typing(A)
    P = g_a_triv(odd, validate=validate)
    P.name = "G_ssign(%s)" % A.name if A.name else P.name
    return P


# ---------------------------------------------------------------------------
# exact structural comparison and the round trips


def _tensor_diff(label, keys, get_a, get_b, out):
    for key in sorted(keys):
        Ta, Tb = get_a(key), get_b(key)
        if Ta is None and Tb is None:
            continue
        if Ta is None or Tb is None:
            shape = Tb if Ta is None else Ta
            if any(any(bool(x) for x in vec) for row in shape for vec in row):
                out.append("%s %r present on one side only" % (label, key))
            continue
        for a, (ra, rb) in enumerate(zip(Ta, Tb)):
            for b, (va, vb) in enumerate(zip(ra, rb)):
                if list(va) != list(vb):
                    out.append("%s %r entry (%d, %d): %r != %r"
                               % (label, key, a, b, list(va), list(vb)))


def diff_operads(P, Q):
    """Structure-constant differences; empty list means exact equality."""
    out = []
    if P.field != Q.field:
        out.append("field: %r != %r" % (P.field, Q.field))
        return out
    if P.max_arity != Q.max_arity:
        out.append("max_arity: %d != %d" % (P.max_arity, Q.max_arity))
        return out
    if P.dims != Q.dims:
        out.append("dims: %r != %r" % (list(P.dims), list(Q.dims)))
        return out
    if list(P.identity) != list(Q.identity):
        out.append("identity: %r != %r" % (list(P.identity), list(Q.identity)))
    for key in sorted(set(P.actions) | set(Q.actions)):
        Ma, Mb = P.actions.get(key), Q.actions.get(key)
        if Ma is None or Mb is None or [list(r) for r in Ma] != [list(r) for r in Mb]:
            out.append("action %r differs" % (key,))
    _tensor_diff("composition", set(P.comps) | set(Q.comps),
                 P.comps.get, Q.comps.get, out)
    return out


def diff_algebras(A, B):
    """Structure-constant and typing differences; empty list means equality."""
    out = []
    if A.field != B.field:
        out.append("field: %r != %r" % (A.field, B.field))
        return out
    if A.max_degree != B.max_degree:
        out.append("max_degree: %d != %d" % (A.max_degree, B.max_degree))
        return out
    if A.dims != B.dims:
        out.append("dims: %r != %r" % (list(A.dims), list(B.dims)))
        return out
    if list(A.unit) != list(B.unit):
        out.append("unit: %r != %r" % (list(A.unit), list(B.unit)))
    _tensor_diff("multiplication", set(A.mult) | set(B.mult),
                 A.mult.get, B.mult.get, out)
    if A.typed != B.typed:
        out.append("typing present on one side only")
    elif A.typed:
        for d in sorted(set(A.typing) | set(B.typing)):
            if A.typing.get(d) != B.typing.get(d):
                out.append("typing at degree %d: %r != %r"
                           % (d, A.typing.get(d), B.typing.get(d)))
    return out


def roundtrip_report(X, pair):
    """Differences between X and its image under the functor pair.

    pair 42: graded-Perm algebras <-> S-trivial operads
             (g_sigma_triv then forget_F for algebras, the reverse for operads).
    pair 56: typed pseudo-graded-Perm algebras <-> A-trivial operads
             (g_a_triv then f_a_triv for algebras, the reverse for operads).
    Empty report = exact equality of all structure constants and typings.
    """
    if pair not in (42, 56):
        raise ValueError("pair must be 42 or 56")
    if isinstance(X, GradedAlgebra):
        if pair == 42:
            return diff_algebras(X, forget_F(g_sigma_triv(X)))
        return diff_algebras(X, f_a_triv(g_a_triv(X)))
    if isinstance(X, TruncatedOperad):
        if pair == 42:
            return diff_operads(X, g_sigma_triv(forget_F(X)))
        return diff_operads(X, g_a_triv(f_a_triv(X)))
    raise TypeError("roundtrip_report needs a GradedAlgebra or a TruncatedOperad")
