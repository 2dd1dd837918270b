"""Truncated N-graded associative algebras with optional even/odd typing.

A GradedAlgebra stores dims per degree 0..D, a unit vector in A_0, sparse
multiplication tensors A_i x A_j -> A_{i+j} for i+j <= D, and (optionally)
a typing: a per-degree partition of the basis into even ('e') and odd ('o')
vectors realizing A_i = A_{i,e} + A_{i,o}.  The involution Xi on A_1 is the
typing in disguise: +1 on the even basis, -1 on the odd basis.

Checkers return violation lists (data, not errors): associativity/unit,
the graded-Perm identity, the pseudo-graded-Perm axioms, and the
pseudo-graded-commutative axioms.  Products that would land beyond the
truncation raise TruncationExceeded.
"""

from dataclasses import dataclass

from .errors import MissingTyping, TruncationExceeded
from .linalg import Subspace, kernel, unit_vector, vec_eq, vec_is_zero, zeros


class GradedAlgebra:
    """Degree-graded exact vector spaces with multiplication structure constants."""

    def __init__(self, field, max_degree, dims, unit, mult, typing=None, name=""):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        dims = list(dims)
        if len(dims) != max_degree + 1:
            raise ValueError("dims must cover degrees 0..D")
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        if dims[0] < 1:
            raise ValueError("a unital graded algebra needs A_0 != 0")
        self.field = field
        self.max_degree = max_degree
        self.dims = tuple(dims)
        self.name = name
        self.unit = tuple(field.scalar(x) for x in unit)
        if len(self.unit) != dims[0] or vec_is_zero(self.unit):
            raise ValueError("unit vector must be a nonzero element of A_0")

        self.mult = {}
        for (i, j), T in mult.items():
            if not (0 <= i and 0 <= j and i + j <= max_degree):
                raise ValueError("bad multiplication key %r" % ((i, j),))
            if dims[i] == 0 or dims[j] == 0:
                raise ValueError("multiplication tensor %r over a zero component" % ((i, j),))
            if len(T) != dims[i] or any(len(row) != dims[j] for row in T):
                raise ValueError("multiplication tensor %r has wrong shape" % ((i, j),))
            tensor = tuple(
                tuple(tuple(field.scalar(x) for x in vec) for vec in row) for row in T)
            for row in tensor:
                for vec in row:
                    if len(vec) != dims[i + j]:
                        raise ValueError(
                            "multiplication tensor %r output length != dim A_%d"
                            % ((i, j), i + j))
            self.mult[(i, j)] = tensor

        self.typing = None
        if typing is not None:
            clean = {}
            for d in range(1, max_degree + 1):
                if dims[d] == 0:
                    continue
                flags = typing.get(d)
                if flags is None:
                    raise ValueError("typing missing for degree %d" % d)
                flags = tuple(flags)
                if len(flags) != dims[d] or any(f not in ("e", "o") for f in flags):
                    raise ValueError("typing for degree %d must give 'e'/'o' per basis vector" % d)
                clean[d] = flags
            self.typing = clean

        # checker memo; sound because instances are immutable after construction
        self._checker_cache = {}

    @property
    def typed(self):
        return self.typing is not None

    def dim(self, d):
        return self.dims[d]

    def basis(self, d):
        return [unit_vector(self.field, self.dims[d], a) for a in range(self.dims[d])]

    def zero(self, d):
        return zeros(self.field, self.dims[d])

    def basis_type(self, d, a):
        """t(x): 0 on A_0 and even basis vectors, 1 on odd ones."""
        if d == 0:
            return 0
        if self.typing is None:
            raise MissingTyping("algebra carries no even/odd typing")
        return 0 if self.typing[d][a] == "e" else 1

    def multiply_basis(self, i, a, j, b):
        d = i + j
        if d > self.max_degree:
            raise TruncationExceeded(
                "product A_%d * A_%d lands in degree %d > %d" % (i, j, d, self.max_degree))
        T = self.mult.get((i, j))
        if T is None:
            return self.zero(d)
        return list(T[a][b])

    def multiply(self, i, x, j, y):
        """Bilinear product of x in A_i and y in A_j."""
        d = i + j
        if d > self.max_degree:
            raise TruncationExceeded(
                "product A_%d * A_%d lands in degree %d > %d" % (i, j, d, self.max_degree))
        if len(x) != self.dims[i] or len(y) != self.dims[j]:
            raise ValueError("operand length mismatch")
        out = self.zero(d)
        T = self.mult.get((i, j))
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
                for r, t in enumerate(Ta[b]):
                    if bool(t):
                        out[r] = out[r] + c * t
        return out

    def xi(self, v):
        """The involution on A_1: +1 on even basis vectors, -1 on odd ones."""
        if self.typing is None:
            raise MissingTyping("Xi needs typing data")
        if self.max_degree < 1 or self.dims[1] == 0:
            return list(v)
        flags = self.typing[1]
        return [x if f == "e" else -x for x, f in zip(v, flags)]

    def degrees(self):
        return [d for d in range(self.max_degree + 1) if self.dims[d] > 0]

    def positive_degrees(self):
        return [d for d in self.degrees() if d >= 1]

    def __repr__(self):
        return "GradedAlgebra(%s, D=%d, dims=%r%s)" % (
            self.name or repr(self.field), self.max_degree, list(self.dims),
            ", typed" if self.typed else "")


@dataclass(frozen=True)
class AlgebraViolation:
    axiom: str
    where: tuple
    detail: str

    def __str__(self):
        return "%s at %r: %s" % (self.axiom, self.where, self.detail)


def check_associativity(A):
    """Unit law and (xy)z = x(yz) on basis triples within the truncation."""
    cached = A._checker_cache.get("assoc")
    if cached is not None:
        return list(cached)
    V = []
    unit = list(A.unit)
    for d in A.degrees():
        for a in range(A.dims[d]):
            e = unit_vector(A.field, A.dims[d], a)
            if not vec_eq(A.multiply(0, unit, d, e), e):
                V.append(AlgebraViolation("unit", (d, a), "1 * x != x"))
            if not vec_eq(A.multiply(d, e, 0, unit), e):
                V.append(AlgebraViolation("unit", (d, a), "x * 1 != x"))
    for i in A.degrees():
        for j in A.degrees():
            for k in A.degrees():
                if i + j + k > A.max_degree:
                    continue
                for a in range(A.dims[i]):
                    for b in range(A.dims[j]):
                        xy = A.multiply_basis(i, a, j, b)
                        for c in range(A.dims[k]):
                            ec = unit_vector(A.field, A.dims[k], c)
                            lhs = A.multiply(i + j, xy, k, ec)
                            yz = A.multiply_basis(j, b, k, c)
                            ea = unit_vector(A.field, A.dims[i], a)
                            rhs = A.multiply(i, ea, j + k, yz)
                            if not vec_eq(lhs, rhs):
                                V.append(AlgebraViolation(
                                    "associativity", (i, j, k, a, b, c),
                                    "(xy)z != x(yz)"))
    V.sort(key=lambda v: (v.axiom, v.where))
    A._checker_cache["assoc"] = tuple(V)
    return V


def check_gperm(A):
    """The graded-Perm identity a(bc) = a(cb) for deg(a) >= 1."""
    cached = A._checker_cache.get("gperm")
    if cached is not None:
        return list(cached)
    V = []
    for i in A.positive_degrees():
        for j in A.degrees():
            for k in A.degrees():
                if i + j + k > A.max_degree:
                    continue
                for a in range(A.dims[i]):
                    ea = unit_vector(A.field, A.dims[i], a)
                    for b in range(A.dims[j]):
                        for c in range(A.dims[k]):
                            bc = A.multiply_basis(j, b, k, c)
                            cb = A.multiply_basis(k, c, j, b)
                            lhs = A.multiply(i, ea, j + k, bc)
                            rhs = A.multiply(i, ea, j + k, cb)
                            if not vec_eq(lhs, rhs):
                                V.append(AlgebraViolation(
                                    "gperm", (i, j, k, a, b, c), "a(bc) != a(cb)"))
    V.sort(key=lambda v: (v.axiom, v.where))
    A._checker_cache["gperm"] = tuple(V)
    return V


def _pgperm_sign(A, j, b, k, c):
    """The sign a(y,z): -1 only for two odd-type elements of odd degrees."""
    if A.basis_type(j, b) == 1 and A.basis_type(k, c) == 1 and j % 2 == 1 and k % 2 == 1:
        return -A.field.one
    return A.field.one


def _typed_component_violates(A, d, vec, expected_flag):
    """Nonzero coordinates of vec on basis vectors of the other type."""
    if d == 0 or A.dims[d] == 0:
        return False
    flags = A.typing[d]
    return any(bool(x) and f != expected_flag for x, f in zip(vec, flags))


def check_pgperm(A):
    """The pseudo-graded-Perm axioms on basis elements within the truncation.

    Axiom tags: 'left-ideal' (typed parts are left ideals), 'two-sided'
    (degree >= 2 typed parts are two-sided ideals), 'perm-sign' (the signed
    Perm identity), and the Xi axioms 'xi-a', 'xi-b', 'xi-b-prime', 'xi-c'.
    'xi-b' and 'xi-b-prime' are checked independently.
    """
    cached = A._checker_cache.get("pgperm")
    if cached is not None:
        return list(cached)
    if not A.typed:
        raise MissingTyping("the pseudo-graded-Perm checker needs typing data")
    V = []
    D = A.max_degree

    # typed parts of positive degree are left ideals
    for j in A.positive_degrees():
        for i in A.degrees():
            if i + j > D:
                continue
            for b in range(A.dims[j]):
                flag = A.typing[j][b]
                for a in range(A.dims[i]):
                    prod = A.multiply_basis(i, a, j, b)
                    if _typed_component_violates(A, i + j, prod, flag):
                        V.append(AlgebraViolation(
                            "left-ideal", (i, j, a, b),
                            "x * (type %s) leaves the %s part" % (flag, flag)))

    # typed parts of degree >= 2 are two-sided ideals
    for i in A.positive_degrees():
        if i < 2:
            continue
        for j in A.degrees():
            if i + j > D:
                continue
            for a in range(A.dims[i]):
                flag = A.typing[i][a]
                for b in range(A.dims[j]):
                    prod = A.multiply_basis(i, a, j, b)
                    if _typed_component_violates(A, i + j, prod, flag):
                        V.append(AlgebraViolation(
                            "two-sided", (i, j, a, b),
                            "(type %s, deg >= 2) * y leaves the %s part" % (flag, flag)))

    # signed Perm identity for x of degree >= 2
    for i in A.degrees():
        if i < 2:
            continue
        for j in A.degrees():
            for k in A.degrees():
                if i + j + k > D:
                    continue
                for a in range(A.dims[i]):
                    ea = unit_vector(A.field, A.dims[i], a)
                    for b in range(A.dims[j]):
                        for c in range(A.dims[k]):
                            s = _pgperm_sign(A, j, b, k, c)
                            bc = A.multiply_basis(j, b, k, c)
                            cb = A.multiply_basis(k, c, j, b)
                            lhs = A.multiply(i, ea, j + k, bc)
                            rhs = [s * x for x in A.multiply(i, ea, j + k, cb)]
                            if not vec_eq(lhs, rhs):
                                V.append(AlgebraViolation(
                                    "perm-sign", (i, j, k, a, b, c),
                                    "x(yz) != a(y,z) x(zy)"))

    # Xi axioms; all involve x in A_1
    if D >= 1 and A.dims[1] > 0:
        for a in range(A.dims[1]):
            x = unit_vector(A.field, A.dims[1], a)
            xXi = A.xi(x)
            for b in range(A.dims[0]):
                y = unit_vector(A.field, A.dims[0], b)
                for c in range(A.dims[0]):
                    z = unit_vector(A.field, A.dims[0], c)
                    lhs = A.xi(A.multiply(1, A.xi(A.multiply(1, x, 0, y)), 0, z))
                    rhs = A.multiply(1, A.xi(A.multiply(1, xXi, 0, z)), 0, y)
                    if not vec_eq(lhs, rhs):
                        V.append(AlgebraViolation("xi-a", (a, b, c),
                                                  "((x y)Xi z)Xi != ((x Xi z)Xi) y"))
            for j in A.positive_degrees():
                if 1 + j > D:
                    continue
                for b in range(A.dims[0]):
                    y = unit_vector(A.field, A.dims[0], b)
                    for c in range(A.dims[j]):
                        z = unit_vector(A.field, A.dims[j], c)
                        lhs = A.multiply(1, A.xi(A.multiply(1, x, 0, y)), j, z)
                        rhs = A.multiply(1 + j, A.multiply(1, xXi, j, z), 0, y)
                        if not vec_eq(lhs, rhs):
                            V.append(AlgebraViolation("xi-b", (a, b, j, c),
                                                      "((xy)Xi)z != ((x Xi)z)y"))
                        lhs2 = A.multiply(1 + j, A.multiply(1, x, j, z), 0, y)
                        rhs2 = A.multiply(1, A.xi(A.multiply(1, xXi, 0, y)), j, z)
                        if not vec_eq(lhs2, rhs2):
                            V.append(AlgebraViolation("xi-b-prime", (a, b, j, c),
                                                      "(xz)y != (((x Xi)y)Xi)z"))
            for j in A.positive_degrees():
                for k in A.positive_degrees():
                    if 1 + j + k > D:
                        continue
                    for b in range(A.dims[j]):
                        y = unit_vector(A.field, A.dims[j], b)
                        ty = A.basis_type(j, b)
                        for c in range(A.dims[k]):
                            z = unit_vector(A.field, A.dims[k], c)
                            tz = A.basis_type(k, c)
                            sl = A.field.one if (k * (j - 1) * ty) % 2 == 0 else -A.field.one
                            sr = A.field.one if ((k - 1) * tz) % 2 == 0 else -A.field.one
                            lhs = [sl * t for t in A.multiply(1 + j, A.multiply(1, x, j, y), k, z)]
                            rhs = [sr * t for t in A.multiply(1 + k, A.multiply(1, xXi, k, z), j, y)]
                            if not vec_eq(lhs, rhs):
                                V.append(AlgebraViolation("xi-c", (a, j, b, k, c),
                                                          "signed (xy)z != signed ((x Xi)z)y"))
    V.sort(key=lambda v: (v.axiom, v.where))
    A._checker_cache["pgperm"] = tuple(V)
    return V


def check_pgc(A):
    """The pseudo-graded-commutative axioms: typed parts of positive degree
    are two-sided ideals, and yz = (-1)^{deg y deg z t(y) t(z)} zy.

    A clean result also implies the pseudo-graded-Perm axioms; any failure of
    that implication is reported under 'pgc-implies-pgperm' as a finding.
    """
    cached = A._checker_cache.get("pgc")
    if cached is not None:
        return list(cached)
    if not A.typed:
        raise MissingTyping("the pseudo-graded-commutative checker needs typing data")
    V = []
    D = A.max_degree

    for j in A.positive_degrees():
        for i in A.degrees():
            if i + j > D:
                continue
            for b in range(A.dims[j]):
                flag = A.typing[j][b]
                for a in range(A.dims[i]):
                    left = A.multiply_basis(i, a, j, b)
                    right = A.multiply_basis(j, b, i, a)
                    if _typed_component_violates(A, i + j, left, flag):
                        V.append(AlgebraViolation(
                            "pgc-ideal", (i, j, a, b), "x * (type %s) leaves it" % flag))
                    if _typed_component_violates(A, i + j, right, flag):
                        V.append(AlgebraViolation(
                            "pgc-ideal", (j, i, b, a), "(type %s) * x leaves it" % flag))

    for i in A.degrees():
        for j in A.degrees():
            if i + j > D:
                continue
            for a in range(A.dims[i]):
                for b in range(A.dims[j]):
                    s = A.field.one
                    if (i * j * A.basis_type(i, a) * A.basis_type(j, b)) % 2 == 1:
                        s = -s
                    lhs = A.multiply_basis(i, a, j, b)
                    rhs = [s * x for x in A.multiply_basis(j, b, i, a)]
                    if not vec_eq(lhs, rhs):
                        V.append(AlgebraViolation(
                            "pgc-commute", (i, j, a, b),
                            "yz != (-1)^(deg deg t t) zy"))

    if not V:
        for w in check_pgperm(A):
            V.append(AlgebraViolation("pgc-implies-pgperm", w.where,
                                      "%s: %s" % (w.axiom, w.detail)))
    V.sort(key=lambda v: (v.axiom, v.where))
    A._checker_cache["pgc"] = tuple(V)
    return V


def check_graded_commutative(A):
    """Koszul-sign commutativity yz = (-1)^{deg y deg z} zy on basis pairs."""
    V = []
    for i in A.degrees():
        for j in A.degrees():
            if i + j > A.max_degree:
                continue
            for a in range(A.dims[i]):
                for b in range(A.dims[j]):
                    s = -A.field.one if (i * j) % 2 == 1 else A.field.one
                    lhs = A.multiply_basis(i, a, j, b)
                    rhs = [s * x for x in A.multiply_basis(j, b, i, a)]
                    if not vec_eq(lhs, rhs):
                        V.append(AlgebraViolation(
                            "graded-commutative", (i, j, a, b),
                            "yz != (-1)^(deg y deg z) zy"))
    return V


def strip_typing(A):
    """The same algebra without its even/odd decomposition."""
    return GradedAlgebra(A.field, A.max_degree, A.dims, A.unit,
                         {k: v for k, v in A.mult.items()}, typing=None, name=A.name)


def with_typing(A, typing):
    return GradedAlgebra(A.field, A.max_degree, A.dims, A.unit,
                         {k: v for k, v in A.mult.items()}, typing=typing, name=A.name)


def all_odd_typing(A):
    return with_typing(A, {d: ["o"] * A.dims[d]
                           for d in range(1, A.max_degree + 1) if A.dims[d] > 0})


def all_even_typing(A):
    return with_typing(A, {d: ["e"] * A.dims[d]
                           for d in range(1, A.max_degree + 1) if A.dims[d] > 0})


# ---------------------------------------------------------------------------
# constructions: free graded-Perm algebras, Veronese, truncation subrings


def free_gperm(generator_degrees, max_degree, field=None):
    """The free connected graded-Perm algebra on generators of the given
    degrees, truncated at max_degree.

    Basis: 1 together with the normal forms x_i * (commutative monomial); the
    product keeps the leftmost letter and dumps everything else into the
    commutative tail.  Basis order within a degree: by leading generator,
    then by exponent tuple.
    """
    from .fields import QQ
    if field is None:
        field = QQ
    degs = list(generator_degrees)
    if not degs or any(d < 1 for d in degs):
        raise ValueError("generator degrees must be positive")
    ngen = len(degs)

    def monomials(total):
        """Exponent tuples e with sum(e_i deg_i) = total."""
        if total == 0:
            yield (0,) * ngen
            return
        def rec(idx, remaining):
            if idx == ngen - 1:
                if remaining % degs[idx] == 0:
                    yield (remaining // degs[idx],)
                return
            for c in range(remaining // degs[idx] + 1):
                for rest in rec(idx + 1, remaining - c * degs[idx]):
                    yield (c,) + rest
        yield from rec(0, total)

    basis = {0: [None]}  # None stands for the unit
    for d in range(1, max_degree + 1):
        elems = []
        for i in range(ngen):
            if degs[i] > d:
                continue
            for e in monomials(d - degs[i]):
                elems.append((i, e))
        elems.sort()
        basis[d] = elems
    index = {d: {w: a for a, w in enumerate(ws)} for d, ws in basis.items()}
    dims = [len(basis[d]) for d in range(max_degree + 1)]

    def product(d1, w1, d2, w2):
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
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if dims[i] == 0 or dims[j] == 0:
                continue
            T = []
            for w1 in basis[i]:
                row = []
                for w2 in basis[j]:
                    w = product(i, w1, j, w2)
                    vec = zeros(field, dims[i + j])
                    vec[index[i + j][w]] = field.one
                    row.append(vec)
                T.append(row)
            mult[(i, j)] = T
    return GradedAlgebra(field, max_degree, dims, [field.one], mult,
                         name="GPerm<%s>" % ",".join(map(str, degs)))


def veronese_2(A):
    """The even part regraded by half; typing is forgotten."""
    D2 = A.max_degree // 2
    dims = [A.dims[2 * k] for k in range(D2 + 1)]
    mult = {}
    for (i, j), T in A.mult.items():
        if i % 2 == 0 and j % 2 == 0 and (i + j) // 2 <= D2:
            mult[(i // 2, j // 2)] = T
    return GradedAlgebra(A.field, D2, dims, A.unit, mult,
                         name="%s^(2)" % A.name if A.name else "")


def subring_truncation(A, w):
    """Degree 0 = span of the unit, degrees 1..w-1 zero, degrees >= w kept."""
    if not 1 <= w <= A.max_degree:
        raise ValueError("window w must satisfy 1 <= w <= D")
    field = A.field
    D = A.max_degree
    dims = [0] * (D + 1)
    dims[0] = 1
    for d in range(w, D + 1):
        dims[d] = A.dims[d]
    mult = {(0, 0): [[[field.one]]]}
    typing = None
    for d in range(w, D + 1):
        if dims[d] == 0:
            continue
        mult[(0, d)] = [[unit_vector(field, dims[d], b) for b in range(dims[d])]]
        mult[(d, 0)] = [[unit_vector(field, dims[d], a)] for a in range(dims[d])]
    for (i, j), T in A.mult.items():
        if i >= w and j >= w:
            mult[(i, j)] = T
    if A.typed:
        typing = {d: A.typing[d] for d in range(w, D + 1) if dims[d] > 0}
    return GradedAlgebra(field, D, dims, [field.one], mult, typing=typing,
                         name="%s_{%d}" % (A.name, w) if A.name else "")


# ---------------------------------------------------------------------------
# ideals and torsion on the algebra side


def graded_ideal_data(A, vectors_by_degree):
    return {d: Subspace.from_vectors(A.field, A.dims[d], vectors_by_degree.get(d, []))
            for d in range(A.max_degree + 1)}


def two_sided_closure(A, seed):
    """Two-sided ideal generated by the seed vectors, within the truncation."""
    current = graded_ideal_data(A, seed)
    changed = True
    while changed:
        changed = False
        additions = {d: [] for d in range(A.max_degree + 1)}
        for d in range(A.max_degree + 1):
            if current[d].dim == 0:
                continue
            for v in current[d].basis():
                for i in A.degrees():
                    if i + d > A.max_degree:
                        continue
                    for a in range(A.dims[i]):
                        u = unit_vector(A.field, A.dims[i], a)
                        additions[i + d].append(A.multiply(i, u, d, v))
                        additions[i + d].append(A.multiply(d, v, i, u))
        for d in range(A.max_degree + 1):
            if not additions[d]:
                continue
            combined = Subspace.from_vectors(
                A.field, A.dims[d], current[d].basis() + additions[d])
            if combined.dim != current[d].dim:
                current[d] = combined
                changed = True
    return current


def commutator_ideal(A):
    """Two-sided closure of the span of all basis commutators xy - yx."""
    seed = {d: [] for d in range(A.max_degree + 1)}
    for i in A.degrees():
        for j in A.degrees():
            if i + j > A.max_degree:
                continue
            for a in range(A.dims[i]):
                for b in range(A.dims[j]):
                    xy = A.multiply_basis(i, a, j, b)
                    yx = A.multiply_basis(j, b, i, a)
                    seed[i + j].append([p - q for p, q in zip(xy, yx)])
    return two_sided_closure(A, seed)


def ideal_mult(A, I, J):
    """Per-degree span of products I_i * J_j (no further closure)."""
    out = {d: [] for d in range(A.max_degree + 1)}
    for i in range(A.max_degree + 1):
        if I[i].dim == 0:
            continue
        for j in range(A.max_degree + 1 - i):
            if J[j].dim == 0:
                continue
            for u in I[i].basis():
                for v in J[j].basis():
                    out[i + j].append(A.multiply(i, u, j, v))
    return {d: Subspace.from_vectors(A.field, A.dims[d], vs) for d, vs in out.items()}


def algebra_torsion_left(A, w):
    """Truncated left torsion: per degree k, the x with u x = 0 for every u
    of degree in [w, D-k].  Degrees with no representable constraint are
    omitted; this over-approximates the true torsion."""
    if not 1 <= w <= A.max_degree:
        raise ValueError("torsion window must satisfy 1 <= w <= D")
    out = {}
    for k in range(A.max_degree + 1):
        if k + w > A.max_degree:
            continue
        if A.dims[k] == 0:
            out[k] = Subspace(A.field, 0)
            continue
        rows = []
        for m in range(w, A.max_degree - k + 1):
            if A.dims[m] == 0:
                continue
            for u in range(A.dims[m]):
                cols = [A.multiply_basis(m, u, k, b) for b in range(A.dims[k])]
                for r in range(A.dims[m + k]):
                    rows.append([cols[b][r] for b in range(A.dims[k])])
        out[k] = kernel(A.field, rows, A.dims[k])
    return out


def algebra_torsion_right(A, w):
    """Truncated right torsion: x with x u = 0 for every u of degree in [w, D-k]."""
    if not 1 <= w <= A.max_degree:
        raise ValueError("torsion window must satisfy 1 <= w <= D")
    out = {}
    for k in range(A.max_degree + 1):
        if k + w > A.max_degree:
            continue
        if A.dims[k] == 0:
            out[k] = Subspace(A.field, 0)
            continue
        rows = []
        for m in range(w, A.max_degree - k + 1):
            if A.dims[m] == 0:
                continue
            for u in range(A.dims[m]):
                cols = [A.multiply_basis(k, a, m, u) for a in range(A.dims[k])]
                for r in range(A.dims[m + k]):
                    rows.append([cols[a][r] for a in range(A.dims[k])])
        out[k] = kernel(A.field, rows, A.dims[k])
    return out
