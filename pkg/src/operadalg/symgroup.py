"""Permutations of {1..n}: signs, block substitution, and the derived
permutations that appear in the operad equivariance axioms.

Conventions, fixed once for the whole library:

* one-line notation: ``Permutation((2,1,3))`` maps 1->2, 2->1, 3->3;
* composition ``(p * q)(x) = p(q(x))``;
* right actions on module elements satisfy  v * p * q = v * (p o q),
  i.e. acting by p and then by q is acting by the single permutation p o q.

``block_substitution(outer, sizes, inners)`` builds the permutation of the
letters 1..sum(sizes) that permutes each block j internally by inners[j] and
moves whole blocks so block j occupies the outer(j)-th block position.  With
that orientation the derived permutations below satisfy, for all i:

    sigma_prime(m, i, s o t)    = sigma_prime(m, i, s) o sigma_prime(m, i, t)
    phi_doubleprime(p o q, i, n) = phi_doubleprime(p, q(i), n) o phi_doubleprime(q, i, n)

which is exactly what iterating the equivariance axioms requires.
"""

import itertools
from dataclasses import dataclass, field as dc_field


class Permutation:
    """A permutation of {1..n} stored as a one-line image table."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n < 1 or sorted(images) != list(range(1, n + 1)):
            raise ValueError("not a bijection of {1..%d}: %r" % (n, images))
        self.images = images

    @property
    def n(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        """(p * q)(x) = p(q(x))."""
        if self.n != other.n:
            raise ValueError("composing permutations of different sizes")
        return Permutation(tuple(self.images[other.images[x] - 1] for x in range(self.n)))

    def inverse(self):
        inv = [0] * self.n
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def sign(self):
        """(-1)^inversions; O(n^2) is fine at the sizes used here."""
        inv = 0
        im = self.images
        for a in range(len(im)):
            for b in range(a + 1, len(im)):
                if im[a] > im[b]:
                    inv += 1
        return -1 if inv % 2 else 1

    def is_identity(self):
        return all(v == k for k, v in enumerate(self.images, start=1))

    def adjacent_factors(self):
        """Indices k1..kr with self = s_{k1} o s_{k2} o ... o s_{kr}.

        Bubble sort on the image word; swapping word positions k, k+1 is
        post-composition with the adjacent transposition s_k.
        """
        word = list(self.images)
        recorded = []
        changed = True
        while changed:
            changed = False
            for j in range(len(word) - 1):
                if word[j] > word[j + 1]:
                    word[j], word[j + 1] = word[j + 1], word[j]
                    recorded.append(j + 1)
                    changed = True
        recorded.reverse()
        return recorded

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)


def identity_perm(n):
    return Permutation(range(1, n + 1))


def transposition(n, a, b):
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise ValueError("bad transposition (%d %d) in S_%d" % (a, b, n))
    im = list(range(1, n + 1))
    im[a - 1], im[b - 1] = b, a
    return Permutation(im)


def adjacent_transposition(n, k):
    return transposition(n, k, k + 1)


def cycle(n, *elements):
    """The cycle sending elements[0] -> elements[1] -> ... -> elements[0]."""
    im = list(range(1, n + 1))
    for a, b in zip(elements, elements[1:] + (elements[0],)):
        im[a - 1] = b
    return Permutation(im)


def symmetric_group(n):
    """All of S_n, in lexicographic image order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def is_alternating(p):
    return p.sign() == 1


def block_substitution(outer, block_sizes, inners):
    """Compose permutations block-wise.

    Letters o_j+1 .. o_j+sizes[j] form block j (o_j = sizes[1]+..+sizes[j-1]).
    The letter o_j + r is sent to nu_j + inners[j](r), where nu_j is the total
    size of the blocks k with outer(k) < outer(j).  Identities in, identity out.
    """
    k = outer.n
    if len(block_sizes) != k or len(inners) != k:
        raise ValueError("need exactly one block size and one inner permutation per outer letter")
    for j, (s, q) in enumerate(zip(block_sizes, inners), start=1):
        if s < 1:
            raise ValueError("block %d has non-positive size %d" % (j, s))
        if q.n != s:
            raise ValueError("inner permutation %d has size %d, block has size %d" % (j, q.n, s))
    total = sum(block_sizes)
    offsets = [0] * k
    for j in range(1, k):
        offsets[j] = offsets[j - 1] + block_sizes[j - 1]
    new_offsets = [0] * k
    for j in range(k):
        new_offsets[j] = sum(block_sizes[i] for i in range(k)
                             if outer(i + 1) < outer(j + 1))
    images = [0] * total
    for j in range(k):
        q = inners[j]
        for r in range(1, block_sizes[j] + 1):
            images[offsets[j] + r - 1] = new_offsets[j] + q(r)
    return Permutation(images)


def sigma_prime(m, i, sigma):
    """The permutation with  mu o_i (nu * s) = (mu o_i nu) * sigma_prime.

    Fixes every letter outside [i, i+n-1] and applies sigma inside the block.
    """
    if not 1 <= i <= m:
        raise ValueError("slot %d out of range 1..%d" % (i, m))
    n = sigma.n
    sizes = [1] * m
    sizes[i - 1] = n
    inners = [identity_perm(1)] * m
    inners[i - 1] = sigma
    return block_substitution(identity_perm(m), sizes, inners)


def phi_doubleprime(phi, i, n):
    """The permutation with  (mu * p) o_i nu = (mu o_{p(i)} nu) * phi_doubleprime."""
    m = phi.n
    if not 1 <= i <= m:
        raise ValueError("slot %d out of range 1..%d" % (i, m))
    if n < 1:
        raise ValueError("inner arity must be >= 1")
    sizes = [1] * m
    sizes[i - 1] = n
    inners = [identity_perm(1)] * m
    inners[i - 1] = identity_perm(n)
    return block_substitution(phi, sizes, inners)


@dataclass
class SignLemmaCase:
    name: str
    checked: int = 0
    failures: list = dc_field(default_factory=list)

    def record(self, ok, witness):
        self.checked += 1
        if not ok:
            self.failures.append(witness)


@dataclass
class SignLemmaReport:
    m_max: int
    n_max: int
    cases: list

    @property
    def all_passed(self):
        return all(not c.failures for c in self.cases)

    def lines(self):
        out = []
        for c in self.cases:
            status = "pass" if not c.failures else "FAIL(%d)" % len(c.failures)
            out.append("case %-4s checked %6d  %s" % (c.name, c.checked, status))
        return out


def verify_sign_lemma(m_max, n_max):
    """Exhaustively check the sign identities for sigma_prime and phi_doubleprime.

    Case 1:  sgn(sigma') = sgn(sigma).
    Case 2:  sgn(phi'')  = (-1)^((n-1)(phi(i)-i)) sgn(phi), with the special
    shapes 2a (n odd), 2b (phi(i)=i), 2c (phi a transposition through i, n
    even), 2d (phi a 3-cycle (a,a+1,a+2), n even) checked separately.
    """
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    c1 = SignLemmaCase("1")
    c2 = SignLemmaCase("2")
    c2a = SignLemmaCase("2a")
    c2b = SignLemmaCase("2b")
    c2c = SignLemmaCase("2c")
    c2d = SignLemmaCase("2d")

    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for i in range(1, m + 1):
                for sigma in symmetric_group(n):
                    sp = sigma_prime(m, i, sigma)
                    c1.record(sp.sign() == sigma.sign(), (m, i, sigma.images))

    for m in range(2, m_max + 1):
        for n in range(1, n_max + 1):
            for i in range(1, m + 1):
                for phi in symmetric_group(m):
                    pd = phi_doubleprime(phi, i, n)
                    expected = (-1) ** ((n - 1) * (phi(i) - i)) * phi.sign()
                    c2.record(pd.sign() == expected, (m, n, i, phi.images))
                    if n % 2 == 1:
                        c2a.record(pd.sign() == phi.sign(), (m, n, i, phi.images))
                    if phi(i) == i:
                        c2b.record(pd.sign() == phi.sign(), (m, n, i, phi.images))

    for m in range(2, m_max + 1):
        for n in range(2, n_max + 1, 2):
            for i in range(1, m + 1):
                for a in range(1, i):
                    phi = transposition(m, a, i)
                    pd = phi_doubleprime(phi, i, n)
                    c2c.record(pd.sign() == (-1) ** (i - a - 1), (m, n, i, a, "left"))
                for b in range(i + 1, m + 1):
                    phi = transposition(m, i, b)
                    pd = phi_doubleprime(phi, i, n)
                    c2c.record(pd.sign() == (-1) ** (b - i - 1), (m, n, i, b, "right"))

    for m in range(3, m_max + 1):
        for n in range(2, n_max + 1, 2):
            for a in range(1, m - 1):
                phi = cycle(m, a, a + 1, a + 2)
                for i, expected in ((a, -1), (a + 1, -1), (a + 2, 1)):
                    pd = phi_doubleprime(phi, i, n)
                    c2d.record(pd.sign() == expected, (m, n, i, a))

    return SignLemmaReport(m_max, n_max, [c1, c2, c2a, c2b, c2c, c2d])
