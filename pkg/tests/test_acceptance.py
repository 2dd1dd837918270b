"""Acceptance suite: every criterion is exact (no tolerances anywhere) and
prints one pass/fail line.  Run with `pytest tests/test_acceptance.py -v -s`
to see the per-criterion lines as they complete.
"""

import random
import time
from fractions import Fraction

from operadalg.algebra import (
    all_even_typing,
    all_odd_typing,
    check_gperm,
    check_graded_commutative,
    check_pgc,
    check_pgperm,
    free_gperm,
    strip_typing,
    two_sided_closure,
    ideal_mult,
)
from operadalg.catalog import (
    build_com,
    build_ex63_algebra,
    build_ex64_algebra,
    build_ex64_operad,
    build_free_gperm,
    build_massey_algebra,
    build_massey_operad,
    build_ope,
)
from operadalg.fields import GF, QQ
from operadalg.functors import (
    diff_algebras,
    diff_operads,
    f_a_triv,
    forget_F,
    g_a_triv,
    g_sigma_triv,
    roundtrip_report,
)
from operadalg.linalg import unit_vector
from operadalg.operad import (
    basis_vector_type,
    bullet_right_torsion,
    check_axioms,
    is_central,
    left_torsion,
    right_torsion,
)
from operadalg.randomgen import (
    mutate_operad,
    mutation_sites,
    random_graded_commutative,
    random_gperm,
    random_operad,
    random_pgc,
    random_pgperm,
    _typed_even,
)
from operadalg.series import gk_estimate, hilbert, poly_divmod, poly_gcd, poly_mul, rational_fit
from operadalg.symgroup import verify_sign_lemma


def _report(num, ok, desc):
    print("[criterion %02d] %s  %s" % (num, "PASS" if ok else "FAIL", desc), flush=True)
    assert ok, "criterion %d failed: %s" % (num, desc)


def test_criterion_01_sign_lemma_exhaustion():
    t0 = time.time()
    rep = verify_sign_lemma(5, 4)
    elapsed = time.time() - t0
    total = sum(c.checked for c in rep.cases)
    ok = rep.all_passed and total > 3000 and elapsed < 10.0
    _report(1, ok, "sign lemma cases 1, 2, 2a-2d hold exhaustively for "
                   "m <= 5, n <= 4 (%d checks, %.2fs)" % (total, elapsed))


def test_criterion_02_axiom_suite():
    t0 = time.time()
    operads = [build_com(7), build_ope(7), build_massey_operad(1, 1, 7),
               build_massey_operad(2, 1, 7), g_sigma_triv(build_ex64_algebra(6))]
    clean = all(check_axioms(P) == [] for P in operads)

    ope = build_ope(7)
    sites = mutation_sites(ope)
    rng = random.Random(20260810)
    rejected = 0
    for site in rng.sample(sites, 20):
        mutant = mutate_operad(ope, site)
        if check_axioms(mutant):
            rejected += 1
    elapsed = time.time() - t0
    ok = clean and rejected == 20 and elapsed < 60.0
    _report(2, ok, "Com, Ope, Mas(1,1), Mas(2,1), and the word-algebra operad clean at N=7; "
                   "%d/20 single-entry mutations of Ope rejected (%.1fs)"
            % (rejected, elapsed))


def _pair42_instances():
    return [build_free_gperm([1, 1], 6), build_free_gperm([1], 6),
            build_ex64_algebra(6)]


def test_criterion_03_roundtrip_pair_42():
    ok = True
    for A in _pair42_instances():
        ok = ok and roundtrip_report(A, 42) == []          # F(G(A)) = A
        ok = ok and roundtrip_report(g_sigma_triv(A), 42) == []  # G(F(P)) = P
    _report(3, ok, "forget_F o g_sigma_triv = id and g_sigma_triv o forget_F = id "
                   "exactly on free GPerm {1,1} D=6, k[x], and k<x,y>/(xy, y^2)")


def _pair56_instances():
    instances = [build_massey_algebra(1, 1, 6), all_odd_typing(free_gperm([2], 6))]
    rng = random.Random(5656)
    while len(instances) < 12:
        instances.append(random_pgc(rng, D=rng.randint(3, 5), max_dim=3))
    return instances


def test_criterion_04_roundtrip_pair_56():
    ok = True
    instances = _pair56_instances()
    # the all-odd k[u] recovers the skew ternary operad on the nose
    ok = ok and diff_operads(g_a_triv(instances[1]), build_ope(7)) == []
    for A in instances:
        ok = ok and roundtrip_report(A, 56) == []
        ok = ok and roundtrip_report(g_a_triv(A), 56) == []
    _report(4, ok, "f_a_triv o g_a_triv = id and g_a_triv o f_a_triv = id exactly "
                   "on Mas(1,1) D=6, all-odd k[u] (recovering the sign operad), "
                   "and 10 random PGC instances (dims <= 3, D <= 5)")


def test_criterion_05_randomized_pgperm_cases():
    ok = True
    count = 0
    for char, seed, runs in ((0, 777, 13), (5, 778, 12)):
        field = QQ if char == 0 else GF(5)
        rng = random.Random(seed)
        for _ in range(runs):
            A = random_pgperm(rng, field, D=4)
            P = g_a_triv(A, validate=False)
            ok = ok and check_pgperm(A) == [] and check_axioms(P) == []
            count += 1
    _report(5, ok, "g_a_triv output passes all operad axioms on %d randomized "
                   "mixed-typing PGPerm instances over Q and GF(5)" % count)


def _closed_form_reduced(degrees):
    """1 + (sum t^d) / prod(1 - t^d) as a reduced integer num/den pair."""
    num = [Fraction(0)] * (max(degrees) + 1)
    for d in degrees:
        num[d] += 1
    den = [Fraction(1)]
    for d in degrees:
        factor = [Fraction(0)] * (d + 1)
        factor[0], factor[d] = Fraction(1), Fraction(-1)
        den = poly_mul(den, factor)
    total_num = [a + b for a, b in
                 zip(den + [Fraction(0)] * len(num), num + [Fraction(0)] * len(den))]
    while total_num and total_num[-1] == 0:
        total_num.pop()
    g = poly_gcd(total_num, den)
    if len(g) > 1:
        total_num = poly_divmod(total_num, g)[0]
        den = poly_divmod(den, g)[0]
    scale = den[0]
    total_num = [x / scale for x in total_num]
    den = [x / scale for x in den]
    return [int(x) for x in total_num], [int(x) for x in den]


def test_criterion_06_hilbert_and_gk():
    ok = True
    # k<x,y>/(xy, y^2): coefficients fit (1+t)/(1-t), GK dimension 1
    s = rational_fit(hilbert(build_ex64_algebra(8)), 2)
    ok = ok and s is not None and (list(s.num), list(s.den)) == ([1, 1], [1, -1])
    ok = ok and gk_estimate(s) == 1
    # free GPerm on two degree-1 generators fits its closed form exactly
    s2 = rational_fit(hilbert(build_free_gperm([1, 1], 8)), 2)
    want_num, want_den = _closed_form_reduced([1, 1])
    ok = ok and s2 is not None and (list(s2.num), list(s2.den)) == (want_num, want_den)
    # the dimension shift holds coefficientwise for every functor application
    for A in _pair42_instances():
        P = g_sigma_triv(A)
        ok = ok and hilbert(P) == [0] + hilbert(A)
        ok = ok and hilbert(forget_F(P)) == hilbert(A)
    for A in _pair56_instances():
        P = g_a_triv(A)
        ok = ok and hilbert(P) == [0] + hilbert(A)
        ok = ok and hilbert(f_a_triv(P)) == hilbert(A)
    _report(6, ok, "k<x,y>/(xy, y^2) fits (1+t)/(1-t) with GK 1; free GPerm {1,1} fits its "
                   "closed form; H_P(t) = t H_A(t) for every functor application "
                   "in criteria 3-4")


def test_criterion_07_torsion():
    ok = True
    P = build_ex64_operad(8)
    lt = left_torsion(P, 2)
    ok = ok and set(lt) == set(range(1, 8)) and lt[1].dim == 0
    for k in range(2, 8):
        ok = ok and lt[k].dim == 1 and lt[k].contains([QQ.zero, QQ.one])
    rt = right_torsion(P, 2)
    ok = ok and all(S.dim == 0 for S in rt.values())
    bt = bullet_right_torsion(P, 2)
    ok = ok and all(S.dim == 0 for S in bt.values())
    rng = random.Random(9090)
    inclusions = 0
    for i in range(10):
        field = GF(5) if i % 3 == 0 else QQ
        Q = random_operad(rng, field, N=5)
        rtq = right_torsion(Q, 2)
        btq = bullet_right_torsion(Q, 2)
        for k in set(rtq) & set(btq):
            ok = ok and btq[k].contains_subspace(rtq[k])
        inclusions += 1
    _report(7, ok, "word-algebra operad, (w, N) = (2, 8): left torsion = the span of "
                   "y x^i (dim 1) per arity 2..7, right and bullet-right torsion "
                   "vanish; right within bullet-right on %d random operads"
            % inclusions)


def test_criterion_08_centrality():
    ok = True
    ope = build_ope(7)
    for n in (1, 3, 5, 7):
        central, _ = is_central(ope, n, [QQ.one])
        ok = ok and central
    P = build_ex64_operad(8)
    rng = random.Random(88)
    # arities 2..N-1: beyond that only the identity is composable inside the
    # window, so no centrality witness can exist either way
    for n in range(2, 8):
        for a in range(P.dims[n]):
            central, _ = is_central(P, n, unit_vector(QQ, P.dims[n], a))
            ok = ok and not central
        for _ in range(3):
            v = [QQ.scalar(rng.randint(-3, 3)) for _ in range(P.dims[n])]
            if all(not bool(x) for x in v):
                continue
            central, _ = is_central(P, n, v)
            ok = ok and not central
    # signed commutation rules on every composable basis pair
    for Q in (build_ope(7), build_massey_operad(1, 1, 7)):
        for m in Q.arities():
            for l in Q.arities():
                if m + l - 1 > Q.max_arity:
                    continue
                for a in range(Q.dims[m]):
                    mu = unit_vector(Q.field, Q.dims[m], a)
                    tmu = basis_vector_type(Q, m, a)
                    for b in range(Q.dims[l]):
                        nu = unit_vector(Q.field, Q.dims[l], b)
                        tnu = basis_vector_type(Q, l, b)
                        base = Q.compose(m, mu, 1, l, nu)
                        sign = (-1) ** ((m - 1) * (l - 1) * tmu * tnu)
                        flip = Q.compose(l, nu, 1, m, mu)
                        ok = ok and base == [Q.field.scalar(sign) * x for x in flip]
                        for i in range(1, m + 1):
                            sign = (-1) ** ((l - 1) * (i - 1) * tmu * tnu)
                            got = Q.compose(m, mu, i, l, nu)
                            ok = ok and got == [Q.field.scalar(sign) * x for x in base]
    _report(8, ok, "every basis element of Ope is central; no arity >= 2 element "
                   "of the word-algebra operad is; the signed slot/swap commutation "
                   "identities hold on all basis pairs of Ope and Mas(1,1)")


def test_criterion_09_ex63_nilpotent_ideal():
    B = build_ex63_algebra(6)
    seed = unit_vector(QQ, 2, 1)  # the second degree-1 basis vector
    ideal = two_sided_closure(B, {1: [seed]})
    nonzero = any(S.dim > 0 for S in ideal.values())
    square = ideal_mult(B, ideal, ideal)
    ok = nonzero and all(S.dim == 0 for S in square.values())
    _report(9, ok, "in the catalog ex63 algebra at D=6 the two-sided ideal generated by "
                   "the nilpotent degree-1 generator is nonzero with square zero")


def test_criterion_10_checker_hierarchy():
    ok = True
    rng = random.Random(1010)
    # (a) pgc clean implies pgperm clean
    pgc_instances = [build_massey_algebra(1, 1, 6), build_massey_algebra(2, 1, 5),
                     all_odd_typing(free_gperm([2], 6))]
    pgc_instances += [random_pgc(rng, D=4) for _ in range(10)]
    for A in pgc_instances:
        ok = ok and check_pgc(A) == [] and check_pgperm(A) == []
    # (b) an even-type PGPerm is a GPerm algebra after typing erasure
    even_instances = [all_even_typing(build_ex64_algebra(5)),
                      all_even_typing(build_free_gperm([1, 1], 5))]
    even_instances += [_typed_even(random_gperm(rng, D=4)) for _ in range(5)]
    for A in even_instances:
        ok = ok and check_pgperm(A) == []
        ok = ok and check_gperm(strip_typing(A)) == []
    # (c) the all-odd typing of any graded-commutative algebra is PGC
    commutative = [strip_typing(build_massey_algebra(1, 2, 5)), free_gperm([2], 6)]
    count = 0
    while count < 20:
        field = GF(5) if count % 4 == 0 else QQ
        commutative.append(random_graded_commutative(rng, field, D=4))
        count += 1
    for A in commutative:
        ok = ok and check_graded_commutative(A) == []
        ok = ok and check_pgc(all_odd_typing(A)) == []
    _report(10, ok, "pgc implies pgperm (catalog + 10 random); even-type PGPerm "
                    "passes gperm after typing erasure; all-odd typing of "
                    "graded-commutative algebras passes pgc (catalog + 20 random)")
