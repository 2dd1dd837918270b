import random

from operadalg.algebra import (
    check_associativity,
    check_gperm,
    check_graded_commutative,
    check_pgc,
    check_pgperm,
)
from operadalg.fields import GF
from operadalg.operad import check_axioms
from operadalg.randomgen import (
    direct_product,
    gperm_monomial_quotient,
    monomial_algebra,
    mutate_operad,
    mutation_sites,
    random_gperm,
    random_graded_commutative,
    random_operad,
    random_pgc,
    random_pgperm,
    random_plain_commutative,
)
from operadalg.catalog import build_ope
from operadalg.fields import QQ


def test_monomial_algebra_shapes():
    A = monomial_algebra(QQ, 4, [1, 2], super_signs=True)
    assert check_associativity(A) == []
    assert check_graded_commutative(A) == []
    B = monomial_algebra(QQ, 4, [1, 1], super_signs=False, killed_seeds=[(2, 0)])
    assert check_associativity(B) == []
    # x^2 killed: degree-2 basis is xy, y^2 only
    assert B.dims[2] == 2


def test_gperm_monomial_quotient():
    A = gperm_monomial_quotient(QQ, 4, [1, 1], killed_seeds=[(0, 2)])
    assert check_associativity(A) == []
    assert check_gperm(A) == []
    full = gperm_monomial_quotient(QQ, 4, [1, 1])
    assert list(full.dims) == [1, 2, 4, 6, 8]


def test_direct_product_is_unital_associative():
    A = monomial_algebra(QQ, 3, [1], super_signs=False)
    B = monomial_algebra(QQ, 3, [2], super_signs=True)
    from operadalg.randomgen import _typed_even, _typed_odd
    P = direct_product([_typed_even(A), _typed_odd(B)])
    assert list(P.dims) == [a + b for a, b in zip(A.dims, B.dims)]
    assert check_associativity(P) == []
    assert P.typed


def test_random_families_pass_their_checkers():
    rng = random.Random(2024)
    for i in range(8):
        field = GF(5) if i % 2 else QQ
        assert check_graded_commutative(random_graded_commutative(rng, field)) == []
        C = random_plain_commutative(rng, field)
        assert check_associativity(C) == []
        G = random_gperm(rng, field)
        assert check_associativity(G) == [] and check_gperm(G) == []
        if field.char != 2:
            assert check_pgc(random_pgc(rng, field)) == []
            A = random_pgperm(rng, field)
            assert check_associativity(A) == [] and check_pgperm(A) == []


def test_random_pgc_respects_dimension_cap():
    rng = random.Random(5)
    for _ in range(5):
        A = random_pgc(rng, D=5, max_dim=3)
        assert max(A.dims) <= 3


def test_random_pgperm_is_mixed():
    rng = random.Random(6)
    A = random_pgperm(rng, D=4)
    flags = set()
    for d in A.typing:
        flags.update(A.typing[d])
    assert flags == {"e", "o"}


def test_random_operads_are_valid():
    rng = random.Random(7)
    for _ in range(4):
        P = random_operad(rng, N=4)
        assert check_axioms(P) == []


def test_mutation_changes_exactly_one_entry():
    ope = build_ope(5)
    sites = mutation_sites(ope)
    assert sites
    site = sites[0]
    mutant = mutate_operad(ope, site)
    diffs = 0
    for key in ope.comps:
        for a, row in enumerate(ope.comps[key]):
            for b, vec in enumerate(row):
                for r, x in enumerate(vec):
                    if mutant.comps[key][a][b][r] != x:
                        diffs += 1
    for key in ope.actions:
        for a, row in enumerate(ope.actions[key]):
            for b, x in enumerate(row):
                if mutant.actions[key][a][b] != x:
                    diffs += 1
    assert diffs == 1


def test_noncommutative_even_block_separates_pgperm_from_pgc():
    from operadalg.randomgen import _typed_even, _typed_odd
    even = _typed_even(gperm_monomial_quotient(QQ, 4, [1, 1]))  # non-commutative
    odd = _typed_odd(monomial_algebra(QQ, 4, [1], super_signs=True))
    A = direct_product([even, odd])
    assert check_pgperm(A) == []
    assert check_pgc(A) != []


def test_bullet_torsion_window_artifact_on_massey():
    # within a finite window, every 4-slot full composition out of the
    # degree-3 generator forces two exterior letters together, so the
    # bullet-right torsion picks it up; the report semantics carry the window
    from operadalg.catalog import build_massey_operad
    from operadalg.operad import bullet_right_torsion
    P = build_massey_operad(1, 1, 9)
    tor = bullet_right_torsion(P, 2)
    assert tor[4].dim == 1
    assert tor[1].dim == 0 and tor[2].dim == 0 and tor[3].dim == 0
