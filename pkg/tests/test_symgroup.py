import pytest
from hypothesis import given, settings, strategies as st

from operadalg.symgroup import (
    Permutation,
    adjacent_transposition,
    block_substitution,
    cycle,
    identity_perm,
    is_alternating,
    phi_doubleprime,
    sigma_prime,
    symmetric_group,
    transposition,
    verify_sign_lemma,
)


def perms(max_n=5):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


def perms_of(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Permutation((2, 3))
    with pytest.raises(ValueError):
        Permutation(())


def test_sign_examples():
    assert identity_perm(5).sign() == 1
    assert transposition(2, 1, 2).sign() == -1
    # 3-cycle 1->2->3->1 has image table (2,3,1): two inversions
    assert Permutation((2, 3, 1)).sign() == 1


def test_is_alternating_examples():
    assert is_alternating(identity_perm(3))
    assert not is_alternating(transposition(2, 1, 2))
    p = transposition(4, 1, 2) * transposition(4, 3, 4)
    assert is_alternating(p)


def test_compose_and_inverse():
    p = Permutation((2, 3, 1))
    q = Permutation((1, 3, 2))
    assert (p * q).images == tuple(p(q(x)) for x in range(1, 4))
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perms(), perms())
def test_sign_is_multiplicative(p, q):
    if p.n != q.n:
        return
    assert (p * q).sign() == p.sign() * q.sign()


@given(perms())
def test_adjacent_factors_reassemble(p):
    acc = identity_perm(p.n)
    for k in p.adjacent_factors():
        acc = acc * adjacent_transposition(p.n, k)
    assert acc == p


def test_block_substitution_identities_give_identity():
    id1, id2 = identity_perm(1), identity_perm(2)
    assert block_substitution(id2, (1, 1), (id1, id1)).is_identity()
    got = block_substitution(identity_perm(3), (2, 3, 1),
                             (identity_perm(2), identity_perm(3), id1))
    assert got.is_identity()


def test_block_substitution_moves_blocks():
    # block 1 = {1,2} goes to the second block position, block 2 = {3} to the first
    got = block_substitution(Permutation((2, 1)), (2, 1),
                             (identity_perm(2), identity_perm(1)))
    assert got.images == (2, 3, 1)


def test_block_substitution_inner_swap():
    got = block_substitution(identity_perm(2), (1, 2),
                             (identity_perm(1), Permutation((2, 1))))
    assert got.images == (1, 3, 2)


def test_block_substitution_shape_errors():
    with pytest.raises(ValueError):
        block_substitution(identity_perm(2), (1,), (identity_perm(1),))
    with pytest.raises(ValueError):
        block_substitution(identity_perm(2), (1, 2),
                           (identity_perm(1), identity_perm(3)))


@given(st.data())
@settings(max_examples=60)
def test_block_substitution_sign_functoriality(data):
    k = data.draw(st.integers(1, 4))
    sizes = [data.draw(st.integers(1, 3)) for _ in range(k)]
    outer = data.draw(perms_of(k))
    inners = [data.draw(perms_of(s)) for s in sizes]
    bs = block_substitution(outer, sizes, inners)
    block_sign = 1
    for a in range(k):
        for b in range(a + 1, k):
            if outer(a + 1) > outer(b + 1):
                block_sign *= (-1) ** (sizes[a] * sizes[b])
    expected = block_sign
    for q in inners:
        expected *= q.sign()
    assert bs.sign() == expected


def test_sigma_prime_examples():
    got = sigma_prime(3, 2, Permutation((2, 1)))
    assert got.images == (1, 3, 2, 4)
    for m, i in ((1, 1), (3, 2), (4, 4)):
        assert sigma_prime(m, i, identity_perm(3)).is_identity()
    with pytest.raises(ValueError):
        sigma_prime(3, 4, identity_perm(2))


def test_sigma_prime_fixes_letters_outside_block():
    sp = sigma_prime(4, 2, Permutation((3, 1, 2)))
    for letter in (1, 5, 6):
        assert sp(letter) == letter


@given(st.data())
@settings(max_examples=60)
def test_sigma_prime_sign_and_homomorphism(data):
    m = data.draw(st.integers(1, 5))
    i = data.draw(st.integers(1, m))
    n = data.draw(st.integers(1, 4))
    s = data.draw(perms_of(n))
    t = data.draw(perms_of(n))
    assert sigma_prime(m, i, s).sign() == s.sign()
    assert sigma_prime(m, i, s * t) == sigma_prime(m, i, s) * sigma_prime(m, i, t)


def test_phi_doubleprime_identity():
    for m, i, n in ((2, 1, 3), (4, 2, 1), (3, 3, 2)):
        assert phi_doubleprime(identity_perm(m), i, n).is_identity()
    with pytest.raises(ValueError):
        phi_doubleprime(identity_perm(2), 3, 2)
    with pytest.raises(ValueError):
        phi_doubleprime(identity_perm(2), 1, 0)


@given(st.data())
@settings(max_examples=80)
def test_phi_doubleprime_sign_formula(data):
    m = data.draw(st.integers(2, 5))
    i = data.draw(st.integers(1, m))
    n = data.draw(st.integers(1, 4))
    phi = data.draw(perms_of(m))
    pd = phi_doubleprime(phi, i, n)
    assert pd.sign() == (-1) ** ((n - 1) * (phi(i) - i)) * phi.sign()


def test_phi_doubleprime_transposition_through_slot():
    # even inner arity, phi = (a, i) with a < i: sign is (-1)^(i-a-1)
    for m, a, i, n in ((4, 1, 3, 2), (5, 2, 5, 4), (3, 1, 2, 2)):
        phi = transposition(m, a, i)
        assert phi_doubleprime(phi, i, n).sign() == (-1) ** (i - a - 1)


def test_phi_doubleprime_three_cycle_even_arity():
    for m in (3, 4, 5):
        for n in (2, 4):
            for a in range(1, m - 1):
                phi = cycle(m, a, a + 1, a + 2)
                assert phi_doubleprime(phi, a, n).sign() == -1
                assert phi_doubleprime(phi, a + 1, n).sign() == -1
                assert phi_doubleprime(phi, a + 2, n).sign() == 1


@given(st.data())
@settings(max_examples=60)
def test_phi_doubleprime_composition_rule(data):
    m = data.draw(st.integers(2, 4))
    i = data.draw(st.integers(1, m))
    n = data.draw(st.integers(1, 3))
    p = data.draw(perms_of(m))
    q = data.draw(perms_of(m))
    lhs = phi_doubleprime(p * q, i, n)
    rhs = phi_doubleprime(p, q(i), n) * phi_doubleprime(q, i, n)
    assert lhs == rhs


@given(st.data())
@settings(max_examples=60)
def test_inner_outer_interchange(data):
    m = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(2, 4))
    i = data.draw(st.integers(1, m))
    phi = data.draw(perms_of(m))
    sigma = data.draw(perms_of(n))
    lhs = phi_doubleprime(phi, i, n) * sigma_prime(m, i, sigma)
    rhs = sigma_prime(m, phi(i), sigma) * phi_doubleprime(phi, i, n)
    assert lhs == rhs


def test_verify_sign_lemma_small():
    rep = verify_sign_lemma(3, 2)
    assert rep.all_passed
    assert all(c.checked > 0 for c in rep.cases)


def test_verify_sign_lemma_full_window():
    rep = verify_sign_lemma(5, 4)
    assert rep.all_passed
    by_name = {c.name: c for c in rep.cases}
    assert by_name["2"].checked > 2000
    assert by_name["2d"].checked == 36


def test_verify_sign_lemma_rejects_tiny_window():
    with pytest.raises(ValueError):
        verify_sign_lemma(1, 4)


def test_symmetric_group_sizes():
    assert len(symmetric_group(1)) == 1
    assert len(symmetric_group(4)) == 24
    assert len(set(symmetric_group(4))) == 24
