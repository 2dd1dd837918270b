import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from operadalg.fields import GF, GFScalar, QQ, field_from_name
from operadalg.errors import FormatError
from operadalg.linalg import (
    Subspace,
    identity_matrix,
    image,
    kernel,
    kernel_basis,
    mat_mul,
    mat_vec,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
    unit_vector,
)


def test_field_descriptors():
    assert QQ == field_from_name("Q")
    assert GF(5) == field_from_name("Fp:5")
    assert QQ != GF(5)
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(FormatError):
        field_from_name("R")


def test_scalar_parse_and_format():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.fmt(Fraction(-7, 2)) == "-7/2"
    f5 = GF(5)
    assert f5.parse("7") == GFScalar(5, 2)
    assert f5.fmt(GFScalar(5, 2)) == "2"
    with pytest.raises(FormatError):
        QQ.parse("x")


def test_gf_arithmetic():
    f = GF(7)
    a, b = f.scalar(3), f.scalar(5)
    assert a + b == f.scalar(1)
    assert a - b == f.scalar(-2)
    assert a * b == f.scalar(15)
    assert (a / b) * b == a
    assert -a == f.scalar(4)
    assert bool(f.zero) is False and bool(f.one) is True
    with pytest.raises(ZeroDivisionError):
        a / f.zero
    with pytest.raises(ValueError):
        a + GFScalar(5, 1)


def _qmat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_rref_examples():
    R, rank, _ = rref(QQ, _qmat([[0, 0], [0, 0]]))
    assert rank == 0 and R == _qmat([[0, 0], [0, 0]])
    I = identity_matrix(QQ, 3)
    R, rank, _ = rref(QQ, I)
    assert rank == 3 and R == I
    R, rank, _ = rref(QQ, _qmat([[1, 2], [2, 4]]))
    assert rank == 1 and R == _qmat([[1, 2], [0, 0]])


def test_rref_idempotent_random():
    rng = random.Random(7)
    for _ in range(20):
        M = _qmat([[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)])
        R, rank, _ = rref(QQ, M)
        R2, rank2, _ = rref(QQ, R)
        assert R == R2 and rank == rank2


def test_kernel_and_image_dimensions():
    rng = random.Random(11)
    for field in (QQ, GF(5)):
        for _ in range(15):
            rows, cols = rng.randint(1, 4), rng.randint(1, 5)
            M = [[field.scalar(rng.randint(-4, 4)) for _ in range(cols)]
                 for _ in range(rows)]
            _, rank, _ = rref(field, M)
            assert image(field, M, cols).dim == rank
            assert kernel(field, M, cols).dim == cols - rank
            for v in kernel_basis(field, M, cols):
                assert all(not bool(x) for x in mat_vec(M, v))


def test_kernel_of_identity_is_zero():
    assert kernel(QQ, identity_matrix(QQ, 4), 4).dim == 0


def test_solve():
    M = _qmat([[1, 2], [3, 4]])
    b = [Fraction(5), Fraction(11)]
    x = solve(QQ, M, b)
    assert mat_vec(M, x) == b
    assert solve(QQ, _qmat([[1, 1], [1, 1]]), [Fraction(0), Fraction(1)]) is None


def test_subspace_contains_and_equality():
    U = Subspace.from_vectors(QQ, 3, _qmat([[1, 0, 1], [0, 1, 1]]))
    assert U.dim == 2
    assert U.contains([Fraction(2), Fraction(3), Fraction(5)])
    assert not U.contains([Fraction(1), Fraction(0), Fraction(0)])
    V = Subspace.from_vectors(QQ, 3, _qmat([[1, 1, 2], [1, -1, 0]]))
    assert U == V
    with pytest.raises(ValueError):
        U.contains([Fraction(1)])


def test_subspace_intersection_idempotent():
    rng = random.Random(3)
    for _ in range(10):
        vecs = _qmat([[rng.randint(-2, 2) for _ in range(5)] for _ in range(3)])
        U = Subspace.from_vectors(QQ, 5, vecs)
        assert subspace_intersect(U, U) == U
        assert subspace_sum(U, U) == U


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_dimension_formula(data):
    field = QQ if data.draw(st.booleans()) else GF(5)
    dim = 6
    ku = data.draw(st.integers(0, 4))
    kv = data.draw(st.integers(0, 4))
    mk = lambda k: [[field.scalar(data.draw(st.integers(-3, 3))) for _ in range(dim)]
                    for _ in range(k)]
    U = Subspace.from_vectors(field, dim, mk(ku))
    V = Subspace.from_vectors(field, dim, mk(kv))
    inter = subspace_intersect(U, V)
    total = subspace_sum(U, V)
    assert U.dim + V.dim == inter.dim + total.dim
    for row in inter.basis():
        assert U.contains(row) and V.contains(row)
    assert total.contains_subspace(U) and total.contains_subspace(V)


def test_annihilator_duality():
    U = Subspace.from_vectors(QQ, 4, _qmat([[1, 2, 0, 0], [0, 0, 1, 1]]))
    assert U.annihilator().dim == 2
    assert U.annihilator().annihilator() == U


def test_mat_mul_and_vec_sparse_paths():
    A = _qmat([[1, 0], [0, 2]])
    B = _qmat([[0, 1], [1, 0]])
    assert mat_mul(A, B) == _qmat([[0, 1], [2, 0]])
    assert mat_vec(A, [Fraction(0), Fraction(3)]) == [Fraction(0), Fraction(6)]
    z = mat_vec(_qmat([[0, 0]]), [Fraction(1), Fraction(1)])
    assert z == [Fraction(0)] and isinstance(z[0], Fraction)


def test_field_mismatch_rejected():
    U = Subspace.from_vectors(QQ, 2, _qmat([[1, 0]]))
    V = Subspace.from_vectors(GF(5), 2, [[GF(5).one, GF(5).zero]])
    with pytest.raises(ValueError):
        subspace_sum(U, V)
    with pytest.raises(ValueError):
        subspace_intersect(U, V)
