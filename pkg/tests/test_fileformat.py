import pytest

from operadalg.catalog import (
    build_com,
    build_ex63_algebra,
    build_ex64_algebra,
    build_massey_algebra,
    build_massey_operad,
    build_ope,
)
from operadalg.errors import FormatError
from operadalg.fields import GF
from operadalg.fileformat import dump, load
from operadalg.functors import diff_algebras, diff_operads


OPERADS = [build_com(5), build_ope(6), build_massey_operad(2, 1, 5),
           build_ope(5, field=GF(5))]
ALGEBRAS = [build_ex63_algebra(4), build_ex64_algebra(5),
            build_massey_algebra(1, 1, 5), build_massey_algebra(2, 1, 4, field=GF(5))]


@pytest.mark.parametrize("P", OPERADS, ids=lambda p: p.name or "operad")
def test_operad_dump_load_roundtrip(P):
    text = dump(P)
    Q = load(text)
    assert diff_operads(P, Q) == []
    assert dump(Q) == text


@pytest.mark.parametrize("A", ALGEBRAS, ids=lambda a: a.name or "algebra")
def test_algebra_dump_load_roundtrip(A):
    text = dump(A)
    B = load(text)
    assert diff_algebras(A, B) == []
    assert dump(B) == text
    assert B.typed == A.typed


def test_comments_and_blank_lines_ignored():
    text = dump(build_com(3))
    noisy = "# a comment\n\n" + text.replace("dim 1 1", "dim 1 1   # inline")
    assert diff_operads(load(noisy), build_com(3)) == []


def test_load_errors():
    with pytest.raises(FormatError):
        load("")
    with pytest.raises(FormatError):
        load("kind widget\n")
    with pytest.raises(FormatError):
        load("kind operad\nmax_arity 2\n")  # missing field header
    with pytest.raises(FormatError):
        load("kind operad\nfield Q\nmax_arity 1\nidentity 1\n")  # missing dims
    base = "kind algebra\nfield Q\nmax_degree 1\ndim 0 1\ndim 1 1\nunit 1\n"
    with pytest.raises(FormatError):
        load(base + "mult 0 0 0 0 0 x\n")  # bad scalar
    with pytest.raises(FormatError):
        load(base + "mult 0 2 0 0 0 1\n")  # key out of range
    with pytest.raises(FormatError):
        load(base + "mult 0 0 0 5 0 1\n")  # index out of range
    with pytest.raises(FormatError):
        load(base + "typing 1 q\n")  # bad flag
    with pytest.raises(FormatError):
        load("kind operad\nfield Q\nmax_arity 2\ndim 1 1\ndim 2 1\n"
             "action 2 1 1 0\nidentity 1\n")  # wrong action size


def test_error_carries_line_number():
    base = "kind algebra\nfield Q\nmax_degree 1\ndim 0 1\ndim 1 1\nunit 1\n"
    try:
        load(base + "mult 0 0 0 0 0 ?\n")
    except FormatError as exc:
        assert "line 7" in str(exc)
    else:
        raise AssertionError("expected a FormatError")


def test_zero_tensors_may_be_omitted():
    # a valid two-arity operad whose (2,2,i) tensors are absent entirely
    text = ("kind operad\nfield Q\nmax_arity 3\n"
            "dim 1 1\ndim 2 1\ndim 3 0\n"
            "action 2 1 1\n"
            "identity 1\n"
            "comp 1 1 1 0 0 0 1\n"
            "comp 1 2 1 0 0 0 1\n"
            "comp 2 1 1 0 0 0 1\ncomp 2 1 2 0 0 0 1\n")
    P = load(text)
    assert P.compose(2, [P.field.one], 1, 2, [P.field.one]) == []


def test_duplicate_entries_rejected():
    base = "kind algebra\nfield Q\nmax_degree 1\ndim 0 1\ndim 1 1\nunit 1\n"
    with pytest.raises(FormatError):
        load(base + "mult 0 0 0 0 0 1\nmult 0 0 0 0 0 2\n")
    with pytest.raises(FormatError):
        load(base + "dim 1 2\n")
    with pytest.raises(FormatError):
        load(base + "typing 1 e\ntyping 1 o\n")
    op = ("kind operad\nfield Q\nmax_arity 2\ndim 1 1\ndim 2 1\n"
          "action 2 1 1\naction 2 1 1\nidentity 1\n")
    with pytest.raises(FormatError):
        load(op)


def test_nonscalar_action_matrices_roundtrip():
    from tests_support import permutation_rep_operad
    P = permutation_rep_operad(3)
    text = dump(P)
    Q = load(text)
    assert diff_operads(P, Q) == []
    assert dump(Q) == text


def test_parser_fuzz_never_crashes():
    import random
    rng = random.Random(424242)
    base_lines = dump(build_massey_algebra(1, 1, 4)).splitlines()
    op_lines = dump(build_ope(5)).splitlines()
    for source in (base_lines, op_lines):
        for _ in range(60):
            lines = list(source)
            op = rng.choice(("drop", "dup", "garble", "swap"))
            idx = rng.randrange(len(lines))
            if op == "drop":
                del lines[idx]
            elif op == "dup":
                lines.insert(idx, lines[idx])
            elif op == "garble":
                tokens = lines[idx].split()
                if tokens:
                    tokens[rng.randrange(len(tokens))] = rng.choice(
                        ("x", "-1", "99", "1/0", ""))
                    lines[idx] = " ".join(tokens)
            else:
                jdx = rng.randrange(len(lines))
                lines[idx], lines[jdx] = lines[jdx], lines[idx]
            try:
                load("\n".join(lines))
            except FormatError:
                pass  # rejected with a diagnostic: fine
