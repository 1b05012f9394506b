from fractions import Fraction as F

import pytest
from hypothesis import given

from assortativity.errors import ConstraintViolation, NegativeIndexValue, OutOfDomain, UnknownIndex
from assortativity.indices import (
    ALR,
    ALR_MOD,
    TRACE,
    TRACE_MOD,
    LinearFamilyParams,
    alr,
    alr_modified,
    custom_index,
    get_index,
    linear_family,
    normalized_trace,
    tilde_transform,
    trace_modified,
)
from assortativity.matrix import MatchingMatrix, in_alr_domain, is_positive

from conftest import matrices, oracle_alr_counts, oracle_alr_shares


def M(*xs):
    return MatchingMatrix(*xs)


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 1, 1), 1), (M(1, 1, 3, 2), F(21, 23)), (M(0, 1, 1, 0), 0)]
)
def test_alr_values(m, expected):
    assert alr(m) == expected
    assert ALR(m) == expected


def test_alr_out_of_domain():
    with pytest.raises(OutOfDomain):
        alr(M(0, 0, 1, 0))
    with pytest.raises(OutOfDomain):
        ALR(M(0, 0, 1, 0))


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 1, 1), F(3, 2)), (M(1, 1, 3, 2), F(35, 23)), (M(0, 1, 4, 0), F(25, 16))]
)
def test_alr_modified_values(m, expected):
    assert alr_modified(m) == expected


@pytest.mark.parametrize(
    "fn, m, expected",
    [
        (normalized_trace, M(1, 1, 1, 1), F(1, 2)),
        (normalized_trace, M(1, 0, 0, 1), 1),
        (normalized_trace, M(0, 1, 1, 0), 0),
        (trace_modified, M(1, 1, 1, 1), F(3, 4)),
        (trace_modified, M(1, 0, 0, 1), 1),
        (trace_modified, M(2, 1, 1, 2), F(5, 6)),  # (2+2+1/2+1/2)/6
    ],
)
def test_trace_values(fn, m, expected):
    assert fn(m) == expected


@pytest.mark.parametrize("fn", [normalized_trace, trace_modified])
def test_trace_overlap_matrix_is_out_of_domain(fn):
    with pytest.raises(OutOfDomain):
        fn(M(1, 1, 0, 0))


def test_linear_family_examples():
    assert linear_family(LinearFamilyParams(1, 0))(M(1, 1, 3, 2)) == alr(M(1, 1, 3, 2))
    assert linear_family(LinearFamilyParams(1, F(1, 2)))(M(1, 1, 1, 1)) == F(3, 2)
    with pytest.raises(ConstraintViolation):
        LinearFamilyParams.characterized(1, 2)
    with pytest.raises(ConstraintViolation):
        LinearFamilyParams.characterized(1, -1)
    assert LinearFamilyParams.characterized(2, 1).constrained
    assert not LinearFamilyParams(1, 2).constrained


def test_tilde_transform_examples():
    assert tilde_transform(ALR, M(2, 1, 1, 1)) == 3
    assert tilde_transform(ALR_MOD, M(1, 2, 1, 1)) == F(7, 2)
    assert tilde_transform(ALR, M(1, 1, 1, 1)) == 2


def test_registry():
    assert get_index("alr") is ALR
    assert get_index("trace_mod") is TRACE_MOD
    lin = get_index("linear:3/1")
    assert lin.linear_params == LinearFamilyParams(3, 1)
    assert lin.name == "linear:3/1"
    assert get_index("linear:1,1/2").linear_params == LinearFamilyParams(1, F(1, 2))
    for bad in ("nope", "linear:1/2/3", "linear:x/1"):
        with pytest.raises(UnknownIndex):
            get_index(bad)


def test_custom_index_rejects_negative_values():
    with pytest.raises(NegativeIndexValue):
        custom_index("neg", lambda m: m.a - m.b - 10)
    relaxed = linear_family(LinearFamilyParams(1, -5))
    with pytest.raises(NegativeIndexValue):
        relaxed(M(1, 1, 1, 1))


# Properties


@given(matrices().filter(in_alr_domain))
def test_alr_equals_both_textbook_forms(m):
    assert alr(m) == oracle_alr_shares(*m) == oracle_alr_counts(*m)


@given(matrices().filter(in_alr_domain))
def test_named_indices_are_linear_family_members(m):
    assert alr(m) == linear_family(LinearFamilyParams(1, 0))(m)
    assert alr_modified(m) == linear_family(LinearFamilyParams(1, F(1, 2)))(m)


@given(matrices())
def test_indices_nonnegative_and_trace_bounded(m):
    for ix in (ALR, ALR_MOD, TRACE, TRACE_MOD):
        if ix.contains(m):
            assert ix(m) >= 0
    if is_positive(m):
        assert 0 < TRACE(m) < 1
        assert 0 < TRACE_MOD(m) < 1


@given(
    matrices(positive=True),
    matrices(positive=True).map(lambda m: (m.a, m.b)),
)
def test_tilde_of_linear_member_is_linear(m, weights):
    alpha, beta = max(weights), min(weights)
    ix = linear_family(LinearFamilyParams(alpha, beta))
    assert tilde_transform(ix, m) == alpha * m.a + beta * m.b + beta * m.c + alpha * m.d
