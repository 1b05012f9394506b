import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from assortativity.errors import AllZero, NegativeEntry, NonPositiveScalar, PerturbationOutOfRange
from assortativity.matrix import (
    BASIS,
    MatchingMatrix,
    add,
    basis_decompose,
    in_alr_domain,
    in_trace_domain,
    is_positive,
    marginals,
    new_matrix,
    perturb,
    population,
    random_rate,
    scale,
    side_swap,
    type_swap,
)

from conftest import matrices, oracle_rate, rationals


def M(*xs):
    return MatchingMatrix(*xs)


def test_new_matrix_valid():
    assert new_matrix(1, 1, 1, 1).as_tuple() == (1, 1, 1, 1)


def test_new_matrix_rejects_zero_and_negative():
    with pytest.raises(AllZero):
        new_matrix(0, 0, 0, 0)
    with pytest.raises(NegativeEntry):
        new_matrix(1, -1, 1, 1)


def test_entries_are_exact():
    m = new_matrix("1/3", "0.1", 2, F(5, 7))
    assert m.b == F(1, 10)
    assert all(isinstance(v, F) for v in m)
    with pytest.raises(TypeError):
        new_matrix(0.1, 1, 1, 1)


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 1, 1), 4), (M(1, 1, 3, 2), 7), (M(2, 1, 1, 1), 5)]
)
def test_population(m, expected):
    assert population(m) == expected


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 1, 1), 2), (M(1, 1, 3, 2), F(23, 7)), (M(0, 0, 1, 0), 0)]
)
def test_random_rate(m, expected):
    assert random_rate(m) == expected


@given(matrices())
def test_random_rate_matches_share_form(m):
    assert random_rate(m) == oracle_rate(*m)


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 3, 2), True), (M(0, 0, 1, 0), False), (M(0, 1, 1, 0), True)]
)
def test_in_alr_domain(m, expected):
    assert in_alr_domain(m) is expected


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 0, 0), False), (M(1, 0, 0, 1), True), (M(1, 1, 1, 1), True)]
)
def test_in_trace_domain(m, expected):
    assert in_trace_domain(m) is expected


def zero_patterns():
    for mask in itertools.product((0, 1), repeat=4):
        if any(mask):
            yield mask


@pytest.mark.parametrize("mask", list(zero_patterns()))
def test_alr_domain_zero_patterns(mask):
    a, b, c, d = mask
    degenerate = (a == b == d == 0) or (a == c == d == 0)
    assert in_alr_domain(M(*mask)) is (not degenerate)


@pytest.mark.parametrize("mask", list(zero_patterns()))
def test_trace_domain_zero_patterns(mask):
    a, b, c, d = mask
    excluded = b * c == 0 and a * d == 0
    assert in_trace_domain(M(*mask)) is (not excluded)


@pytest.mark.parametrize(
    "m, expected", [(M(1, 1, 1, 1), True), (M(0, 1, 1, 1), False), (M(1, 1, 3, 2), True)]
)
def test_is_positive(m, expected):
    assert is_positive(m) is expected


def test_scale():
    assert scale(M(1, 1, 1, 1), 2) == M(2, 2, 2, 2)
    assert scale(M(1, 1, 3, 2), F(1, 7)) == M(F(1, 7), F(1, 7), F(3, 7), F(2, 7))
    with pytest.raises(NonPositiveScalar):
        scale(M(1, 1, 1, 1), 0)


def test_swaps():
    assert side_swap(M(1, 2, 3, 4)) == M(1, 3, 2, 4)
    assert side_swap(M(1, 1, 1, 1)) == M(1, 1, 1, 1)
    assert side_swap(M(1, 1, 3, 2)) == M(1, 3, 1, 2)
    assert type_swap(M(1, 2, 3, 4)) == M(4, 3, 2, 1)
    assert type_swap(M(1, 1, 1, 1)) == M(1, 1, 1, 1)
    assert type_swap(M(1, 1, 3, 2)) == M(2, 3, 1, 1)


def test_add():
    assert add(M(1, 1, 1, 1), M(2, 1, 1, 1)) == M(3, 2, 2, 2)
    assert add(M(1, 1, 1, 1), M(1, 1, 1, 1)) == M(2, 2, 2, 2)
    assert M(2, 1, 1, 1) + M(1, 2, 1, 1) == M(3, 3, 2, 2)


def test_marginals():
    assert marginals(M(1, 1, 3, 2)) == (2, 5, 4, 3)
    assert marginals(M(1, 1, 1, 1)) == (2, 2, 2, 2)
    assert marginals(M(2, 1, 1, 1)) == (3, 2, 3, 2)


def test_perturb():
    assert perturb(M(1, 1, 1, 1), F(1, 2)) == M(F(3, 2), F(1, 2), F(1, 2), F(3, 2))
    assert perturb(M(1, 1, 1, 1), 0) == M(1, 1, 1, 1)
    with pytest.raises(PerturbationOutOfRange):
        perturb(M(1, 1, 1, 1), 1)
    with pytest.raises(PerturbationOutOfRange):
        perturb(M(1, 1, 1, 1), -1)


@pytest.mark.parametrize(
    "m, s",
    [
        (M(1, 1, 1, 1), (F(1, 5),) * 4),
        (M(2, 1, 1, 1), (1, 0, 0, 0)),
        (M(1, 1, 3, 2), (F(-2, 5), F(-2, 5), F(8, 5), F(3, 5))),
    ],
)
def test_basis_decompose_examples(m, s):
    assert basis_decompose(m).s == s


def _solve_basis(m):
    # Oracle: solve the 4x4 system with the basis matrices as columns.
    A = sympy.Matrix([[int(v) for v in bm] for bm in BASIS]).T
    rhs = sympy.Matrix([sympy.Rational(v.numerator, v.denominator) for v in m])
    return tuple(F(int(x.p), int(x.q)) for x in A.LUsolve(rhs))


@given(matrices())
def test_basis_decompose_matches_linear_solve(m):
    coeffs = basis_decompose(m)
    assert coeffs.s == _solve_basis(m)
    assert coeffs.reconstruct() == m.as_tuple()
    for s, t, tp in zip(coeffs.s, coeffs.t, coeffs.t_prime):
        assert t >= 0 and tp >= 0 and tp - t == s


# Properties


@st.composite
def perturbations(draw):
    m = draw(matrices(positive=True))
    lo, hi = -min(m.a, m.d), min(m.b, m.c)
    frac = draw(st.fractions(min_value=0, max_value=1, max_denominator=50).filter(lambda x: 0 < x < 1))
    return m, lo + (hi - lo) * frac


@given(perturbations())
def test_perturb_preserves_marginals_and_rate(pair):
    m, eps = pair
    moved = perturb(m, eps)
    assert marginals(moved) == marginals(m)
    assert random_rate(moved) == random_rate(m)


@given(matrices(), rationals(min_num=1))
def test_rate_is_degree_one_homogeneous(m, lam):
    assert random_rate(scale(m, lam)) == lam * random_rate(m)


@given(matrices())
def test_swaps_are_involutions_preserving_population_and_rate(m):
    for swap in (side_swap, type_swap):
        assert swap(swap(m)) == m
        assert population(swap(m)) == population(m)
        assert random_rate(swap(m)) == random_rate(m)


@given(matrices(positive=True), matrices(positive=True))
def test_equal_marginals_means_perturbation(m, other):
    # Two positive matrices share marginals iff other == perturb(m, other.a - m.a).
    same = marginals(m) == marginals(other)
    eps = other.a - m.a
    try:
        is_perturb = perturb(m, eps) == other
    except PerturbationOutOfRange:
        is_perturb = False
    assert same == is_perturb


@given(perturbations())
def test_perturbation_pairs_share_marginals(pair):
    m, eps = pair
    other = perturb(m, eps)
    assert perturb(m, other.a - m.a) == other
