"""Assortativeness indices as named, domain-checked evaluation rules."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ConstraintViolation, NegativeIndexValue, OutOfDomain, UnknownIndex
from .matrix import (
    BASIS,
    MatchingMatrix,
    in_alr_domain,
    in_trace_domain,
    population,
    random_rate,
    to_fraction,
)

__all__ = [
    "IndexDefinition",
    "LinearFamilyParams",
    "alr",
    "alr_modified",
    "normalized_trace",
    "trace_modified",
    "linear_family",
    "tilde_transform",
    "custom_index",
    "ALR",
    "ALR_MOD",
    "TRACE",
    "TRACE_MOD",
    "get_index",
    "INDEX_NAMES",
]

Domain = Callable[[MatchingMatrix], bool]
Rule = Callable[[MatchingMatrix], Fraction]


@dataclass(frozen=True)
class IndexDefinition:
    """A named index: ``domain`` guards ``rule``; calling the object evaluates it.

    Values are checked to be nonnegative, since an index maps into the
    nonnegative reals.
    """

    name: str
    domain: Domain
    rule: Rule
    linear_params: LinearFamilyParams | None = field(default=None, compare=False)

    def contains(self, m: MatchingMatrix) -> bool:
        return bool(self.domain(m))

    def evaluate(self, m: MatchingMatrix) -> Fraction:
        if not self.domain(m):
            raise OutOfDomain(f"{self.name} is undefined at {m}")
        value = to_fraction(self.rule(m))
        if value < 0:
            raise NegativeIndexValue(f"{self.name}({m}) = {value} < 0")
        return value

    __call__ = evaluate


def alr(m: MatchingMatrix) -> Fraction:
    """Aggregate likelihood ratio: like-type mass over its random-matching benchmark."""
    r = random_rate(m)
    if r == 0:
        raise OutOfDomain(f"alr is undefined at {m}: random-matching rate is 0")
    return (m.a + m.d) / r


def alr_modified(m: MatchingMatrix) -> Fraction:
    """ALR variant that gives half credit to off-diagonal couples."""
    r = random_rate(m)
    if r == 0:
        raise OutOfDomain(f"alr_mod is undefined at {m}: random-matching rate is 0")
    return (m.a + m.d + m.b / 2 + m.c / 2) / r


def _piecewise_trace(m: MatchingMatrix, numerator: Fraction, name: str) -> Fraction:
    # Domain check first: bc=0 and ad=0 would satisfy both extreme clauses.
    if not in_trace_domain(m):
        raise OutOfDomain(f"{name} is undefined at {m}: bc = ad = 0")
    if m.b * m.c == 0:
        return Fraction(1)
    if m.a * m.d == 0:
        return Fraction(0)
    return numerator / population(m)


def normalized_trace(m: MatchingMatrix) -> Fraction:
    return _piecewise_trace(m, m.a + m.d, "trace")


def trace_modified(m: MatchingMatrix) -> Fraction:
    return _piecewise_trace(m, m.a + m.d + m.b / 2 + m.c / 2, "trace_mod")


@dataclass(frozen=True)
class LinearFamilyParams:
    """Weights (alpha on the diagonal, beta off it) of a linear-numerator index.

    The plain constructor accepts any pair; use :meth:`characterized` to
    insist on alpha > beta >= 0.
    """

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        object.__setattr__(self, "beta", to_fraction(self.beta))

    @classmethod
    def characterized(cls, alpha, beta) -> LinearFamilyParams:
        p = cls(alpha, beta)
        if not p.constrained:
            raise ConstraintViolation(
                f"need alpha > beta >= 0, got alpha={p.alpha}, beta={p.beta}"
            )
        return p

    @property
    def constrained(self) -> bool:
        return self.alpha > self.beta >= 0

    @property
    def name(self) -> str:
        if self.alpha.denominator == 1 and self.beta.denominator == 1:
            return f"linear:{self.alpha}/{self.beta}"
        return f"linear:{self.alpha},{self.beta}"


class _LinearRule:
    # A class rather than a closure so linear-family indices can be pickled.
    def __init__(self, params: LinearFamilyParams):
        self.alpha = params.alpha
        self.beta = params.beta

    def __call__(self, m: MatchingMatrix) -> Fraction:
        numerator = self.alpha * (m.a + m.d) + self.beta * (m.b + m.c)
        return numerator / random_rate(m)


def linear_family(params: LinearFamilyParams) -> IndexDefinition:
    """M -> (alpha*a + beta*b + beta*c + alpha*d) / r(M) on the ALR domain."""
    return IndexDefinition(params.name, in_alr_domain, _LinearRule(params), params)


def tilde_transform(index: IndexDefinition, m: MatchingMatrix) -> Fraction:
    """r(M) * I(M); additive and degree-1 homogeneous for decomposable indices."""
    return random_rate(m) * index.evaluate(m)


def custom_index(name: str, rule: Rule, domain: Domain = in_alr_domain) -> IndexDefinition:
    """Wrap a user rule as an index.

    The rule is probed at a few interior matrices and rejected if any value
    is negative; negativity elsewhere surfaces as NegativeIndexValue on use.
    """
    index = IndexDefinition(name, domain, rule)
    for m in BASIS + (MatchingMatrix(1, 1, 1, 1),):
        if index.contains(m):
            index.evaluate(m)
    return index


ALR = IndexDefinition("alr", in_alr_domain, alr, LinearFamilyParams(1, 0))
ALR_MOD = IndexDefinition(
    "alr_mod", in_alr_domain, alr_modified, LinearFamilyParams(1, Fraction(1, 2))
)
TRACE = IndexDefinition("trace", in_trace_domain, normalized_trace)
TRACE_MOD = IndexDefinition("trace_mod", in_trace_domain, trace_modified)

_REGISTRY = {ix.name: ix for ix in (ALR, ALR_MOD, TRACE, TRACE_MOD)}
INDEX_NAMES = tuple(_REGISTRY)


def _parse_linear(spec: str) -> LinearFamilyParams:
    if "," in spec:
        alpha, beta = spec.split(",", 1)
    elif spec.count("/") == 1:
        alpha, beta = spec.split("/")
    else:
        raise UnknownIndex(
            f"cannot parse linear parameters {spec!r}; use linear:ALPHA/BETA "
            "for integers or linear:ALPHA,BETA"
        )
    try:
        return LinearFamilyParams(alpha, beta)
    except (ValueError, ZeroDivisionError) as exc:
        raise UnknownIndex(f"bad linear parameters {spec!r}: {exc}") from None


def get_index(name: str) -> IndexDefinition:
    """Look up ``alr``, ``alr_mod``, ``trace``, ``trace_mod`` or ``linear:ALPHA/BETA``."""
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("linear:"):
        return linear_family(_parse_linear(name[len("linear:"):]))
    raise UnknownIndex(f"unknown index {name!r}; known: {', '.join(INDEX_NAMES)}, linear:A/B")
