"""Exact 2x2 matching matrices and the transformations the axioms are built from.

A matching matrix ``(a, b, c, d)`` lays out couple masses as::

            woman H   woman L
    man H      a         b
    man L      c         d

Every entry is a :class:`fractions.Fraction`; nothing in this module rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator

from .errors import AllZero, NegativeEntry, NonPositiveScalar, PerturbationOutOfRange

__all__ = [
    "MatchingMatrix",
    "DecompositionCoefficients",
    "BASIS",
    "to_fraction",
    "new_matrix",
    "population",
    "random_rate",
    "in_alr_domain",
    "in_trace_domain",
    "is_positive",
    "scale",
    "side_swap",
    "type_swap",
    "add",
    "marginals",
    "perturb",
    "basis_decompose",
]


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` / decimal strings to an exact Fraction.

    Floats are refused: a binary float rarely equals the rational the user meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational: {x!r}")


@dataclass(frozen=True)
class MatchingMatrix:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        entries = [to_fraction(v) for v in (self.a, self.b, self.c, self.d)]
        for name, v in zip("abcd", entries):
            if v < 0:
                raise NegativeEntry(f"entry {name}={v} is negative")
            object.__setattr__(self, name, v)
        if not any(entries):
            raise AllZero("matching matrix must have at least one nonzero entry")

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.a, self.b, self.c, self.d))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: MatchingMatrix) -> MatchingMatrix:
        return add(self, other)

    def __rmul__(self, lam) -> MatchingMatrix:
        return scale(self, lam)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self) + ")"


def new_matrix(a, b, c, d) -> MatchingMatrix:
    return MatchingMatrix(a, b, c, d)


def population(m: MatchingMatrix) -> Fraction:
    """|M| = a + b + c + d."""
    return m.a + m.b + m.c + m.d


def random_rate(m: MatchingMatrix) -> Fraction:
    """Expected like-type mass under random matching with M's marginals.

    Returns 0 (rather than raising) for the two degenerate patterns
    a=b=d=0 and a=c=d=0.
    """
    a, b, c, d = m
    return ((a + b) * (a + c) + (d + b) * (d + c)) / (a + b + c + d)


def in_alr_domain(m: MatchingMatrix) -> bool:
    return random_rate(m) != 0


def in_trace_domain(m: MatchingMatrix) -> bool:
    return m.b * m.c != 0 or m.a * m.d != 0


def is_positive(m: MatchingMatrix) -> bool:
    return m.a > 0 and m.b > 0 and m.c > 0 and m.d > 0


def scale(m: MatchingMatrix, lam) -> MatchingMatrix:
    lam = to_fraction(lam)
    if lam <= 0:
        raise NonPositiveScalar(f"scale factor must be > 0, got {lam}")
    return MatchingMatrix(lam * m.a, lam * m.b, lam * m.c, lam * m.d)


def side_swap(m: MatchingMatrix) -> MatchingMatrix:
    """Exchange the roles of men and women: (a, b, c, d) -> (a, c, b, d)."""
    return MatchingMatrix(m.a, m.c, m.b, m.d)


def type_swap(m: MatchingMatrix) -> MatchingMatrix:
    """Relabel H <-> L on both sides: (a, b, c, d) -> (d, c, b, a)."""
    return MatchingMatrix(m.d, m.c, m.b, m.a)


def add(m: MatchingMatrix, other: MatchingMatrix) -> MatchingMatrix:
    return MatchingMatrix(m.a + other.a, m.b + other.b, m.c + other.c, m.d + other.d)


def marginals(m: MatchingMatrix) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(men H, men L, women H, women L) = (a+b, c+d, a+c, b+d)."""
    return (m.a + m.b, m.c + m.d, m.a + m.c, m.b + m.d)


def perturb(m: MatchingMatrix, eps) -> MatchingMatrix:
    """Shift mass ``eps`` onto the diagonal while keeping all marginals fixed.

    The result must stay strictly positive, i.e. -min(a, d) < eps < min(b, c).
    """
    eps = to_fraction(eps)
    entries = (m.a + eps, m.b - eps, m.c - eps, m.d + eps)
    if min(entries) <= 0:
        raise PerturbationOutOfRange(
            f"eps={eps} leaves a non-positive entry in {m}; "
            f"need {-min(m.a, m.d)} < eps < {min(m.b, m.c)}"
        )
    return MatchingMatrix(*entries)


BASIS: tuple[MatchingMatrix, ...] = (
    MatchingMatrix(2, 1, 1, 1),
    MatchingMatrix(1, 2, 1, 1),
    MatchingMatrix(1, 1, 2, 1),
    MatchingMatrix(1, 1, 1, 2),
)


@dataclass(frozen=True)
class DecompositionCoefficients:
    """Coordinates of a matrix in the basis ``BASIS`` plus their positive/negative parts."""

    s: tuple[Fraction, Fraction, Fraction, Fraction]
    t: tuple[Fraction, Fraction, Fraction, Fraction]
    t_prime: tuple[Fraction, Fraction, Fraction, Fraction]

    def reconstruct(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Sum s_i * BASIS[i] entrywise. Returned as a tuple since it may be any vector."""
        out = [Fraction(0)] * 4
        for si, bm in zip(self.s, BASIS):
            for j, v in enumerate(bm):
                out[j] += si * v
        return tuple(out)


def basis_decompose(m: MatchingMatrix) -> DecompositionCoefficients:
    fifth = population(m) / 5
    s = tuple(v - fifth for v in m)
    t = tuple(max(-si, Fraction(0)) for si in s)
    t_prime = tuple(max(si, Fraction(0)) for si in s)
    return DecompositionCoefficients(s, t, t_prime)
