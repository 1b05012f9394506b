"""Axioms as pointwise checks on concrete witness matrices.

Each ``check_*`` function evaluates one instance of an axiom and returns an
:class:`AxiomReport` holding the witnesses and both sides of the tested
relation, so the verdict can be re-derived from the report alone. Checks
whose preconditions fail (a witness outside the index's domain, or a
non-positive matrix where the axiom only speaks about positive ones) come
back as ``SKIPPED`` rather than pass or fail.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import InvalidWitness
from .indices import IndexDefinition
from .matrix import (
    MatchingMatrix,
    add,
    is_positive,
    perturb,
    population,
    random_rate,
    scale,
    side_swap,
    to_fraction,
    type_swap,
)

CONTINUITY_THRESHOLD = Fraction(1, 10**6)
CONTINUITY_DEPTH = 20


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-out-of-domain"


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    index: str
    witnesses: tuple[MatchingMatrix, ...]
    lhs: Fraction | None
    rhs: Fraction | None
    verdict: Verdict
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL


def _skip(axiom, index, witnesses, **params) -> AxiomReport:
    return AxiomReport(axiom, index.name, tuple(witnesses), None, None, Verdict.SKIPPED, params)


def _report(axiom, index, witnesses, lhs, rhs, ok, **params) -> AxiomReport:
    verdict = Verdict.PASS if ok else Verdict.FAIL
    return AxiomReport(axiom, index.name, tuple(witnesses), lhs, rhs, verdict, params)


def check_scale_invariance(index: IndexDefinition, m: MatchingMatrix, lam) -> AxiomReport:
    """lhs = I(lam*M), rhs = I(M)."""
    lam = to_fraction(lam)
    scaled = scale(m, lam)
    if not (index.contains(m) and index.contains(scaled)):
        return _skip("scale_invariance", index, (m, scaled), lam=lam)
    lhs, rhs = index(scaled), index(m)
    return _report("scale_invariance", index, (m, scaled), lhs, rhs, lhs == rhs, lam=lam)


def _swap_check(axiom, swap, index, m) -> AxiomReport:
    swapped = swap(m)
    if not (index.contains(m) and index.contains(swapped)):
        return _skip(axiom, index, (m, swapped))
    lhs, rhs = index(swapped), index(m)
    return _report(axiom, index, (m, swapped), lhs, rhs, lhs == rhs)


def check_side_invariance(index: IndexDefinition, m: MatchingMatrix) -> AxiomReport:
    return _swap_check("side_invariance", side_swap, index, m)


def check_type_invariance(index: IndexDefinition, m: MatchingMatrix) -> AxiomReport:
    return _swap_check("type_invariance", type_swap, index, m)


def check_marginal_monotonicity(index: IndexDefinition, m: MatchingMatrix, eps) -> AxiomReport:
    """lhs = I(M_eps), rhs = I(M) where M_eps = perturb(M, eps).

    Passes iff the strict order of lhs and rhs follows the sign of eps in
    both directions: I(M_eps) > I(M) iff eps > 0, and I(M) > I(M_eps) iff eps < 0.
    Raises PerturbationOutOfRange if M_eps would not be positive.
    """
    eps = to_fraction(eps)
    if eps == 0:
        raise ValueError("eps must be nonzero")
    if not is_positive(m):
        return _skip("marginal_monotonicity", index, (m,), eps=eps)
    moved = perturb(m, eps)
    if not (index.contains(m) and index.contains(moved)):
        return _skip("marginal_monotonicity", index, (m, moved), eps=eps)
    lhs, rhs = index(moved), index(m)
    ok = (lhs > rhs) == (eps > 0) and (rhs > lhs) == (eps < 0)
    return _report("marginal_monotonicity", index, (m, moved), lhs, rhs, ok, eps=eps)


def _pair_precondition(index, m, m2) -> bool:
    total = add(m, m2)
    return (
        is_positive(m)
        and is_positive(m2)
        and index.contains(m)
        and index.contains(m2)
        and index.contains(total)
    )


def check_random_decomposability(
    index: IndexDefinition, m: MatchingMatrix, m2: MatchingMatrix
) -> AxiomReport:
    """lhs = I(M+M'), rhs = [r(M) I(M) + r(M') I(M')] / r(M+M')."""
    total = add(m, m2)
    if not _pair_precondition(index, m, m2):
        return _skip("random_decomposability", index, (m, m2, total))
    lhs = index(total)
    rhs = (random_rate(m) * index(m) + random_rate(m2) * index(m2)) / random_rate(total)
    return _report("random_decomposability", index, (m, m2, total), lhs, rhs, lhs == rhs)


def check_population_decomposability(
    index: IndexDefinition, m: MatchingMatrix, m2: MatchingMatrix
) -> AxiomReport:
    """lhs = I(M+M'), rhs = [|M| I(M) + |M'| I(M')] / (|M| + |M'|)."""
    total = add(m, m2)
    if not _pair_precondition(index, m, m2):
        return _skip("population_decomposability", index, (m, m2, total))
    lhs = index(total)
    rhs = (population(m) * index(m) + population(m2) * index(m2)) / population(total)
    return _report("population_decomposability", index, (m, m2, total), lhs, rhs, lhs == rhs)


def check_maximum_homogamy(
    index: IndexDefinition, m: MatchingMatrix, m_hom: MatchingMatrix
) -> AxiomReport:
    """lhs = I(M_hom), rhs = I(M); passes iff lhs >= rhs."""
    if not (m_hom.a * m_hom.d > 0 and m_hom.b * m_hom.c == 0):
        raise InvalidWitness(f"homogamy witness needs ad > 0 and bc = 0, got {m_hom}")
    if not (index.contains(m) and index.contains(m_hom)):
        return _skip("maximum_homogamy", index, (m, m_hom))
    lhs, rhs = index(m_hom), index(m)
    return _report("maximum_homogamy", index, (m, m_hom), lhs, rhs, lhs >= rhs)


def check_maximum_heterogamy(
    index: IndexDefinition, m: MatchingMatrix, m_het: MatchingMatrix
) -> AxiomReport:
    """lhs = I(M), rhs = I(M_het); passes iff lhs >= rhs."""
    if not (m_het.b > 0 and m_het.c > 0 and m_het.a == 0 and m_het.d == 0):
        raise InvalidWitness(f"heterogamy witness needs b, c > 0 and a = d = 0, got {m_het}")
    if not (index.contains(m) and index.contains(m_het)):
        return _skip("maximum_heterogamy", index, (m, m_het))
    lhs, rhs = index(m), index(m_het)
    return _report("maximum_heterogamy", index, (m, m_het), lhs, rhs, lhs >= rhs)


def check_continuity(
    index: IndexDefinition,
    m_limit: MatchingMatrix,
    direction: MatchingMatrix,
    depth: int = CONTINUITY_DEPTH,
    threshold: Fraction = CONTINUITY_THRESHOLD,
) -> AxiomReport:
    """Approach ``m_limit`` along M^k = m_limit + 2^-k * direction, k = 1..depth.

    This is a semi-decision: it passes iff the gaps |I(M^k) - I(m_limit)|
    never increase over the second half of the sequence and the last gap is
    below ``threshold``. lhs is the last gap, rhs the threshold; the last
    few gaps are kept in ``params["tail"]``.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if not is_positive(direction):
        raise ValueError(f"direction must be positive, got {direction}")
    seq = [add(m_limit, scale(direction, Fraction(1, 2**k))) for k in range(1, depth + 1)]
    if not index.contains(m_limit) or not all(index.contains(mk) for mk in seq):
        return _skip("continuity", index, (m_limit, direction), depth=depth)
    limit_value = index(m_limit)
    gaps = [abs(index(mk) - limit_value) for mk in seq]
    tail = gaps[depth // 2:]
    settling = all(later <= earlier for earlier, later in zip(tail, tail[1:]))
    ok = settling and gaps[-1] < threshold
    return _report(
        "continuity",
        index,
        (m_limit, direction),
        gaps[-1],
        threshold,
        ok,
        depth=depth,
        tail=tuple(gaps[-5:]),
    )
