"""Randomized axiom suites, counterexample search and linear-parameter recovery.

Randomness comes from numpy ``SeedSequence`` streams keyed by
``(seed, stream, chunk)``. Work is split into fixed-size chunks, each with its
own derived stream, so a run gives the same report no matter how many
worker processes share the chunks.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import axioms as ax
from .errors import UnknownAxiom
from .indices import (
    ALR,
    ALR_MOD,
    TRACE,
    TRACE_MOD,
    IndexDefinition,
    LinearFamilyParams,
    tilde_transform,
)
from .matrix import BASIS, MatchingMatrix, is_positive, population, scale

CHUNK_SIZE = 250
DEFAULT_BUDGET = 10_000


# --------------------------------------------------------------------------
# sampling
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SampleConfig:
    """Where and how many random witnesses to draw.

    Entries are p/q with 1 <= p <= entry_max * denominator_max and
    1 <= q <= denominator_max. With ``positivity="allow-boundary"`` each
    entry is independently zeroed with probability 1/4 (never all four).
    """

    seed: int = 0
    count: int = 1000
    entry_max: int = 100
    denominator_max: int = 10
    positivity: str = "required"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.count < 1 or self.entry_max < 1 or self.denominator_max < 1:
            raise ValueError("count, entry_max and denominator_max must be positive")
        if self.positivity not in ("required", "allow-boundary"):
            raise ValueError(f"positivity must be 'required' or 'allow-boundary', got {self.positivity!r}")


def make_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def sample_rational(rng: np.random.Generator, config: SampleConfig) -> Fraction:
    p = int(rng.integers(1, config.entry_max * config.denominator_max + 1))
    q = int(rng.integers(1, config.denominator_max + 1))
    return Fraction(p, q)


def sample_matrix(rng: np.random.Generator, config: SampleConfig) -> MatchingMatrix:
    if config.positivity == "required":
        return MatchingMatrix(*(sample_rational(rng, config) for _ in range(4)))
    while True:
        entries = [
            Fraction(0) if rng.random() < 0.25 else sample_rational(rng, config)
            for _ in range(4)
        ]
        if any(entries):
            return MatchingMatrix(*entries)


def sample_positive(rng: np.random.Generator, config: SampleConfig) -> MatchingMatrix:
    return MatchingMatrix(*(sample_rational(rng, config) for _ in range(4)))


def sample_boundary(
    rng: np.random.Generator, config: SampleConfig, index: IndexDefinition, tries: int = 100
) -> MatchingMatrix | None:
    """A matrix with at least one zero entry inside ``index``'s domain, or None."""
    boundary = SampleConfig(
        config.seed, config.count, config.entry_max, config.denominator_max, "allow-boundary"
    )
    for _ in range(tries):
        m = sample_matrix(rng, boundary)
        if not is_positive(m) and index.contains(m):
            return m
    return None


def epsilon_grid(m: MatchingMatrix) -> list[Fraction]:
    """32 admissible perturbations for ``perturb(m, eps)``: 16 below zero, 16 above."""
    lo, hi = min(m.a, m.d), min(m.b, m.c)
    return [-lo * j / 17 for j in range(16, 0, -1)] + [hi * j / 17 for j in range(1, 17)]


# --------------------------------------------------------------------------
# axiom suites
# --------------------------------------------------------------------------


def _w_scale(index, rng, config):
    m = sample_matrix(rng, config)
    lam = Fraction(int(rng.integers(1, config.entry_max + 1)), int(rng.integers(1, config.denominator_max + 1)))
    return ax.check_scale_invariance(index, m, lam)


def _w_side(index, rng, config):
    return ax.check_side_invariance(index, sample_matrix(rng, config))


def _w_type(index, rng, config):
    return ax.check_type_invariance(index, sample_matrix(rng, config))


def _w_marginal(index, rng, config):
    m = sample_matrix(rng, config)
    if not is_positive(m):
        return ax.check_marginal_monotonicity(index, m, 1)  # reports SKIPPED
    grid = epsilon_grid(m)
    return ax.check_marginal_monotonicity(index, m, grid[int(rng.integers(len(grid)))])


def _w_random_decomp(index, rng, config):
    return ax.check_random_decomposability(index, sample_matrix(rng, config), sample_matrix(rng, config))


def _w_population_decomp(index, rng, config):
    return ax.check_population_decomposability(index, sample_matrix(rng, config), sample_matrix(rng, config))


def _w_homogamy(index, rng, config):
    m = sample_matrix(rng, config)
    a, d = sample_rational(rng, config), sample_rational(rng, config)
    b, c = sample_rational(rng, config), sample_rational(rng, config)
    pattern = int(rng.integers(3))
    if pattern == 0:
        b = c = Fraction(0)
    elif pattern == 1:
        b = Fraction(0)
    else:
        c = Fraction(0)
    return ax.check_maximum_homogamy(index, m, MatchingMatrix(a, b, c, d))


def _w_heterogamy(index, rng, config):
    m = sample_matrix(rng, config)
    het = MatchingMatrix(0, sample_rational(rng, config), sample_rational(rng, config), 0)
    return ax.check_maximum_heterogamy(index, m, het)


def boundary_sequence(rng, config, index) -> tuple[MatchingMatrix, MatchingMatrix] | None:
    """A boundary limit point in ``index``'s domain and a unit-mass positive direction."""
    limit = sample_boundary(rng, config, index)
    if limit is None:
        return None
    direction = sample_positive(rng, config)
    return limit, scale(direction, 1 / population(direction))


def _w_continuity(index, rng, config):
    drawn = boundary_sequence(rng, config, index)
    if drawn is None:
        return ax.AxiomReport("continuity", index.name, (), None, None, ax.Verdict.SKIPPED)
    return ax.check_continuity(index, *drawn)


# Order is part of the seeding contract: an axiom's stream id is its position.
AXIOMS: dict[str, Callable[..., ax.AxiomReport]] = {
    "scale_invariance": _w_scale,
    "side_invariance": _w_side,
    "type_invariance": _w_type,
    "marginal_monotonicity": _w_marginal,
    "random_decomposability": _w_random_decomp,
    "population_decomposability": _w_population_decomp,
    "maximum_homogamy": _w_homogamy,
    "maximum_heterogamy": _w_heterogamy,
    "continuity": _w_continuity,
}

INVARIANCES = ("scale_invariance", "side_invariance", "type_invariance")
RATIO_AXIOMS = INVARIANCES + ("marginal_monotonicity", "random_decomposability")
RATIO_AXIOMS_STRICT = RATIO_AXIOMS + ("maximum_heterogamy", "continuity")
TRACE_AXIOMS = INVARIANCES + (
    "marginal_monotonicity",
    "maximum_homogamy",
    "population_decomposability",
)
AXIOM_LISTS = {
    "likelihood-ratio": RATIO_AXIOMS,
    "likelihood-ratio-strict": RATIO_AXIOMS_STRICT,
    "trace": TRACE_AXIOMS,
}


def resolve_axioms(spec: str | Iterable[str]) -> tuple[str, ...]:
    """Accept a list name from AXIOM_LISTS, a comma-separated string, or an iterable."""
    if isinstance(spec, str):
        if spec in AXIOM_LISTS:
            return AXIOM_LISTS[spec]
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    names = tuple(spec)
    for name in names:
        if name not in AXIOMS:
            raise UnknownAxiom(
                f"unknown axiom {name!r}; known: {', '.join(AXIOMS)}; lists: {', '.join(AXIOM_LISTS)}"
            )
    return names


@dataclass
class AxiomTally:
    axiom: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: ax.AxiomReport | None = None

    def record(self, report: ax.AxiomReport) -> None:
        if report.verdict is ax.Verdict.PASS:
            self.passed += 1
        elif report.verdict is ax.Verdict.FAIL:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = report
        else:
            self.skipped += 1

    def merge(self, other: AxiomTally) -> AxiomTally:
        """Combine with a tally of later witnesses (first failure stays ours if set)."""
        return AxiomTally(
            self.axiom,
            self.passed + other.passed,
            self.failed + other.failed,
            self.skipped + other.skipped,
            self.first_failure or other.first_failure,
        )


@dataclass
class SuiteReport:
    index: str
    config: SampleConfig
    tallies: dict[str, AxiomTally]

    @property
    def ok(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())

    @property
    def failing_axioms(self) -> list[str]:
        return [name for name, t in self.tallies.items() if t.failed]


def _run_chunk(index: IndexDefinition, axiom: str, config: SampleConfig, chunk: int, n: int) -> AxiomTally:
    rng = make_rng(config.seed, list(AXIOMS).index(axiom), chunk)
    witness = AXIOMS[axiom]
    tally = AxiomTally(axiom)
    for _ in range(n):
        tally.record(witness(index, rng, config))
    return tally


def _chunks(count: int) -> list[tuple[int, int]]:
    return [(c, min(CHUNK_SIZE, count - c * CHUNK_SIZE)) for c in range(-(-count // CHUNK_SIZE))]


def axiom_suite(
    index: IndexDefinition,
    axiom_list: str | Iterable[str],
    config: SampleConfig,
    workers: int = 1,
) -> SuiteReport:
    """Check every listed axiom on ``config.count`` fresh witnesses each.

    ``workers > 1`` spreads chunks over processes; the index must then be
    picklable (the built-in and linear-family indices are).
    """
    names = resolve_axioms(axiom_list)
    jobs = [(axiom, c, n) for axiom in names for c, n in _chunks(config.count)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            futures = [pool.submit(_run_chunk, index, a, config, c, n) for a, c, n in jobs]
            parts = [f.result() for f in futures]
    else:
        parts = [_run_chunk(index, a, config, c, n) for a, c, n in jobs]
    tallies = {name: AxiomTally(name) for name in names}
    for (axiom, _, _), part in zip(jobs, parts):
        tallies[axiom] = tallies[axiom].merge(part)
    return SuiteReport(index.name, config, tallies)


# --------------------------------------------------------------------------
# counterexamples
# --------------------------------------------------------------------------


class CertificateKind(str, enum.Enum):
    ORDINAL = "ordinal-disagreement"
    AXIOM = "axiom-violation"
    AFFINE = "affine-impossibility"


@dataclass(frozen=True)
class CounterexampleCertificate:
    """Evidence that two indices (or an index and an axiom) part ways.

    ``values`` layout by kind:
      ordinal-disagreement  (I1(M), I1(M'), I2(M), I2(M'))
      axiom-violation       (I(M), I(M'))  with M the reference, M' the extremal witness
      affine-impossibility  (I1(M), I2(M))
    """

    kind: CertificateKind
    indices: tuple[str, ...]
    m: MatchingMatrix
    m_prime: MatchingMatrix | None
    values: tuple[Fraction, ...]
    details: dict[str, Any] = field(default_factory=dict)

    def validate(self, first: IndexDefinition, second: IndexDefinition | None = None) -> bool:
        """Re-evaluate the indices and confirm the certificate's claim."""
        if self.kind is CertificateKind.ORDINAL:
            vals = (first(self.m), first(self.m_prime), second(self.m), second(self.m_prime))
            d1, d2 = vals[0] - vals[1], vals[2] - vals[3]
            return vals == self.values and d1 != 0 and d2 != 0 and (d1 > 0) != (d2 > 0)
        if self.kind is CertificateKind.AXIOM:
            vals = (first(self.m), first(self.m_prime))
            return vals == self.values and vals[0] < vals[1]
        vals = (first(self.m), second(self.m))
        return vals == self.values and vals[0] != vals[1]


def ordinal_certificate(
    first: IndexDefinition, second: IndexDefinition, m: MatchingMatrix, m_prime: MatchingMatrix
) -> CounterexampleCertificate | None:
    """Certificate if the two indices rank (m, m_prime) strictly oppositely, else None."""
    vals = (first(m), first(m_prime), second(m), second(m_prime))
    d1, d2 = vals[0] - vals[1], vals[2] - vals[3]
    if d1 == 0 or d2 == 0 or (d1 > 0) == (d2 > 0):
        return None
    return CounterexampleCertificate(
        CertificateKind.ORDINAL, (first.name, second.name), m, m_prime, vals
    )


_ORDINAL_STREAM = 100
_RECOVERY_STREAM = 101


def find_ordinal_disagreement(
    first: IndexDefinition,
    second: IndexDefinition,
    budget: int = DEFAULT_BUDGET,
    config: SampleConfig | None = None,
) -> CounterexampleCertificate | None:
    """Rejection-sample up to ``budget`` matrix pairs for a strict ranking reversal."""
    if budget < 1:
        raise ValueError("budget must be positive")
    config = config or SampleConfig()
    rng = make_rng(config.seed, _ORDINAL_STREAM)
    for attempt in range(1, budget + 1):
        m, m_prime = sample_matrix(rng, config), sample_matrix(rng, config)
        if not all(ix.contains(x) for ix in (first, second) for x in (m, m_prime)):
            continue
        cert = ordinal_certificate(first, second, m, m_prime)
        if cert is not None:
            return CounterexampleCertificate(
                cert.kind, cert.indices, m, m_prime, cert.values, {"attempt": attempt, "seed": config.seed}
            )
    return None


def find_heterogamy_violation(
    index: IndexDefinition,
    budget: int = DEFAULT_BUDGET,
    reference: MatchingMatrix = MatchingMatrix(1, 1, 1, 1),
) -> CounterexampleCertificate | None:
    """Walk (0, 1, k, 0) and (0, k, 1, 0) for k = 2, 3, ... looking for I(het) > I(reference)."""
    if budget < 1:
        raise ValueError("budget must be positive")
    ref_value = index(reference)
    for step in range(1, budget + 1):
        k = step + 1
        for het in (MatchingMatrix(0, 1, k, 0), MatchingMatrix(0, k, 1, 0)):
            if not index.contains(het):
                continue
            value = index(het)
            if value > ref_value:
                return CounterexampleCertificate(
                    CertificateKind.AXIOM,
                    (index.name,),
                    reference,
                    het,
                    (ref_value, value),
                    {"axiom": "maximum_heterogamy", "step": step},
                )
    return None


def _affine_fit(pairs: Sequence[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
    """Solve other = alpha * base + beta through two (base, other) points."""
    (x1, y1), (x2, y2) = pairs
    alpha = (y1 - y2) / (x1 - x2)
    return alpha, y2 - alpha * x2


def check_affine_impossibility(
    base: IndexDefinition = TRACE,
    other: IndexDefinition = TRACE_MOD,
    homogamy: MatchingMatrix = MatchingMatrix(1, 0, 0, 1),
    heterogamy: MatchingMatrix = MatchingMatrix(0, 1, 1, 0),
    probe: MatchingMatrix = MatchingMatrix(1, 1, 1, 1),
) -> CounterexampleCertificate:
    """Show ``other`` is no positive affine image of ``base``.

    Any transform other = alpha * base + beta is pinned down by the pure
    homogamy and pure heterogamy matrices; the probe matrix then breaks it.
    """
    case_hom = (base(homogamy), other(homogamy))
    case_het = (base(heterogamy), other(heterogamy))
    alpha, beta = _affine_fit([case_hom, case_het])
    predicted = alpha * base(probe) + beta
    actual = other(probe)
    return CounterexampleCertificate(
        CertificateKind.AFFINE,
        (base.name, other.name),
        probe,
        None,
        (base(probe), actual),
        {
            "homogamy_case": {"matrix": homogamy, "values": case_hom, "alpha_plus_beta": alpha * case_hom[0] + beta},
            "heterogamy_case": {"matrix": heterogamy, "values": case_het, "beta": beta},
            "alpha": alpha,
            "beta": beta,
            "predicted": predicted,
            "actual": actual,
            "contradiction": predicted != actual,
        },
    )


# --------------------------------------------------------------------------
# linear-family recovery
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RecoveredParams:
    """Weights read off r(M)*I(M) at the four basis matrices.

    ``alpha_prime .. delta_prime`` are r*I at BASIS[0..3]; ``alpha, beta`` are
    the diagonal/off-diagonal weights implied by them; ``max_residual`` is the
    largest |r(M) I(M) - (alpha(a+d) + beta(b+c))| seen on sampled positive M.
    """

    index: str
    alpha_prime: Fraction
    beta_prime: Fraction
    gamma_prime: Fraction
    delta_prime: Fraction
    alpha: Fraction
    beta: Fraction
    max_residual: Fraction
    symmetry_ok: bool
    samples: int
    residual_witness: MatchingMatrix | None = None

    @property
    def in_family(self) -> bool:
        return self.max_residual == 0 and self.symmetry_ok and self.alpha > self.beta >= 0

    @property
    def params(self) -> LinearFamilyParams:
        return LinearFamilyParams(self.alpha, self.beta)


def recover_linear_params(index: IndexDefinition, config: SampleConfig | None = None) -> RecoveredParams:
    config = config or SampleConfig()
    ap, bp, gp, dp = (tilde_transform(index, m) for m in BASIS)
    alpha = (3 * ap - 2 * bp) / 5
    beta = (-2 * ap + 3 * bp) / 5
    rng = make_rng(config.seed, _RECOVERY_STREAM)
    worst, witness, used = Fraction(0), None, 0
    for _ in range(config.count):
        m = sample_positive(rng, config)
        if not index.contains(m):
            continue
        used += 1
        residual = abs(tilde_transform(index, m) - (alpha * (m.a + m.d) + beta * (m.b + m.c)))
        if residual > worst:
            worst, witness = residual, m
    return RecoveredParams(
        index.name, ap, bp, gp, dp, alpha, beta, worst, bp == gp and ap == dp, used, witness
    )


@dataclass
class CharacterizationReport:
    """Axiom suite and parameter recovery side by side.

    Verdicts: ``consistent-with-theorem`` when the index satisfies the axioms
    and is a member of the linear family; ``inconsistent`` when it does
    neither (an axiom fails and it is outside the family); and
    ``theorem-violation`` if exactly one holds, which the characterization
    says cannot happen.
    """

    index: str
    suite: SuiteReport
    recovered: RecoveredParams

    @property
    def biconditional_holds(self) -> bool:
        return self.suite.ok == self.recovered.in_family

    @property
    def verdict(self) -> str:
        if not self.biconditional_holds:
            return "theorem-violation"
        return "consistent-with-theorem" if self.suite.ok else "inconsistent"


def verify_linear_characterization(
    index: IndexDefinition, config: SampleConfig | None = None, workers: int = 1
) -> CharacterizationReport:
    config = config or SampleConfig()
    suite = axiom_suite(index, RATIO_AXIOMS, config, workers=workers)
    return CharacterizationReport(index.name, suite, recover_linear_params(index, config))


# --------------------------------------------------------------------------
# reproduction
# --------------------------------------------------------------------------


@dataclass
class ReproReport:
    certificates: dict[str, CounterexampleCertificate]
    certificate_valid: dict[str, bool]
    suites: dict[str, SuiteReport]
    recoveries: dict[str, RecoveredParams]

    @property
    def ok(self) -> bool:
        return (
            all(self.certificate_valid.values())
            and all(s.ok for s in self.suites.values())
            and all(r.in_family for r in self.recoveries.values())
        )


def reproduce_counterexamples(config: SampleConfig | None = None, workers: int = 1) -> ReproReport:
    """Both published counterexamples, the axiom suites behind them, and ALR/ALR' recovery."""
    config = config or SampleConfig(count=200)
    ordinal = ordinal_certificate(ALR, ALR_MOD, MatchingMatrix(1, 1, 1, 1), MatchingMatrix(1, 1, 3, 2))
    affine = check_affine_impossibility()
    certificates = {"ordinal_alr_vs_alr_mod": ordinal, "affine_trace_vs_trace_mod": affine}
    valid = {
        "ordinal_alr_vs_alr_mod": ordinal is not None and ordinal.validate(ALR, ALR_MOD),
        "affine_trace_vs_trace_mod": affine.validate(TRACE, TRACE_MOD) and affine.details["contradiction"],
    }
    suites = {
        "alr": axiom_suite(ALR, RATIO_AXIOMS, config, workers),
        "alr_mod": axiom_suite(ALR_MOD, RATIO_AXIOMS, config, workers),
        "trace": axiom_suite(TRACE, TRACE_AXIOMS, config, workers),
        "trace_mod": axiom_suite(TRACE_MOD, TRACE_AXIOMS, config, workers),
    }
    recoveries = {ix.name: recover_linear_params(ix, config) for ix in (ALR, ALR_MOD)}
    return ReproReport(certificates, valid, suites, recoveries)
