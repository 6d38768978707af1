"""Exact classical simulation of the order-finding circuit, plus factoring.

The pipeline mirrors the quantum circuit stage by stage but keeps exact
state descriptions throughout:

  1. prepare_uniform    - uniform superposition over the top register,
                          entangled with a**x mod n; stored per residue
                          as an arithmetic progression of x values.
  2. measure_bottom     - collapse onto one residue (drawn or forced).
  3. qft_distribution   - exact outcome probabilities via closed-form
                          geometric sums (never by summing the support).
  4. sample_outcome     - inverse-CDF draw from that distribution.
  5. extract_period     - continued-fraction recovery of the order.
  6. factor             - the full retry loop ending in gcd(a**(r/2) +- 1, n).

All randomness comes from one SplitMix64 stream per run, so every
result is a pure function of (inputs, seed).  Draw order within a
factoring attempt: new base a if needed, then residue, then outcome.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .arithmetic import (
    Convergent,
    convergents,
    factorize,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from .formatting import csv_text, sig15
from .rng import SplitMix64

MODE_POWER_OF_TWO = "powerOfTwo"
MODE_PAPER_ORDER = "paperOrder"

STATUS_SUCCESS = "success"
STATUS_TRIVIAL = "trivial"
STATUS_ODD_ORDER = "odd_order"
STATUS_MINUS_ONE = "minus_one"


def _as_stream(rng) -> SplitMix64:
    if isinstance(rng, SplitMix64):
        return rng
    if isinstance(rng, int):
        return SplitMix64(rng)
    raise TypeError("rng must be an int seed or a SplitMix64 stream")


@dataclass(frozen=True)
class RegisterConfig:
    """Top register of size m over the oracle pair (n, a)."""

    m: int
    n: int
    a: int
    mode: str

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("register size must be at least 2")
        if self.n < 2 or self.a < 2:
            raise ValueError("need n >= 2 and a >= 2")
        if math.gcd(self.n, self.a) != 1:
            raise ValueError(f"gcd({self.n}, {self.a}) != 1")
        if self.mode not in (MODE_POWER_OF_TWO, MODE_PAPER_ORDER):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == MODE_POWER_OF_TWO and self.m & (self.m - 1):
            raise ValueError("powerOfTwo register size must be a power of two")

    @classmethod
    def choose(
        cls,
        n: int,
        a: int,
        mode: str = MODE_POWER_OF_TWO,
        m_override: int | None = None,
    ) -> "RegisterConfig":
        """Standard sizing: smallest 2**q >= n**2, or a*n in paperOrder mode."""
        if mode == MODE_POWER_OF_TWO:
            if m_override is not None:
                m = m_override
            else:
                m = 1
                while m < n * n:
                    m *= 2
            return cls(m=m, n=n, a=a, mode=mode)
        if mode == MODE_PAPER_ORDER:
            if m_override is not None:
                raise ValueError("paperOrder mode fixes m = a*n; no override")
            return cls(m=a * n, n=n, a=a, mode=mode)
        raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class Progression:
    """x values offset, offset+step, ... (count of them)."""

    offset: int
    step: int
    count: int

    def values(self) -> np.ndarray:
        return self.offset + self.step * np.arange(self.count, dtype=np.int64)


@dataclass(frozen=True)
class EntangledState:
    """Top register uniform over [0, m), tagged by bottom residue.

    Amplitude 1/sqrt(m) on every x; progressions[w] lists the x with
    a**x mod n == w.  Progression counts add up to m exactly.
    """

    config: RegisterConfig
    order: int
    progressions: dict[int, Progression] = field(repr=False)

    def __post_init__(self):
        total = sum(p.count for p in self.progressions.values())
        if total != self.config.m:
            raise ValueError("progression counts must partition the register")

    def residues(self) -> list[int]:
        return sorted(self.progressions)


def prepare_uniform(config: RegisterConfig) -> EntangledState:
    """Uniform top register entangled with the modular-power oracle."""
    r = multiplicative_order(config.a, config.n)
    progressions: dict[int, Progression] = {}
    for i in range(min(r, config.m)):
        w = mod_pow(config.a, i, config.n)
        count = (config.m - i + r - 1) // r
        progressions[w] = Progression(offset=i, step=r, count=count)
    return EntangledState(config=config, order=r, progressions=progressions)


@dataclass(frozen=True)
class CollapsedState:
    """Post-measurement top register: uniform over one progression."""

    config: RegisterConfig
    residue: int
    progression: Progression

    @property
    def amplitude(self) -> float:
        return 1.0 / math.sqrt(self.progression.count)


def measure_bottom(
    state: EntangledState,
    forced_residue: int | None = None,
    rng: "SplitMix64 | int | None" = None,
) -> tuple[int, CollapsedState]:
    """Measure the bottom register; returns (residue, collapsed top register).

    forced_residue must be attained by the oracle or ValueError is
    raised; otherwise one residue is drawn with probability count/m
    (ascending residue order against a single uniform draw).
    """
    if forced_residue is not None:
        if forced_residue not in state.progressions:
            raise ValueError(
                f"residue {forced_residue} is not attained by the oracle"
            )
        w = forced_residue
    else:
        if rng is None:
            raise ValueError("need an rng (or a forced residue)")
        stream = _as_stream(rng)
        u = stream.uniform() * state.config.m
        acc = 0
        w = state.residues()[-1]
        for cand in state.residues():
            acc += state.progressions[cand].count
            if u < acc:
                w = cand
                break
    return w, CollapsedState(
        config=state.config, residue=w, progression=state.progressions[w]
    )


@dataclass(frozen=True)
class MeasurementDistribution:
    """Exact outcome probabilities for the transformed top register."""

    probabilities: np.ndarray = field(repr=False)
    residue: int
    config: RegisterConfig

    def __post_init__(self):
        p = self.probabilities
        if p.shape[0] != self.config.m:
            raise ValueError("distribution length must equal the register size")
        if float(p.min()) < 0.0:
            raise ValueError("negative probability")
        if abs(float(p.sum()) - 1.0) > 1e-12:
            raise ValueError("probabilities must sum to 1 within 1e-12")


def qft_distribution(collapsed: CollapsedState) -> MeasurementDistribution:
    """Fourier-transform the collapsed register and square the amplitudes.

    Outcome v has amplitude
    sum_x exp(2*pi*i*v*x/m) / sqrt(count*m) over the progression x's;
    the closed-form kernel evaluates the geometric sum, and the
    progression offset only rotates the phase, so the probabilities do
    not depend on which residue was measured.
    """
    prog = collapsed.progression
    m = collapsed.config.m
    probs = _kernels.progression_probabilities(prog.step, prog.count, m)
    return MeasurementDistribution(
        probabilities=probs, residue=collapsed.residue, config=collapsed.config
    )


def sample_outcome(
    dist: MeasurementDistribution, rng: "SplitMix64 | int"
) -> int:
    """Inverse-CDF draw of one outcome index."""
    stream = _as_stream(rng)
    u = stream.uniform()
    cdf = np.cumsum(dist.probabilities)
    v = int(np.searchsorted(cdf, u, side="right"))
    return min(v, dist.config.m - 1)


def extract_period(v: int, m: int, n: int, a: int) -> int | None:
    """Order recovery: smallest convergent denominator q <= n with a**q = 1.

    Scans the continued-fraction convergents of v/m in order
    (denominators are non-decreasing) and tests each candidate against
    the oracle base; returns None when no convergent works.
    """
    for conv in convergents(v, m):
        q = conv.denominator
        if q > n:
            break
        if mod_pow(a, q, n) == 1:
            return q
    return None


@dataclass(frozen=True)
class Sample:
    """One circuit run inside the factoring loop."""

    outcome: int
    convergents: tuple[Convergent, ...]
    candidate_r: int | None
    status: str


class FactoringError(RuntimeError):
    """All attempts exhausted; .report holds the partial run record."""

    def __init__(self, message: str, report: "FactorReport"):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class FactorReport:
    """Full record of one factoring run.

    a is the base of the final attempt (None when a pre-check decided
    the run and no circuit was simulated, in which case register_size
    is 0).  factors is None only on an exhausted run.
    """

    n: int
    a: int | None
    mode: str
    register_size: int
    order: int | None
    samples: tuple[Sample, ...]
    factors: tuple[int, int] | None
    attempts: int
    seed: int

    def to_json_dict(self) -> dict:
        """Keys in the documented stable order."""
        return {
            "n": self.n,
            "a": self.a,
            "mode": self.mode,
            "register_size": self.register_size,
            "order": self.order,
            "samples": [
                {
                    "outcome": s.outcome,
                    "candidate_r": s.candidate_r,
                    "status": s.status,
                }
                for s in self.samples
            ],
            "factors": list(self.factors) if self.factors else None,
            "attempts": self.attempts,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _precheck_report(n, a, mode, factors, seed) -> FactorReport:
    return FactorReport(
        n=n,
        a=a,
        mode=mode,
        register_size=0,
        order=None,
        samples=(),
        factors=factors,
        attempts=0,
        seed=seed,
    )


def factor(
    n: int,
    a: int | None = None,
    mode: str = MODE_POWER_OF_TWO,
    max_attempts: int = 16,
    seed: int = 0,
    m_override: int | None = None,
) -> FactorReport:
    """Factor composite n >= 4 through the simulated order-finding circuit.

    Pre-checks dispatch even n and odd prime powers without a circuit;
    prime n raises ValueError.  Otherwise up to max_attempts circuit
    runs are made: a trivial sample retries with the same base, while
    an odd order or a**(r/2) = -1 retries with a fresh coprime base
    (previously tried bases excluded).  Exhaustion raises
    FactoringError with the partial report attached.

    Given the same arguments and seed the report is identical run to
    run, including the sample list.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if is_prime(n):
        raise ValueError(f"{n} is prime; no nontrivial factors")
    if max_attempts < 1:
        raise ValueError("max_attempts must be positive")
    if a is not None:
        if a < 2:
            raise ValueError("base must be at least 2")
        g = math.gcd(a, n)
        if g > 1:
            # lucky base shares a factor; no circuit needed
            return _precheck_report(
                n, a, mode, tuple(sorted((g, n // g))), seed
            )
    if n % 2 == 0:
        return _precheck_report(n, a, mode, (2, n // 2), seed)
    fact = factorize(n)
    if len(fact.factors) == 1:
        p = fact.factors[0][0]
        return _precheck_report(n, a, mode, tuple(sorted((p, n // p))), seed)

    stream = SplitMix64(seed)
    tried: set[int] = set()
    current = a
    samples: list[Sample] = []
    last_a = a
    last_m = 0
    order = None

    for attempt in range(1, max_attempts + 1):
        if current is None:
            pool = [
                x
                for x in range(2, n - 1)
                if math.gcd(x, n) == 1 and x not in tried
            ]
            if not pool:
                break
            current = pool[int(stream.uniform() * len(pool))]
        tried.add(current)
        last_a = current

        config = RegisterConfig.choose(n, current, mode, m_override)
        last_m = config.m
        state = prepare_uniform(config)
        _, collapsed = measure_bottom(state, rng=stream)
        dist = qft_distribution(collapsed)
        v = sample_outcome(dist, stream)
        convs = tuple(convergents(v, config.m))
        r = extract_period(v, config.m, n, current)

        if r is None:
            samples.append(Sample(v, convs, None, STATUS_TRIVIAL))
            continue
        if r % 2 == 1:
            samples.append(Sample(v, convs, r, STATUS_ODD_ORDER))
            current = None
            continue
        y = mod_pow(current, r // 2, n)
        if y == n - 1:
            samples.append(Sample(v, convs, r, STATUS_MINUS_ONE))
            current = None
            continue
        g1 = math.gcd(y - 1, n)
        g2 = math.gcd(y + 1, n)
        nontrivial = [g for g in (g1, g2) if 1 < g < n]
        if not nontrivial:
            # a**(r/2) = 1 can slip through when r overshoots the order
            samples.append(Sample(v, convs, r, STATUS_TRIVIAL))
            continue
        samples.append(Sample(v, convs, r, STATUS_SUCCESS))
        order = r
        p = nontrivial[0]
        return FactorReport(
            n=n,
            a=current,
            mode=mode,
            register_size=config.m,
            order=order,
            samples=tuple(samples),
            factors=tuple(sorted((p, n // p))),
            attempts=attempt,
            seed=seed,
        )

    report = FactorReport(
        n=n,
        a=last_a,
        mode=mode,
        register_size=last_m,
        order=None,
        samples=tuple(samples),
        factors=None,
        attempts=len(samples),
        seed=seed,
    )
    raise FactoringError(f"no factor of {n} found in {len(samples)} attempts", report)


def write_distribution_csv(stream, dist: MeasurementDistribution) -> None:
    """Columns v, probability."""
    rows = [
        [str(v), sig15(float(p))] for v, p in enumerate(dist.probabilities)
    ]
    stream.write(csv_text(["v", "probability"], rows))
