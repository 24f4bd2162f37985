"""Block and qubit error rates of bounded-distance decoding on an i.i.d. channel.

Each of the ``n`` qubits in a block fails independently with probability
``p``; a block is lost when more than ``t`` of them fail.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from qrm.errors import DomainError

RNG_ALGORITHM = "numpy.random.Philox(4x64-10); key=(seed, chunk); geometric gaps"
MC_CHUNK = 1 << 16

_EXACT_COEFF_MAX_N = 64
_LOG_FACTORIAL_N = 4096


def _check_probability(p: float, name: str = "p") -> None:
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise DomainError(f"{name} must lie in [0, 1], got {p}")


def _check_block(n: int, t: int) -> None:
    if n < 1:
        raise DomainError(f"block length must be positive, got {n}")
    if not 0 <= t < n:
        raise DomainError(f"need 0 <= t < n, got t={t}, n={n}")


@functools.lru_cache(maxsize=1)
def _log_factorials() -> np.ndarray:
    return np.array([math.lgamma(i + 1) for i in range(_LOG_FACTORIAL_N + 1)])


def log_binomial(n: int, j: int) -> float:
    if n <= _EXACT_COEFF_MAX_N:
        return math.log(math.comb(n, j))
    if n <= _LOG_FACTORIAL_N:
        lf = _log_factorials()
        return float(lf[n] - lf[j] - lf[n - j])
    return math.lgamma(n + 1) - math.lgamma(j + 1) - math.lgamma(n - j + 1)


def block_error_bound(n: int, t: int, p: float) -> float:
    """Probability that more than ``t`` of ``n`` independent qubits fail.

    Sums ``C(n, j) p^j (1-p)^(n-j)`` for ``j > t``.  Terms are formed in the
    log domain, rescaled by the largest one and accumulated with
    :func:`math.fsum`, which keeps the relative error near machine precision
    even for tails far below 1e-100.
    """
    _check_block(n, t)
    _check_probability(p)
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0
    log_p, log_q = math.log(p), math.log1p(-p)
    logs = [log_binomial(n, j) + j * log_p + (n - j) * log_q for j in range(t + 1, n + 1)]
    peak = max(logs)
    total = math.fsum(math.exp(x - peak) for x in logs)
    return min(1.0, total * math.exp(peak))


def block_error_exact(n: int, t: int, p: float | Fraction) -> Fraction:
    """Exact rational tail, via one minus the head ``j <= t``.

    ``p`` is taken at its exact binary value when given as a float.
    """
    _check_block(n, t)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise DomainError(f"p must lie in [0, 1], got {p}")
    q = 1 - p
    return 1 - sum(math.comb(n, j) * p**j * q ** (n - j) for j in range(t + 1))


def qubit_error_rate(pe: float, n: int) -> float:
    """Per-qubit rate ``1 - (1 - pe)^(1/n)``, computed as ``-expm1(log1p(-pe) / n)``."""
    _check_probability(pe, "pe")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if pe == 1.0:
        return 1.0
    return -math.expm1(math.log1p(-pe) / n)


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    stderr: float
    trials: int
    seed: int
    failures: int
    algorithm: str = RNG_ALGORITHM


def _chunk_error_counts(n: int, p: float, trials: int, seed: int, chunk: int) -> np.ndarray:
    """Number of failed qubits in each of ``trials`` blocks.

    The blocks are laid end to end as one Bernoulli(p) stream of length
    ``trials * n``; failure positions are generated from geometric gaps,
    which is the same process as drawing every qubit separately.
    """
    rng = np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), chunk]))
    length = trials * n
    if p == 1.0:
        return np.full(trials, n, dtype=np.int64)
    counts = np.zeros(trials, dtype=np.int64)
    position = -1
    batch = max(1024, int(length * p * 1.1) + 64)
    while True:
        gaps = rng.geometric(p, size=batch)
        positions = position + np.cumsum(gaps)
        inside = positions[positions < length]
        counts += np.bincount(inside // n, minlength=trials)
        if inside.size < positions.size:
            return counts
        position = int(positions[-1])


def monte_carlo_block_error(
    n: int, t: int, p: float, trials: int, seed: int = 0
) -> MonteCarloResult:
    """Simulate ``trials`` blocks and count those with more than ``t`` failures.

    Trials are split into fixed-size chunks, each drawing from its own Philox
    stream keyed by ``(seed, chunk index)``, so the result depends only on
    the arguments and not on how chunks are scheduled.
    """
    _check_block(n, t)
    _check_probability(p)
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    failures = 0
    if p > 0.0:
        for chunk, start in enumerate(range(0, trials, MC_CHUNK)):
            size = min(MC_CHUNK, trials - start)
            failures += int(np.count_nonzero(_chunk_error_counts(n, p, size, seed, chunk) > t))
    estimate = failures / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return MonteCarloResult(estimate, stderr, trials, seed, failures)


@dataclass(frozen=True)
class CodePoint:
    """A code as seen by the error model: length, correctable errors, label."""

    n: int
    t: int
    label: str

    def __post_init__(self) -> None:
        _check_block(self.n, self.t)

    @classmethod
    def from_distance(cls, n: int, d: int, k: int | None = None, label: str | None = None) -> CodePoint:
        if d < 1:
            raise DomainError(f"distance must be positive, got {d}")
        if label is None:
            label = f"[[{n},{'?' if k is None else k},{d}]]"
        return cls(n, (d - 1) // 2, label)

    @classmethod
    def repetition(cls, n: int, d: int) -> CodePoint:
        """One logical qubit in ``n`` physical qubits at distance ``d``."""
        return cls.from_distance(n, d, 1)

    @classmethod
    def reed_muller(cls, r: int, m: int) -> CodePoint:
        from qrm.css import css_from_rm

        code = css_from_rm(r, m)
        return cls.from_distance(code.n, code.d, code.k)


def comparison_codes() -> list[CodePoint]:
    """Codes plotted against each other in the reference figures."""
    return [
        CodePoint.repetition(5, 3),
        CodePoint.repetition(13, 5),
        CodePoint.repetition(29, 11),
        CodePoint.reed_muller(5, 10),
    ]


@dataclass(frozen=True)
class CurvePoint:
    p: float
    pe: float
    pq: float


def probability_grid(p_min: float, p_max: float, points: int, spacing: str = "log") -> np.ndarray:
    if not 0.0 <= p_min < p_max <= 0.5:
        raise DomainError(f"need 0 <= p_min < p_max <= 0.5, got [{p_min}, {p_max}]")
    if points < 2:
        raise DomainError("need at least two points")
    if spacing == "linear":
        return np.linspace(p_min, p_max, points)
    if spacing == "log":
        if p_min <= 0.0:
            raise DomainError("log spacing needs p_min > 0")
        return np.geomspace(p_min, p_max, points)
    raise DomainError(f"unknown spacing {spacing!r}")


def performance_curve(
    codes: Sequence[CodePoint],
    p_min: float,
    p_max: float,
    points: int,
    spacing: str = "log",
) -> dict[str, list[CurvePoint]]:
    """Block and qubit error rates of each code over a grid of channel probabilities."""
    grid = probability_grid(p_min, p_max, points, spacing)
    out: dict[str, list[CurvePoint]] = {}
    for code in codes:
        curve = []
        for p in grid.tolist():
            pe = block_error_bound(code.n, code.t, p)
            curve.append(CurvePoint(p, pe, qubit_error_rate(pe, code.n)))
        out[code.label] = curve
    return out


def curve_rows(curves: dict[str, list[CurvePoint]]) -> Iterable[tuple[str, str, str, str]]:
    """CSV-ready ``(label, p, pe, pq)`` rows with 10 significant digits."""
    for label, curve in curves.items():
        for pt in sorted(curve, key=lambda c: c.p):
            yield label, f"{pt.p:.9e}", f"{pt.pe:.9e}", f"{pt.pq:.9e}"
