"""Monte-Carlo experiments over random trees.

``run_simulation`` draws ``reps`` independent conditioned trees (one RNG
stream per repetition, stream id = repetition index), solves each with the
linear algorithm and aggregates gamma_pr.  Moments are derived from exact
integer power sums, so results are bit-identical for any worker count and
any work partition.  ``normality_diagnostics`` checks the standardized
sample against a standard normal (moment bounds plus a decile chi-square).
"""

from __future__ import annotations

import concurrent.futures
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.stats import chi2 as _chi2
from scipy.stats import norm as _norm

from .domination import gamma_pr_linear
from .errors import InsufficientReps
from .offspring import OffspringDistribution, get_distribution
from .sampling import SeededRng, sample_conditioned

__all__ = [
    "SimSummary",
    "NormalityReport",
    "run_simulation",
    "normality_diagnostics",
    "format_summary_kv",
    "write_histogram_csv",
    "write_summary_kv",
]


@dataclass(frozen=True)
class SimSummary:
    """Aggregates of gamma_pr over the sampled trees.

    ``histogram`` maps each observed gamma_pr value (an even integer) to
    its count.  ``mu_hat`` and ``sigma_hat`` rescale mean and standard
    deviation to per-vertex units.  Degenerate samples (zero variance)
    report 0.0 skewness and excess kurtosis.
    """

    model: str
    n: int
    reps: int
    seed: int
    mean_gamma: float
    var_gamma: float
    skewness: float
    excess_kurtosis: float
    histogram: dict[int, int]
    mu_hat: float
    sigma_hat: float


@dataclass(frozen=True)
class NormalityReport:
    """Moment and decile chi-square diagnostics against N(0, 1)."""

    skewness: float
    excess_kurtosis: float
    chi_square: float | None
    p_value: float | None
    degenerate: bool
    skewness_ok: bool
    kurtosis_ok: bool
    chi_square_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.skewness_ok and self.kurtosis_ok and self.chi_square_ok


def _gamma_of_rep(dist: OffspringDistribution, n: int, seed: int, rep: int) -> int:
    tree = sample_conditioned(dist, n, SeededRng(seed, rep))
    return gamma_pr_linear(tree).gamma_pr


def _chunk_worker(args) -> list[tuple[int, int]]:
    dist, n, seed, lo, hi = args
    return [(rep, _gamma_of_rep(dist, n, seed, rep)) for rep in range(lo, hi)]


def run_simulation(model, n: int, reps: int, seed: int, workers: int = 1) -> SimSummary:
    """Sample gamma_pr over ``reps`` conditioned trees of order ``n``.

    ``model`` is a built-in name or an OffspringDistribution.  The output
    is independent of ``workers``; repetition r always consumes RNG stream
    (seed, r).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if reps < 1:
        raise ValueError("reps must be positive")
    dist = get_distribution(model)
    gammas = np.empty(reps, np.int64)
    if workers <= 1:
        for rep in range(reps):
            gammas[rep] = _gamma_of_rep(dist, n, seed, rep)
    else:
        bounds = np.linspace(0, reps, 4 * workers + 1, dtype=int)
        chunks = [
            (dist, n, seed, int(lo), int(hi))
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_chunk_worker, chunks):
                for rep, g in part:
                    gammas[rep] = g
    return summarize(dist.name, n, reps, seed, gammas)


def summarize(model: str, n: int, reps: int, seed: int, gammas: np.ndarray) -> SimSummary:
    """Build a SimSummary from raw per-repetition gamma_pr values."""
    vals = [int(g) for g in gammas]
    r = len(vals)
    s1 = sum(vals)
    s2 = sum(v * v for v in vals)
    s3 = sum(v ** 3 for v in vals)
    s4 = sum(v ** 4 for v in vals)
    # exact central power sums: M_k = r^(k-1) * sum (v - mean)^k, all integer
    m2_num = r * s2 - s1 * s1
    m3_num = r * r * s3 - 3 * r * s1 * s2 + 2 * s1 ** 3
    m4_num = r ** 3 * s4 - 4 * r * r * s1 * s3 + 6 * r * s1 * s1 * s2 - 3 * s1 ** 4
    mean = s1 / r
    var = m2_num / (r * (r - 1)) if r > 1 else 0.0
    if m2_num > 0:
        m2 = m2_num / r**2
        skew = (m3_num / r**3) / m2**1.5
        exkurt = (m4_num / r**4) / m2**2 - 3.0
    else:
        skew = 0.0
        exkurt = 0.0
    hist = dict(sorted(Counter(vals).items()))
    return SimSummary(
        model=model,
        n=n,
        reps=r,
        seed=seed,
        mean_gamma=float(mean),
        var_gamma=float(var),
        skewness=float(skew),
        excess_kurtosis=float(exkurt),
        histogram=hist,
        mu_hat=float(mean / n),
        sigma_hat=float((var / n) ** 0.5),
    )


_DECILE_EDGES = None


def _decile_edges() -> np.ndarray:
    global _DECILE_EDGES
    if _DECILE_EDGES is None:
        _DECILE_EDGES = _norm.ppf(np.arange(1, 10) / 10.0)
    return _DECILE_EDGES


def normality_diagnostics(
    summary: SimSummary,
    skew_max: float = 0.15,
    exkurt_max: float = 0.3,
    p_min: float = 0.001,
) -> NormalityReport:
    """Compare the standardized gamma_pr sample with N(0, 1).

    Requires at least 500 repetitions.  A zero-variance sample is flagged
    degenerate and gets no chi-square.  The chi-square bins the
    standardized values into the ten standard-normal deciles (9 degrees of
    freedom).
    """
    if summary.reps < 500:
        raise InsufficientReps(f"need >= 500 reps, got {summary.reps}")
    if summary.var_gamma == 0.0:
        return NormalityReport(
            skewness=summary.skewness,
            excess_kurtosis=summary.excess_kurtosis,
            chi_square=None,
            p_value=None,
            degenerate=True,
            skewness_ok=False,
            kurtosis_ok=False,
            chi_square_ok=False,
        )
    values = np.repeat(
        np.fromiter(summary.histogram.keys(), dtype=np.float64),
        np.fromiter(summary.histogram.values(), dtype=np.int64),
    )
    z = (values - summary.mean_gamma) / summary.var_gamma**0.5
    observed = np.bincount(np.searchsorted(_decile_edges(), z), minlength=10)
    expected = summary.reps / 10.0
    stat = float(((observed - expected) ** 2 / expected).sum())
    p_value = float(_chi2.sf(stat, df=9))
    return NormalityReport(
        skewness=summary.skewness,
        excess_kurtosis=summary.excess_kurtosis,
        chi_square=stat,
        p_value=p_value,
        degenerate=False,
        skewness_ok=abs(summary.skewness) < skew_max,
        kurtosis_ok=abs(summary.excess_kurtosis) < exkurt_max,
        chi_square_ok=p_value > p_min,
    )


_SCALAR_FIELDS = (
    "model",
    "n",
    "reps",
    "seed",
    "mean_gamma",
    "var_gamma",
    "skewness",
    "excess_kurtosis",
    "mu_hat",
    "sigma_hat",
)


def format_summary_kv(summary: SimSummary) -> str:
    """Stable key=value text with every scalar field (no histogram)."""
    lines = [f"{name}={getattr(summary, name)}" for name in _SCALAR_FIELDS]
    return "\n".join(lines) + "\n"


def write_summary_kv(summary: SimSummary, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_summary_kv(summary))


def write_histogram_csv(summary: SimSummary, path) -> None:
    """Histogram CSV preceded by a '#'-commented summary header block."""
    with open(path, "w", encoding="ascii") as fh:
        for name in _SCALAR_FIELDS:
            fh.write(f"# {name}={getattr(summary, name)}\n")
        fh.write("gamma_pr,count\n")
        for value, count in summary.histogram.items():
            fh.write(f"{value},{count}\n")
