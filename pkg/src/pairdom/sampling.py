"""Random tree samplers with reproducible per-draw streams.

``sample_conditioned`` draws a critical branching-process tree conditioned
on its exact size: offspring counts are drawn i.i.d. and rejected until
they sum to n-1, then the cycle lemma picks the unique cyclic rotation
that is a valid preorder outdegree sequence.  Because the conditional law
of a tree depends only on its outdegree multiset, the rotation step makes
the draw exact.  ``sample_cayley_uniform`` decodes a uniform Pruefer
sequence with a uniform root, an independent route to uniform rooted
labelled trees.  ``sample_unconditioned`` runs the plain branching process
with a size cap, used for root-label frequency checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RejectionTimeout
from .offspring import OffspringDistribution
from .trees import RootedTree, _build, from_lukasiewicz, from_pruefer

__all__ = [
    "SeededRng",
    "sample_conditioned",
    "sample_cayley_uniform",
    "sample_unconditioned",
]


@dataclass(frozen=True)
class SeededRng:
    """Reproducible RNG handle: same (seed, stream_id) -> same draws."""

    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.PCG64(ss))


def _default_rounds(n: int) -> int:
    # acceptance probability decays like 1/sqrt(n); leave a wide margin
    return max(10_000, 400 * int(math.isqrt(max(n, 1))))


def sample_conditioned(
    dist: OffspringDistribution,
    n: int,
    rng: SeededRng,
    max_rounds: int | None = None,
) -> RootedTree:
    """Draw a size-n tree of the conditioned branching process.

    Raises RejectionTimeout when no offspring vector sums to n-1 within
    ``max_rounds`` attempts (a sign the size is unreachable or extremely
    unlikely under the law).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if max_rounds is None:
        max_rounds = _default_rounds(n)
    gen = rng.generator()
    # acceptance rate is ~(2*pi*var*n)^-1/2 (local CLT); batch a bit under
    # one expected wait so little randomness is wasted.  The draw sequence,
    # hence the result, does not depend on the batch size.
    est = 0.42 * math.sqrt(2.0 * math.pi * dist.variance * n)
    batch = int(max(8, min(max(1, 1_048_576 // max(n, 1)), round(est))))
    used = 0
    while used < max_rounds:
        take = min(batch, max_rounds - used)
        draws = dist.sample(gen, (take, n))
        sums = draws.sum(axis=1)
        hits = np.flatnonzero(sums == n - 1)
        if hits.size:
            row = draws[hits[0]]
            # cycle lemma: rotate to start right after the first minimum of
            # the walk sum(deg_i - 1); exactly one rotation is valid
            walk = np.cumsum(row - 1)
            j = int(np.argmin(walk))
            rotated = np.concatenate([row[j + 1:], row[: j + 1]])
            return from_lukasiewicz(rotated)
        used += take
    raise RejectionTimeout(
        f"no offspring vector of length {n} summed to {n - 1} in {max_rounds} rounds"
    )


def sample_cayley_uniform(n: int, rng: SeededRng) -> RootedTree:
    """Uniform rooted labelled tree via a random Pruefer sequence and root."""
    if n < 1:
        raise ValueError("n must be positive")
    gen = rng.generator()
    if n == 1:
        return from_lukasiewicz([0])
    root = int(gen.integers(1, n + 1))
    seq = gen.integers(1, n + 1, size=n - 2)
    return from_pruefer(seq, root)


def sample_unconditioned(
    dist: OffspringDistribution,
    rng: SeededRng,
    size_cap: int = 1_000_000,
    max_resamples: int = 1_000,
) -> tuple[RootedTree, int]:
    """One unconditioned branching-process tree, resampling past ``size_cap``.

    Returns ``(tree, resamples)`` where ``resamples`` counts discarded
    cap-hitting attempts (their rate bounds the truncation bias).  The tree
    is built level by level, so ranks come out BFS-monotone.
    """
    gen = rng.generator()
    resamples = 0
    while resamples <= max_resamples:
        parts = [np.zeros(1, np.int64)]  # root's parent slot
        n = 1
        level_lo = 1
        level_hi = 1
        capped = False
        while level_lo <= level_hi:
            degs = dist.sample(gen, level_hi - level_lo + 1)
            total = int(degs.sum())
            if n + total > size_cap:
                capped = True
                break
            if total:
                parts.append(np.repeat(np.arange(level_lo, level_hi + 1), degs))
            level_lo = n + 1
            n += total
            level_hi = n
        if capped:
            resamples += 1
            continue
        parent = np.concatenate([np.zeros(1, np.int64)] + parts)
        return _build(parent), resamples
    raise RejectionTimeout(f"size cap {size_cap} hit {resamples} times in a row")
