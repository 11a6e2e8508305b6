"""Critical offspring laws and their generating functions.

Three built-in laws are provided: ``binary`` (Bin(2, 1/2)), ``plane``
(Geo(1/2), p_k = 2^(-k-1)) and ``labelled`` (Pois(1)).  Custom laws are
finite pmfs validated for criticality (mean 1), a positive chance of zero
offspring, aperiodicity (gcd of the support is 1) and finite positive
variance.  Built-ins keep closed-form generating functions and sample from
numpy's exact samplers; their stored pmfs are truncated at tail mass below
1e-15 (computed by recurrence, not factorials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidDistribution

__all__ = [
    "OffspringDistribution",
    "binary_offspring",
    "plane_offspring",
    "labelled_offspring",
    "custom_offspring",
    "get_distribution",
    "load_pmf_file",
    "BUILTIN_MODELS",
]

_TAIL = 1e-15
_TOL = 1e-12


@dataclass(frozen=True)
class OffspringDistribution:
    """A critical offspring law: pmf, generating function, moments."""

    name: str
    pmf: np.ndarray  # pmf[k] = Pr(offspring = k)
    mean: float
    variance: float

    def pgf(self, x: float) -> float:
        """Generating function sum_k p_k x^k on [0, 1].

        Built-ins use their closed forms; custom laws evaluate the stored
        (tail-truncated) series by Horner's rule.
        """
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"pgf argument {x} outside [0, 1]")
        if self.name == "binary":
            return (1.0 + x) ** 2 / 4.0
        if self.name == "plane":
            return 1.0 / (2.0 - x)
        if self.name == "labelled":
            return math.exp(x - 1.0)
        return self.pgf_series(x)

    def pgf_series(self, x: float) -> float:
        """Series evaluation of the pmf, usable to cross-check closed forms."""
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"pgf argument {x} outside [0, 1]")
        acc = 0.0
        for p in self.pmf[::-1]:
            acc = acc * x + p
        return float(acc)

    def sample(self, gen: np.random.Generator, size) -> np.ndarray:
        """Draw offspring counts; built-ins use exact numpy samplers."""
        if self.name == "binary":
            return gen.binomial(2, 0.5, size=size).astype(np.int64)
        if self.name == "plane":
            return gen.geometric(0.5, size=size).astype(np.int64) - 1
        if self.name == "labelled":
            return gen.poisson(1.0, size=size).astype(np.int64)
        return gen.choice(self.pmf.shape[0], size=size, p=self.pmf).astype(np.int64)

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.pmf > 0.0)

    @property
    def d0(self) -> int:
        """Smallest outdegree >= 2 with positive probability."""
        for k in self.support:
            if k >= 2:
                return int(k)
        raise InvalidDistribution("no outdegree >= 2 has positive probability")


def _validated(name: str, pmf: np.ndarray) -> OffspringDistribution:
    pmf = np.asarray(pmf, dtype=np.float64).ravel()
    if pmf.shape[0] == 0 or np.any(pmf < 0.0) or np.any(~np.isfinite(pmf)):
        raise InvalidDistribution("pmf entries must be finite and nonnegative")
    total = float(pmf.sum())
    if abs(total - 1.0) > _TOL:
        raise InvalidDistribution(f"pmf sums to {total!r}, not 1")
    if pmf[0] <= 0.0:
        raise InvalidDistribution("Pr(offspring = 0) must be positive")
    ks = np.arange(pmf.shape[0], dtype=np.float64)
    mean = float(ks @ pmf)
    if abs(mean - 1.0) > _TOL:
        raise InvalidDistribution(f"mean offspring is {mean!r}, law must be critical")
    variance = float((ks - mean) ** 2 @ pmf)
    if not variance > 0.0:
        raise InvalidDistribution("offspring variance must be positive")
    support = [int(k) for k in np.flatnonzero(pmf) if k >= 1]
    if math.gcd(*support) != 1:
        raise InvalidDistribution(f"gcd of positive support {support} must be 1")
    return OffspringDistribution(name=name, pmf=pmf, mean=mean, variance=variance)


def binary_offspring() -> OffspringDistribution:
    """Bin(2, 1/2): uniform plane binary trees."""
    return _validated("binary", np.array([0.25, 0.5, 0.25]))


def plane_offspring() -> OffspringDistribution:
    """Geo(1/2): uniform plane trees.  p_{k+1} = p_k / 2."""
    pk = 0.5
    pmf = []
    while pk > _TAIL:
        pmf.append(pk)
        pk /= 2.0
    return _validated("plane", np.array(pmf))


def labelled_offspring() -> OffspringDistribution:
    """Pois(1): uniform rooted labelled trees.  p_{k+1} = p_k / (k + 1)."""
    pk = math.exp(-1.0)
    pmf = []
    k = 0
    while pk > _TAIL * 1e-3 or k < 2:
        pmf.append(pk)
        k += 1
        pk /= k
    return _validated("labelled", np.array(pmf))


def custom_offspring(pmf) -> OffspringDistribution:
    """Validate a finite user-supplied pmf (index = offspring count)."""
    return _validated("custom", pmf)


BUILTIN_MODELS = ("binary", "plane", "labelled")


def get_distribution(model, pmf=None) -> OffspringDistribution:
    """Resolve a model name (or pass through a distribution instance)."""
    if isinstance(model, OffspringDistribution):
        return model
    if model == "binary":
        return binary_offspring()
    if model == "plane":
        return plane_offspring()
    if model == "labelled":
        return labelled_offspring()
    if model == "custom":
        if pmf is None:
            raise InvalidDistribution("custom model needs a pmf")
        return custom_offspring(pmf)
    raise InvalidDistribution(f"unknown model {model!r}")


def load_pmf_file(path) -> np.ndarray:
    """Read 'k p_k' lines into a dense pmf array (missing k get 0)."""
    entries = {}
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise InvalidDistribution(f"bad pmf line {line!r}")
            k = int(parts[0])
            if k < 0:
                raise InvalidDistribution(f"negative outdegree {k}")
            entries[k] = float(parts[1])
    if not entries:
        raise InvalidDistribution("empty pmf file")
    pmf = np.zeros(max(entries) + 1)
    for k, p in entries.items():
        pmf[k] = p
    return pmf
