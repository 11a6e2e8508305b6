"""Limiting constants of the paired domination number under critical laws.

The probabilities x_X that an unconditioned branching-process tree has
root label X (X in {B, F, R, P}) satisfy a fixed-point system driven by
the offspring generating function g:

    x_B = g(x_F)
    x_F = g(x_F + x_P) - g(x_F)
    x_R = g(x_B + x_F + x_P) - g(x_F + x_P)
    x_P = 1 - g(x_B + x_F + x_P)

The four right-hand sides always sum to 1, so the map preserves the
probability simplex; damped iteration from its center converges to the
unique solution.  The linear growth constant of gamma_pr is then
mu_pr = 2 * x_R.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergence
from .offspring import OffspringDistribution

__all__ = ["LimitConstants", "solve_system", "fixed_point_map", "evaluate_pgf"]


@dataclass(frozen=True)
class LimitConstants:
    """Fixed point (x_B, x_F, x_R, x_P), mu_pr = 2 x_R, and solve diagnostics."""

    x_b: float
    x_f: float
    x_r: float
    x_p: float
    mu_pr: float
    residual: float
    iterations: int

    def as_array(self) -> np.ndarray:
        return np.array([self.x_b, self.x_f, self.x_r, self.x_p])


def evaluate_pgf(dist: OffspringDistribution, x: float) -> float:
    """Generating function of the offspring law at x in [0, 1]."""
    return dist.pgf(x)


def fixed_point_map(dist: OffspringDistribution, x: np.ndarray) -> np.ndarray:
    """Apply the system's right-hand side to (x_B, x_F, x_R, x_P)."""
    xb, xf, _, xp = (float(v) for v in x)
    for v in (xb, xf, xp):
        if not 0.0 <= v <= 1.0 + 1e-9:
            raise DomainError(f"coordinate {v} outside [0, 1]")
    g_f = dist.pgf(min(xf, 1.0))
    g_fp = dist.pgf(min(xf + xp, 1.0))
    g_bfp = dist.pgf(min(xb + xf + xp, 1.0))
    return np.array([g_f, g_fp - g_f, g_bfp - g_fp, 1.0 - g_bfp])


def solve_system(
    dist: OffspringDistribution,
    tol: float = 1e-12,
    max_iter: int = 100_000,
    start: np.ndarray | None = None,
) -> LimitConstants:
    """Solve the root-label fixed point by damped iteration.

    Each step averages the current iterate with its image (new = old/2 +
    map(old)/2) starting from (1/4, 1/4, 1/4, 1/4); iteration stops once
    the sup-norm defect ``max|map(x) - x|`` is at most ``tol``.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    x = np.full(4, 0.25) if start is None else np.asarray(start, dtype=np.float64)
    residual = np.inf
    for it in range(max_iter + 1):
        fx = fixed_point_map(dist, x)
        residual = float(np.max(np.abs(fx - x)))
        if residual <= tol:
            return LimitConstants(
                x_b=float(x[0]),
                x_f=float(x[1]),
                x_r=float(x[2]),
                x_p=float(x[3]),
                mu_pr=2.0 * float(x[2]),
                residual=residual,
                iterations=it,
            )
        x = 0.5 * x + 0.5 * fx
    raise NoConvergence(f"residual {residual} above {tol} after {max_iter} iterations")
