"""Deterministic summation utilities for slowly convergent sector sums.

Two accelerators live here. `richardson_limit` does polynomial
extrapolation in 1/N and targets monotone tails with 1/N, 1/N^2, ...
expansions (the sphere sums). Alternating tails are outside its contract;
`euler_averaged_limit` handles those by iterated pairwise averaging of the
trailing partial sums (the cylinder sum).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class NonFiniteTermError(ValueError):
    """A term or partial sum is NaN or infinite."""


class InsufficientDataError(ValueError):
    """Too few partial sums for the requested extrapolation order."""


@dataclass(frozen=True)
class SeriesTailPlan:
    """Explicit-sum + tail-extrapolation parameters."""

    explicit_terms: int = 50
    richardson_order: int = 4
    tolerance: float = 1e-5

    def __post_init__(self):
        if self.richardson_order < 1:
            raise ValueError("richardson_order must be >= 1")
        if self.explicit_terms <= self.richardson_order:
            raise ValueError("explicit_terms must exceed richardson_order")
        if not (self.tolerance > 0.0):
            raise ValueError("tolerance must be positive")


def _validated(values) -> list[float]:
    out = []
    for v in values:
        v = float(v)
        if not math.isfinite(v):
            raise NonFiniteTermError(f"non-finite value {v}")
        out.append(v)
    return out


def compensated_sum(terms) -> float:
    """Neumaier-compensated sum in the given order; bit-reproducible."""
    total = 0.0
    comp = 0.0
    for term in _validated(terms):
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
    return total + comp


def compensated_partial_sums(terms) -> list[float]:
    """Running compensated partial sums, same accumulation as compensated_sum."""
    total = 0.0
    comp = 0.0
    out = []
    for term in _validated(terms):
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        out.append(total + comp)
    return out


def richardson_limit(partial_sums, plan: SeriesTailPlan) -> tuple[float, float]:
    """Extrapolate partial sums S_N to N -> infinity.

    Builds the Neville table for polynomial extrapolation in 1/N of degree
    `plan.richardson_order` through the last (order+1) partial sums, whose
    final entry is taken to sit at N = plan.explicit_terms. Returns
    (limit, error_estimate) with the estimate the difference of the last
    two table stages. Exact (to roundoff) whenever the tail of S_N is a
    polynomial in 1/N of degree <= order.
    """
    sums = _validated(partial_sums)
    order = plan.richardson_order
    if len(sums) < order + 1:
        raise InsufficientDataError(
            f"need at least {order + 1} partial sums, got {len(sums)}")
    window = sums[-(order + 1):]
    n_last = plan.explicit_terms
    h = [1.0 / (n_last - order + i) for i in range(order + 1)]
    table = [window]
    for k in range(1, order + 1):
        prev = table[-1]
        # increment form of the Neville step: exact on converged sequences
        cur = [
            prev[i + 1] + (prev[i + 1] - prev[i]) * h[i + k] / (h[i] - h[i + k])
            for i in range(len(prev) - 1)
        ]
        table.append(cur)
    limit = table[-1][0]
    estimate = abs(table[-1][0] - table[-2][-1])
    return limit, estimate


def euler_averaged_limit(partial_sums, window: int = 16) -> tuple[float, float]:
    """Limit of an alternating-tail sequence by iterated pairwise averaging.

    Each averaging pass damps the oscillating component of the trailing
    `window` partial sums by roughly one power of 1/N. Returns
    (limit, error_estimate) with the estimate the change over the final
    two passes.
    """
    sums = _validated(partial_sums)[-window:]
    if len(sums) < 3:
        raise InsufficientDataError("need at least 3 partial sums")
    ends = []
    cur = sums
    while len(cur) > 1:
        cur = [0.5 * (cur[i] + cur[i + 1]) for i in range(len(cur) - 1)]
        ends.append(cur[-1])
    return ends[-1], abs(ends[-1] - ends[-2])
