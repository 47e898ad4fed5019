# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Inversion of monotone flux antiderivatives.

References:
    - Numerical Recipes, rtsafe (Newton-Raphson safeguarded by bisection)

"""

from logging import getLogger

import numpy as np

from sepsol.exceptions import NoConvergence, OutOfRange

# A logger for this file
logger = getLogger(__name__)

# Maximum number of geometric bracket expansions.
MAX_EXPANSIONS = 200

CBRT2 = np.cbrt(2.0)


class InversionConfig(object):
    """Tolerances of the safeguarded Newton inversion."""

    def __init__(self, rel_tol=1e-13, max_iter=200, bracket_growth=2.0):
        """Initialize InversionConfig.

        Args:
            rel_tol (float): Residual tolerance relative to max(1, |x|).
            max_iter (int): Maximum number of Newton/bisection iterations.
            bracket_growth (float): Geometric expansion factor of the bracket.

        """
        assert rel_tol > 0, f"rel_tol must be positive ({rel_tol})."
        assert max_iter >= 1, f"max_iter must be at least 1 ({max_iter})."
        assert bracket_growth > 1, f"bracket_growth must exceed 1 ({bracket_growth})."
        self.rel_tol = float(rel_tol)
        self.max_iter = int(max_iter)
        self.bracket_growth = float(bracket_growth)

    def __repr__(self):
        return (
            f"InversionConfig(rel_tol={self.rel_tol}, max_iter={self.max_iter}, "
            f"bracket_growth={self.bracket_growth})"
        )


def _bracket(F, x, growth):
    """Expand [-1, 1] geometrically until F(lo) <= x <= F(hi)."""
    lo, hi = -1.0, 1.0
    expansions = 0
    while F(hi) < x:
        lo, hi = hi, hi * growth
        expansions += 1
        if expansions > MAX_EXPANSIONS:
            raise NoConvergence(f"Could not bracket F^-1({x}) from above.")
    while F(lo) > x:
        lo, hi = lo * growth, lo
        expansions += 1
        if expansions > MAX_EXPANSIONS:
            raise NoConvergence(f"Could not bracket F^-1({x}) from below.")
    logger.debug(f"Bracket for x={x}: [{lo}, {hi}] after {expansions} expansions.")
    return lo, hi


def invert_monotone(pair, x, config=None):
    """Solve F(t) = x for a flux pair.

    The analytic inverse is used when the pair provides one. Otherwise the root is
    bracketed and refined by Newton steps on F with derivative f, falling back to
    bisection whenever a step leaves the bracket or f(t) <= 0.

    Args:
        pair (FluxPair): Flux pair whose F is inverted.
        x (float): Target value, inside the open range of F.
        config (InversionConfig): Tolerances.

    Returns:
        float: t with |F(t) - x| <= rel_tol * max(1, |x|).

    """
    config = InversionConfig() if config is None else config
    x = float(x)
    if not pair.in_range(x):
        lo, hi = pair.range_of_F
        raise OutOfRange(f"{x} is outside the range ({lo}, {hi}) of F for '{pair.name}'.")
    if pair.analytic_inverse is not None:
        return float(pair.analytic_inverse(x))

    tol = config.rel_tol * max(1.0, abs(x))
    lo, hi = _bracket(pair.F, x, config.bracket_growth)
    t = 0.5 * (lo + hi)
    for _ in range(config.max_iter):
        residual = pair.F(t) - x
        if abs(residual) <= tol:
            return t
        if residual < 0:
            lo = t
        else:
            hi = t
        slope = pair.f(t)
        step = t - residual / slope if slope > 0 else np.nan
        if lo < step < hi:
            t = step
            continue
        # bisection
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # adjacent doubles, nothing left to refine
            return min((lo, hi), key=lambda s: abs(pair.F(s) - x))
        t = mid
    raise NoConvergence(
        f"Inversion of '{pair.name}' at x={x} did not converge in {config.max_iter} iterations."
    )


def invert_monotone_array(pair, xs, config=None):
    """Element-wise invert_monotone over an array."""
    xs = np.asarray(xs, dtype=float)
    if pair.analytic_inverse is not None:
        # the range is an interval, so checking the extremes is enough
        if xs.size and not (pair.in_range(xs.min()) and pair.in_range(xs.max())):
            raise OutOfRange(f"Values leave the range {pair.range_of_F} of F for '{pair.name}'.")
        return np.asarray(pair.analytic_inverse(xs), dtype=float)
    flat = [invert_monotone(pair, x, config) for x in xs.ravel()]
    return np.asarray(flat, dtype=float).reshape(xs.shape)


def cardano_roots(a):
    """Stabilized cube roots of the Cardano arguments for a >= 0.

    The arguments are sqrt(9a^2 + 4) +- 3a. Their product is 4, so the smaller one is
    computed as 4 / (sqrt(9a^2 + 4) + 3a) instead of by subtraction.

    Args:
        a (ndarray): Non-negative values.

    Returns:
        ndarray: sqrt(9a^2 + 4).
        ndarray: Cube root of the larger argument.
        ndarray: Cube root of the smaller argument.

    """
    s = np.hypot(3.0 * a, 2.0)
    big = s + 3.0 * a
    return s, np.cbrt(big), np.cbrt(4.0 / big)


def cardano_inverse(x):
    """Real root t of t + t^3 / 3 = x.

    Args:
        x (float or ndarray): Right-hand side.

    Returns:
        float or ndarray: The unique real root, odd in x.

    """
    x = np.asarray(x, dtype=float)
    _, big, small = cardano_roots(np.abs(x))
    t = np.copysign((big - small) / CBRT2, x)
    return float(t) if t.ndim == 0 else t
