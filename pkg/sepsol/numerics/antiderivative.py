# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Antiderivatives of inverse fluxes.

H(x) is the integral of F^-1 from 0 to x. It is computed by globally adaptive
composite Gauss-Legendre quadrature, and in closed form for the cubic flux.

"""

import heapq
import itertools
import math
from functools import lru_cache
from logging import getLogger

import numpy as np
from scipy.special import roots_legendre

from sepsol.exceptions import OutOfRange, ToleranceNotMet
from sepsol.numerics.inversion import cardano_roots, invert_monotone_array

# A logger for this file
logger = getLogger(__name__)

CBRT1024 = np.cbrt(1024.0)


class QuadratureConfig(object):
    """Tolerances of the adaptive quadrature."""

    def __init__(self, abs_tol=1e-11, max_depth=40, order=10):
        """Initialize QuadratureConfig.

        Args:
            abs_tol (float): Absolute error target of the whole integral.
            max_depth (int): Maximum bisection depth of a single panel.
            order (int): Number of Gauss-Legendre nodes per panel.

        """
        assert abs_tol > 0, f"abs_tol must be positive ({abs_tol})."
        assert max_depth >= 1, f"max_depth must be at least 1 ({max_depth})."
        assert order >= 2, f"order must be at least 2 ({order})."
        self.abs_tol = float(abs_tol)
        self.max_depth = int(max_depth)
        self.order = int(order)

    def __repr__(self):
        return (
            f"QuadratureConfig(abs_tol={self.abs_tol}, max_depth={self.max_depth}, "
            f"order={self.order})"
        )


@lru_cache(maxsize=None)
def _legendre(order):
    nodes, weights = roots_legendre(order)
    return nodes, weights


def _panel(fn, a, b, order):
    nodes, weights = _legendre(order)
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(weights, fn(mid + half * nodes)))


def adaptive_gauss_legendre(fn, a, b, config=None):
    """Integrate fn over [a, b].

    Panels are kept in a heap ordered by their error estimate, the difference between
    the panel rule and the sum over its two halves. The worst panel is bisected until
    the summed estimate drops below the tolerance.

    Args:
        fn (callable): Vectorized integrand, ndarray -> ndarray.
        a (float): Lower limit.
        b (float): Upper limit.
        config (QuadratureConfig): Tolerances.

    Returns:
        float: Integral value.
        float: Error estimate.

    """
    config = QuadratureConfig() if config is None else config
    a, b = float(a), float(b)
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, error = adaptive_gauss_legendre(fn, b, a, config)
        return -value, error

    order = config.order
    counter = itertools.count()
    heap = []

    def push(lo, hi, coarse, depth):
        mid = 0.5 * (lo + hi)
        left = _panel(fn, lo, mid, order)
        right = _panel(fn, mid, hi, order)
        error = abs(left + right - coarse)
        heapq.heappush(heap, (-error, next(counter), lo, hi, depth, left, right))

    push(a, b, _panel(fn, a, b, order), 0)
    while True:
        error = math.fsum(-item[0] for item in heap)
        magnitude = math.fsum(abs(item[5]) + abs(item[6]) for item in heap)
        # roundoff floor, the estimate cannot drop below a few ulps of the value
        if error <= max(config.abs_tol, 64 * np.finfo(float).eps * magnitude):
            break
        _, _, lo, hi, depth, left, right = heapq.heappop(heap)
        if depth + 1 > config.max_depth:
            raise ToleranceNotMet(
                f"Quadrature over [{a}, {b}] hit depth {config.max_depth} "
                f"with error estimate {error:.3e}."
            )
        mid = 0.5 * (lo + hi)
        push(lo, mid, left, depth + 1)
        push(mid, hi, right, depth + 1)

    panels = sorted(heap, key=lambda item: item[2])
    value = math.fsum(item[5] + item[6] for item in panels)
    logger.debug(f"Integrated over [{a}, {b}] with {len(panels)} panels (error {error:.3e}).")
    return value, error


def integrate_inverse(pair, x, config=None, inversion=None):
    """Compute H(x), the integral of F^-1 from 0 to x.

    Args:
        pair (FluxPair): Flux pair.
        x (float): Upper limit; [0, x] must lie inside the range of F.
        config (QuadratureConfig): Quadrature tolerances.
        inversion (InversionConfig): Tolerances of the numerical inverse.

    Returns:
        float: H(x), with H(0) = 0.

    """
    x = float(x)
    if x == 0.0:
        return 0.0
    if not (pair.in_range(0.0) and pair.in_range(x)):
        lo, hi = pair.range_of_F
        raise OutOfRange(
            f"Interval [0, {x}] leaves the range ({lo}, {hi}) of F for '{pair.name}'."
        )
    value, _ = adaptive_gauss_legendre(
        lambda s: invert_monotone_array(pair, s, inversion), 0.0, x, config
    )
    return value


def closed_form_h(x):
    """Closed-form antiderivative of the Cardano inverse.

    Evaluates h(x) = -(1 / cbrt(1024)) * {9x (cbrt(s - 3x) - cbrt(s + 3x))
    + s (cbrt(s - 3x) + cbrt(s + 3x))} with s = sqrt(9x^2 + 4). h is even and
    h(0) = -1/2, so h(x) = H(x) - 1/2 for the cubic flux.

    Args:
        x (float or ndarray): Argument.

    Returns:
        float or ndarray: h(x).

    """
    x = np.asarray(x, dtype=float)
    a = np.abs(x)
    s, big, small = cardano_roots(a)
    # for x < 0 the two cube roots swap places together with the sign of 9x
    h = -(9.0 * a * (small - big) + s * (small + big)) / CBRT1024
    return float(h) if h.ndim == 0 else h
