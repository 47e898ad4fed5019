# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Flux pairs (f, F) driving the separable construction.

A flux pair is a coefficient f > 0 together with its antiderivative F. The equation
f1(u_x) u_xx + 2B u_xy + f2(u_y) u_yy = 0 has the entire solutions built from the
inverses of F1 and F2 whenever both F are bijective with f > 0.

"""

from enum import Enum
from logging import getLogger

import numpy as np

from sepsol.exceptions import ConfigError
from sepsol.numerics.inversion import cardano_inverse

# A logger for this file
logger = getLogger(__name__)

FULL_LINE = (-np.inf, np.inf)


class Positivity(Enum):
    """Sign behaviour of the coefficient f."""

    STRICTLY_POSITIVE = "strictly_positive"
    NONNEGATIVE_VANISHING = "nonnegative_vanishing"


class FluxPair(object):
    """Coefficient function f with antiderivative F."""

    def __init__(
        self,
        name,
        f,
        F,
        range_of_F=FULL_LINE,
        positivity=Positivity.STRICTLY_POSITIVE,
        analytic_inverse=None,
        analytic_H=None,
        description="",
    ):
        """Initialize FluxPair.

        Args:
            name (str): Identifier, used on the command line.
            f (callable): Coefficient function, vectorized.
            F (callable): Antiderivative of f, vectorized and increasing.
            range_of_F (tuple): Open interval (lo, hi) covered by F.
            positivity (Positivity): Whether f vanishes somewhere.
            analytic_inverse (callable): Closed-form inverse of F on its range.
            analytic_H (callable): Closed-form antiderivative of the inverse, H(0) = 0.
            description (str): Human readable formula.

        """
        lo, hi = range_of_F
        assert lo < hi, f"Empty range ({lo}, {hi}) for '{name}'."
        self.name = name
        self.f = f
        self.F = F
        self.range_of_F = (float(lo), float(hi))
        self.positivity = Positivity(positivity)
        self.analytic_inverse = analytic_inverse
        self.analytic_H = analytic_H
        self.description = description

    @property
    def is_surjective(self):
        """Whether F covers the whole real line."""
        return self.range_of_F == FULL_LINE

    def in_range(self, x):
        """Whether x lies in the open range of F."""
        lo, hi = self.range_of_F
        return bool(lo < x < hi)

    def __repr__(self):
        return f"FluxPair(name={self.name!r}, range_of_F={self.range_of_F}, positivity={self.positivity.value})"


def _one(t):
    return np.zeros_like(t, dtype=float) + 1.0


def _same(t):
    return np.asarray(t, dtype=float) * 1.0


def _half_square(x):
    x = np.asarray(x, dtype=float)
    return 0.5 * x * x


def _cubic_f(t):
    t = np.asarray(t, dtype=float)
    return 1.0 + t * t


def _cubic_F(t):
    t = np.asarray(t, dtype=float)
    return t + t * t * t / 3.0


def _cubic_H(x):
    # integration by parts: H(x) = x t - G(t), G' = F, t = F^-1(x)
    x = np.asarray(x, dtype=float)
    t = cardano_inverse(x)
    return x * t - 0.5 * t * t - t**4 / 12.0


def _arsinh_f(t):
    t = np.asarray(t, dtype=float)
    return 1.0 / np.sqrt(1.0 + t * t)


def _arsinh_H(x):
    # cosh(x) - 1 without cancellation at 0
    return 2.0 * np.sinh(0.5 * np.asarray(x, dtype=float)) ** 2


def _arctan_f(t):
    t = np.asarray(t, dtype=float)
    return 1.0 / (1.0 + t * t)


def _arctan_H(x):
    return -np.log(np.cos(np.asarray(x, dtype=float)))


def _power_f(t):
    t = np.asarray(t, dtype=float)
    return t * t


def _power_F(t):
    t = np.asarray(t, dtype=float)
    return t * t * t / 3.0


def _power_inverse(x):
    return np.cbrt(3.0 * np.asarray(x, dtype=float))


def _power_H(x):
    x = np.asarray(x, dtype=float)
    return 0.75 * x * np.cbrt(3.0 * x)


_CATALOG = (
    FluxPair(
        name="identity",
        f=_one,
        F=_same,
        analytic_inverse=_same,
        analytic_H=_half_square,
        description="f(t) = 1, F(t) = t",
    ),
    FluxPair(
        name="cubic",
        f=_cubic_f,
        F=_cubic_F,
        analytic_inverse=cardano_inverse,
        analytic_H=_cubic_H,
        description="f(t) = 1 + t^2, F(t) = t + t^3/3",
    ),
    FluxPair(
        name="arsinh",
        f=_arsinh_f,
        F=np.arcsinh,
        analytic_inverse=np.sinh,
        analytic_H=_arsinh_H,
        description="f(t) = 1/sqrt(1 + t^2), F(t) = arsinh(t)",
    ),
    FluxPair(
        name="arctan",
        f=_arctan_f,
        F=np.arctan,
        range_of_F=(-np.pi / 2, np.pi / 2),
        analytic_inverse=np.tan,
        analytic_H=_arctan_H,
        description="f(t) = 1/(1 + t^2), F(t) = arctan(t)",
    ),
    FluxPair(
        name="power",
        f=_power_f,
        F=_power_F,
        positivity=Positivity.NONNEGATIVE_VANISHING,
        analytic_inverse=_power_inverse,
        analytic_H=_power_H,
        description="f(t) = t^2, F(t) = t^3/3",
    ),
)


def builtin_catalog():
    """Return the built-in flux pairs.

    Returns:
        list: identity, cubic, arsinh, arctan and power pairs.

    """
    return list(_CATALOG)


def get_flux(name):
    """Look up a built-in flux pair by name."""
    for pair in _CATALOG:
        if pair.name == name:
            return pair
    names = [pair.name for pair in _CATALOG]
    raise ConfigError(f"Unknown flux '{name}', choose from {names}.")


def eval_f(pair, t):
    """Evaluate the coefficient f(t)."""
    return float(pair.f(float(t)))


def eval_F(pair, t):
    """Evaluate the antiderivative F(t)."""
    return float(pair.F(float(t)))


def check_flux(pair, samples):
    """Check a flux pair by sampling.

    Args:
        pair (FluxPair): Pair to check, built-in or user supplied.
        samples (ndarray): Sample points t.

    Returns:
        dict: Maximum |FD(F) - f|, monotonicity of F, maximum inverse round-trip error
            (None without analytic inverse or without samples inside the range), minimum
            of f and whether the positivity flag agrees with that minimum.

    """
    t = np.sort(np.asarray(samples, dtype=float))
    step = np.cbrt(np.finfo(float).eps) * np.maximum(1.0, np.abs(t))
    step = (t + step) - t
    fd = (pair.F(t + step) - pair.F(t - step)) / (2.0 * step)
    f = pair.f(t)
    values = pair.F(t)
    report = {
        "fd_error": float(np.max(np.abs(fd - f))),
        "monotone": bool(np.all(np.diff(values) >= 0)),
        "roundtrip_error": None,
        "min_f": float(np.min(f)),
    }
    if pair.analytic_inverse is not None:
        inside = values[(values > pair.range_of_F[0]) & (values < pair.range_of_F[1])]
        if len(inside) > 0:
            back = pair.F(pair.analytic_inverse(inside))
            report["roundtrip_error"] = float(
                np.max(np.abs(back - inside) / np.maximum(1.0, np.abs(inside)))
            )
    strictly = pair.positivity is Positivity.STRICTLY_POSITIVE
    report["positivity_consistent"] = strictly == (report["min_f"] > 0)
    logger.debug(f"Checked flux '{pair.name}': {report}")
    return report
