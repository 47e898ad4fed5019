# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Quasilinear second order equations A u_xx + 2B u_xy + C u_yy = 0.

Coefficients are functions of the full derivative bundle, so B may depend on
x, y, u, the gradient and the Hessian. Throughout p = u_x and q = u_y.

"""

import math
from logging import getLogger

import numpy as np

from sepsol.exceptions import ConfigError
from sepsol.flux.catalog import get_flux

# A logger for this file
logger = getLogger(__name__)

# Absolute width of the degenerate band of the discriminant, scaled by max(1, |A C|).
DEGENERATE_TOL = 1e-14

ELLIPTIC = "elliptic"
DEGENERATE = "degenerate"
NON_ELLIPTIC = "non_elliptic"


class QuasilinearEquation(object):
    """Equation given by its coefficient triple (A, B, C)."""

    def __init__(self, name, coeff_A, coeff_B, coeff_C, ellipticity_bound=None, description=""):
        """Initialize QuasilinearEquation.

        Args:
            name (str): Identifier, used on the command line.
            coeff_A (callable): Bundle -> coefficient of u_xx.
            coeff_B (callable): Bundle -> B, the equation carries 2B u_xy.
            coeff_C (callable): Bundle -> coefficient of u_yy.
            ellipticity_bound (callable): Bundle -> bound on |B| for ellipticity.
                Defaults to sqrt(A C).
            description (str): Human readable formula.

        """
        self.name = name
        self.coeff_A = coeff_A
        self.coeff_B = coeff_B
        self.coeff_C = coeff_C
        self._bound = ellipticity_bound
        self.description = description

    def coefficients(self, b):
        return float(self.coeff_A(b)), float(self.coeff_B(b)), float(self.coeff_C(b))

    def ellipticity_bound(self, b):
        if self._bound is not None:
            return float(self._bound(b))
        with np.errstate(invalid="ignore"):
            return float(np.sqrt(max(float(self.coeff_A(b)) * float(self.coeff_C(b)), 0.0)))

    def __repr__(self):
        return f"QuasilinearEquation(name={self.name!r}, {self.description})"


def _zero(b):
    return 0.0


def _one(b):
    return 1.0


def _half(b):
    return 0.5


def residual(eq, b):
    """A u_xx + 2B u_xy + C u_yy with coefficients frozen at the bundle.

    Non-finite coefficients give a non-finite residual instead of an exception.

    """
    try:
        with np.errstate(all="ignore"):
            A, B, C = eq.coefficients(b)
            return float(A * b.uxx + 2.0 * B * b.uxy + C * b.uyy)
    except (ZeroDivisionError, OverflowError):
        return math.nan


def ellipticity_margin(eq, b):
    """Discriminant A C - B^2, positive for elliptic equations.

    Values inside the degenerate band of classify_margin are reported as exactly 0.

    """
    try:
        with np.errstate(all="ignore"):
            A, B, C = eq.coefficients(b)
            AC = A * C
            margin = float(AC - B * B)
            if math.isfinite(margin) and abs(margin) <= DEGENERATE_TOL * max(1.0, abs(AC)):
                return 0.0
            return margin
    except (ZeroDivisionError, OverflowError):
        return math.nan


def classify_margin(margin, scale=1.0):
    """Classify a discriminant value.

    Args:
        margin (float): A C - B^2.
        scale (float): Magnitude of A C, widens the degenerate band for large
            coefficients.

    Returns:
        str: "elliptic", "degenerate" or "non_elliptic".

    """
    band = DEGENERATE_TOL * max(1.0, abs(scale))
    if abs(margin) <= band:
        return DEGENERATE
    return ELLIPTIC if margin > 0 else NON_ELLIPTIC


def classify(eq, b):
    """Ellipticity class of the frozen-coefficient operator at a bundle."""
    A, _, C = eq.coefficients(b)
    return classify_margin(ellipticity_margin(eq, b), A * C)


class RandomBProvider(object):
    """Seeded smooth B of the whole bundle with |B| < bound pointwise."""

    def __init__(self, seed, bound_fn, shrink=0.99):
        """Initialize RandomBProvider.

        Args:
            seed (int): Seed of the coefficient draw.
            bound_fn (callable): Bundle -> non-negative bound on |B|.
            shrink (float): Fraction of the bound that B may reach, below 1.

        """
        assert 0 < shrink < 1, f"shrink must lie in (0, 1) ({shrink})."
        rng = np.random.default_rng(seed)
        self.seed = seed
        self.bound_fn = bound_fn
        self.shrink = shrink
        self.weights = rng.normal(size=8)
        self.phase = rng.uniform(0.0, 2.0 * np.pi)

    def __call__(self, b):
        z = np.dot(self.weights, (b.x, b.y, b.u, b.ux, b.uy, b.uxx, b.uxy, b.uyy)) + self.phase
        return float(self.shrink * self.bound_fn(b) * np.sin(z))


def random_B_provider(seed, bound_fn):
    """Deterministic pseudo-random B bounded by bound_fn; same seed, same function."""
    return RandomBProvider(seed, bound_fn)


def wrong_msa():
    """(1 + p^2) u_xx + 2 p q u_xy + (1 + q^2) u_yy = 0."""
    return QuasilinearEquation(
        "wrong_msa",
        lambda b: 1.0 + b.ux * b.ux,
        lambda b: b.ux * b.uy,
        lambda b: 1.0 + b.uy * b.uy,
        description="(1+p^2) u_xx + 2pq u_xy + (1+q^2) u_yy",
    )


def wrong_msa_flipped():
    """(1 + p^2) u_xx - 2 p q u_xy + (1 + q^2) u_yy = 0."""
    return QuasilinearEquation(
        "wrong_msa_flipped",
        lambda b: 1.0 + b.ux * b.ux,
        lambda b: -b.ux * b.uy,
        lambda b: 1.0 + b.uy * b.uy,
        description="(1+p^2) u_xx - 2pq u_xy + (1+q^2) u_yy",
    )


def minimal_surface():
    """(1 + q^2) u_xx - 2 p q u_xy + (1 + p^2) u_yy = 0."""
    return QuasilinearEquation(
        "minimal_surface",
        lambda b: 1.0 + b.uy * b.uy,
        lambda b: -b.ux * b.uy,
        lambda b: 1.0 + b.ux * b.ux,
        description="(1+q^2) u_xx - 2pq u_xy + (1+p^2) u_yy",
    )


def arctan_form():
    """u_xx / (1 + p^2) + u_yy / (1 + q^2) = 0."""
    return QuasilinearEquation(
        "arctan_form",
        lambda b: 1.0 / (1.0 + b.ux * b.ux),
        _zero,
        lambda b: 1.0 / (1.0 + b.uy * b.uy),
        description="u_xx/(1+p^2) + u_yy/(1+q^2)",
    )


def aronsson():
    """p^2 u_xx + 2 p q u_xy + q^2 u_yy = 0, degenerate elliptic."""
    return QuasilinearEquation(
        "aronsson",
        lambda b: b.ux * b.ux,
        lambda b: b.ux * b.uy,
        lambda b: b.uy * b.uy,
        description="p^2 u_xx + 2pq u_xy + q^2 u_yy",
    )


def example1():
    """u_xx + u_xy + u_yy = 0, stored with B = 1/2."""
    return QuasilinearEquation("example1", _one, _half, _one, description="u_xx + u_xy + u_yy")


def example3_sqrt():
    """u_xx / sqrt(1 + p^2) + u_yy / sqrt(1 + q^2) = 0."""
    return QuasilinearEquation(
        "example3_sqrt",
        lambda b: 1.0 / np.sqrt(1.0 + b.ux * b.ux),
        _zero,
        lambda b: 1.0 / np.sqrt(1.0 + b.uy * b.uy),
        description="u_xx/sqrt(1+p^2) + u_yy/sqrt(1+q^2)",
    )


def example3_sqrt_dual():
    """sqrt(1 + q^2) u_xx + u_xy + sqrt(1 + p^2) u_yy = 0."""
    return QuasilinearEquation(
        "example3_sqrt_dual",
        lambda b: np.sqrt(1.0 + b.uy * b.uy),
        _half,
        lambda b: np.sqrt(1.0 + b.ux * b.ux),
        description="sqrt(1+q^2) u_xx + u_xy + sqrt(1+p^2) u_yy",
    )


def _example3_bound(b):
    return np.sqrt(np.sqrt((1.0 + b.ux * b.ux) * (1.0 + b.uy * b.uy)))


def example3_sqrt_general(b_provider=None):
    """sqrt(1 + q^2) u_xx + 2B u_xy + sqrt(1 + p^2) u_yy = 0 with pluggable B."""
    return QuasilinearEquation(
        "example3_sqrt_general",
        lambda b: np.sqrt(1.0 + b.uy * b.uy),
        _zero if b_provider is None else b_provider,
        lambda b: np.sqrt(1.0 + b.ux * b.ux),
        ellipticity_bound=_example3_bound,
        description="sqrt(1+q^2) u_xx + 2B u_xy + sqrt(1+p^2) u_yy",
    )


def theorem_bound(pair1, pair2):
    """Bound sqrt(f1(p) f2(q)) on |B| for the general equation."""

    def bound(b):
        return np.sqrt(pair1.f(b.ux) * pair2.f(b.uy))

    return bound


def corollary_bound(pair1, pair2):
    """Bound 1 / sqrt(f1(p) f2(q)) on |B| for the dual equation."""

    def bound(b):
        return 1.0 / np.sqrt(pair1.f(b.ux) * pair2.f(b.uy))

    return bound


def theorem_form(pair1, pair2, b_provider=None):
    """f1(p) u_xx + 2B u_xy + f2(q) u_yy = 0 with pluggable B."""
    return QuasilinearEquation(
        "theorem_form",
        lambda b: pair1.f(b.ux),
        _zero if b_provider is None else b_provider,
        lambda b: pair2.f(b.uy),
        ellipticity_bound=theorem_bound(pair1, pair2),
        description=f"f1(p) u_xx + 2B u_xy + f2(q) u_yy [{pair1.name}, {pair2.name}]",
    )


def corollary_form(pair1, pair2, b_provider=None):
    """u_xx / f2(q) + 2B u_xy + u_yy / f1(p) = 0 with pluggable B."""
    return QuasilinearEquation(
        "corollary_form",
        lambda b: 1.0 / pair2.f(b.uy),
        _zero if b_provider is None else b_provider,
        lambda b: 1.0 / pair1.f(b.ux),
        ellipticity_bound=corollary_bound(pair1, pair2),
        description=f"u_xx/f2(q) + 2B u_xy + u_yy/f1(p) [{pair1.name}, {pair2.name}]",
    )


_FIXED = {
    "wrong_msa": wrong_msa,
    "wrong_msa_flipped": wrong_msa_flipped,
    "example1": example1,
    "example3_sqrt": example3_sqrt,
    "example3_sqrt_dual": example3_sqrt_dual,
    "minimal_surface": minimal_surface,
    "arctan_form": arctan_form,
    "aronsson": aronsson,
}
_PAIRED = {
    "theorem_form": theorem_form,
    "corollary_form": corollary_form,
}
EQUATION_NAMES = (
    "wrong_msa",
    "wrong_msa_flipped",
    "theorem_form",
    "corollary_form",
    "example1",
    "example3_sqrt",
    "example3_sqrt_dual",
    "example3_sqrt_general",
    "minimal_surface",
    "arctan_form",
    "aronsson",
)


def get_equation(name, pair1=None, pair2=None, seed=None):
    """Build a catalog equation by name.

    Args:
        name (str): Equation name.
        pair1 (FluxPair): x flux of theorem_form / corollary_form (default cubic).
        pair2 (FluxPair): y flux of theorem_form / corollary_form (default pair1).
        seed (int): If given, pluggable B is a seeded random provider bounded by the
            equation's ellipticity bound, otherwise B = 0.

    Returns:
        QuasilinearEquation: The equation.

    """
    if name in _FIXED:
        return _FIXED[name]()
    if name == "example3_sqrt_general":
        eq = example3_sqrt_general()
        if seed is None:
            return eq
        return example3_sqrt_general(random_B_provider(seed, eq.ellipticity_bound))
    if name in _PAIRED:
        pair1 = get_flux("cubic") if pair1 is None else pair1
        pair2 = pair1 if pair2 is None else pair2
        eq = _PAIRED[name](pair1, pair2)
        if seed is None:
            return eq
        return _PAIRED[name](pair1, pair2, random_B_provider(seed, eq.ellipticity_bound))
    raise ConfigError(f"Unknown equation '{name}', choose from {list(EQUATION_NAMES)}.")


def equation_catalog(pair1=None, pair2=None, seed=None):
    """Every equation of the catalog, pluggable ones built for (pair1, pair2)."""
    return [get_equation(name, pair1, pair2, seed) for name in EQUATION_NAMES]
