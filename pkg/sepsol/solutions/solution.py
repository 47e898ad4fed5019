# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Separable entire solutions u(x, y) = X(x) + Y(y).

With u_xy = 0 the equation f1(u_x) u_xx + 2B u_xy + f2(u_y) u_yy = 0 splits into
f1(X') X'' = c and f2(Y') Y'' = -c. Integrating once gives F1(X'(x)) = c x and
F2(Y'(y)) = -c y, so

    u(x, y) = H1(c x) / c - H2(-c y) / c,    H_i(z) = int_0^z F_i^-1(s) ds,

with u_x = F1^-1(c x), u_y = F2^-1(-c y), u_xx = c / f1(u_x), u_yy = -c / f2(u_y).
For c = 0 the solution is affine.

"""

from enum import Enum
from functools import partial
from logging import getLogger

import numpy as np

from sepsol.exceptions import EmptyGrid, OutOfDomain, SingularPoint
from sepsol.flux.catalog import FULL_LINE, Positivity, get_flux
from sepsol.numerics.antiderivative import closed_form_h, integrate_inverse
from sepsol.numerics.inversion import invert_monotone
from sepsol.solutions.bundle import ANALYTIC, DerivativeBundle

# A logger for this file
logger = getLogger(__name__)

# Threshold on |u_xx| and |u_yy| below which a solution counts as affine.
AFFINE_TOL = 1e-12


class Kind(Enum):
    """How the solution values are evaluated."""

    GENERAL_QUADRATURE = "general_quadrature"
    CARDANO_CLOSED_FORM = "cardano_closed_form"
    QUADRATIC = "quadratic"
    COSH = "cosh"
    ARCTAN_RESTRICTED = "arctan_restricted"
    ARONSSON = "aronsson"


class Rectangle(object):
    """Open rectangle (x_lo, x_hi) x (y_lo, y_hi), possibly unbounded."""

    def __init__(self, x_interval, y_interval):
        self.x_interval = (float(x_interval[0]), float(x_interval[1]))
        self.y_interval = (float(y_interval[0]), float(y_interval[1]))

    @property
    def is_plane(self):
        return self.x_interval == FULL_LINE and self.y_interval == FULL_LINE

    def contains(self, x, y):
        (x_lo, x_hi), (y_lo, y_hi) = self.x_interval, self.y_interval
        return bool(x_lo < x < x_hi and y_lo < y < y_hi)

    def to_dict(self):
        """Bounds as lists, infinite ends written as None."""

        def _bound(value):
            return None if np.isinf(value) else value

        return {
            "x": [_bound(v) for v in self.x_interval],
            "y": [_bound(v) for v in self.y_interval],
        }

    def __repr__(self):
        return f"Rectangle(x={self.x_interval}, y={self.y_interval})"


class SeparatedFactor(object):
    """One-dimensional factor X with F(X'(s)) = k s and X(0) = 0."""

    def __init__(
        self,
        pair,
        k,
        antiderivative=None,
        value=None,
        slope=None,
        curvature=None,
        quadrature=None,
        inversion=None,
    ):
        """Initialize SeparatedFactor.

        Args:
            pair (FluxPair): Flux pair of this coordinate.
            k (float): Separation constant of this coordinate (c for x, -c for y).
            antiderivative (callable): Closed form replacing the quadrature of H.
                It may differ from H by a constant, which cancels in u.
            value (callable): Closed form of X(s), overrides everything else.
            slope (callable): Closed form of X'(s).
            curvature (callable): Closed form of X''(s).
            quadrature (QuadratureConfig): Tolerances of the quadrature of H.
            inversion (InversionConfig): Tolerances of the inverse of F.

        """
        self.pair = pair
        self.k = float(k)
        self.antiderivative = antiderivative
        self._value = value
        self._slope = slope
        self._curvature = curvature
        self.quadrature = quadrature
        self.inversion = inversion
        self._values = {}
        self._slopes = {}

        # validity interval {s : k s in range of F}
        lo, hi = pair.range_of_F
        if self.k == 0.0:
            self.interval = FULL_LINE
            self._slope0 = invert_monotone(pair, 0.0, inversion)
        elif self.k > 0:
            self.interval = (lo / self.k, hi / self.k)
        else:
            self.interval = (hi / self.k, lo / self.k)

    def value(self, s):
        """X(s)."""
        cached = self._values.get(s)
        if cached is not None:
            return cached
        if self._value is not None:
            result = float(self._value(s))
        elif self.k == 0.0:
            result = self._slope0 * s
        elif self.antiderivative is not None:
            result = float(self.antiderivative(self.k * s)) / self.k
        else:
            result = integrate_inverse(self.pair, self.k * s, self.quadrature, self.inversion) / self.k
        self._values[s] = result
        return result

    def slope(self, s):
        """X'(s) = F^-1(k s)."""
        cached = self._slopes.get(s)
        if cached is not None:
            return cached
        if self._slope is not None:
            result = float(self._slope(s))
        elif self.k == 0.0:
            result = self._slope0
        else:
            result = invert_monotone(self.pair, self.k * s, self.inversion)
        self._slopes[s] = result
        return result

    def curvature(self, s, slope=None):
        """X''(s) = k / f(X'(s))."""
        if self._curvature is not None:
            return float(self._curvature(s))
        if self.k == 0.0:
            return 0.0
        slope = self.slope(s) if slope is None else slope
        f = float(self.pair.f(slope))
        if not f > 0:
            raise SingularPoint(
                f"f of '{self.pair.name}' vanishes at slope {slope}, no second derivative at {s}."
            )
        return self.k / f


class EntireSolution(object):
    """Separable solution u(x, y) = X(x) + Y(y) anchored at u(0, 0) = 0."""

    def __init__(self, pair1, pair2, c, kind=Kind.GENERAL_QUADRATURE, x_factor=None, y_factor=None):
        """Initialize EntireSolution.

        Args:
            pair1 (FluxPair): Flux pair of the x coordinate.
            pair2 (FluxPair): Flux pair of the y coordinate.
            c (float): Separation constant.
            kind (Kind): Evaluation kind.
            x_factor (SeparatedFactor): Factor X, defaults to quadrature with k = c.
            y_factor (SeparatedFactor): Factor Y, defaults to quadrature with k = -c.

        """
        self.pair1 = pair1
        self.pair2 = pair2
        self.c = float(c)
        self.kind = Kind(kind)
        self.x_factor = SeparatedFactor(pair1, self.c) if x_factor is None else x_factor
        self.y_factor = SeparatedFactor(pair2, -self.c) if y_factor is None else y_factor
        self.domain = Rectangle(self.x_factor.interval, self.y_factor.interval)
        self.possibly_singular = self.c != 0.0 and any(
            pair.positivity is Positivity.NONNEGATIVE_VANISHING for pair in (pair1, pair2)
        )
        if self.possibly_singular:
            logger.debug(f"{self.name} may lose C^2 regularity where f vanishes.")

    @property
    def name(self):
        return f"{self.kind.value}({self.pair1.name}, {self.pair2.name}, c={self.c:g})"

    def _check(self, x, y):
        if not self.domain.contains(x, y):
            raise OutOfDomain(f"({x}, {y}) is outside the domain {self.domain} of {self.name}.")

    def value(self, x, y):
        """u(x, y)."""
        x, y = float(x), float(y)
        self._check(x, y)
        return self.x_factor.value(x) + self.y_factor.value(y)

    def gradient(self, x, y):
        """(u_x, u_y) at (x, y), defined on the whole domain."""
        x, y = float(x), float(y)
        self._check(x, y)
        return self.x_factor.slope(x), self.y_factor.slope(y)

    def evaluate(self, x, y):
        """Analytic derivative bundle at (x, y).

        Raises:
            OutOfDomain: If (x, y) is outside the open validity rectangle.
            SingularPoint: If a second derivative does not exist at (x, y).

        """
        x, y = float(x), float(y)
        self._check(x, y)
        ux = self.x_factor.slope(x)
        uy = self.y_factor.slope(y)
        return DerivativeBundle(
            x=x,
            y=y,
            u=self.x_factor.value(x) + self.y_factor.value(y),
            ux=ux,
            uy=uy,
            uxx=self.x_factor.curvature(x, ux),
            uxy=0.0,
            uyy=self.y_factor.curvature(y, uy),
            source=ANALYTIC,
        )

    def descriptor(self):
        """JSON-ready description of the solution."""
        return {
            "kind": self.kind.value,
            "flux1": self.pair1.name,
            "flux2": self.pair2.name,
            "c": self.c,
            "domain": self.domain.to_dict(),
        }

    def __repr__(self):
        return f"EntireSolution({self.name}, domain={self.domain})"


def construct(pair1, pair2, c, quadrature=None, inversion=None):
    """Build the separable solution of the general equation by quadrature.

    Args:
        pair1 (FluxPair): Flux pair of the x coordinate.
        pair2 (FluxPair): Flux pair of the y coordinate.
        c (float): Separation constant, c = 0 gives the affine branch.
        quadrature (QuadratureConfig): Tolerances of the quadrature of H.
        inversion (InversionConfig): Tolerances of the inverse of F.

    Returns:
        EntireSolution: Solution of kind general_quadrature.

    """
    return EntireSolution(
        pair1,
        pair2,
        c,
        kind=Kind.GENERAL_QUADRATURE,
        x_factor=SeparatedFactor(pair1, c, quadrature=quadrature, inversion=inversion),
        y_factor=SeparatedFactor(pair2, -c, quadrature=quadrature, inversion=inversion),
    )


def _closed(name, c, kind, antiderivative=None):
    pair = get_flux(name)
    assert c != 0.0, f"{kind.value} solutions need c != 0."
    if antiderivative is None:
        antiderivative = pair.analytic_H
    return EntireSolution(
        pair,
        pair,
        c,
        kind=kind,
        x_factor=SeparatedFactor(pair, c, antiderivative=antiderivative),
        y_factor=SeparatedFactor(pair, -c, antiderivative=antiderivative),
    )


def quadratic_solution(c=2.0):
    """u = c (x^2 - y^2) / 2 for the identity flux."""
    return _closed("identity", c, Kind.QUADRATIC)


def cardano_solution(c=1.0):
    """u = (h(c x) - h(c y)) / c with the closed-form Cardano antiderivative h.

    h(0) = -1/2, and the offsets of the x and y parts cancel, so u(0, 0) = 0.

    """
    return _closed("cubic", c, Kind.CARDANO_CLOSED_FORM, antiderivative=closed_form_h)


def cosh_solution(c=1.0):
    """u = (cosh(c x) - cosh(c y)) / c for the arsinh flux."""
    return _closed("arsinh", c, Kind.COSH)


def arctan_solution(c=1.0):
    """u = (ln cos(c y) - ln cos(c x)) / c on the square |x|, |y| < pi / (2|c|)."""
    return _closed("arctan", c, Kind.ARCTAN_RESTRICTED)


def _aronsson_value(s, sign):
    a = abs(s)
    return sign * 2.25 * a * np.cbrt(a)


def _aronsson_slope(s, sign):
    return sign * 3.0 * np.cbrt(s)


def _aronsson_curvature(s, sign):
    if s == 0.0:
        raise SingularPoint("The Aronsson solution has no second derivatives on the axes.")
    return sign / np.cbrt(abs(s)) ** 2


def aronsson_solution():
    """u = 9/4 (|x|^{4/3} - |y|^{4/3}), the power flux with c = 9.

    u is C^{1,1/3} in the plane and smooth off the coordinate axes.

    """
    pair = get_flux("power")
    factors = []
    for k, sign in ((9.0, 1.0), (-9.0, -1.0)):
        factors.append(
            SeparatedFactor(
                pair,
                k,
                value=partial(_aronsson_value, sign=sign),
                slope=partial(_aronsson_slope, sign=sign),
                curvature=partial(_aronsson_curvature, sign=sign),
            )
        )
    return EntireSolution(pair, pair, 9.0, kind=Kind.ARONSSON, x_factor=factors[0], y_factor=factors[1])


_CLOSED_FORMS = {
    "identity": quadratic_solution,
    "cubic": cardano_solution,
    "arsinh": cosh_solution,
    "arctan": arctan_solution,
}


def closed_form_solution(pair1, pair2, c, quadrature=None, inversion=None):
    """Closed-form solution when the pairs match a worked example, else construct."""
    if pair1.name == pair2.name and c != 0.0:
        if pair1.name in _CLOSED_FORMS:
            return _CLOSED_FORMS[pair1.name](c)
        if pair1.name == "power" and c == 9.0:
            return aronsson_solution()
    return construct(pair1, pair2, c, quadrature, inversion)


def is_affine(sol, probe_grid):
    """Whether u_xx and u_yy vanish on every probe point.

    Args:
        sol (EntireSolution): Solution to probe.
        probe_grid (Grid or iterable): Probe points (x, y) inside the domain.

    Returns:
        bool: True iff max |u_xx| and max |u_yy| are below 1e-12.

    Raises:
        EmptyGrid: If there is no probe point.

    """
    largest = 0.0
    points = probe_grid.points() if hasattr(probe_grid, "points") else probe_grid
    count = 0
    for x, y in points:
        bundle = sol.evaluate(x, y)
        largest = max(largest, abs(bundle.uxx), abs(bundle.uyy))
        count += 1
    if count == 0:
        raise EmptyGrid("No probe point to decide affinity.")
    return largest < AFFINE_TOL
