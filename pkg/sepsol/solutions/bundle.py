# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Point values of a solution and its partial derivatives."""

import math
from typing import NamedTuple

ANALYTIC = "analytic"
FINITE_DIFFERENCE = "finite_difference"

FIELDS = ("u", "ux", "uy", "uxx", "uxy", "uyy")


class DerivativeBundle(NamedTuple):
    """u and its first and second partials at (x, y)."""

    x: float
    y: float
    u: float
    ux: float
    uy: float
    uxx: float
    uxy: float
    uyy: float
    source: str = ANALYTIC

    def is_finite(self):
        return all(math.isfinite(getattr(self, name)) for name in FIELDS)

    def as_row(self):
        """Values in CSV column order x, y, u, ux, uy, uxx, uxy, uyy."""
        return (self.x, self.y) + tuple(getattr(self, name) for name in FIELDS)
