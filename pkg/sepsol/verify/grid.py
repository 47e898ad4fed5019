# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Rectangular sample grids."""

import math

import numpy as np

from sepsol.exceptions import ConfigError


class AxisExclusion(object):
    """Excludes nodes within a margin of either coordinate axis."""

    def __init__(self, margin):
        assert margin >= 0, f"margin must be non-negative ({margin})."
        self.margin = float(margin)

    def __call__(self, x, y):
        return abs(x) < self.margin or abs(y) < self.margin

    def __repr__(self):
        return f"AxisExclusion(margin={self.margin})"


def axis_exclusion(margin=0.1):
    """Predicate excluding |x| < margin or |y| < margin."""
    return AxisExclusion(margin)


class Grid(object):
    """Tensor grid over [x_min, x_max] x [y_min, y_max]."""

    def __init__(self, x_min, x_max, y_min, y_max, nx, ny, exclusion=None):
        """Initialize Grid.

        Args:
            x_min (float): Left end.
            x_max (float): Right end.
            y_min (float): Bottom end.
            y_max (float): Top end.
            nx (int): Number of nodes along x, at least 2.
            ny (int): Number of nodes along y, at least 2.
            exclusion (callable): (x, y) -> True for nodes to skip.

        """
        assert x_min < x_max, f"Empty x range [{x_min}, {x_max}]."
        assert y_min < y_max, f"Empty y range [{y_min}, {y_max}]."
        assert nx >= 2 and ny >= 2, f"Need at least 2 x 2 nodes ({nx} x {ny})."
        self.x_min, self.x_max = float(x_min), float(x_max)
        self.y_min, self.y_max = float(y_min), float(y_max)
        self.nx, self.ny = int(nx), int(ny)
        self.exclusion = exclusion
        self.xs = np.linspace(self.x_min, self.x_max, self.nx)
        self.ys = np.linspace(self.y_min, self.y_max, self.ny)

    @classmethod
    def from_spec(cls, spec, exclusion=None):
        """Build a grid from [x_min, x_max, y_min, y_max, nx, ny].

        Raises:
            ConfigError: If the spec is malformed.

        """
        try:
            spec = list(spec)
            if len(spec) != 6:
                raise ConfigError(f"Grid needs x_min,x_max,y_min,y_max,nx,ny, got {spec}.")
            x_min, x_max, y_min, y_max = (float(v) for v in spec[:4])
            nx, ny = float(spec[4]), float(spec[5])
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Grid values must be numbers, got {spec}.") from e
        if not (math.isfinite(nx) and math.isfinite(ny)) or int(nx) != nx or int(ny) != ny or nx < 2 or ny < 2:
            raise ConfigError(f"Grid node counts must be integers >= 2, got {nx} x {ny}.")
        if not all(math.isfinite(v) for v in (x_min, x_max, y_min, y_max)):
            raise ConfigError(f"Grid ranges must be finite, got {spec[:4]}.")
        if not (x_min < x_max and y_min < y_max):
            raise ConfigError(f"Grid ranges must be increasing, got {spec[:4]}.")
        return cls(x_min, x_max, y_min, y_max, int(nx), int(ny), exclusion)

    def nodes(self):
        """Yield (j, i, x, y) in row-major order, x varying fastest."""
        for j, y in enumerate(self.ys):
            for i, x in enumerate(self.xs):
                x, y = float(x), float(y)
                if self.exclusion is not None and self.exclusion(x, y):
                    continue
                yield j, i, x, y

    def points(self):
        """Yield (x, y) of every non-excluded node."""
        for _, _, x, y in self.nodes():
            yield x, y

    def to_dict(self):
        return {
            "x": [self.x_min, self.x_max],
            "y": [self.y_min, self.y_max],
            "nx": self.nx,
            "ny": self.ny,
            "exclusion": None if self.exclusion is None else repr(self.exclusion),
        }

    def __repr__(self):
        return (
            f"Grid([{self.x_min}, {self.x_max}] x [{self.y_min}, {self.y_max}], "
            f"{self.nx} x {self.ny}, exclusion={self.exclusion})"
        )
