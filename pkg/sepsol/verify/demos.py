# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Probes of the failure modes: blow-up at the domain boundary and Hoelder gradients."""

from logging import getLogger

import numpy as np

from sepsol.exceptions import DegenerateFit

# A logger for this file
logger = getLogger(__name__)


class Ray(object):
    """Path t -> origin + t * direction."""

    def __init__(self, direction, origin=(0.0, 0.0)):
        self.direction = (float(direction[0]), float(direction[1]))
        self.origin = (float(origin[0]), float(origin[1]))

    def __call__(self, t):
        return (
            self.origin[0] + t * self.direction[0],
            self.origin[1] + t * self.direction[1],
        )


def ray(direction, origin=(0.0, 0.0)):
    return Ray(direction, origin)


def blowup_probe(sol, path, values):
    """u along a path approaching the domain boundary.

    Args:
        sol (EntireSolution): Solution to probe.
        path (callable): t -> (x, y).
        values (list): Parameters t.

    Returns:
        list: (t, u) pairs. OutOfDomain propagates for t past the boundary.

    """
    samples = []
    for t in values:
        x, y = path(t)
        samples.append((float(t), sol.value(x, y)))
    logger.debug(f"Blow-up probe of {sol.name}: {samples}")
    return samples


def holder_exponent(sol, axis, radii):
    """Hoelder exponent of the gradient across an axis.

    Fits log |u_x(r, 0) - u_x(0, 0)| against log r by least squares ("x"), or
    log |u_y(0, r) - u_y(0, 0)| ("y").

    Args:
        sol (EntireSolution): Solution with continuous gradient at the origin.
        axis (str): "x" or "y".
        radii (list): Positive radii.

    Returns:
        float: Fitted slope, 1/3 for the Aronsson solution and 1 for C^2 ones.

    """
    assert axis in ("x", "y"), f"axis must be 'x' or 'y' ({axis})."
    radii = np.asarray(radii, dtype=float)
    if len(radii) < 3:
        raise DegenerateFit(f"Need at least 3 radii for a fit, got {len(radii)}.")
    assert np.all(radii > 0), "radii must be positive."

    index = 0 if axis == "x" else 1
    base = sol.gradient(0.0, 0.0)[index]
    diffs = []
    for r in radii:
        point = (r, 0.0) if axis == "x" else (0.0, r)
        diffs.append(abs(sol.gradient(*point)[index] - base))
    diffs = np.asarray(diffs)
    if not np.all(diffs > 0):
        raise DegenerateFit(f"Gradient of {sol.name} does not change along the {axis} axis.")
    slope, _ = np.polyfit(np.log(radii), np.log(diffs), 1)
    return float(slope)
