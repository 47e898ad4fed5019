# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Central finite-difference derivatives of a pointwise u."""

import numpy as np

from sepsol.exceptions import OutOfDomain, StencilOutOfDomain
from sepsol.solutions.bundle import FINITE_DIFFERENCE, DerivativeBundle

EPS = np.finfo(float).eps


def _step(base, power):
    h = EPS**power * max(1.0, abs(base))
    # exactly representable step
    return (base + h) - base


def fd_bundle(u_eval, x, y, domain=None):
    """Finite-difference derivative bundle at (x, y).

    First derivatives use the step eps^(1/3) max(1, |x|), second derivatives
    eps^(1/4) max(1, |x|) (y alike), the cross derivative the four corner points
    of the second-derivative steps.

    Args:
        u_eval (callable): (x, y) -> u.
        x (float): Abscissa.
        y (float): Ordinate.
        domain (Rectangle): Validity domain the stencil must stay inside.

    Returns:
        DerivativeBundle: Bundle tagged finite_difference.

    """
    x, y = float(x), float(y)
    hx1, hy1 = _step(x, 1.0 / 3.0), _step(y, 1.0 / 3.0)
    hx2, hy2 = _step(x, 0.25), _step(y, 0.25)
    stencil = {
        "c": (x, y),
        "e1": (x + hx1, y),
        "w1": (x - hx1, y),
        "n1": (x, y + hy1),
        "s1": (x, y - hy1),
        "e2": (x + hx2, y),
        "w2": (x - hx2, y),
        "n2": (x, y + hy2),
        "s2": (x, y - hy2),
        "ne": (x + hx2, y + hy2),
        "nw": (x - hx2, y + hy2),
        "se": (x + hx2, y - hy2),
        "sw": (x - hx2, y - hy2),
    }
    if domain is not None:
        for px, py in stencil.values():
            if not domain.contains(px, py):
                raise StencilOutOfDomain(f"Stencil point ({px}, {py}) around ({x}, {y}) leaves {domain}.")
    try:
        u = {key: float(u_eval(px, py)) for key, (px, py) in stencil.items()}
    except OutOfDomain as e:
        raise StencilOutOfDomain(f"Stencil around ({x}, {y}) leaves the domain: {e}") from e

    return DerivativeBundle(
        x=x,
        y=y,
        u=u["c"],
        ux=(u["e1"] - u["w1"]) / (2.0 * hx1),
        uy=(u["n1"] - u["s1"]) / (2.0 * hy1),
        uxx=(u["e2"] - 2.0 * u["c"] + u["w2"]) / (hx2 * hx2),
        uxy=(u["ne"] - u["se"] - u["nw"] + u["sw"]) / (4.0 * hx2 * hy2),
        uyy=(u["n2"] - 2.0 * u["c"] + u["s2"]) / (hy2 * hy2),
        source=FINITE_DIFFERENCE,
    )
