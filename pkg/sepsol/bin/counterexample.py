# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Demonstrate why bijectivity of F and strict positivity of f are needed.

arctan: F = arctan is bounded, so the separable solution only lives on a square
    and blows up at its boundary.
aronsson: f(t) = t^2 vanishes at 0, so the separable solution solves the degenerate
    Aronsson equation but is only C^{1,1/3} across the axes.

"""

import math
import sys
from logging import getLogger

import hydra
from omegaconf import DictConfig, OmegaConf

from sepsol.bin.run_config import EXIT_CONFIG, EXIT_DOMAIN, EXIT_OK, fail, translate_argv
from sepsol.equations import DEGENERATE, arctan_form, aronsson, classify, corollary_form, minimal_surface
from sepsol.exceptions import ConfigError, DegenerateFit, EmptyGrid, OutOfDomain, OutOfRange, SingularPoint
from sepsol.flux import get_flux
from sepsol.solutions import arctan_solution, aronsson_solution
from sepsol.utils import write_json
from sepsol.verify import Grid, axis_exclusion, blowup_probe, fd_bundle, holder_exponent, ray, verify_solution

# A logger for this file
logger = getLogger(__name__)

COUNTEREXAMPLES = ("arctan", "aronsson")


def arctan_demo(config):
    """Domain, interior residuals and boundary blow-up of the arctan solution."""
    c = float(config.c)
    if c == 0.0 or not math.isfinite(c):
        raise ConfigError(f"The arctan solution needs a finite c != 0 ({c}).")
    sol = arctan_solution(c)
    grid = Grid.from_spec(config.grid)
    pair = get_flux("arctan")
    residuals = {}
    for eq in (minimal_surface(), arctan_form(), corollary_form(pair, pair)):
        residuals[eq.name] = verify_solution(sol, eq, grid).max_abs_residual
    samples = blowup_probe(sol, ray((1.0, 0.0)), list(config.probe))
    return {
        "name": "arctan",
        "solution": sol.descriptor(),
        "entire": sol.domain.is_plane,
        "max_abs_residual": residuals,
        "blowup": [[t, u] for t, u in samples],
    }


def aronsson_demo(config):
    """Off-axis residual, Hoelder exponent and degeneracy of the Aronsson solution."""
    sol = aronsson_solution()
    eq = aronsson()
    margin = float(config.exclude_axes)
    if not margin >= 0:
        raise ConfigError(f"exclude_axes must be non-negative ({margin}).")
    grid = Grid.from_spec(config.grid, axis_exclusion(margin))
    report = verify_solution(sol, eq, grid)
    degenerate = all(classify(eq, sol.evaluate(x, y)) == DEGENERATE for x, y in grid.points())
    x, y = (float(v) for v in config.fd_point)
    fd_uxx = fd_bundle(sol.value, x, y, sol.domain).uxx
    try:
        sol.evaluate(0.0, y)
        singular_on_axes = False
    except SingularPoint:
        singular_on_axes = True
    return {
        "name": "aronsson",
        "solution": sol.descriptor(),
        "max_abs_residual_off_axes": report.max_abs_residual,
        "min_ellipticity_margin": report.min_ellipticity_margin,
        "degenerate_ellipticity": degenerate,
        "holder_exponent": holder_exponent(sol, "x", [float(r) for r in config.radii]),
        "fd_uxx_near_axis": {"point": [x, y], "value": fd_uxx},
        "singular_on_axes": singular_on_axes,
    }


def run(config: DictConfig) -> int:
    """Write the demonstration JSON and return the exit code."""
    out = config.get("out")
    name = config.get("name")
    if name not in COUNTEREXAMPLES:
        return fail(out, EXIT_CONFIG, ConfigError(f"Unknown counterexample '{name}', choose from {COUNTEREXAMPLES}."))
    try:
        if name == "arctan":
            payload = arctan_demo(config.arctan)
        else:
            payload = aronsson_demo(config.aronsson)
    except (ConfigError, DegenerateFit) as e:
        return fail(out, EXIT_CONFIG, e)
    except (TypeError, ValueError) as e:
        return fail(out, EXIT_CONFIG, ConfigError(f"Invalid {name} settings: {e}"))
    except (OutOfDomain, OutOfRange, SingularPoint, EmptyGrid) as e:
        return fail(out, EXIT_DOMAIN, e)
    logger.info(f"Counterexample {name}: {payload}")
    write_json(out, payload)
    return EXIT_OK


@hydra.main(version_base=None, config_path="config", config_name="counterexample")
def hydra_main(config: DictConfig) -> None:
    """Run counterexample demonstration."""
    logger.info(OmegaConf.to_yaml(config))
    sys.exit(run(config))


def main():
    translate_argv(positional="name")
    hydra_main()


if __name__ == "__main__":
    main()
