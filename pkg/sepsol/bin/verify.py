# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Verify that a separable solution solves a catalog equation on a grid."""

import sys
from logging import getLogger

import hydra
from omegaconf import DictConfig, OmegaConf

from sepsol.bin.run_config import EXIT_CONFIG, EXIT_DOMAIN, EXIT_OK, EXIT_TOLERANCE, RunConfig, fail, translate_argv
from sepsol.exceptions import (
    ConfigError,
    EmptyGrid,
    NoConvergence,
    OutOfDomain,
    OutOfRange,
    SingularPoint,
    ToleranceNotMet,
)
from sepsol.solutions import is_affine
from sepsol.utils import write_json
from sepsol.verify import Grid, default_tolerance, verify_solution

# A logger for this file
logger = getLogger(__name__)


def _probe_points(sol, grid, fallback, n=4):
    probe = Grid(grid.x_min, grid.x_max, grid.y_min, grid.y_max, n, n, grid.exclusion)
    points = [(x, y) for x, y in probe.points() if sol.domain.contains(x, y)]
    # argmax is a node inside the domain
    return points or [fallback]


def run(config: DictConfig) -> int:
    """Write the report and return the exit code."""
    out = config.get("out")
    try:
        run_config = RunConfig.from_config(config)
    except ConfigError as e:
        return fail(out, EXIT_CONFIG, e)
    if run_config.equation is None:
        return fail(out, EXIT_CONFIG, ConfigError("Set the equation to verify against."))

    sol = run_config.solution()
    eq = run_config.equation_obj()
    tol = default_tolerance(run_config.fd) if run_config.tol is None else run_config.tol
    try:
        report = verify_solution(
            sol,
            eq,
            run_config.grid,
            use_fd=run_config.fd,
            n_jobs=run_config.n_jobs,
            progress=bool(config.get("progress", False)),
        )
        try:
            affine = is_affine(sol, _probe_points(sol, run_config.grid, report.argmax))
        except SingularPoint:
            affine = False
    except (OutOfDomain, OutOfRange, SingularPoint, EmptyGrid) as e:
        return fail(out, EXIT_DOMAIN, e)
    except (ToleranceNotMet, NoConvergence) as e:
        return fail(out, EXIT_TOLERANCE, e)

    if affine and sol.c != 0.0:
        logger.warning(f"{sol.name} is affine although c = {sol.c}.")
    passed = report.max_abs_residual <= tol and (sol.c == 0.0 or not affine)
    payload = report.to_dict()
    payload.update({"tolerance": tol, "affine": affine, "passed": passed})
    write_json(out, payload)

    if not passed:
        logger.error(
            f"Verification failed (max |residual| = {report.max_abs_residual:.3e}, tol = {tol:.1e}, "
            f"affine = {affine})."
        )
        return EXIT_TOLERANCE
    logger.info(f"Verification passed (affine = {affine}).")
    return EXIT_OK


@hydra.main(version_base=None, config_path="config", config_name="verify")
def hydra_main(config: DictConfig) -> None:
    """Run verification process."""
    logger.info(OmegaConf.to_yaml(config))
    sys.exit(run(config))


def main():
    translate_argv()
    hydra_main()


if __name__ == "__main__":
    main()
