# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Sample a separable solution and its derivatives on a grid to CSV."""

import sys
from logging import getLogger

import hydra
from omegaconf import DictConfig, OmegaConf
from tqdm import tqdm

from sepsol.bin.run_config import EXIT_CONFIG, EXIT_DOMAIN, EXIT_OK, EXIT_TOLERANCE, RunConfig, translate_argv
from sepsol.exceptions import ConfigError, NoConvergence, OutOfDomain, OutOfRange, SingularPoint, ToleranceNotMet
from sepsol.utils import write_samples_csv

# A logger for this file
logger = getLogger(__name__)


def run(config: DictConfig) -> int:
    """Write the CSV and return the exit code."""
    try:
        run_config = RunConfig.from_config(config)
    except ConfigError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_CONFIG

    sol = run_config.solution()
    logger.info(f"Sample {sol.name} on {run_config.grid}.")
    try:
        # evaluate everything first, a domain error leaves no partial file
        points = list(run_config.grid.points())
        bundles = [sol.evaluate(x, y) for x, y in tqdm(points, desc="[sample]", disable=not config.get("progress"))]
    except (OutOfDomain, OutOfRange, SingularPoint) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_DOMAIN
    except (ToleranceNotMet, NoConvergence) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_TOLERANCE
    write_samples_csv(run_config.out, bundles)
    return EXIT_OK


@hydra.main(version_base=None, config_path="config", config_name="sample")
def hydra_main(config: DictConfig) -> None:
    """Run sampling process."""
    logger.info(OmegaConf.to_yaml(config))
    sys.exit(run(config))


def main():
    translate_argv()
    hydra_main()


if __name__ == "__main__":
    main()
