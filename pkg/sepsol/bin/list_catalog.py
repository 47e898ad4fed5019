# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""List the built-in flux pairs and equations."""

import sys
from logging import getLogger

import hydra
from omegaconf import DictConfig, OmegaConf

from sepsol.bin.run_config import EXIT_OK, translate_argv
from sepsol.equations import EQUATION_NAMES, get_equation
from sepsol.flux import Positivity, builtin_catalog, check_flux

# A logger for this file
logger = getLogger(__name__)


def format_catalog(samples=None):
    """Text listing of both catalogs.

    Args:
        samples (list): Slopes at which each pair is checked, no check if None.

    Returns:
        str: One line per flux pair and per equation.

    """
    lines = ["Flux pairs:"]
    for pair in builtin_catalog():
        flags = []
        if not pair.is_surjective:
            flags.append("range-restricted")
        if pair.positivity is Positivity.NONNEGATIVE_VANISHING:
            flags.append("f-vanishing")
        line = f"  {pair.name:<10s} {pair.description:<42s} range={pair.range_of_F}"
        if flags:
            line += " [" + ", ".join(flags) + "]"
        if samples is not None:
            check = check_flux(pair, samples)
            ok = check["monotone"] and check["positivity_consistent"] and check["fd_error"] < 1e-6
            line += " check=" + ("ok" if ok else "FAILED")
        lines.append(line)
    lines.append("Equations:")
    for name in EQUATION_NAMES:
        lines.append(f"  {name:<22s} {get_equation(name).description}")
    return "\n".join(lines)


def run(config: DictConfig) -> int:
    """Print the catalogs and return the exit code."""
    samples = config.get("check_samples")
    print(format_catalog(None if samples is None else list(samples)))
    return EXIT_OK


@hydra.main(version_base=None, config_path="config", config_name="list")
def hydra_main(config: DictConfig) -> None:
    """Run catalog listing."""
    logger.info(OmegaConf.to_yaml(config))
    sys.exit(run(config))


def main():
    translate_argv()
    hydra_main()


if __name__ == "__main__":
    main()
