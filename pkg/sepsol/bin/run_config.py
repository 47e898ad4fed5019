# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Validated view of the hydra configuration shared by the command line scripts."""

import math
import sys
from logging import getLogger

import hydra
from hydra.errors import InstantiationException
from omegaconf import DictConfig, OmegaConf

from sepsol.equations.equation import get_equation
from sepsol.exceptions import ConfigError
from sepsol.flux.catalog import get_flux
from sepsol.solutions.solution import closed_form_solution, construct
from sepsol.utils import write_json
from sepsol.verify.grid import Grid, axis_exclusion

# A logger for this file
logger = getLogger(__name__)

# Exit codes.
EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_TOLERANCE = 4


def _option(config, key, default=None):
    """Value of an optional key, also for keys a config does not declare."""
    return OmegaConf.select(config, key, default=default)


class RunConfig(object):
    """Resolved names, grid and tolerances of one command line run."""

    def __init__(
        self,
        pair1,
        pair2,
        c,
        grid,
        equation=None,
        tol=None,
        fd=False,
        seed=None,
        out=None,
        closed_form=False,
        n_jobs=1,
        inversion=None,
        quadrature=None,
    ):
        self.pair1 = pair1
        self.pair2 = pair2
        self.c = c
        self.grid = grid
        self.equation = equation
        self.tol = tol
        self.fd = fd
        self.seed = seed
        self.out = out
        self.closed_form = closed_form
        self.n_jobs = n_jobs
        self.inversion = inversion
        self.quadrature = quadrature

    @classmethod
    def from_config(cls, config: DictConfig):
        """Validate a composed hydra config.

        Raises:
            ConfigError: On unknown names or malformed values.

        """
        flux = _option(config, "flux")
        name1 = _option(config, "flux1") or flux
        name2 = _option(config, "flux2") or flux
        if name1 is None or name2 is None:
            raise ConfigError("Set flux, or both flux1 and flux2.")
        pair1, pair2 = get_flux(name1), get_flux(name2)

        try:
            c = float(_option(config, "c", 1.0))
            tol = _option(config, "tol")
            tol = None if tol is None else float(tol)
            margin = _option(config, "exclude_axes")
            margin = None if margin is None else float(margin)
            seed = _option(config, "seed")
            seed = None if seed is None else int(seed)
            n_jobs = int(_option(config, "n_jobs", 1))
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid numeric option: {e}") from e
        if not math.isfinite(c):
            raise ConfigError(f"c must be finite ({c}).")
        if tol is not None and not tol > 0:
            raise ConfigError(f"tol must be positive ({tol}).")
        if margin is not None and not margin >= 0:
            raise ConfigError(f"exclude_axes must be non-negative ({margin}).")
        if n_jobs == 0:
            raise ConfigError("n_jobs must be non-zero.")
        exclusion = None if margin is None else axis_exclusion(margin)
        grid = Grid.from_spec(_option(config, "grid"), exclusion)

        equation = _option(config, "equation")
        if equation is not None:
            # fail early on unknown names
            get_equation(equation, pair1, pair2)

        try:
            inversion = hydra.utils.instantiate(config.inversion) if "inversion" in config else None
            quadrature = hydra.utils.instantiate(config.quadrature) if "quadrature" in config else None
        except InstantiationException as e:
            raise ConfigError(f"Invalid numerics settings: {e}") from e

        return cls(
            pair1=pair1,
            pair2=pair2,
            c=c,
            grid=grid,
            equation=equation,
            tol=tol,
            fd=bool(_option(config, "fd", False)),
            seed=seed,
            out=_option(config, "out"),
            closed_form=bool(_option(config, "closed_form", False)),
            n_jobs=n_jobs,
            inversion=inversion,
            quadrature=quadrature,
        )

    def solution(self):
        if self.closed_form:
            return closed_form_solution(self.pair1, self.pair2, self.c, self.quadrature, self.inversion)
        return construct(self.pair1, self.pair2, self.c, self.quadrature, self.inversion)

    def equation_obj(self):
        return get_equation(self.equation, self.pair1, self.pair2, self.seed)


def fail(out, code, error):
    """Log an error, write a diagnostic JSON object and return the exit code."""
    logger.error(f"{type(error).__name__}: {error}")
    write_json(out, {"error": type(error).__name__, "message": str(error), "exit_code": code})
    return code


# Command line flags and the config keys they set.
VALUE_FLAGS = {
    "--flux": "flux",
    "--flux1": "flux1",
    "--flux2": "flux2",
    "--equation": "equation",
    "--c": "c",
    "--grid": "grid",
    "--tol": "tol",
    "--seed": "seed",
    "--out": "out",
    "--exclude-axes": "exclude_axes",
    "--n-jobs": "n_jobs",
}
SWITCH_FLAGS = {
    "--fd": "fd",
    "--closed-form": "closed_form",
    "--progress": "progress",
}


def to_overrides(argv, positional=None):
    """Translate "--flag value" arguments into hydra "key=value" overrides.

    Args:
        argv (list): Command line arguments without the program name.
        positional (str): Config key of a bare first argument, if any.

    Returns:
        list: Arguments for hydra. Unknown flags and "key=value" items pass through.

    Raises:
        ConfigError: If a flag lacks its value.

    """
    overrides = []
    args = list(argv)
    while len(args) > 0:
        arg = args.pop(0)
        flag, has_value, value = arg.partition("=")
        if flag in SWITCH_FLAGS and not has_value:
            overrides.append(f"{SWITCH_FLAGS[flag]}=true")
        elif flag in VALUE_FLAGS:
            if not has_value:
                if len(args) == 0:
                    raise ConfigError(f"{flag} needs a value.")
                value = args.pop(0)
            key = VALUE_FLAGS[flag]
            overrides.append(f"{key}=[{value}]" if key == "grid" else f"{key}={value}")
        elif positional is not None and len(overrides) == 0 and not has_value and not arg.startswith("-"):
            overrides.append(f"{positional}={arg}")
        else:
            overrides.append(arg)
    return overrides


def translate_argv(positional=None):
    """Rewrite sys.argv in place for hydra, exiting with EXIT_CONFIG on malformed flags."""
    try:
        sys.argv[1:] = to_overrides(sys.argv[1:], positional)
    except ConfigError as e:
        logger.error(f"Invalid command line: {e}")
        sys.exit(EXIT_CONFIG)
