# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Residual sweeps of a solution against an equation over a grid."""

import json
import math
from logging import getLogger

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from sepsol.equations.equation import ellipticity_margin, residual
from sepsol.exceptions import EmptyGrid, SingularPoint, StencilOutOfDomain
from sepsol.solutions.bundle import ANALYTIC, FINITE_DIFFERENCE
from sepsol.verify.oracle import fd_bundle

# A logger for this file
logger = getLogger(__name__)

# Default residual tolerances of the two derivative sources.
ANALYTIC_TOL = 1e-10
FD_TOL = 1e-5

CROSSCHECK_FIELDS = ("ux", "uy", "uxx", "uxy", "uyy")


def default_tolerance(use_fd):
    return FD_TOL if use_fd else ANALYTIC_TOL


class VerificationReport(object):
    """Outcome of a residual sweep."""

    def __init__(
        self,
        equation,
        solution,
        grid,
        source,
        max_abs_residual,
        argmax,
        min_ellipticity_margin,
        flagged_samples,
        fd_crosscheck,
    ):
        """Initialize VerificationReport.

        Args:
            equation (str): Equation name.
            solution (dict): Solution descriptor.
            grid (dict): Grid description.
            source (str): "analytic" or "finite_difference".
            max_abs_residual (float): Largest finite |residual|.
            argmax (tuple): Node (x, y) of the largest residual.
            min_ellipticity_margin (float): Smallest discriminant A C - B^2.
            flagged_samples (int): Number of nodes with non-finite evaluations.
            fd_crosscheck (dict): Largest |analytic - FD| / max(1, |analytic|)
                per derivative over the cross-check nodes.

        """
        assert max_abs_residual >= 0
        assert flagged_samples >= 0
        self.equation = equation
        self.solution = solution
        self.grid = grid
        self.source = source
        self.max_abs_residual = max_abs_residual
        self.argmax = argmax
        self.min_ellipticity_margin = min_ellipticity_margin
        self.flagged_samples = flagged_samples
        self.fd_crosscheck = fd_crosscheck

    def to_dict(self):
        return {
            "equation": self.equation,
            "solution": self.solution,
            "grid": self.grid,
            "source": self.source,
            "max_abs_residual": self.max_abs_residual,
            "argmax": None if self.argmax is None else list(self.argmax),
            "min_ellipticity_margin": self.min_ellipticity_margin,
            "flagged_samples": self.flagged_samples,
            "fd_crosscheck": dict(self.fd_crosscheck),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def __eq__(self, other):
        return isinstance(other, VerificationReport) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"VerificationReport({self.to_dict()})"


def _sample(sol, eq, x, y, use_fd):
    """Residual and discriminant at one node, None when the node is flagged."""
    try:
        if use_fd:
            bundle = fd_bundle(sol.value, x, y, sol.domain)
        else:
            bundle = sol.evaluate(x, y)
    except (SingularPoint, StencilOutOfDomain) as e:
        logger.debug(f"Flagged node ({x}, {y}): {e}")
        return None
    value = residual(eq, bundle)
    margin = ellipticity_margin(eq, bundle)
    if not (bundle.is_finite() and math.isfinite(value) and math.isfinite(margin)):
        return None
    return value, margin


def _sweep_chunk(sol, eq, nodes, use_fd):
    return [_sample(sol, eq, x, y, use_fd) for _, _, x, y in nodes]


def _crosscheck(sol, nodes, n_samples):
    """Largest scaled |analytic - FD| per derivative on evenly picked nodes."""
    worst = {name: 0.0 for name in CROSSCHECK_FIELDS}
    picks = np.unique(np.linspace(0, len(nodes) - 1, min(n_samples, len(nodes))).round().astype(int))
    for index in picks:
        _, _, x, y = nodes[index]
        try:
            exact = sol.evaluate(x, y)
            approx = fd_bundle(sol.value, x, y, sol.domain)
        except (SingularPoint, StencilOutOfDomain):
            continue
        for name in CROSSCHECK_FIELDS:
            a, b = getattr(exact, name), getattr(approx, name)
            worst[name] = max(worst[name], abs(a - b) / max(1.0, abs(a)))
    return worst


def verify_solution(sol, eq, grid, use_fd=False, n_crosscheck=25, n_jobs=1, progress=False):
    """Evaluate the residual of a solution on every grid node.

    Args:
        sol (EntireSolution): Solution under test.
        eq (QuasilinearEquation): Equation it should solve.
        grid (Grid): Sample grid, nodes outside the solution domain are skipped.
        use_fd (bool): Whether residuals use finite-difference bundles.
        n_crosscheck (int): Number of nodes for the FD-vs-analytic cross-check.
        n_jobs (int): Number of joblib workers, 1 for a sequential sweep.
        progress (bool): Whether to show a progress bar.

    Returns:
        VerificationReport: Maxima are reduced in node order, so the report does
            not depend on n_jobs.

    Raises:
        EmptyGrid: If no node lies in the domain or every node is flagged.

    """
    nodes = [node for node in grid.nodes() if sol.domain.contains(node[2], node[3])]
    if len(nodes) == 0:
        raise EmptyGrid(f"No node of {grid} lies in the domain {sol.domain}.")
    logger.info(f"Verify {sol.name} against {eq.name} on {len(nodes)} nodes.")

    if n_jobs == 1:
        samples = [_sample(sol, eq, x, y, use_fd) for _, _, x, y in tqdm(nodes, desc="[verify]", disable=not progress)]
    else:
        chunks = np.array_split(np.arange(len(nodes)), max(1, 4 * abs(n_jobs)))
        results = Parallel(n_jobs=n_jobs)(
            delayed(_sweep_chunk)(sol, eq, [nodes[k] for k in chunk], use_fd) for chunk in chunks if len(chunk)
        )
        samples = [sample for result in results for sample in result]

    max_abs, argmax, min_margin, flagged = 0.0, None, math.inf, 0
    for (_, _, x, y), sample in zip(nodes, samples):
        if sample is None:
            flagged += 1
            continue
        value, margin = sample
        # strict comparison keeps the first node in row-major order on ties
        if argmax is None or abs(value) > max_abs:
            max_abs, argmax = abs(value), (x, y)
        min_margin = min(min_margin, margin)
    if flagged:
        logger.warning(f"{flagged} of {len(nodes)} nodes gave non-finite evaluations.")
    if argmax is None:
        raise EmptyGrid(f"All {len(nodes)} nodes of {grid} inside {sol.domain} were flagged.")

    report = VerificationReport(
        equation=eq.name,
        solution=sol.descriptor(),
        grid=grid.to_dict(),
        source=FINITE_DIFFERENCE if use_fd else ANALYTIC,
        max_abs_residual=max_abs,
        argmax=argmax,
        min_ellipticity_margin=min_margin if math.isfinite(min_margin) else None,
        flagged_samples=flagged,
        fd_crosscheck=_crosscheck(sol, nodes, n_crosscheck),
    )
    logger.info(
        f"Max |residual| = {max_abs:.3e} at {argmax}, min margin = {report.min_ellipticity_margin}, "
        f"flagged = {flagged}."
    )
    return report
