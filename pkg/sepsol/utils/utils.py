# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Utility functions."""

import json
import os
import sys
from logging import getLogger

import numpy as np

from sepsol.solutions.bundle import FIELDS

# A logger for this file
logger = getLogger(__name__)

COLUMNS = ("x", "y") + FIELDS
CSV_HEADER = ",".join(COLUMNS)

# 17 significant digits round-trip every double.
FLOAT_FORMAT = "%.17g"


def _open_output(path):
    """Open path for writing, "-" or None meaning stdout."""
    if path is None or path == "-":
        return sys.stdout, False
    # check folder existence
    folder_name, _ = os.path.split(path)
    if not os.path.exists(folder_name) and len(folder_name) != 0:
        os.makedirs(folder_name)
    return open(path, "w", encoding="utf-8", newline="\n"), True


def write_samples_csv(path, bundles):
    """Write derivative bundles as CSV.

    Args:
        path (str): Output filename, "-" for stdout.
        bundles (iterable): DerivativeBundle rows in output order.

    Returns:
        int: Number of rows written.

    """
    rows = np.asarray([bundle.as_row() for bundle in bundles], dtype=float).reshape(-1, len(COLUMNS))
    f, should_close = _open_output(path)
    try:
        np.savetxt(f, rows, fmt=FLOAT_FORMAT, delimiter=",", newline="\n", header=CSV_HEADER, comments="")
    finally:
        if should_close:
            f.close()
    logger.info(f"Wrote {len(rows)} rows to {path}.")
    return len(rows)


def read_samples_csv(path):
    """Read a CSV written by write_samples_csv.

    Return:
        ndarray: Values with columns x, y, u, ux, uy, uxx, uxy, uyy.

    """
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().strip()
    if header != CSV_HEADER:
        logger.error(f"Unexpected CSV header in {path} ({header}).")
        raise ValueError(f"Unexpected CSV header in {path}.")
    return np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


def write_json(path, payload):
    """Write a JSON object, "-" or None for stdout."""
    f, should_close = _open_output(path)
    try:
        f.write(json.dumps(payload, indent=2) + "\n")
    finally:
        if should_close:
            f.close()
    if should_close:
        logger.info(f"Successfully saved report to {path}.")
