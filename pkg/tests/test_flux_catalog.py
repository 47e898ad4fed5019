#!/usr/bin/env python3

#  MIT License (https://opensource.org/licenses/MIT)

import numpy as np
import pytest

from sepsol.exceptions import ConfigError
from sepsol.flux import FluxPair, Positivity, builtin_catalog, check_flux, eval_f, eval_F, get_flux

SAMPLES = np.union1d(np.linspace(-3.0, 3.0, 60), [0.0])


def test_catalog_names():
    names = [pair.name for pair in builtin_catalog()]
    assert names == ["identity", "cubic", "arsinh", "arctan", "power"]


def test_unknown_flux():
    with pytest.raises(ConfigError):
        get_flux("quintic")


@pytest.mark.parametrize("name", ["identity", "cubic", "arsinh", "arctan", "power"])
def test_check_flux(name):
    report = check_flux(get_flux(name), SAMPLES)
    assert report["monotone"]
    assert report["positivity_consistent"]
    assert report["fd_error"] < 1e-7
    assert report["roundtrip_error"] < 1e-13


def test_flags():
    assert not get_flux("arctan").is_surjective
    assert get_flux("arctan").range_of_F == (-np.pi / 2, np.pi / 2)
    assert get_flux("power").positivity is Positivity.NONNEGATIVE_VANISHING
    for name in ("identity", "cubic", "arsinh", "power"):
        assert get_flux(name).is_surjective
    for name in ("identity", "cubic", "arsinh", "arctan"):
        assert get_flux(name).positivity is Positivity.STRICTLY_POSITIVE


def test_in_range_is_open():
    pair = get_flux("arctan")
    assert pair.in_range(1.5)
    assert not pair.in_range(np.pi / 2)
    assert not pair.in_range(2.0)


@pytest.mark.parametrize(
    "name, t, f, F",
    [
        ("identity", 2.0, 1.0, 2.0),
        ("cubic", 1.0, 2.0, 4.0 / 3.0),
        ("arsinh", 0.0, 1.0, 0.0),
        ("arctan", 1.0, 0.5, np.pi / 4),
        ("power", 3.0, 9.0, 9.0),
    ],
)
def test_point_values(name, t, f, F):
    pair = get_flux(name)
    assert eval_f(pair, t) == pytest.approx(f, rel=1e-15)
    assert eval_F(pair, t) == pytest.approx(F, rel=1e-15)


@pytest.mark.parametrize(
    "name, x",
    [("identity", 2.5), ("cubic", 4.0), ("cubic", -7.0), ("arsinh", 1.5), ("arctan", 1.2), ("power", -2.0)],
)
def test_analytic_H_derivative_is_inverse(name, x):
    # H' = F^-1
    pair = get_flux(name)
    h = 1e-5
    derivative = (pair.analytic_H(x + h) - pair.analytic_H(x - h)) / (2 * h)
    assert derivative == pytest.approx(float(pair.analytic_inverse(x)), rel=1e-8)
    assert float(pair.analytic_H(0.0)) == 0.0


def test_check_flux_detects_inconsistent_positivity():
    pair = FluxPair(
        "mislabeled",
        f=lambda t: np.asarray(t, dtype=float) ** 2,
        F=lambda t: np.asarray(t, dtype=float) ** 3 / 3.0,
    )
    report = check_flux(pair, SAMPLES)
    assert report["monotone"]
    assert report["min_f"] == 0.0
    assert not report["positivity_consistent"]
    assert report["roundtrip_error"] is None


@pytest.mark.parametrize("name", ["cubic", "power"])
def test_F_is_odd(name):
    pair = get_flux(name)
    t = np.concatenate([np.linspace(0.0, 5.0, 101), np.logspace(-8, 3, 100)])
    assert np.max(np.abs(pair.F(-t) + pair.F(t))) <= 1e-14


def test_check_flux_far_tails():
    # arctan(t) rounds to pi / 2 here, so no sample lies inside the open range
    report = check_flux(get_flux("arctan"), [-1e18, -1e17, 1e17, 1e18])
    assert report["monotone"]
    assert report["roundtrip_error"] is None
    assert report["positivity_consistent"]
