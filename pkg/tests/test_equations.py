#!/usr/bin/env python3

#  MIT License (https://opensource.org/licenses/MIT)

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sepsol.equations import (
    DEGENERATE,
    ELLIPTIC,
    EQUATION_NAMES,
    NON_ELLIPTIC,
    aronsson,
    classify,
    classify_margin,
    ellipticity_margin,
    equation_catalog,
    example1,
    get_equation,
    random_B_provider,
    residual,
    theorem_form,
    wrong_msa,
)
from sepsol.exceptions import ConfigError
from sepsol.flux import get_flux
from sepsol.solutions import DerivativeBundle, aronsson_solution

finite = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)


def _bundle(ux, uy, uxx=1.0, uxy=0.0, uyy=-1.0):
    return DerivativeBundle(x=0.3, y=-0.2, u=0.1, ux=ux, uy=uy, uxx=uxx, uxy=uxy, uyy=uyy)


def test_catalog_names():
    assert len(EQUATION_NAMES) == 11
    assert [eq.name for eq in equation_catalog()] == list(EQUATION_NAMES)
    with pytest.raises(ConfigError):
        get_equation("laplace")


def test_example1_stores_half():
    assert example1().coefficients(_bundle(0.0, 0.0)) == (1.0, 0.5, 1.0)
    assert residual(example1(), _bundle(0.0, 0.0, uxx=2.0, uxy=0.0, uyy=-2.0)) == 0.0


@given(finite, finite)
def test_wrong_msa_margin(p, q):
    # (1 + p^2)(1 + q^2) - p^2 q^2 = 1 + p^2 + q^2
    margin = ellipticity_margin(wrong_msa(), _bundle(p, q))
    assert margin == pytest.approx(1.0 + p * p + q * q, rel=1e-12)
    assert classify(wrong_msa(), _bundle(p, q)) == ELLIPTIC


def test_aronsson_is_degenerate():
    rng = np.random.default_rng(0)
    eq = aronsson()
    for p, q in rng.uniform(-1.0, 1.0, size=(100, 2)):
        b = _bundle(float(p), float(q))
        assert abs(ellipticity_margin(eq, b)) <= 1e-14
        assert classify(eq, b) == DEGENERATE


def test_aronsson_margin_on_solution_bundles():
    sol = aronsson_solution()
    eq = aronsson()
    rng = np.random.default_rng(1)
    points = rng.uniform(0.1, 5.0, size=(100, 2)) * rng.choice([-1.0, 1.0], size=(100, 2))
    for x, y in points:
        b = sol.evaluate(float(x), float(y))
        assert ellipticity_margin(eq, b) == 0.0
        assert classify(eq, b) == DEGENERATE


@given(finite, finite)
def test_margin_snaps_to_zero_only_inside_band(p, q):
    eq = aronsson()
    assert ellipticity_margin(eq, _bundle(p, q)) == 0.0
    assert ellipticity_margin(wrong_msa(), _bundle(p, q)) >= 1.0


def test_classify_margin():
    assert classify_margin(1e-3) == ELLIPTIC
    assert classify_margin(-1e-3) == NON_ELLIPTIC
    assert classify_margin(5e-15) == DEGENERATE
    assert classify_margin(5e-13, scale=10.0) == ELLIPTIC
    assert classify_margin(5e-13, scale=1e3) == DEGENERATE


def test_non_finite_coefficients():
    eq = get_equation("corollary_form", get_flux("power"))
    b = _bundle(0.0, 1.0)
    assert not math.isfinite(residual(eq, b))
    assert not math.isfinite(ellipticity_margin(eq, b))


def test_random_provider_is_deterministic():
    bound = theorem_form(get_flux("cubic"), get_flux("cubic")).ellipticity_bound
    first, second = random_B_provider(7, bound), random_B_provider(7, bound)
    other = random_B_provider(8, bound)
    b = _bundle(0.4, -1.3, uxx=0.2, uyy=-0.7)
    assert first(b) == second(b)
    assert first(b) != other(b)


@given(finite, finite, finite, finite, st.integers(min_value=0, max_value=2**32 - 1))
def test_random_provider_stays_elliptic(p, q, uxx, uyy, seed):
    eq = get_equation("theorem_form", get_flux("cubic"), get_flux("arsinh"), seed=seed)
    b = _bundle(p, q, uxx=uxx, uyy=uyy)
    A, B, C = eq.coefficients(b)
    assert abs(B) < eq.ellipticity_bound(b)
    assert A * C - B * B > 0


@given(finite, finite, st.integers(min_value=0, max_value=1000))
def test_example3_general_bound(p, q, seed):
    eq = get_equation("example3_sqrt_general", seed=seed)
    b = _bundle(p, q)
    bound = ((1.0 + p * p) * (1.0 + q * q)) ** 0.25
    assert eq.ellipticity_bound(b) == pytest.approx(bound)
    assert abs(eq.coefficients(b)[1]) < bound


def test_pluggable_defaults():
    eq = get_equation("theorem_form")
    A, B, C = eq.coefficients(_bundle(1.0, 2.0))
    assert (A, B, C) == (2.0, 0.0, 5.0)
    assert "cubic" in eq.description
    dual = get_equation("corollary_form", get_flux("arsinh"), get_flux("identity"))
    A, B, C = dual.coefficients(_bundle(0.0, 3.0))
    assert (A, B, C) == pytest.approx((1.0, 0.0, 1.0))


FROZEN_COEFFICIENTS = [
    "wrong_msa",
    "wrong_msa_flipped",
    "minimal_surface",
    "arctan_form",
    "aronsson",
    "example1",
    "example3_sqrt",
    "example3_sqrt_dual",
    "theorem_form",
    "corollary_form",
]


@pytest.mark.parametrize("name", FROZEN_COEFFICIENTS)
def test_residual_is_linear_in_second_derivatives(name):
    # coefficients depend on (x, y, u, p, q) only
    eq = get_equation(name)
    rng = np.random.default_rng(2)
    for p, q, *second in rng.uniform(-3.0, 3.0, size=(50, 8)):
        first = _bundle(p, q, *second[:3])
        other = _bundle(p, q, *second[3:6])
        both = _bundle(p, q, *(a + b for a, b in zip(second[:3], second[3:6])))
        assert residual(eq, both) == pytest.approx(residual(eq, first) + residual(eq, other), abs=1e-10)
        scaled = _bundle(p, q, *(second[6] * a for a in second[:3]))
        assert residual(eq, scaled) == pytest.approx(second[6] * residual(eq, first), abs=1e-10)
