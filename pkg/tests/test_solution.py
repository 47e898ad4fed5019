#!/usr/bin/env python3

#  MIT License (https://opensource.org/licenses/MIT)

from functools import partial

import numpy as np
import pytest

from sepsol.exceptions import EmptyGrid, OutOfDomain, SingularPoint
from sepsol.flux import builtin_catalog, get_flux
from sepsol.solutions import (
    Kind,
    arctan_solution,
    aronsson_solution,
    cardano_solution,
    closed_form_solution,
    construct,
    cosh_solution,
    is_affine,
    quadratic_solution,
)
from sepsol.verify import Grid, fd_bundle

PROBE = [(0.5, 0.7), (-0.3, 0.4), (1.0, -1.0), (-1.2, -0.2)]


def _off_axis_points(n=50, seed=0):
    rng = np.random.default_rng(seed)
    points = rng.uniform(0.1, 2.0, size=(n, 2)) * rng.choice([-1.0, 1.0], size=(n, 2))
    return [(float(x), float(y)) for x, y in points]


@pytest.mark.parametrize("name", ["identity", "cubic", "arsinh", "arctan", "power"])
def test_anchored_at_origin(name):
    pair = get_flux(name)
    sol = construct(pair, pair, 1.0)
    assert sol.value(0.0, 0.0) == 0.0
    assert sol.gradient(0.0, 0.0) == (0.0, 0.0)


def test_quadratic():
    sol = quadratic_solution(2.0)
    assert sol.kind is Kind.QUADRATIC
    assert sol.value(1.0, 0.0) == pytest.approx(1.0, abs=1e-15)
    b = sol.evaluate(1.0, -2.0)
    assert (b.u, b.ux, b.uy, b.uxx, b.uxy, b.uyy) == pytest.approx((-3.0, 2.0, 4.0, 2.0, 0.0, -2.0))


def test_cosh():
    sol = cosh_solution(1.0)
    for x, y in PROBE:
        assert sol.value(x, y) == pytest.approx(np.cosh(x) - np.cosh(y), abs=1e-14)
        b = sol.evaluate(x, y)
        assert b.ux == pytest.approx(np.sinh(x))
        assert b.uxx == pytest.approx(np.cosh(x))
        assert b.uyy == pytest.approx(-np.cosh(y))


@pytest.mark.parametrize("c", [1.0, -0.5, 3.0])
def test_cardano_closed_form_matches_quadrature(c):
    closed = cardano_solution(c)
    general = construct(get_flux("cubic"), get_flux("cubic"), c)
    for x, y in PROBE + [(7.0, -9.0)]:
        a, b = closed.evaluate(x, y), general.evaluate(x, y)
        assert a.u == pytest.approx(b.u, abs=1e-9)
        assert a.ux == b.ux
        assert a.uyy == b.uyy


def test_arctan_domain():
    sol = arctan_solution(1.0)
    assert not sol.domain.is_plane
    assert sol.domain.x_interval == (-np.pi / 2, np.pi / 2)
    assert sol.domain.y_interval == (-np.pi / 2, np.pi / 2)
    assert sol.value(1.5707, 0.0) > 8.0
    with pytest.raises(OutOfDomain):
        sol.evaluate(2.0, 0.0)
    with pytest.raises(OutOfDomain):
        sol.value(0.0, -np.pi / 2)
    general = construct(get_flux("arctan"), get_flux("arctan"), 1.0)
    assert general.domain.x_interval == sol.domain.x_interval


def test_arctan_domain_scales_with_c():
    sol = arctan_solution(2.0)
    assert sol.domain.x_interval == pytest.approx((-np.pi / 4, np.pi / 4))
    assert sol.domain.to_dict()["x"] == pytest.approx([-np.pi / 4, np.pi / 4])


def test_aronsson_values():
    sol = aronsson_solution()
    assert sol.kind is Kind.ARONSSON
    assert sol.possibly_singular
    assert sol.value(8.0, 0.0) == 36.0
    assert sol.value(0.0, 8.0) == -36.0
    assert sol.gradient(0.0, 0.5) == pytest.approx((0.0, -3.0 * np.cbrt(0.5)))
    with pytest.raises(SingularPoint):
        sol.evaluate(0.0, 0.5)
    with pytest.raises(SingularPoint):
        sol.evaluate(0.5, 0.0)


def test_aronsson_matches_construct():
    closed = aronsson_solution()
    pair = get_flux("power")
    general = construct(pair, pair, 9.0)
    assert general.possibly_singular
    for x, y in _off_axis_points():
        assert abs(closed.value(x, y) - general.value(x, y)) < 1e-8
    a, b = closed.evaluate(0.5, 0.25), general.evaluate(0.5, 0.25)
    assert a.u == pytest.approx(b.u, abs=1e-9)
    assert a.uxx == pytest.approx(b.uxx, rel=1e-12)


def test_entire_solutions_have_plane_domain():
    for pair in builtin_catalog():
        sol = construct(pair, pair, 1.0)
        assert sol.domain.is_plane == pair.is_surjective
        assert sol.domain.to_dict()["x"] == ([None, None] if pair.is_surjective else [-np.pi / 2, np.pi / 2])


def test_mixed_pairs():
    sol = construct(get_flux("cubic"), get_flux("arsinh"), 1.0)
    b = sol.evaluate(0.7, -0.4)
    assert b.uxx == pytest.approx(1.0 / (1.0 + b.ux**2))
    assert b.uyy == pytest.approx(-np.sqrt(1.0 + b.uy**2))
    assert sol.descriptor()["flux1"] == "cubic"
    assert sol.descriptor()["flux2"] == "arsinh"


@pytest.mark.parametrize(
    "name, c, kind",
    [
        ("identity", 2.0, Kind.QUADRATIC),
        ("cubic", 1.0, Kind.CARDANO_CLOSED_FORM),
        ("arsinh", 1.0, Kind.COSH),
        ("arctan", 1.0, Kind.ARCTAN_RESTRICTED),
        ("power", 9.0, Kind.ARONSSON),
        ("power", 1.0, Kind.GENERAL_QUADRATURE),
        ("cubic", 0.0, Kind.GENERAL_QUADRATURE),
    ],
)
def test_closed_form_selection(name, c, kind):
    pair = get_flux(name)
    assert closed_form_solution(pair, pair, c).kind is kind


@pytest.mark.parametrize("name", ["identity", "cubic", "arsinh", "arctan", "power"])
def test_affine_dichotomy(name):
    pair = get_flux(name)
    affine = construct(pair, pair, 0.0)
    assert affine.domain.is_plane
    assert is_affine(affine, Grid(-3.0, 3.0, -3.0, 3.0, 7, 7))
    assert affine.value(2.0, -1.0) == 0.0
    assert not is_affine(construct(pair, pair, 1.0), PROBE)
    if name == "power":
        assert not is_affine(construct(pair, pair, 9.0), PROBE)


def test_affine_needs_points():
    pair = get_flux("cubic")
    with pytest.raises(EmptyGrid):
        is_affine(construct(pair, pair, 0.0), [])


@pytest.mark.parametrize("name", ["identity", "cubic", "arsinh", "arctan", "power"])
def test_antisymmetry(name):
    # odd F makes H even, so u(x, y) = -u(y, x)
    pair = get_flux(name)
    sol = construct(pair, pair, 1.0)
    for x, y in PROBE:
        u = sol.value(x, y)
        assert u == pytest.approx(-sol.value(y, x), abs=1e-10 * max(1.0, abs(u)))


def test_cosh_matches_construct():
    closed = cosh_solution(1.0)
    pair = get_flux("arsinh")
    general = construct(pair, pair, 1.0)
    for x, y in PROBE + [(3.0, -2.5)]:
        a, b = closed.evaluate(x, y), general.evaluate(x, y)
        for name in ("u", "ux", "uy", "uxx", "uxy", "uyy"):
            assert getattr(a, name) == pytest.approx(getattr(b, name), abs=1e-10), name


def test_aronsson_holder_quotient():
    sol = aronsson_solution()
    for r in np.logspace(-6, 0, 13):
        ux, _ = sol.gradient(float(r), 0.0)
        assert abs(ux) / np.cbrt(r) == pytest.approx(3.0, rel=1e-12)
        _, uy = sol.gradient(0.0, float(r))
        assert abs(uy) / np.cbrt(r) == pytest.approx(3.0, rel=1e-12)


@pytest.mark.parametrize(
    "make",
    [
        lambda: quadratic_solution(2.0),
        lambda: cardano_solution(1.0),
        lambda: cosh_solution(1.0),
        lambda: arctan_solution(1.0),
        aronsson_solution,
    ]
    + [partial(construct, pair, pair, 1.0) for pair in builtin_catalog()]
    + [lambda: construct(get_flux("cubic"), get_flux("arsinh"), 0.5)],
)
def test_fd_agrees_with_analytic(make):
    sol = make()
    for x, y in PROBE:
        exact = sol.evaluate(x, y)
        approx = fd_bundle(sol.value, x, y, sol.domain)
        for name in ("ux", "uy"):
            a = getattr(exact, name)
            assert abs(a - getattr(approx, name)) <= 1e-6 * max(1.0, abs(a)), name
        for name in ("uxx", "uxy", "uyy"):
            a = getattr(exact, name)
            assert abs(a - getattr(approx, name)) <= 1e-4 * max(1.0, abs(a)), name
