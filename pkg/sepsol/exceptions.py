# -*- coding: utf-8 -*-

#  MIT License (https://opensource.org/licenses/MIT)

"""Exceptions raised by sepsol."""


class SepsolError(Exception):
    """Base class of all sepsol errors."""


class ConfigError(SepsolError):
    """Invalid run configuration (unknown names, malformed grids)."""


class OutOfRange(SepsolError):
    """A value lies outside the range of a flux antiderivative F."""


class NoConvergence(SepsolError):
    """Monotone inversion did not converge within the iteration budget."""


class ToleranceNotMet(SepsolError):
    """Adaptive quadrature exhausted its subdivision depth."""


class OutOfDomain(SepsolError):
    """A point lies outside the validity rectangle of a solution."""


class StencilOutOfDomain(OutOfDomain):
    """A finite-difference stencil leaves the validity rectangle."""


class SingularPoint(SepsolError):
    """Second derivatives do not exist at the requested point."""


class EmptyGrid(SepsolError):
    """No grid node survives exclusion and domain filtering."""


class DegenerateFit(SepsolError):
    """Too few usable samples for a least-squares fit."""
