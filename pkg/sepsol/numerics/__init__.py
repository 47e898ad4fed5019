from sepsol.numerics.inversion import *  # NOQA
from sepsol.numerics.antiderivative import *  # NOQA
