from sepsol.equations.equation import *  # NOQA
