from sepsol.flux.catalog import *  # NOQA
