from sepsol.verify.grid import *  # NOQA
from sepsol.verify.oracle import *  # NOQA
from sepsol.verify.sweep import *  # NOQA
from sepsol.verify.demos import *  # NOQA
