from sepsol.solutions.bundle import *  # NOQA
from sepsol.solutions.solution import *  # NOQA
