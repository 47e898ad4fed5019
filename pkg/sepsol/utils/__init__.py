# -*- coding: utf-8 -*-

from sepsol.utils.utils import *  # NOQA
