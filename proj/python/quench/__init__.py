"""Loschmidt-echo statistics of the quenched transverse-field Ising chain."""

from quench._core import *  # noqa: F401,F403
from quench._core import __doc__  # noqa: F401
