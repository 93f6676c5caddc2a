"""Behavioral GPU cryptojacking detector."""

from ._minewatch import *  # noqa: F401,F403
from ._minewatch import __doc__  # noqa: F401
