"""Edge/cloud application placement: pricing, exact per-request solving, and
the sequential placement simulator."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
