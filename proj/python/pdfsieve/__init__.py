"""Prime detecting sieve: indicator filters, detector products, pair counts,
and density analytics."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
