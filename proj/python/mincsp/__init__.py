"""Classification, solving, and reductions for minimum-deletion CSPs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
