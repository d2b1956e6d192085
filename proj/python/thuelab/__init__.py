"""Nonrepetitive graph colouring toolkit."""

from ._thuelab import *  # noqa: F401,F403
from ._thuelab import InputError, BudgetExceeded  # noqa: F401
