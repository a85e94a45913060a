"""
Core utilities for the budget game toolkit

Exceptions, response envelopes and settings shared by every layer.
"""

from .config import Settings, get_settings
from .exceptions import BudgetGameError
from .response import error_response, render, success_response

__all__ = [
    "success_response",
    "error_response",
    "render",
    "BudgetGameError",
    "Settings",
    "get_settings",
]
