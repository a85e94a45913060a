"""
Exception classes for the budget game toolkit

Every error carries a numeric code which doubles as the CLI exit code.
"""

USAGE_ERROR = 2
CAP_EXCEEDED = 3
CHECK_FAILED = 4


class BudgetGameError(Exception):
    """Base exception for the budget game toolkit"""

    code = 1

    def __init__(self, message, code=None, data=None):
        self.message = message
        if code is not None:
            self.code = code
        self.data = data
        super().__init__(self.message)


# ==================== INPUT ERRORS ====================


class InvalidGame(BudgetGameError):
    """Game or profile does not describe a valid instance"""

    code = USAGE_ERROR


class BudgetMismatch(InvalidGame):
    """A strategy does not have exactly as many targets as the budget"""


class SelfLink(InvalidGame):
    """A player links to itself"""


class IndexOutOfRange(InvalidGame):
    """A player or target index is outside 1..n"""


class InvalidBudget(InvalidGame):
    """A budget is negative or not smaller than n"""


class InvalidParameter(InvalidGame):
    """A generator parameter is outside its domain"""


class ConditionViolated(InvalidParameter):
    """A construction precondition does not hold"""


class InvalidGraph(InvalidGame):
    """An input graph is not simple, not connected, or too small"""


class Disconnected(InvalidGame):
    """The underlying graph is not connected"""


class NonUnitBudget(InvalidGame):
    """Some player has a budget other than 1"""


class NotATree(InvalidGame):
    """The underlying graph is not a tree"""


class NotTreeBG(InvalidGame):
    """The budgets do not sum to n - 1"""


# ==================== CAP ERRORS ====================


class EnumerationCapExceeded(BudgetGameError):
    """An exhaustive search would exceed the configured cap"""

    code = CAP_EXCEEDED


class ResourceBound(BudgetGameError):
    """A generated instance would exceed the configured vertex cap"""

    code = CAP_EXCEEDED


# ==================== CHECK FAILURES ====================


class CheckFailed(BudgetGameError):
    """A checker or structural validator reported a violation"""

    code = CHECK_FAILED


class NotAnEquilibrium(CheckFailed):
    """A profile required to be an equilibrium is not one"""
