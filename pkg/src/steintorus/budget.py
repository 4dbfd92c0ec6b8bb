"""Enumeration budget.

Exhaustive enumerations (group elements, faces, torus faces) refuse to start
if the number of objects they would produce exceeds a configurable budget.
The default is one million objects; it can be overridden programmatically or
through the ``STEINTORUS_BUDGET`` environment variable.
"""

import os

DEFAULT_BUDGET = 10**6
_ENV_VAR = "STEINTORUS_BUDGET"


def current_budget() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_BUDGET
    return value if value > 0 else DEFAULT_BUDGET


def check_budget(count: int, what: str) -> None:
    from .errors import BudgetExceededError

    budget = current_budget()
    if count > budget:
        raise BudgetExceededError(
            f"{what}: {count} objects exceed the enumeration budget of {budget} "
            f"(override with {_ENV_VAR})"
        )
