"""
Learner/oracle session protocol, query accounting and the honest oracle.

Submodules are imported directly (``src.core.session``, ``src.core.oracle``);
this package only re-exports the error hierarchy.
"""

from .errors import (
    BudgetExhausted,
    ModularLearningError,
    ProtocolViolation,
    UniverseMismatch,
    UnsupportedQuery,
)

__all__ = [
    "BudgetExhausted",
    "ModularLearningError",
    "ProtocolViolation",
    "UniverseMismatch",
    "UnsupportedQuery",
]
