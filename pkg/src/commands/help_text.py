"""
Help text for the experiment commands, kept out of the command modules.
"""

from typing import Dict

OPTION_HELP: Dict[str, str] = {
    "class": 'Concept-class spec, e.g. "prod(intervals(16),intervals(16))"',
    "target": 'Target concept spec, e.g. "prod([3,5],[2,8])"',
    "positive": 'Positive example for the Mem+1Pos modes, e.g. "(4,5)"; asked with one 1Pos query when omitted',
    "mode": "Query set the learner may use",
    "construction": "Lower-bound construction to run",
    "k": "Number of component classes",
    "r": "Level (sum of string lengths) for the prefix construction",
    "m": "Largest singleton value for the singleton construction",
    "size": "Universe size U for generated classes (grid side for pac)",
    "epsilon": "PAC accuracy in (0,1)",
    "delta": "PAC confidence in (0,1)",
    "b": "Sample-complexity constant",
    "seed": "Seed for every randomized choice; MODLEARN_SEED overrides it",
    "budget": "Query budget per session",
    "trials": "Random targets per table cell, or PAC trials",
    "with_mem": "Use the Mem-assisted PAC learner",
    "format": "Report format",
    "out": "Write the report to this file instead of standard output",
}

COMMAND_HELP: Dict[str, str] = {
    "cli": "Run query-learning experiments on cross-products and disjoint unions.",
    "learn": "Learn one target against the honest oracle and report counts and transcript.",
    "lowerbound": "Run an adversary construction and report the bound it forces.",
    "pac": "Run seeded PAC trials on rectangles over a uniform grid.",
    "table": "Measure every cell of the query-complexity table against its bound.",
}
