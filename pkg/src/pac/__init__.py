"""
PAC learning of cross-products from labeled examples.
"""

from src.pac.bounds import growth_bound, growth_upper, sample_size, vc_product_bound
from src.pac.distribution import Distribution, ExampleOracle, draw_sample, exact_error
from src.pac.finders import ConsistencyFinder, EnumerationFinder, IntervalFinder, finder_for
from src.pac.learners import pac_learn_product, pac_learn_with_mem
from src.pac.subconcepts import find_subconcepts
from src.pac.trials import reports_to_csv, run_pac_trials, summarize_trials

__all__ = [
    "ConsistencyFinder",
    "Distribution",
    "EnumerationFinder",
    "ExampleOracle",
    "IntervalFinder",
    "draw_sample",
    "exact_error",
    "find_subconcepts",
    "finder_for",
    "growth_bound",
    "growth_upper",
    "pac_learn_product",
    "pac_learn_with_mem",
    "reports_to_csv",
    "run_pac_trials",
    "sample_size",
    "summarize_trials",
    "vc_product_bound",
]
