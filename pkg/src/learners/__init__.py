"""
Reference sublearners and the combinators built on them.
"""

from src.learners.elimination import EliminationLearner, singleton_concept
from src.learners.factory import SublearnerFactory, reference_spec
from src.learners.prefix import PrefixLearner, learn_prefix_eq
from src.learners.product import (
    CounterexampleProductLearner,
    MemOnlyProductLearner,
    MemPosProductLearner,
    PosProductLearner,
    SupProductLearner,
    learn_product_cex_mem_pos,
    learn_product_mem_only,
    learn_product_mem_pos,
    learn_product_pos,
    learn_product_sup,
)
from src.learners.union import DisjointUnionLearner, learn_disjoint_union


__all__ = [
    "CounterexampleProductLearner",
    "DisjointUnionLearner",
    "EliminationLearner",
    "MemOnlyProductLearner",
    "MemPosProductLearner",
    "PosProductLearner",
    "PrefixLearner",
    "SublearnerFactory",
    "SupProductLearner",
    "learn_disjoint_union",
    "learn_prefix_eq",
    "learn_product_cex_mem_pos",
    "learn_product_mem_only",
    "learn_product_mem_pos",
    "learn_product_pos",
    "learn_product_sup",
    "reference_spec",
    "singleton_concept",
]
