"""
Adversarial oracles and the bookkeeping behind the lower-bound experiments.
"""

from src.adversary.positive import AdversarialPosOracle, consistent_concepts
from src.adversary.prefix import (
    AdversarialPrefixOracle,
    BreadthFirstPrefixLearner,
    FreshValueSource,
    JustifiabilityLog,
    consistency_certificate,
    count_justifiable,
    render_tree,
)
from src.adversary.singleton import AdversarialSingletonOracle

__all__ = [
    "AdversarialPosOracle",
    "AdversarialPrefixOracle",
    "AdversarialSingletonOracle",
    "BreadthFirstPrefixLearner",
    "FreshValueSource",
    "JustifiabilityLog",
    "consistency_certificate",
    "consistent_concepts",
    "count_justifiable",
    "render_tree",
]
